#include "modrep/fp.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>

namespace modrep::fp {

namespace {
std::atomic<std::size_t> g_dim_cap{2'000'000};
}  // namespace

std::size_t dim_cap() { return g_dim_cap.load(); }
void set_dim_cap(std::size_t cap) { g_dim_cap.store(cap); }

FpMatrix::FpMatrix(std::uint32_t prime, std::size_t rows, std::size_t cols)
    : prime_(prime), rows_(rows), cols_(cols) {
    if (!is_small_prime(prime)) throw DimensionMismatch("unsupported prime " + std::to_string(prime));
    if (rows * cols > dim_cap())
        throw CapExceeded("matrix of " + std::to_string(rows * cols) +
                          " entries exceeds cap " + std::to_string(dim_cap()));
    data_.assign(rows * cols, 0);
}

FpMatrix FpMatrix::identity(std::uint32_t prime, std::size_t n) {
    FpMatrix m(prime, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::zero(std::uint32_t prime, std::size_t rows, std::size_t cols) {
    return FpMatrix(prime, rows, cols);
}

FpMatrix FpMatrix::from_rows(std::uint32_t prime, const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    FpMatrix m(prime, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(prime_);
    if (r < 0) r += prime_;
    data_[i * cols_ + j] = static_cast<std::uint8_t>(r);
}

void FpMatrix::add_at(std::size_t i, std::size_t j, std::int64_t v) {
    set(i, j, static_cast<std::int64_t>(data_[i * cols_ + j]) + v);
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(prime_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || prime_ != o.prime_)
        throw DimensionMismatch("shape mismatch in +");
    FpMatrix r(prime_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] = static_cast<std::uint8_t>((data_[k] + o.data_[k]) % prime_);
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || prime_ != o.prime_)
        throw DimensionMismatch("shape mismatch in -");
    FpMatrix r(prime_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] = static_cast<std::uint8_t>((data_[k] + prime_ - o.data_[k]) % prime_);
    return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || prime_ != o.prime_) throw DimensionMismatch("shape mismatch in *");
    FpMatrix r(prime_, rows_, o.cols_);
    const std::size_t n = o.cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint8_t* out = r.row_ptr(i);
        const std::uint8_t* lhs = row_ptr(i);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t a = lhs[k];
            if (!a) continue;
            const std::uint8_t* rhs = o.row_ptr(k);
            // accumulate then reduce once per strip; values stay < 2^32
            for (std::size_t j = 0; j < n; ++j) {
                std::uint32_t v = out[j] + a * rhs[j];
                out[j] = static_cast<std::uint8_t>(v % prime_);
            }
        }
    }
    return r;
}

FpMatrix FpMatrix::scaled(std::int64_t c) const {
    std::int64_t r = c % static_cast<std::int64_t>(prime_);
    if (r < 0) r += prime_;
    FpMatrix m(prime_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        m.data_[k] = static_cast<std::uint8_t>((data_[k] * r) % prime_);
    return m;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
    FpMatrix acc = identity(prime_, rows_);
    FpMatrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
    if (cols_ != o.cols_ || prime_ != o.prime_) throw DimensionMismatch("vstack mismatch");
    FpMatrix r(prime_, rows_ + o.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + data_.size());
    return r;
}

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
    if (rows_ != o.rows_ || prime_ != o.prime_) throw DimensionMismatch("hstack mismatch");
    FpMatrix r(prime_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::memcpy(r.row_ptr(i), row_ptr(i), cols_);
        std::memcpy(r.row_ptr(i) + cols_, o.row_ptr(i), o.cols_);
    }
    return r;
}

FpMatrix FpMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    FpMatrix r(prime_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.data_[i * nc + j] = at(r0 + i, c0 + j);
    return r;
}

FpMatrix FpMatrix::column(std::size_t j) const { return submatrix(0, j, rows_, 1); }

std::uint32_t FpMatrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t = (t + at(i, i)) % prime_;
    return t;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0 mod p; p is tiny so a^(p-2) is fine
    a %= p;
    std::uint32_t r = 1, e = p - 2, b = a;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

RrefResult rref(const FpMatrix& m) {
    FpMatrix a = m;
    const std::uint32_t p = a.prime();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.row_ptr(piv)[j], a.row_ptr(r)[j]);
        std::uint32_t inv = inv_mod(a.at(r, c), p);
        if (inv != 1) {
            std::uint8_t* row = a.row_ptr(r);
            for (std::size_t j = c; j < cols; ++j) row[j] = static_cast<std::uint8_t>(row[j] * inv % p);
        }
        const std::uint8_t* prow = a.row_ptr(r);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = a.at(i, c);
            if (!f) continue;
            std::uint8_t* row = a.row_ptr(i);
            std::uint32_t pf = p - f;
            for (std::size_t j = c; j < cols; ++j)
                row[j] = static_cast<std::uint8_t>((row[j] + pf * prow[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix nullspace(const FpMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
    std::size_t free_count = cols - rr.rank;
    FpMatrix basis(m.prime(), cols, free_count);
    std::size_t k = 0;
    const std::uint32_t p = m.prime();
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        basis.set(c, k, 1);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            std::uint32_t v = rr.reduced.at(i, c);
            if (v) basis.set(rr.pivot_columns[i], k, static_cast<std::int64_t>(p - v));
        }
        ++k;
    }
    return basis;
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row mismatch");
    FpMatrix aug = a.hstack(b);
    RrefResult rr = rref(aug);
    // any pivot in the b-block means inconsistency
    for (std::size_t c : rr.pivot_columns)
        if (c >= a.cols()) return std::nullopt;
    FpMatrix x(a.prime(), a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::size_t pc = rr.pivot_columns[i];
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, rr.reduced.at(i, a.cols() + j));
    }
    return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    FpMatrix aug = m.hstack(FpMatrix::identity(m.prime(), m.rows()));
    RrefResult rr = rref(aug);
    if (rr.rank != m.rows()) return std::nullopt;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (rr.pivot_columns[i] != i) return std::nullopt;
    return rr.reduced.submatrix(0, m.cols(), m.rows(), m.cols());
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
    if (a.prime() != b.prime()) throw DimensionMismatch("kron prime mismatch");
    FpMatrix r(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
    const std::uint32_t p = a.prime();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::uint32_t v = a.at(i, j);
            if (!v) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    std::uint32_t w = b.at(k, l);
                    if (w) r.set(i * b.rows() + k, j * b.cols() + l, static_cast<std::int64_t>(v * w % p));
                }
        }
    return r;
}

SpanBasis::SpanBasis(std::uint32_t prime, std::size_t width) : prime_(prime), width_(width) {}

bool SpanBasis::insert(std::vector<std::uint8_t> v) {
    if (v.size() != width_) throw DimensionMismatch("span insert width mismatch");
    const std::uint32_t p = prime_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = v[pivot_cols_[r]];
        if (!f) continue;
        const std::uint8_t* row = rows_[r].data();
        std::uint32_t pf = p - f;
        for (std::size_t j = 0; j < width_; ++j)
            v[j] = static_cast<std::uint8_t>((v[j] + pf * row[j]) % p);
    }
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (v[j]) { piv = j; break; }
    if (piv == width_) return false;
    std::uint32_t inv = inv_mod(v[piv], p);
    if (inv != 1)
        for (std::size_t j = piv; j < width_; ++j) v[j] = static_cast<std::uint8_t>(v[j] * inv % p);
    // keep reduced form: clear this pivot from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = rows_[r][piv];
        if (!f) continue;
        std::uint32_t pf = p - f;
        for (std::size_t j = piv; j < width_; ++j)
            rows_[r][j] = static_cast<std::uint8_t>((rows_[r][j] + pf * v[j]) % p);
    }
    // insert keeping pivot columns sorted
    std::size_t pos = 0;
    while (pos < pivot_cols_.size() && pivot_cols_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_cols_.insert(pivot_cols_.begin() + pos, piv);
    return true;
}

std::optional<std::vector<std::uint8_t>> SpanBasis::coordinates(
    const std::vector<std::uint8_t>& v) const {
    if (v.size() != width_) throw DimensionMismatch("span coordinates width mismatch");
    std::vector<std::uint8_t> w = v;
    std::vector<std::uint8_t> coords(rows_.size(), 0);
    const std::uint32_t p = prime_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = w[pivot_cols_[r]];
        coords[r] = static_cast<std::uint8_t>(f);
        if (!f) continue;
        const std::uint8_t* row = rows_[r].data();
        std::uint32_t pf = p - f;
        for (std::size_t j = 0; j < width_; ++j)
            w[j] = static_cast<std::uint8_t>((w[j] + pf * row[j]) % p);
    }
    for (std::size_t j = 0; j < width_; ++j)
        if (w[j]) return std::nullopt;
    return coords;
}

bool SpanBasis::contains(const std::vector<std::uint8_t>& v) const {
    return coordinates(v).has_value();
}

std::vector<std::uint8_t> SpanBasis::combine(const std::vector<std::uint8_t>& coords) const {
    std::vector<std::uint8_t> out(width_, 0);
    const std::uint32_t p = prime_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = coords[r] % p;
        if (!c) continue;
        for (std::size_t j = 0; j < width_; ++j)
            out[j] = static_cast<std::uint8_t>((out[j] + c * rows_[r][j]) % p);
    }
    return out;
}

std::vector<std::uint8_t> flatten(const FpMatrix& m) { return m.data(); }

FpMatrix unflatten(std::uint32_t prime, std::size_t rows, std::size_t cols,
                   const std::vector<std::uint8_t>& v) {
    FpMatrix m(prime, rows, cols);
    if (v.size() != rows * cols) throw DimensionMismatch("unflatten size mismatch");
    m.data() = v;
    return m;
}

}  // namespace modrep::fp
