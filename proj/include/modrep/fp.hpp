#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modrep::fp {

// Typed failures: callers distinguish bad input from an exceeded size cap.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapExceeded : std::length_error {
    using std::length_error::length_error;
};

// Global guard against accidentally requesting matrices far beyond desk
// scale (default 2,000,000 entries). Overridable via MODREP_DIM_CAP.
std::size_t dim_cap();
void set_dim_cap(std::size_t cap);

inline bool is_small_prime(std::uint32_t p) {
    return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

// Dense matrix over F_p, row-major, entries eagerly reduced into [0, p).
class FpMatrix {
public:
    FpMatrix() : prime_(2), rows_(0), cols_(0) {}
    FpMatrix(std::uint32_t prime, std::size_t rows, std::size_t cols);

    static FpMatrix identity(std::uint32_t prime, std::size_t n);
    static FpMatrix zero(std::uint32_t prime, std::size_t rows, std::size_t cols);
    static FpMatrix from_rows(std::uint32_t prime,
                              const std::vector<std::vector<int>>& rows);

    std::uint32_t prime() const { return prime_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t entry_count() const { return data_.size(); }

    std::uint8_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v);
    void add_at(std::size_t i, std::size_t j, std::int64_t v);

    const std::uint8_t* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    std::uint8_t* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const std::vector<std::uint8_t>& data() const { return data_; }
    std::vector<std::uint8_t>& data() { return data_; }

    bool is_zero() const;
    bool operator==(const FpMatrix& o) const = default;

    FpMatrix transpose() const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(std::int64_t c) const;
    FpMatrix pow(std::uint64_t e) const;

    // Rows of `o` appended below this matrix.
    FpMatrix vstack(const FpMatrix& o) const;
    FpMatrix hstack(const FpMatrix& o) const;
    FpMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    FpMatrix column(std::size_t j) const;

    std::uint32_t trace() const;

private:
    std::uint32_t prime_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> data_;
};

struct RrefResult {
    FpMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

// Columns form a basis of the right kernel {x : m x = 0}.
FpMatrix nullspace(const FpMatrix& m);

// Solves a x = b columnwise; empty optional when the system is inconsistent.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

FpMatrix kron(const FpMatrix& a, const FpMatrix& b);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Incrementally maintained row space in reduced echelon form. Used for
// spanning algebras, coordinatizing subspaces and rank bookkeeping.
class SpanBasis {
public:
    SpanBasis(std::uint32_t prime, std::size_t width);

    // Reduces v against the basis; inserts the remainder if nonzero.
    // Returns true when the vector enlarged the span.
    bool insert(std::vector<std::uint8_t> v);

    // Expresses v in terms of the *inserted* generator history is not kept;
    // this returns coordinates w.r.t. the echelon rows, or nullopt if v is
    // outside the span.
    std::optional<std::vector<std::uint8_t>> coordinates(const std::vector<std::uint8_t>& v) const;
    bool contains(const std::vector<std::uint8_t>& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::uint8_t>& row(std::size_t i) const { return rows_[i]; }
    const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

    // Linear combination of echelon rows with the given coordinates.
    std::vector<std::uint8_t> combine(const std::vector<std::uint8_t>& coords) const;

private:
    std::uint32_t prime_;
    std::size_t width_;
    std::vector<std::vector<std::uint8_t>> rows_;   // echelon rows
    std::vector<std::size_t> pivot_cols_;           // pivot column per row
};

std::vector<std::uint8_t> flatten(const FpMatrix& m);
FpMatrix unflatten(std::uint32_t prime, std::size_t rows, std::size_t cols,
                   const std::vector<std::uint8_t>& v);

}  // namespace modrep::fp
