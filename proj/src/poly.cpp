#include "modrep/poly.hpp"

#include <algorithm>
#include <random>

namespace modrep::poly {

using fp::FpMatrix;
using fp::inv_mod;

void FpPoly::normalize() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

FpPoly FpPoly::monic() const {
    FpPoly r = *this;
    r.normalize();
    if (r.is_zero()) return r;
    std::uint32_t inv = inv_mod(r.coeff.back(), prime);
    for (auto& c : r.coeff) c = static_cast<std::uint8_t>(c * inv % prime);
    return r;
}

FpPoly add(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.prime, {}};
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (std::size_t i = 0; i < r.coeff.size(); ++i) {
        std::uint32_t v = (i < a.coeff.size() ? a.coeff[i] : 0) + (i < b.coeff.size() ? b.coeff[i] : 0);
        r.coeff[i] = static_cast<std::uint8_t>(v % a.prime);
    }
    r.normalize();
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.prime, {}};
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (std::size_t i = 0; i < r.coeff.size(); ++i) {
        std::uint32_t av = i < a.coeff.size() ? a.coeff[i] : 0;
        std::uint32_t bv = i < b.coeff.size() ? b.coeff[i] : 0;
        r.coeff[i] = static_cast<std::uint8_t>((av + a.prime - bv) % a.prime);
    }
    r.normalize();
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.prime);
    FpPoly r{a.prime, std::vector<std::uint8_t>(a.coeff.size() + b.coeff.size() - 1, 0)};
    for (std::size_t i = 0; i < a.coeff.size(); ++i) {
        if (!a.coeff[i]) continue;
        for (std::size_t j = 0; j < b.coeff.size(); ++j)
            r.coeff[i + j] = static_cast<std::uint8_t>((r.coeff[i + j] + a.coeff[i] * b.coeff[j]) % a.prime);
    }
    r.normalize();
    return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    FpPoly rem = a, q{a.prime, {}};
    rem.normalize();
    FpPoly d = b;
    d.normalize();
    if (d.is_zero()) throw fp::DimensionMismatch("poly division by zero");
    if (rem.degree() >= d.degree()) q.coeff.resize(rem.degree() - d.degree() + 1, 0);
    std::uint32_t lead_inv = inv_mod(d.coeff.back(), a.prime);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        std::uint32_t c = rem.coeff.back() * lead_inv % a.prime;
        q.coeff[shift] = static_cast<std::uint8_t>(c);
        for (std::size_t i = 0; i < d.coeff.size(); ++i) {
            std::uint32_t v = rem.coeff[shift + i] + a.prime - c * d.coeff[i] % a.prime;
            rem.coeff[shift + i] = static_cast<std::uint8_t>(v % a.prime);
        }
        rem.normalize();
    }
    q.normalize();
    return {q, rem};
}

FpPoly gcd(FpPoly a, FpPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        FpPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

FpPoly derivative(const FpPoly& a) {
    FpPoly r{a.prime, {}};
    for (std::size_t i = 1; i < a.coeff.size(); ++i)
        r.coeff.push_back(static_cast<std::uint8_t>(a.coeff[i] * (i % a.prime) % a.prime));
    r.normalize();
    return r;
}

FpPoly pow_mod(const FpPoly& base, unsigned long long e, const FpPoly& mod) {
    FpPoly acc = FpPoly::one(base.prime);
    FpPoly b = divmod(base, mod).second;
    while (e) {
        if (e & 1) acc = divmod(mul(acc, b), mod).second;
        e >>= 1;
        if (e) b = divmod(mul(b, b), mod).second;
    }
    return acc;
}

FpMatrix eval(const FpPoly& f, const FpMatrix& m) {
    FpMatrix acc = FpMatrix::zero(m.prime(), m.rows(), m.cols());
    // Horner
    for (std::size_t i = f.coeff.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc.add_at(d, d, f.coeff[i]);
    }
    return acc;
}

FpPoly min_poly(const FpMatrix& m) {
    const std::size_t n = m.rows();
    const std::uint32_t p = m.prime();
    // lcm over Krylov relations of unit vectors; stop once it annihilates m
    FpPoly result = FpPoly::one(p);
    for (std::size_t start = 0; start < n; ++start) {
        if (eval(result, m).is_zero()) break;
        fp::SpanBasis span(p, n);
        std::vector<std::vector<std::uint8_t>> krylov;
        std::vector<std::uint8_t> v(n, 0);
        v[start] = 1;
        while (span.insert(v)) {
            krylov.push_back(v);
            // v <- m v
            std::vector<std::uint8_t> w(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                const std::uint8_t* row = m.row_ptr(i);
                for (std::size_t j = 0; j < n; ++j) acc += static_cast<std::uint64_t>(row[j]) * v[j];
                w[i] = static_cast<std::uint8_t>(acc % p);
            }
            v = std::move(w);
        }
        // v is now dependent on krylov basis: express it
        FpMatrix basis(p, n, krylov.size());
        for (std::size_t c = 0; c < krylov.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) basis.set(r, c, krylov[c][r]);
        FpMatrix rhs(p, n, 1);
        for (std::size_t r = 0; r < n; ++r) rhs.set(r, 0, v[r]);
        auto sol = fp::solve(basis, rhs);
        if (!sol) throw fp::DimensionMismatch("krylov inconsistency");
        FpPoly local{p, {}};
        local.coeff.resize(krylov.size() + 1, 0);
        local.coeff[krylov.size()] = 1;
        for (std::size_t i = 0; i < krylov.size(); ++i)
            local.coeff[i] = static_cast<std::uint8_t>((p - sol->at(i, 0)) % p);
        // result = lcm(result, local)
        FpPoly g = gcd(result, local);
        result = divmod(mul(result, local), g).first.monic();
    }
    return result;
}

namespace {

// f squarefree: split into products of irreducibles of equal degree d.
void distinct_degree(const FpPoly& f, std::vector<std::pair<FpPoly, int>>& out) {
    FpPoly rest = f;
    FpPoly xp = FpPoly::x(f.prime);
    FpPoly h = xp;  // x^(p^d) mod rest, updated per degree
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.push_back({rest, rest.degree()});
            break;
        }
        h = pow_mod(h, f.prime, rest);
        FpPoly g = gcd(sub(h, xp), rest);
        if (g.degree() > 0) {
            out.push_back({g, d});
            rest = divmod(rest, g).first;
            h = divmod(h, rest).second;
        }
    }
}

// Cantor–Zassenhaus splitting of a product of irreducibles of degree d.
void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint32_t p = f.prime;
    if (d > 15) throw fp::DimensionMismatch("equal-degree split: degree too large");
    unsigned long long q_half = 1;
    for (int i = 0; i < d; ++i) q_half *= p;
    q_half = (q_half - 1) / 2;  // p odd here
    for (;;) {
        FpPoly a{p, {}};
        a.coeff.resize(f.degree(), 0);
        for (auto& c : a.coeff) c = static_cast<std::uint8_t>(rng() % p);
        a.normalize();
        if (a.degree() < 1) continue;
        FpPoly g = gcd(a, f);
        if (g.degree() == 0) {
            FpPoly b = pow_mod(a, q_half, f);
            b = sub(b, FpPoly::one(p));
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Factor> factor(const FpPoly& f_in, std::uint64_t seed) {
    const std::uint32_t p = f_in.prime;
    FpPoly f = f_in.monic();
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

    // squarefree decomposition, char-p aware
    std::vector<std::pair<FpPoly, int>> squarefree;  // (squarefree part, multiplicity base)
    struct Item { FpPoly poly; int mult; };
    std::vector<Item> stack{{f, 1}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        FpPoly g = it.poly.monic();
        if (g.degree() < 1) continue;
        FpPoly gp = derivative(g);
        if (gp.is_zero()) {
            // g = h(x^p): take p-th root and recurse with multiplicity * p
            FpPoly h{p, {}};
            for (std::size_t i = 0; i < g.coeff.size(); i += p) h.coeff.push_back(g.coeff[i]);
            h.normalize();
            stack.push_back({h, it.mult * static_cast<int>(p)});
            continue;
        }
        FpPoly c = gcd(g, gp);
        FpPoly w = divmod(g, c).first;  // squarefree part
        int k = 1;
        while (w.degree() > 0) {
            FpPoly y = gcd(w, c);
            FpPoly fac = divmod(w, y).first;  // product of irreducibles with multiplicity exactly k
            if (fac.degree() > 0) squarefree.push_back({fac, it.mult * k});
            w = y;
            c = divmod(c, y).first;
            ++k;
        }
        if (c.degree() > 0) stack.push_back({c, it.mult});
    }

    for (auto& [sf, mult] : squarefree) {
        std::vector<std::pair<FpPoly, int>> dd;
        distinct_degree(sf, dd);
        for (auto& [prod, d] : dd) {
            std::vector<FpPoly> irr;
            if (p == 2) {
                // p = 2 needs the trace-based splitter; not required here
                if (prod.degree() == d) irr.push_back(prod.monic());
                else throw fp::DimensionMismatch("equal-degree splitting over F_2 unsupported");
            } else {
                equal_degree(prod, d, rng, irr);
            }
            for (auto& g : irr) out.push_back({g, mult});
        }
    }
    // merge duplicates (same irreducible from different squarefree layers cannot
    // occur, but keep the output canonical)
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.coeff.size() != b.poly.coeff.size()) return a.poly.coeff.size() < b.poly.coeff.size();
        return a.poly.coeff < b.poly.coeff;
    });
    return out;
}

}  // namespace modrep::poly
