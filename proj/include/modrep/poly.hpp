#pragma once

#include <cstdint>
#include <vector>

#include "modrep/fp.hpp"

namespace modrep::poly {

// Polynomial over F_p, coefficient of x^i at index i, no trailing zeros.
struct FpPoly {
    std::uint32_t prime = 3;
    std::vector<std::uint8_t> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool is_zero() const { return coeff.empty(); }
    static FpPoly zero(std::uint32_t p) { return {p, {}}; }
    static FpPoly one(std::uint32_t p) { return {p, {1}}; }
    static FpPoly x(std::uint32_t p) { return {p, {0, 1}}; }
    void normalize();
    FpPoly monic() const;
    bool operator==(const FpPoly& o) const = default;
};

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
// quotient/remainder by a nonzero divisor
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly derivative(const FpPoly& a);
FpPoly pow_mod(const FpPoly& base, unsigned long long e, const FpPoly& mod);

// Evaluate f at a square matrix.
fp::FpMatrix eval(const FpPoly& f, const fp::FpMatrix& m);

// Minimal polynomial of a square matrix over F_p (monic).
FpPoly min_poly(const fp::FpMatrix& m);

struct Factor {
    FpPoly poly;       // monic irreducible
    int multiplicity;
};

// Full factorization into monic irreducibles (squarefree + distinct-degree +
// seeded equal-degree splitting).
std::vector<Factor> factor(const FpPoly& f, std::uint64_t seed = 1);

}  // namespace modrep::poly
