#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "corrcancel/scalar.hpp"

namespace corrcancel {

// Dense univariate polynomial over F_p (p < 2^61), coefficient of x^i at
// index i, no trailing zeros.  Workhorse for factorization mod p.
struct ModPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    std::uint64_t lead() const { return c.back(); }
    void trim();

    static ModPoly zero(std::uint64_t p) { return ModPoly{p, {}}; }
    static ModPoly constant(std::uint64_t p, std::uint64_t v);
    static ModPoly x(std::uint64_t p);
};

ModPoly mp_add(const ModPoly& a, const ModPoly& b);
ModPoly mp_sub(const ModPoly& a, const ModPoly& b);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b);
ModPoly mp_scale(const ModPoly& a, std::uint64_t s);
// division with remainder; b nonzero
void mp_divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly mp_rem(const ModPoly& a, const ModPoly& b);
ModPoly mp_gcd(ModPoly a, ModPoly b);  // monic gcd
ModPoly mp_monic(const ModPoly& a);
ModPoly mp_derivative(const ModPoly& a);
ModPoly mp_pow_mod(const ModPoly& a, const BigInt& e, const ModPoly& m);

// Irreducible factors with multiplicities (Cantor–Zassenhaus; handles p = 2
// via the trace map).  Deterministic given the seed.
std::vector<std::pair<ModPoly, int>> mp_factor(const ModPoly& f, std::uint64_t seed);

}  // namespace corrcancel
