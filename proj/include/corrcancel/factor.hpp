#pragma once

#include <utility>
#include <vector>

#include "corrcancel/poly.hpp"

namespace corrcancel {

// f = unit * prod factors[i].first ^ factors[i].second, factors irreducible,
// normalized (leading coefficient 1 under lex), pairwise distinct.
struct Factorization {
    Scalar unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble(const RingPtr& ring) const;
};

// Dense univariate over the coefficient field, used by the factorization
// internals and by callers that want fast exact univariate arithmetic.
using UniPoly = std::vector<Scalar>;  // coefficient of x^i at index i, trimmed

UniPoly uni_trim(UniPoly a);
int uni_deg(const UniPoly& a);  // -1 for zero
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const Scalar& s);
void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly uni_gcd(UniPoly a, UniPoly b);  // monic
// monic g = gcd with sg*a + tg*b = g
void uni_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t);
UniPoly uni_derivative(const UniPoly& a, const FieldSpec& field);
UniPoly uni_from_poly(const Poly& f, std::size_t v);
Poly uni_to_poly(const RingPtr& ring, std::size_t v, const UniPoly& u);

// gcd of multivariate polynomials (primitive PRS); exponents must be
// nonnegative.  Result normalized with lex-leading coefficient 1.
Poly poly_gcd(const Poly& a, const Poly& b);
// content of f as a polynomial in v (gcd of the coefficients)
Poly poly_content_in(const Poly& f, std::size_t v);

// Irreducible factorization of a polynomial supported on at most two
// variables (after clearing Laurent denominators).  Throws UnsupportedBase
// for >= 3 entangled variables and for inseparable situations over F_p(t).
Factorization factor_poly(const Poly& f, std::uint64_t seed = 1);

// Factorization of a univariate polynomial over the coefficient field.
Factorization factor_univariate(const Poly& f, std::uint64_t seed = 1);

}  // namespace corrcancel
