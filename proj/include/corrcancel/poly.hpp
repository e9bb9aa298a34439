#pragma once

#include <map>
#include <optional>
#include <vector>

#include "corrcancel/order.hpp"
#include "corrcancel/ring.hpp"

namespace corrcancel {

// Sparse multivariate polynomial with exact coefficients.  Exponents may be
// negative on invertible variables (Laurent form); ideal-level code clears
// denominators first via clear_units().
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly one(RingPtr ring) { return constant(ring, Scalar::one(ring->field())); }
    static Poly from_int(RingPtr ring, long long v) {
        return constant(ring, Scalar::from_int(ring->field(), v));
    }
    static Poly variable(RingPtr ring, std::size_t idx, std::int32_t power = 1);
    static Poly term(RingPtr ring, Mono m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_.begin()->first)); }
    std::size_t term_count() const { return terms_.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Scalar& c) const;
    Poly pow(long long e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Mono& m, const Scalar& c);  // accumulates, drops zeros

    // Leading data under an order (poly must be nonzero).
    const Mono& leading_mono(const MonOrder& ord) const;
    const Scalar& leading_coeff(const MonOrder& ord) const;
    Poly make_monic(const MonOrder& ord) const;

    long long total_degree() const;           // max over terms; 0 for zero poly
    std::int32_t degree_in(std::size_t v) const;   // max exponent of v (0 for zero poly)
    std::int32_t min_exponent(std::size_t v) const;  // min exponent of v over terms
    VarMask support_mask() const;             // variables actually present

    // Coefficient of v^k, a polynomial with v-exponent zero.
    Poly coeff_of(std::size_t v, std::int32_t k) const;
    // All coefficients of powers of v, indexed 0..degree_in(v); requires
    // nonnegative exponents in v.
    std::vector<Poly> coeffs_in(std::size_t v) const;
    static Poly from_coeffs_in(RingPtr ring, std::size_t v, const std::vector<Poly>& cs);

    Poly derivative(std::size_t v) const;

    // Substitutes images[i] for variable i (images live on the target ring);
    // every image must be provided.
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;
    // Moves the poly to another ring along var_map (index in target per
    // source var; all support vars must be mapped).
    Poly rename(const RingPtr& target, const std::vector<int>& var_map) const;
    Poly evaluate_partial(const std::vector<std::optional<Scalar>>& values) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Multiplies by the monomial in invertible variables that clears all
    // negative exponents; the result generates the same ideal in the
    // saturated (Laurent) sense.
    Poly clear_units() const;
    // Strips any monomial factor supported on invertible variables.
    Poly strip_unit_monomial() const;
    // True when the poly is a unit of the cell coordinate ring:
    // nonzero scalar times a monomial in invertible variables.
    bool is_unit_form() const;

    std::optional<Poly> divide_exact(const Poly& d) const;

    std::string str() const;  // deterministic rendering, lex-descending terms

  private:
    RingPtr ring_;
    std::map<Mono, Scalar> terms_;

    void check_ring(const Poly& o) const;
};

// Division with remainder by several divisors under an order.
struct PolyDiv {
    std::vector<Poly> quotients;
    Poly remainder;
};
PolyDiv poly_divmod(const Poly& p, const std::vector<Poly>& divisors, const MonOrder& ord);

// Parses the CLI polynomial grammar: rational coefficients, identifiers,
// `^` powers (possibly negative), `*` products, `+`/`-`, parentheses.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace corrcancel
