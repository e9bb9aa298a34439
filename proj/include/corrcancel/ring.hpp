#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "corrcancel/scalar.hpp"

namespace corrcancel {

struct Variable {
    std::string name;
    bool invertible = false;  // multiplicative (G_m) coordinate

    bool operator==(const Variable& o) const { return name == o.name && invertible == o.invertible; }
};

// Exponent vector; negative exponents are allowed only on invertible variables.
using Mono = std::vector<std::int32_t>;

// Subset of a ring's variables, as a bitmask (rings stay well under 64 vars).
using VarMask = std::uint64_t;

inline bool mask_has(VarMask m, std::size_t i) { return (m >> i) & 1u; }
inline VarMask mask_bit(std::size_t i) { return VarMask(1) << i; }
inline int mask_count(VarMask m) { return __builtin_popcountll(m); }

// An ordered list of named variables over a field.  Immutable and shared.
class Ring {
  public:
    Ring(FieldSpec field, std::vector<Variable> vars);

    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }
    int index_of(const std::string& name) const;  // -1 if absent

    VarMask all_mask() const { return vars_.empty() ? 0 : (VarMask(-1) >> (64 - vars_.size())); }
    VarMask invertible_mask() const { return inv_mask_; }

    bool same_structure(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

  private:
    FieldSpec field_;
    std::vector<Variable> vars_;
    VarMask inv_mask_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldSpec field, std::vector<Variable> vars);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_structure(*b));
}

// Monomial utilities.
inline Mono mono_one(std::size_t n) { return Mono(n, 0); }
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // may go negative; caller checks
bool mono_divides(const Mono& a, const Mono& b);  // a | b, nonnegative exponents assumed
Mono mono_lcm(const Mono& a, const Mono& b);
long long mono_total_degree(const Mono& a);
bool mono_is_one(const Mono& a);
// Degree restricted to the masked variables.
long long mono_degree_on(const Mono& a, VarMask mask);
bool mono_supported_on(const Mono& a, VarMask mask);

}  // namespace corrcancel
