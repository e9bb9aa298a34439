#include "corrcancel/ring.hpp"

#include <algorithm>
#include <set>

#include "corrcancel/order.hpp"

namespace corrcancel {

Ring::Ring(FieldSpec field, std::vector<Variable> vars) : field_(field), vars_(std::move(vars)) {
    if (vars_.size() > 60) fail(ErrorCode::InvalidArgument, "too many variables");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!seen.insert(vars_[i].name).second)
            fail(ErrorCode::InvalidArgument, "duplicate variable '" + vars_[i].name + "'");
        if (vars_[i].invertible) inv_mask_ |= mask_bit(i);
    }
}

int Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(FieldSpec field, std::vector<Variable> vars) {
    return std::make_shared<Ring>(field, std::move(vars));
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

long long mono_total_degree(const Mono& a) {
    long long d = 0;
    for (auto e : a) d += e;
    return d;
}

bool mono_is_one(const Mono& a) {
    for (auto e : a)
        if (e != 0) return false;
    return true;
}

long long mono_degree_on(const Mono& a, VarMask mask) {
    long long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (mask_has(mask, i)) d += a[i];
    return d;
}

bool mono_supported_on(const Mono& a, VarMask mask) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && !mask_has(mask, i)) return false;
    return true;
}

namespace {

int cmp_lex(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

// degrevlex restricted to the masked variables
int cmp_drl_on(const Mono& a, const Mono& b, VarMask mask) {
    long long da = mono_degree_on(a, mask), db = mono_degree_on(b, mask);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t j = a.size(); j-- > 0;) {
        if (!mask_has(mask, j)) continue;
        if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;  // smaller last exponent wins
    }
    return 0;
}

}  // namespace

int MonOrder::cmp(const Mono& a, const Mono& b) const {
    switch (kind_) {
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::DegRevLex:
            return cmp_drl_on(a, b, ~VarMask(0));
        case Kind::Block: {
            int c = cmp_drl_on(a, b, block_);
            if (c != 0) return c;
            return cmp_drl_on(a, b, ~block_);
        }
    }
    return 0;
}

std::string MonOrder::cache_key() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::DegRevLex:
            return "drl";
        case Kind::Block:
            return "blk:" + std::to_string(block_);
    }
    return "?";
}

}  // namespace corrcancel
