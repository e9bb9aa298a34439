#include "corrcancel/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace corrcancel {

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) fail(ErrorCode::Internal, "mixed-ring polynomial arithmetic");
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(mono_one(p.ring_->size()), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t idx, std::int32_t power) {
    Poly p(ring);
    if (idx >= ring->size()) fail(ErrorCode::Internal, "variable index out of range");
    if (power < 0 && !ring->var(idx).invertible)
        fail(ErrorCode::InvalidArgument, "negative power of non-invertible variable");
    Mono m = mono_one(ring->size());
    m[idx] = power;
    p.terms_.emplace(std::move(m), Scalar::one(ring->field()));
    return p;
}

Poly Poly::term(RingPtr ring, Mono m, const Scalar& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

void Poly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_ring(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, c0] : terms_) r.terms_.emplace(m, c0 * c);
    return r;
}

Poly Poly::pow(long long e) const {
    if (e < 0) {
        if (!is_unit_form()) fail(ErrorCode::InvalidArgument, "negative power of a non-unit");
        const auto& [m, c] = *terms_.begin();
        Mono inv(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
        return Poly::term(ring_, inv, c.inverse()).pow(-e);
    }
    Poly r = one(ring_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_ring(o);
    return terms_ == o.terms_;
}

const Mono& Poly::leading_mono(const MonOrder& ord) const {
    if (terms_.empty()) fail(ErrorCode::Internal, "leading term of zero");
    const Mono* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (ord.greater(m, *best)) best = &m;
    return *best;
}

const Scalar& Poly::leading_coeff(const MonOrder& ord) const { return terms_.at(leading_mono(ord)); }

Poly Poly::make_monic(const MonOrder& ord) const {
    if (is_zero()) return *this;
    return *this * leading_coeff(ord).inverse();
}

long long Poly::total_degree() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
    return d;
}

std::int32_t Poly::degree_in(std::size_t v) const {
    std::int32_t d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[v] > d) d = m[v];
        first = false;
    }
    return d;
}

std::int32_t Poly::min_exponent(std::size_t v) const {
    std::int32_t d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[v] < d) d = m[v];
        first = false;
    }
    return d;
}

VarMask Poly::support_mask() const {
    VarMask mask = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) mask |= mask_bit(i);
    return mask;
}

Poly Poly::coeff_of(std::size_t v, std::int32_t k) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[v] != k) continue;
        Mono m2 = m;
        m2[v] = 0;
        r.terms_.emplace(std::move(m2), c);
    }
    return r;
}

std::vector<Poly> Poly::coeffs_in(std::size_t v) const {
    if (min_exponent(v) < 0) fail(ErrorCode::Internal, "coeffs_in on Laurent exponents");
    std::vector<Poly> cs(static_cast<std::size_t>(degree_in(v)) + 1, Poly::zero(ring_));
    for (const auto& [m, c] : terms_) {
        Mono m2 = m;
        m2[v] = 0;
        cs[static_cast<std::size_t>(m[v])].add_term(m2, c);
    }
    return cs;
}

Poly Poly::from_coeffs_in(RingPtr ring, std::size_t v, const std::vector<Poly>& cs) {
    Poly r(ring);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [m, c] : cs[k].terms()) {
            Mono m2 = m;
            m2[v] += static_cast<std::int32_t>(k);
            r.add_term(m2, c);
        }
    }
    return r;
}

Poly Poly::derivative(std::size_t v) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Mono m2 = m;
        m2[v] -= 1;
        r.add_term(m2, c * Scalar::from_int(ring_->field(), m[v]));
    }
    return r;
}

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->size()) fail(ErrorCode::Internal, "substitute: wrong image count");
    Poly r = Poly::zero(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t = t * images[i].pow(m[i]);
        r = r + t;
    }
    return r;
}

Poly Poly::rename(const RingPtr& target, const std::vector<int>& var_map) const {
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Mono m2 = mono_one(target->size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (var_map[i] < 0) fail(ErrorCode::Internal, "rename: unmapped variable in support");
            m2[static_cast<std::size_t>(var_map[i])] += m[i];
        }
        r.add_term(m2, c);
    }
    return r;
}

Poly Poly::evaluate_partial(const std::vector<std::optional<Scalar>>& values) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Scalar coeff = c;
        Mono m2 = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!values[i] || m[i] == 0) continue;
            coeff = coeff * values[i]->pow(m[i]);
            m2[i] = 0;
        }
        r.add_term(m2, coeff);
    }
    return r;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t = t * point[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

Poly Poly::clear_units() const {
    if (is_zero()) return *this;
    Mono shift = mono_one(ring_->size());
    for (std::size_t v = 0; v < ring_->size(); ++v) {
        std::int32_t m = min_exponent(v);
        if (m < 0) shift[v] = -m;
    }
    if (mono_is_one(shift)) return *this;
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(mono_mul(m, shift), c);
    return r;
}

Poly Poly::strip_unit_monomial() const {
    if (is_zero()) return *this;
    VarMask inv = ring_->invertible_mask();
    Mono shift = mono_one(ring_->size());
    bool any = false;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
        if (!mask_has(inv, v)) continue;
        std::int32_t lo = terms_.begin()->first[v];
        for (const auto& [m, c] : terms_) lo = std::min(lo, m[v]);
        if (lo != 0) {
            shift[v] = -lo;
            any = true;
        }
    }
    if (!any) return *this;
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(mono_mul(m, shift), c);
    return r;
}

bool Poly::is_unit_form() const {
    if (terms_.size() != 1) return false;
    const Mono& m = terms_.begin()->first;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0 && !ring_->var(i).invertible) return false;
    return true;
}

PolyDiv poly_divmod(const Poly& p, const std::vector<Poly>& divisors, const MonOrder& ord) {
    PolyDiv res;
    res.quotients.assign(divisors.size(), Poly::zero(p.ring()));
    res.remainder = Poly::zero(p.ring());
    Poly work = p;
    while (!work.is_zero()) {
        const Mono lm = work.leading_mono(ord);
        const Scalar lc = work.terms().at(lm);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Poly& d = divisors[i];
            if (d.is_zero()) continue;
            const Mono& dm = d.leading_mono(ord);
            if (!mono_divides(dm, lm)) continue;
            Scalar f = lc / d.terms().at(dm);
            Poly t = Poly::term(p.ring(), mono_div(lm, dm), f);
            res.quotients[i] = res.quotients[i] + t;
            work = work - t * d;
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(lm, lc);
            Poly t = Poly::term(p.ring(), lm, lc);
            work = work - t;
        }
    }
    return res;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Poly::zero(ring_);
    auto r = poly_divmod(*this, {d}, MonOrder::degrevlex());
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.quotients[0];
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // lex-descending for a stable, human-friendly rendering
    std::vector<const std::pair<const Mono, Scalar>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonOrder lex = MonOrder::lex();
    std::sort(ts.begin(), ts.end(),
              [&](auto* a, auto* b) { return lex.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        std::string ms;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!ms.empty()) ms += "*";
            ms += ring_->var(i).name;
            if (m[i] != 1) ms += "^" + std::to_string(m[i]);
        }
        if (ms.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << ms;
        } else {
            os << cs << "*" << ms;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool take(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void err(const std::string& msg) {
        fail(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos) + " in '" + s + "'");
    }

    long long parse_int() {
        skip_ws();
        bool neg = take('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) err("expected integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    Poly parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string num = s.substr(start, pos - start);
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            // lookahead: a denominator digit sequence
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                num += "/" + s.substr(dstart, pos - dstart);
            } else {
                pos = save;
            }
        }
        return Poly::constant(ring, Scalar::parse(ring->field(), num));
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) err("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (!take(')')) err("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->index_of(name);
            if (idx < 0) err("unknown variable '" + name + "'");
            return Poly::variable(ring, static_cast<std::size_t>(idx));
        }
        err("unexpected character");
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (take('^')) {
            long long e = parse_int();
            return base.pow(e);
        }
        return base;
    }

    Poly parse_product() {
        Poly p = parse_power();
        while (take('*')) p = p * parse_power();
        return p;
    }

    Poly parse_expr() {
        skip_ws();
        bool neg = false;
        if (take('-'))
            neg = true;
        else
            take('+');
        Poly p = parse_product();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            if (take('+')) {
                p = p + parse_product();
            } else if (take('-')) {
                p = p - parse_product();
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    PolyParser p{ring, text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.err("trailing input");
    return r;
}

}  // namespace corrcancel
