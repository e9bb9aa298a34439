#include "corrcancel/factor.hpp"

#include <algorithm>
#include <numeric>

#include "corrcancel/densemod.hpp"

namespace corrcancel {

Poly Factorization::reassemble(const RingPtr& ring) const {
    Poly r = Poly::constant(ring, unit);
    for (const auto& [f, m] : factors) r = r * f.pow(m);
    return r;
}

// ---------------------------------------------------------------------------
// dense univariate arithmetic over the field

UniPoly uni_trim(UniPoly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

int uni_deg(const UniPoly& a) { return static_cast<int>(a.size()) - 1; }

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size())
            r[i] = a[i] + b[i];
        else if (i < a.size())
            r[i] = a[i];
        else
            r[i] = b[i];
    }
    return uni_trim(std::move(r));
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly nb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
    return uni_add(a, nb);
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    const FieldSpec& f = a[0].field();
    UniPoly r(a.size() + b.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return uni_trim(std::move(r));
}

UniPoly uni_scale(const UniPoly& a, const Scalar& s) {
    if (s.is_zero()) return {};
    UniPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return uni_trim(std::move(r));
}

void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.empty()) fail(ErrorCode::Internal, "univariate division by zero");
    const FieldSpec& f = b[0].field();
    // local copies so q/r may alias a/b at call sites
    UniPoly B = b;
    UniPoly R = a;
    UniPoly Q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Scalar::zero(f));
    Scalar inv = B.back().inverse();
    while (uni_deg(R) >= uni_deg(B)) {
        int k = uni_deg(R) - uni_deg(B);
        Scalar c = R.back() * inv;
        Q[static_cast<std::size_t>(k)] = Q[static_cast<std::size_t>(k)] + c;
        for (std::size_t i = 0; i < B.size(); ++i)
            R[i + static_cast<std::size_t>(k)] = R[i + static_cast<std::size_t>(k)] - c * B[i];
        R = uni_trim(std::move(R));
        if (R.empty()) break;
    }
    q = uni_trim(std::move(Q));
    r = std::move(R);
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        UniPoly q, r;
        uni_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = uni_scale(a, a.back().inverse());
    return a;
}

void uni_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
    if (a.empty() && b.empty()) fail(ErrorCode::Internal, "ext gcd of zeros");
    const FieldSpec& f = (a.empty() ? b : a)[0].field();
    UniPoly r0 = uni_trim(a), r1 = uni_trim(b);
    UniPoly s0{Scalar::one(f)}, s1{};
    UniPoly t0{}, t1{Scalar::one(f)};
    while (!r1.empty()) {
        UniPoly q, r;
        uni_divmod(r0, r1, q, r);
        UniPoly ns = uni_sub(s0, uni_mul(q, s1));
        UniPoly nt = uni_sub(t0, uni_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    Scalar inv = r0.back().inverse();
    g = uni_scale(r0, inv);
    s = uni_scale(s0, inv);
    t = uni_scale(t0, inv);
}

UniPoly uni_derivative(const UniPoly& a, const FieldSpec& field) {
    if (a.size() < 2) return {};
    UniPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * Scalar::from_int(field, static_cast<long long>(i));
    return uni_trim(std::move(r));
}

UniPoly uni_from_poly(const Poly& f, std::size_t v) {
    const FieldSpec& field = f.ring()->field();
    UniPoly r(static_cast<std::size_t>(std::max<std::int32_t>(f.degree_in(v), 0)) + 1,
              Scalar::zero(field));
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != v && m[i] != 0) fail(ErrorCode::Internal, "uni_from_poly: not univariate");
        if (m[v] < 0) fail(ErrorCode::Internal, "uni_from_poly: negative exponent");
        r[static_cast<std::size_t>(m[v])] = c;
    }
    return uni_trim(std::move(r));
}

Poly uni_to_poly(const RingPtr& ring, std::size_t v, const UniPoly& u) {
    Poly r(ring);
    for (std::size_t i = 0; i < u.size(); ++i) {
        Mono m = mono_one(ring->size());
        m[v] = static_cast<std::int32_t>(i);
        r.add_term(m, u[i]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// multivariate gcd via primitive PRS

namespace {

std::vector<std::size_t> present_vars(const Poly& f) {
    std::vector<std::size_t> vs;
    VarMask m = f.support_mask();
    for (std::size_t i = 0; i < f.ring()->size(); ++i)
        if (mask_has(m, i)) vs.push_back(i);
    return vs;
}

Poly normalize_lex_monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f.make_monic(MonOrder::lex());
}

Poly poly_primitive_part(const Poly& f, std::size_t v) {
    Poly c = poly_content_in(f, v);
    auto q = f.divide_exact(c);
    if (!q) fail(ErrorCode::Internal, "content does not divide");
    return *q;
}

// pseudo-remainder of a by b in the main variable v
Poly pseudo_rem(Poly a, const Poly& b, std::size_t v) {
    std::int32_t db = b.degree_in(v);
    Poly lb = b.coeff_of(v, db);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        std::int32_t da = a.degree_in(v);
        Poly la = a.coeff_of(v, da);
        Poly shift = Poly::variable(a.ring(), v, da - db);
        a = a * lb - la * shift * b;
        // the update can only lower the v-degree
        if (!a.is_zero() && a.degree_in(v) >= da) fail(ErrorCode::Internal, "prem loop");
    }
    return a;
}

}  // namespace

Poly poly_content_in(const Poly& f, std::size_t v) {
    auto cs = f.coeffs_in(v);
    Poly g = Poly::zero(f.ring());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g.is_zero() ? Poly::zero(f.ring()) : g;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_lex_monic(b);
    if (b.is_zero()) return normalize_lex_monic(a);
    if (a.min_exponent(0) < 0) fail(ErrorCode::Internal, "poly_gcd on Laurent input");
    if (a.is_constant() || b.is_constant()) return Poly::one(a.ring());

    auto va = present_vars(a), vb = present_vars(b);
    std::vector<std::size_t> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.empty()) return Poly::one(a.ring());
    std::size_t v = common.front();

    // univariate fast path
    if (va.size() == 1 && vb.size() == 1) {
        UniPoly g = uni_gcd(uni_from_poly(a, v), uni_from_poly(b, v));
        return uni_to_poly(a.ring(), v, g);
    }

    Poly ca = poly_content_in(a, v), cb = poly_content_in(b, v);
    Poly gc = poly_gcd(ca, cb);
    Poly pa = poly_primitive_part(a, v);
    Poly pb = poly_primitive_part(b, v);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Poly::zero(a.ring());
        } else if (r.degree_in(v) == 0) {
            // coprime in the main variable
            return normalize_lex_monic(gc);
        } else {
            pb = poly_primitive_part(r, v);
        }
    }
    return normalize_lex_monic(gc * poly_primitive_part(pa, v));
}

// ---------------------------------------------------------------------------
// univariate factorization over F_p

namespace {

Factorization factor_uni_fp(const Poly& f, std::size_t v, std::uint64_t seed) {
    const FieldSpec& field = f.ring()->field();
    std::uint64_t p = field.characteristic;
    UniPoly u = uni_from_poly(f, v);
    ModPoly mf{p, {}};
    mf.c.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) mf.c[i] = u[i].residue();
    mf.trim();
    Factorization out{u.back(), {}};
    for (auto& [g, m] : mp_factor(mf, seed)) {
        Poly gp(f.ring());
        for (std::size_t i = 0; i < g.c.size(); ++i) {
            if (g.c[i] == 0) continue;
            Mono mo = mono_one(f.ring()->size());
            mo[v] = static_cast<std::int32_t>(i);
            gp.add_term(mo, Scalar::from_int(field, static_cast<long long>(g.c[i])));
        }
        out.factors.emplace_back(gp, m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// univariate factorization over Q: Yun squarefree + Zassenhaus

using ZPoly = std::vector<BigInt>;  // dense integer poly, trimmed

ZPoly zp_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zp_trim(std::move(r));
}

// division by a monic divisor; returns false if remainder nonzero
bool zp_divide_monic(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty() || b.back() != 1) return false;
    ZPoly r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, BigInt(0));
    while (zp_deg(r) >= zp_deg(b)) {
        int k = zp_deg(r) - zp_deg(b);
        BigInt c = r.back();
        q[static_cast<std::size_t>(k)] += c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(k)] -= c * b[i];
        r = zp_trim(std::move(r));
        if (r.empty()) break;
    }
    q = zp_trim(std::move(q));
    return r.empty();
}

ZPoly zp_mod(const ZPoly& a, const BigInt& m) {
    ZPoly r = a;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    return zp_trim(std::move(r));
}

ZPoly zp_mod_sym(const ZPoly& a, const BigInt& m) {
    ZPoly r = zp_mod(a, m);
    BigInt half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    return zp_trim(std::move(r));
}

// Hensel lift of a factorization of a monic integer polynomial.
// On input f == prod(g_i) mod p with g_i monic and pairwise coprime mod p;
// lifts to mod p^K (linear steps).
struct HenselNode {
    ZPoly val;  // current lift
    ZPoly s, t;  // Bezout cofactors mod p for the two children products
    std::unique_ptr<HenselNode> left, right;
};

ZPoly zp_from_mod(const ModPoly& m) {
    ZPoly r(m.c.size());
    for (std::size_t i = 0; i < m.c.size(); ++i) r[i] = BigInt(m.c[i]);
    return zp_trim(std::move(r));
}

ModPoly zp_to_mod(const ZPoly& a, std::uint64_t p) {
    ModPoly r{p, {}};
    r.c.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        BigInt c = a[i] % BigInt(p);
        if (c < 0) c += BigInt(p);
        r.c[i] = c.convert_to<std::uint64_t>();
    }
    r.trim();
    return r;
}

std::unique_ptr<HenselNode> build_tree(const std::vector<ZPoly>& leaves, std::size_t lo, std::size_t hi,
                                        std::uint64_t p) {
    auto node = std::make_unique<HenselNode>();
    if (hi - lo == 1) {
        node->val = leaves[lo];
        return node;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    node->left = build_tree(leaves, lo, mid, p);
    node->right = build_tree(leaves, mid, hi, p);
    node->val = zp_mod(zp_mul(node->left->val, node->right->val), BigInt(p));
    ModPoly a = zp_to_mod(node->left->val, p), b = zp_to_mod(node->right->val, p);
    // Bezout cofactors s*a + t*b = 1 mod p via the dense mod-p layer
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1 = ModPoly::zero(p);
    ModPoly t0 = ModPoly::zero(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        ModPoly q, r;
        mp_divmod(r0, r1, q, r);
        ModPoly ns = mp_sub(s0, mp_mul(q, s1));
        ModPoly nt = mp_sub(t0, mp_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = ns;
        t0 = t1; t1 = nt;
    }
    if (r0.deg() != 0) fail(ErrorCode::Internal, "hensel: factors not coprime mod p");
    std::uint64_t inv = mod_inv(r0.c[0], p);
    node->s = zp_from_mod(mp_scale(s0, inv));
    node->t = zp_from_mod(mp_scale(t0, inv));
    return node;
}

// lift node->val decomposition of target (monic) from mod p^k to mod p^{k+1}
void lift_step(HenselNode* node, const ZPoly& target, const BigInt& pk, std::uint64_t p) {
    if (!node->left) {
        node->val = target;
        return;
    }
    const ZPoly& g = node->left->val;
    const ZPoly& h = node->right->val;
    BigInt pk1 = pk * BigInt(p);
    // e = (target - g*h)/p^k mod p
    ZPoly diff = zp_mod(target, pk1);
    ZPoly gh = zp_mod(zp_mul(g, h), pk1);
    ZPoly e(std::max(diff.size(), gh.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        BigInt d = (i < diff.size() ? diff[i] : BigInt(0)) - (i < gh.size() ? gh[i] : BigInt(0));
        d /= pk;  // exact by induction
        e[i] = d;
    }
    e = zp_mod(zp_trim(std::move(e)), BigInt(p));
    // dg = t*e mod g (mod p), dh = s*e + q*h (mod p)
    ModPoly me = zp_to_mod(e, p);
    ModPoly mg = zp_to_mod(g, p), mh = zp_to_mod(h, p);
    ModPoly ms = zp_to_mod(node->s, p), mt = zp_to_mod(node->t, p);
    ModPoly q, dg;
    mp_divmod(mp_mul(mt, me), mg, q, dg);
    ModPoly dh = mp_add(mp_mul(ms, me), mp_mul(q, mh));
    ZPoly ng = g, nh = h;
    ZPoly zdg = zp_from_mod(dg), zdh = zp_from_mod(dh);
    if (ng.size() < zdg.size() + 0) ng.resize(std::max(ng.size(), zdg.size()));
    for (std::size_t i = 0; i < zdg.size(); ++i) ng[i] += pk * zdg[i];
    if (nh.size() < zdh.size()) nh.resize(zdh.size());
    for (std::size_t i = 0; i < zdh.size(); ++i) nh[i] += pk * zdh[i];
    node->left->val = zp_mod(ng, pk1);
    node->right->val = zp_mod(nh, pk1);
    // keep children monic: the corrections must not touch the lead term
    lift_step(node->left.get(), node->left->val, pk, p);
    lift_step(node->right.get(), node->right->val, pk, p);
    node->val = zp_mod(zp_mul(node->left->val, node->right->val), pk1);
}

void collect_leaves(const HenselNode* node, std::vector<ZPoly>& out) {
    if (!node->left) {
        out.push_back(node->val);
        return;
    }
    collect_leaves(node->left.get(), out);
    collect_leaves(node->right.get(), out);
}

// integer squarefree monic-after-monicize factorization; input primitive,
// squarefree, deg >= 2, positive leading coefficient
std::vector<ZPoly> zassenhaus(const ZPoly& f, std::uint64_t seed) {
    int n = zp_deg(f);
    BigInt lc = f.back();
    // monicize: F(x) = lc^(n-1) f(x/lc), so F_i = f_i * lc^(n-1-i), F_n = 1
    ZPoly F(f.size());
    F[static_cast<std::size_t>(n)] = 1;
    BigInt pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        F[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * pw;
        pw *= lc;
    }
    // prime selection: smallest usable primes, pick the one with fewest factors
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                           53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
    std::vector<std::pair<ModPoly, int>> best_factors;
    std::uint64_t best_p = 0;
    int tried = 0;
    for (std::uint64_t p : primes) {
        if (lc % BigInt(p) == 0) continue;
        ModPoly mf = zp_to_mod(F, p);
        if (mf.deg() != n) continue;
        if (mp_gcd(mf, mp_derivative(mf)).deg() != 0) continue;
        auto fs = mp_factor(mf, seed + p);
        if (best_p == 0 || fs.size() < best_factors.size()) {
            best_factors = fs;
            best_p = p;
        }
        if (++tried >= 3 || best_factors.size() == 1) break;
    }
    if (best_p == 0) fail(ErrorCode::Internal, "no usable prime for factorization");
    if (best_factors.size() == 1) return {F};

    std::uint64_t p = best_p;
    // coefficient bound (Mignotte-style) for monic factors of F
    BigInt norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    BigInt bound = 2;  // 2 * 2^n * ||F||_2, crude but safe
    for (int i = 0; i < n; ++i) bound *= 2;
    BigInt s = 1;
    while (s * s < norm2) s += s / 2 + 1;
    bound *= (s + 1);
    BigInt pk = p;
    int K = 1;
    while (pk <= 2 * bound) {
        pk *= p;
        ++K;
    }

    std::vector<ZPoly> leaves;
    for (auto& [g, m] : best_factors) leaves.push_back(zp_from_mod(mp_monic(g)));
    auto tree = build_tree(leaves, 0, leaves.size(), p);
    BigInt cur = p;
    tree->val = zp_mod(F, cur);
    for (int i = 1; i < K; ++i) {
        lift_step(tree.get(), zp_mod(F, cur * BigInt(p)), cur, p);
        cur *= p;
    }
    std::vector<ZPoly> lifted;
    collect_leaves(tree.get(), lifted);

    // subset recombination
    std::vector<ZPoly> out;
    ZPoly rem = F;
    std::vector<ZPoly> pool = lifted;
    bool progress = true;
    std::size_t card = 1;
    while (pool.size() > 0 && card <= pool.size() / 2) {
        progress = false;
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            ZPoly cand{BigInt(1)};
            for (auto i : idx) cand = zp_mod(zp_mul(cand, pool[i]), pk);
            cand = zp_mod_sym(cand, pk);
            ZPoly q;
            if (zp_divide_monic(rem, cand, q)) {
                out.push_back(cand);
                rem = q;
                std::vector<ZPoly> np;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                pool = std::move(np);
                progress = true;
                break;
            }
            // next combination
            int j = static_cast<int>(card) - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] ==
                                 pool.size() - card + static_cast<std::size_t>(j))
                --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (std::size_t l = static_cast<std::size_t>(j) + 1; l < card; ++l)
                idx[l] = idx[l - 1] + 1;
        }
        if (!progress) ++card;
    }
    if (zp_deg(rem) > 0) out.push_back(rem);
    return out;  // factors of the monicized F
}

// Yun squarefree decomposition over Q (monic input)
std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& f, const FieldSpec& field) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly fp = uni_derivative(f, field);
    UniPoly a = uni_gcd(f, fp);
    UniPoly b, c, q, r;
    uni_divmod(f, a, b, r);
    uni_divmod(fp, a, c, r);
    UniPoly d = uni_sub(c, uni_derivative(b, field));
    int i = 1;
    while (uni_deg(b) > 0) {
        UniPoly g = uni_gcd(b, d);
        if (uni_deg(g) > 0) out.emplace_back(g, i);
        uni_divmod(b, g, b, r);
        uni_divmod(d, g, c, r);
        d = uni_sub(c, uni_derivative(b, field));
        ++i;
    }
    return out;
}

Factorization factor_uni_rational(const Poly& f, std::size_t v, std::uint64_t seed) {
    const FieldSpec& field = f.ring()->field();
    UniPoly u = uni_from_poly(f, v);
    Factorization out{u.back(), {}};
    UniPoly monic = uni_scale(u, u.back().inverse());
    for (auto& [sq, mult] : yun_squarefree(monic, field)) {
        if (uni_deg(sq) == 1) {
            out.factors.emplace_back(uni_to_poly(f.ring(), v, uni_scale(sq, sq.back().inverse())),
                                     mult);
            continue;
        }
        // to primitive integer coefficients
        BigInt den = 1;
        for (const auto& c : sq) den = lcm(den, denominator(c.rational()));
        ZPoly z(sq.size());
        for (std::size_t i = 0; i < sq.size(); ++i) {
            BigRat q = sq[i].rational() * BigRat(den);
            z[i] = numerator(q);
        }
        BigInt cont = 0;
        for (const auto& c : z) cont = gcd(cont, c);
        for (auto& c : z) c /= cont;
        if (z.back() < 0)
            for (auto& c : z) c = -c;
        BigInt lc = z.back();
        std::vector<ZPoly> zf =
            zp_deg(z) <= 1 ? std::vector<ZPoly>{z} : zassenhaus(z, seed);
        for (auto& G : zf) {
            UniPoly g;
            if (zp_deg(z) <= 1) {
                g.assign(z.size(), Scalar::zero(field));
                for (std::size_t i = 0; i < z.size(); ++i)
                    g[i] = Scalar::from_rational(field, BigRat(z[i]));
            } else {
                // G is a monic factor of F(x) = lc^(n-1) f(x/lc); the matching
                // monic factor of f is G(lc*x)/lc^deg(G), i.e. coefficient k
                // becomes G[k] / lc^(deg-k)
                g.assign(G.size(), Scalar::zero(field));
                BigInt pw = 1;
                for (std::size_t i = 0; i < G.size(); ++i) {
                    std::size_t k = G.size() - 1 - i;
                    g[k] = Scalar::from_rational(field, BigRat(G[k], pw));
                    if (i + 1 < G.size()) pw *= lc;
                }
            }
            g = uni_scale(g, g.back().inverse());
            out.factors.emplace_back(uni_to_poly(f.ring(), v, g), mult);
        }
    }
    // dedupe identical factors (can arise from the linear fast path)
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return a.first.str() < b.first.str();
    });
    std::vector<std::pair<Poly, int>> merged;
    for (auto& fm : out.factors) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(fm);
    }
    out.factors = std::move(merged);
    return out;
}

}  // namespace

Factorization factor_univariate(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "factor of zero");
    Poly g = f.clear_units().strip_unit_monomial();
    auto vs = present_vars(g);
    if (vs.empty()) return Factorization{g.terms().begin()->second, {}};
    if (vs.size() != 1) fail(ErrorCode::InvalidArgument, "not univariate");
    std::size_t v = vs[0];
    if (f.ring()->field().is_rational()) return factor_uni_rational(g, v, seed);
    return factor_uni_fp(g, v, seed);
}

// ---------------------------------------------------------------------------
// bivariate factorization: evaluation + Hensel lifting in (t-a)-adic series

namespace {

// truncated power series in s over the field, as UniPoly cut to length M
UniPoly series_trunc(UniPoly a, std::size_t M) {
    if (a.size() > M) a.resize(M);
    return uni_trim(std::move(a));
}

UniPoly series_mul(const UniPoly& a, const UniPoly& b, std::size_t M) {
    return series_trunc(uni_mul(a, b), M);
}

UniPoly series_inv(const UniPoly& a, std::size_t M, const FieldSpec& field) {
    if (a.empty() || a[0].is_zero()) fail(ErrorCode::Internal, "series_inv: zero constant term");
    UniPoly r{a[0].inverse()};
    for (std::size_t k = 1; k < M; ++k) {
        // coefficient k of a*r must vanish
        Scalar acc = Scalar::zero(field);
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) {
            if (k - i < r.size()) acc = acc + a[i] * r[k - i];
        }
        r.push_back(-(acc * r[0]));
    }
    return uni_trim(std::move(r));
}

// bivariate working form: coefficients (series in s) of powers of y
struct BiPoly {
    std::vector<UniPoly> c;  // index = y-degree

    int ydeg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<std::size_t>(i)].empty()) return i;
        return -1;
    }
    void trim() {
        while (!c.empty() && c.back().empty()) c.pop_back();
    }
};

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, std::size_t M) {
    BiPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, {});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].empty()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].empty()) continue;
            r.c[i + j] = series_trunc(uni_add(r.c[i + j], uni_mul(a.c[i], b.c[j])), M);
        }
    }
    r.trim();
    return r;
}

BiPoly bi_sub(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        UniPoly x = i < a.c.size() ? a.c[i] : UniPoly{};
        UniPoly y = i < b.c.size() ? b.c[i] : UniPoly{};
        r.c[i] = uni_sub(x, y);
    }
    r.trim();
    return r;
}

// Hensel tree over k[[s]]
struct BiNode {
    BiPoly val;
    UniPoly s_cof, t_cof;  // Bezout cofactors at s=0 (univariate in y over k)
    std::unique_ptr<BiNode> left, right;
};

UniPoly bi_eval_zero(const BiPoly& a, const FieldSpec& field) {
    UniPoly r(a.c.size(), Scalar::zero(field));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!a.c[i].empty()) r[i] = a.c[i][0];
    return uni_trim(std::move(r));
}

BiPoly bi_from_uni(const UniPoly& u) {
    BiPoly r;
    r.c.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) r.c[i] = UniPoly{u[i]};
    return r;
}

std::unique_ptr<BiNode> bi_build(const std::vector<UniPoly>& leaves, std::size_t lo, std::size_t hi,
                                 const FieldSpec& field) {
    auto node = std::make_unique<BiNode>();
    if (hi - lo == 1) {
        node->val = bi_from_uni(leaves[lo]);
        return node;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    node->left = bi_build(leaves, lo, mid, field);
    node->right = bi_build(leaves, mid, hi, field);
    UniPoly a = bi_eval_zero(node->left->val, field);
    UniPoly b = bi_eval_zero(node->right->val, field);
    UniPoly g, s, t;
    uni_ext_gcd(a, b, g, s, t);
    if (uni_deg(g) != 0) fail(ErrorCode::Internal, "bivariate hensel: factors not coprime");
    node->s_cof = s;
    node->t_cof = t;
    node->val = bi_mul(node->left->val, node->right->val, 1);
    return node;
}

// lift the tree so that node subproduct == target mod s^{m+1}
void bi_lift(BiNode* node, const BiPoly& target, std::size_t m, const FieldSpec& field) {
    if (!node->left) {
        node->val = target;
        return;
    }
    const BiPoly& g = node->left->val;
    const BiPoly& h = node->right->val;
    BiPoly prod = bi_mul(g, h, m + 1);
    BiPoly diff = bi_sub(target, prod);
    // e = coefficient of s^m, univariate in y over k
    UniPoly e(diff.c.size(), Scalar::zero(field));
    bool nonzero = false;
    for (std::size_t i = 0; i < diff.c.size(); ++i) {
        if (diff.c[i].size() > m) {
            e[i] = diff.c[i][m];
            if (!e[i].is_zero()) nonzero = true;
        }
        // lower coefficients must already agree
    }
    e = uni_trim(std::move(e));
    if (nonzero) {
        UniPoly g0 = bi_eval_zero(g, field), h0 = bi_eval_zero(h, field);
        UniPoly q, dg, dh;
        uni_divmod(uni_mul(node->t_cof, e), g0, q, dg);
        dh = uni_add(uni_mul(node->s_cof, e), uni_mul(q, h0));
        auto add_shift = [&](BiPoly& dst, const UniPoly& delta) {
            if (dst.c.size() < delta.size()) dst.c.resize(delta.size());
            for (std::size_t i = 0; i < delta.size(); ++i) {
                if (delta[i].is_zero()) continue;
                UniPoly& cc = dst.c[i];
                if (cc.size() < m + 1) cc.resize(m + 1, Scalar::zero(field));
                cc[m] = cc[m] + delta[i];
                cc = uni_trim(std::move(cc));
            }
            dst.trim();
        };
        BiPoly ng = g, nh = h;
        add_shift(ng, dg);
        add_shift(nh, dh);
        node->left->val = ng;
        node->right->val = nh;
    }
    bi_lift(node->left.get(), node->left->val, m, field);
    bi_lift(node->right.get(), node->right->val, m, field);
    node->val = bi_mul(node->left->val, node->right->val, m + 2);
}

void bi_collect(const BiNode* node, std::vector<BiPoly>& out) {
    if (!node->left) {
        out.push_back(node->val);
        return;
    }
    bi_collect(node->left.get(), out);
    bi_collect(node->right.get(), out);
}

// converts working form back to a sparse poly in variables (tv, yv)
Poly bi_to_poly(const RingPtr& ring, std::size_t tv, std::size_t yv, const BiPoly& b) {
    Poly r(ring);
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c[i].size(); ++j) {
            if (b.c[i][j].is_zero()) continue;
            Mono m = mono_one(ring->size());
            m[yv] = static_cast<std::int32_t>(i);
            m[tv] = static_cast<std::int32_t>(j);
            r.add_term(m, b.c[i][j]);
        }
    }
    return r;
}

BiPoly bi_from_poly(const Poly& f, std::size_t tv, std::size_t yv, std::size_t M,
                    const FieldSpec& field) {
    BiPoly r;
    r.c.assign(static_cast<std::size_t>(f.degree_in(yv)) + 1, {});
    for (const auto& [m, c] : f.terms()) {
        std::size_t i = static_cast<std::size_t>(m[yv]);
        std::size_t j = static_cast<std::size_t>(m[tv]);
        if (j >= M) continue;
        UniPoly& cc = r.c[i];
        if (cc.size() < j + 1) cc.resize(j + 1, Scalar::zero(field));
        cc[j] = cc[j] + c;
    }
    for (auto& cc : r.c) cc = uni_trim(std::move(cc));
    r.trim();
    return r;
}

// irreducible factors of a primitive (in t), y-squarefree bivariate poly
std::vector<Poly> factor_biv_squarefree(const Poly& G, std::size_t tv, std::size_t yv,
                                        std::uint64_t seed) {
    const RingPtr& ring = G.ring();
    const FieldSpec& field = ring->field();
    if (G.degree_in(yv) == 1) return {G};

    // evaluation point: lead coefficient nonzero, specialization squarefree
    UniPoly lc = uni_from_poly(G.coeff_of(yv, G.degree_in(yv)), tv);
    Scalar a = Scalar::zero(field);
    bool found = false;
    for (long long trial = 0; trial < 512; ++trial) {
        long long va = trial % 2 == 0 ? trial / 2 : -(trial / 2 + 1);
        if (!field.is_rational() &&
            static_cast<std::uint64_t>(trial) >= field.characteristic)
            break;
        a = Scalar::from_int(field, va);
        // evaluate lc at a
        Scalar lv = Scalar::zero(field);
        Scalar pw = Scalar::one(field);
        for (std::size_t i = 0; i < lc.size(); ++i) {
            lv = lv + lc[i] * pw;
            pw = pw * a;
        }
        if (lv.is_zero()) continue;
        // specialize and check squarefreeness
        std::vector<std::optional<Scalar>> vals(ring->size());
        vals[tv] = a;
        Poly spec = G.evaluate_partial(vals);
        UniPoly u = uni_from_poly(spec, yv);
        if (uni_deg(uni_gcd(u, uni_derivative(u, field))) == 0) {
            found = true;
            break;
        }
    }
    if (!found)
        fail(ErrorCode::UnsupportedField, "no good evaluation point for bivariate factorization");

    std::vector<std::optional<Scalar>> vals(ring->size());
    vals[tv] = a;
    Poly spec = G.evaluate_partial(vals);
    Factorization uf = factor_univariate(spec, seed);
    if (uf.factors.size() == 1) return {G};

    // shift so lifting is s-adic at s = 0
    std::vector<Poly> images;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (i == tv)
            images.push_back(Poly::variable(ring, tv) + Poly::constant(ring, a));
        else
            images.push_back(Poly::variable(ring, i));
    }
    Poly H = G.substitute(ring, images);
    std::size_t M = static_cast<std::size_t>(G.degree_in(tv)) +
                    static_cast<std::size_t>(G.coeff_of(yv, G.degree_in(yv)).degree_in(tv)) + 2;

    BiPoly bh = bi_from_poly(H, tv, yv, M, field);
    UniPoly ell(0);
    ell = bh.c.back();  // lead y-coefficient as series
    UniPoly ellinv = series_inv(ell, M, field);
    BiPoly bmonic = bh;
    for (auto& cc : bmonic.c) cc = series_mul(cc, ellinv, M);

    std::vector<UniPoly> leaves;
    for (auto& [g, m] : uf.factors) {
        UniPoly u = uni_from_poly(g, yv);
        leaves.push_back(uni_scale(u, u.back().inverse()));
    }
    auto tree = bi_build(leaves, 0, leaves.size(), field);
    for (std::size_t m = 1; m < M; ++m) {
        BiPoly target = bmonic;
        for (auto& cc : target.c) cc = series_trunc(cc, m + 1);
        bi_lift(tree.get(), target, m, field);
    }
    std::vector<BiPoly> lifted;
    bi_collect(tree.get(), lifted);

    // recombination
    std::vector<Poly> out;
    Poly rem = H;
    std::vector<BiPoly> pool = lifted;
    std::size_t card = 1;
    while (!pool.empty()) {
        if (card > pool.size() / 2) {
            // no small subset divides, so what is left is irreducible
            out.push_back(rem);
            pool.clear();
            break;
        }
        bool progress = false;
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            BiPoly cand = bi_from_uni(UniPoly{Scalar::one(field)});
            for (auto i : idx) cand = bi_mul(cand, pool[i], M);
            for (auto& cc : cand.c) cc = series_mul(cc, ell, M);
            Poly cpoly = bi_to_poly(ring, tv, yv, cand);
            // primitive part w.r.t. t
            if (!cpoly.is_zero()) {
                Poly cont = poly_content_in(cpoly, yv);
                if (auto pq = cpoly.divide_exact(cont)) cpoly = *pq;
            }
            auto q = rem.divide_exact(cpoly);
            if (!cpoly.is_constant() && q) {
                out.push_back(cpoly);
                rem = *q;
                std::vector<BiPoly> np;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                pool = std::move(np);
                progress = true;
                break;
            }
            int j = static_cast<int>(card) - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] ==
                                 pool.size() - card + static_cast<std::size_t>(j))
                --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (std::size_t l = static_cast<std::size_t>(j) + 1; l < card; ++l)
                idx[l] = idx[l - 1] + 1;
        }
        if (!progress) ++card;
    }

    // undo the shift
    std::vector<Poly> back;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (i == tv)
            back.push_back(Poly::variable(ring, tv) - Poly::constant(ring, a));
        else
            back.push_back(Poly::variable(ring, i));
    }
    for (auto& f : out) f = f.substitute(ring, back);
    return out;
}

}  // namespace

Factorization factor_poly(const Poly& f0, std::uint64_t seed) {
    if (f0.is_zero()) fail(ErrorCode::InvalidArgument, "factor of zero");
    Poly f = f0.clear_units().strip_unit_monomial();
    const RingPtr& ring = f.ring();
    auto vs = present_vars(f);
    if (vs.size() <= 1) return factor_univariate(f, seed);
    if (vs.size() > 2)
        fail(ErrorCode::UnsupportedBase, "factorization beyond two variables not supported");

    // main variable: the one of smaller degree keeps the lifting shallow
    std::size_t yv = f.degree_in(vs[0]) < f.degree_in(vs[1]) ? vs[0] : vs[1];
    std::size_t tv = yv == vs[0] ? vs[1] : vs[0];

    Factorization out{f.leading_coeff(MonOrder::lex()), {}};
    Poly cont = poly_content_in(f, yv);
    Poly work = f;
    if (!cont.is_constant()) {
        work = *f.divide_exact(cont);
        Factorization cf = factor_univariate(cont, seed);
        for (auto& fm : cf.factors) out.factors.push_back(fm);
    }

    // squarefree part, then multiplicities by division
    Poly dy = work.derivative(yv);
    if (dy.is_zero())
        fail(ErrorCode::UnsupportedBase, "inseparable polynomial over the parameter field");
    Poly g = poly_gcd(work, dy);
    Poly sq = work;
    if (!g.is_constant()) {
        auto q = work.divide_exact(g);
        if (!q) fail(ErrorCode::Internal, "squarefree division failed");
        sq = *q;
    }
    Poly sq_cont = poly_content_in(sq, yv);
    if (!sq_cont.is_constant()) sq = *sq.divide_exact(sq_cont);

    std::vector<Poly> irr = factor_biv_squarefree(sq, tv, yv, seed);
    for (auto& h0 : irr) {
        Poly h = h0;
        Poly hc = poly_content_in(h, yv);
        if (!hc.is_constant()) h = *h.divide_exact(hc);
        h = h.make_monic(MonOrder::lex());
        int mult = 0;
        for (;;) {
            auto q = work.divide_exact(h);
            if (!q) break;
            work = *q;
            ++mult;
        }
        if (mult == 0) fail(ErrorCode::Internal, "candidate factor does not divide");
        out.factors.emplace_back(h, mult);
    }
    // leftover is free of the main variable
    if (work.degree_in(yv) != 0)
        fail(ErrorCode::UnsupportedBase, "inseparable factor over the parameter field");
    if (!work.is_constant()) {
        Factorization rest = factor_univariate(work, seed);
        for (auto& fm : rest.factors) out.factors.push_back(fm);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return a.first.str() < b.first.str();
    });
    return out;
}

}  // namespace corrcancel
