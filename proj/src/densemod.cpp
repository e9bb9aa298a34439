#include "corrcancel/densemod.hpp"

#include <algorithm>

namespace corrcancel {

void ModPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t v) {
    ModPoly r{p, {}};
    v %= p;
    if (v) r.c.push_back(v);
    return r;
}

ModPoly ModPoly::x(std::uint64_t p) { return ModPoly{p, {0, 1}}; }

ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = mod_add(x, y, a.p);
    }
    r.trim();
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = mod_sub(x, y, a.p);
    }
    r.trim();
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p);
    ModPoly r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = mod_add(r.c[i + j], mod_mul(a.c[i], b.c[j], a.p), a.p);
    }
    r.trim();
    return r;
}

ModPoly mp_scale(const ModPoly& a, std::uint64_t s) {
    ModPoly r = a;
    for (auto& v : r.c) v = mod_mul(v, s % a.p, a.p);
    r.trim();
    return r;
}

void mp_divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) fail(ErrorCode::Internal, "mod-p division by zero");
    // local copies so q/r may alias a/b at call sites
    ModPoly B = b;
    ModPoly R = a;
    ModPoly Q = ModPoly::zero(a.p);
    std::uint64_t inv = mod_inv(B.lead(), a.p);
    while (!R.is_zero() && R.deg() >= B.deg()) {
        int k = R.deg() - B.deg();
        std::uint64_t f = mod_mul(R.lead(), inv, a.p);
        if (static_cast<int>(Q.c.size()) < k + 1) Q.c.resize(k + 1, 0);
        Q.c[k] = mod_add(Q.c[k], f, a.p);
        for (int i = 0; i <= B.deg(); ++i)
            R.c[i + k] = mod_sub(R.c[i + k], mod_mul(f, B.c[i], a.p), a.p);
        R.trim();
    }
    Q.trim();
    q = std::move(Q);
    r = std::move(R);
}

ModPoly mp_rem(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divmod(a, b, q, r);
    return r;
}

ModPoly mp_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    return mp_scale(a, mod_inv(a.lead(), a.p));
}

ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a);
}

ModPoly mp_derivative(const ModPoly& a) {
    ModPoly r{a.p, {}};
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = mod_mul(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}

ModPoly mp_pow_mod(const ModPoly& a, const BigInt& e, const ModPoly& m) {
    ModPoly r = ModPoly::constant(a.p, 1);
    ModPoly b = mp_rem(a, m);
    BigInt k = e;
    while (k > 0) {
        if (bit_test(k, 0)) r = mp_rem(mp_mul(r, b), m);
        b = mp_rem(mp_mul(b, b), m);
        k >>= 1;
    }
    return r;
}

namespace {

// f = g(x^p) -> g; over the prime field the coefficients are their own
// p-th roots
ModPoly pth_root_compress(const ModPoly& f) {
    std::uint64_t p = f.p;
    ModPoly g{p, {}};
    g.c.resize(f.deg() / static_cast<int>(p) + 1, 0);
    for (int i = 0; i <= f.deg(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % static_cast<int>(p) != 0) fail(ErrorCode::Internal, "bad p-th power");
        g.c[i / static_cast<int>(p)] = f.c[i];
    }
    g.trim();
    return g;
}

// squarefree decomposition over F_p: f (monic) = prod g_i^{m_i}
std::vector<std::pair<ModPoly, int>> squarefree_decompose(const ModPoly& f0) {
    std::vector<std::pair<ModPoly, int>> out;
    std::uint64_t p = f0.p;
    ModPoly f = mp_monic(f0);
    if (f.deg() < 1) return out;
    ModPoly c = mp_gcd(f, mp_derivative(f));
    ModPoly w, rr;
    mp_divmod(f, c, w, rr);
    int i = 1;
    while (w.deg() > 0) {
        ModPoly y = mp_gcd(w, c);
        ModPoly z;
        mp_divmod(w, y, z, rr);
        if (z.deg() > 0) out.emplace_back(mp_monic(z), i);
        w = y;
        mp_divmod(c, y, c, rr);
        ++i;
    }
    if (c.deg() > 0) {
        for (auto& [g, m] : squarefree_decompose(pth_root_compress(c)))
            out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

// distinct-degree split of a squarefree monic f
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
    std::vector<std::pair<ModPoly, int>> out;  // (product of irred of degree d, d)
    ModPoly rest = f;
    ModPoly h = ModPoly::x(f.p);
    int d = 0;
    while (rest.deg() > 0) {
        ++d;
        if (2 * d > rest.deg()) {
            out.emplace_back(rest, rest.deg());
            break;
        }
        h = mp_pow_mod(h, BigInt(f.p), rest);
        ModPoly g = mp_gcd(mp_sub(h, ModPoly::x(f.p)), rest);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            ModPoly q, r;
            mp_divmod(rest, g, q, r);
            rest = mp_monic(q);
            h = mp_rem(h, rest);
        }
    }
    return out;
}

// equal-degree factorization: f squarefree monic, all factors of degree d
void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    std::uint64_t p = f.p;
    for (;;) {
        ModPoly r{p, {}};
        r.c.resize(f.deg(), 0);
        for (auto& v : r.c) v = rng() % p;
        r.trim();
        if (r.deg() < 1) continue;
        ModPoly g = mp_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            ModPoly q, rr;
            mp_divmod(f, g, q, rr);
            equal_degree(mp_monic(g), d, rng, out);
            equal_degree(mp_monic(q), d, rng, out);
            return;
        }
        ModPoly s;
        if (p == 2) {
            // trace map sum r^(2^i)
            s = ModPoly::zero(p);
            ModPoly t = r;
            for (int i = 0; i < d; ++i) {
                s = mp_add(s, t);
                t = mp_rem(mp_mul(t, t), f);
            }
        } else {
            BigInt e = (boost::multiprecision::pow(BigInt(p), d) - 1) / 2;
            s = mp_sub(mp_pow_mod(r, e, f), ModPoly::constant(p, 1));
        }
        g = mp_gcd(s, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            ModPoly q, rr;
            mp_divmod(f, g, q, rr);
            equal_degree(mp_monic(g), d, rng, out);
            equal_degree(mp_monic(q), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<ModPoly, int>> mp_factor(const ModPoly& f, std::uint64_t seed) {
    std::vector<std::pair<ModPoly, int>> result;
    if (f.deg() < 1) return result;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (auto& [g, m] : squarefree_decompose(f)) {
        for (auto& [h, d] : distinct_degree(g)) {
            std::vector<ModPoly> irr;
            equal_degree(h, d, rng, irr);
            for (auto& q : irr) result.emplace_back(q, m);
        }
    }
    // deterministic output order
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        if (a.first.c != b.first.c) return a.first.c < b.first.c;
        return a.second < b.second;
    });
    return result;
}

}  // namespace corrcancel
