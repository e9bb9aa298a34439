#include <doctest.h>

#include <random>

#include "corrcancel/factor.hpp"
#include "corrcancel/poly.hpp"

using namespace corrcancel;

namespace {

RingPtr qring(std::vector<Variable> vars) { return make_ring(FieldSpec::rationals(), std::move(vars)); }

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    auto Q = FieldSpec::rationals();
    auto F5 = FieldSpec::prime_field(5);
    CHECK(Scalar::parse(Q, "2/3") * Scalar::parse(Q, "3/2") == Scalar::one(Q));
    CHECK((Scalar::from_int(F5, 2) * Scalar::from_int(F5, 3)).residue() == 1);
    CHECK(Scalar::from_int(F5, 4).inverse().residue() == 4);
    CHECK(Scalar::from_int(F5, -1).residue() == 4);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), Error);
}

TEST_CASE("polynomial arithmetic is exact") {
    auto R = qring({{"x", false}, {"y", false}});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Poly p = x * x - y + Poly::from_int(R, 3);
    Poly q = y * y * x - Poly::from_int(R, 7) * x;
    CHECK((p + q) - q == p);
    auto d = (p * q).divide_exact(q);
    REQUIRE(d.has_value());
    CHECK(*d == p);
    CHECK(parse_poly(R, "x^2 - y + 3") == p);
    CHECK(parse_poly(R, "(x + y)*(x - y)") == x * x - y * y);
    CHECK(parse_poly(R, "2/3*x").str() == "2/3*x");
}

TEST_CASE("random exactness property: (p+q)-q == p and (p*q)/q exact") {
    auto R = qring({{"x", false}, {"y", false}, {"z", false}});
    std::mt19937_64 rng(42);
    auto rand_poly = [&] {
        Poly p = Poly::zero(R);
        int nt = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < nt; ++i) {
            Mono m{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                   static_cast<int>(rng() % 3)};
            long long num = static_cast<long long>(rng() % 19) - 9;
            long long den = 1 + static_cast<long long>(rng() % 7);
            p.add_term(m, Scalar::from_rational(FieldSpec::rationals(), BigRat(num, den)));
        }
        return p;
    };
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Poly p = rand_poly(), q = rand_poly();
        CHECK((p + q) - q == p);
        if (!q.is_zero()) {
            auto d = (p * q).divide_exact(q);
            REQUIRE(d.has_value());
            CHECK(*d == p);
            ++checked;
        }
    }
    CHECK(checked > 900);
}

TEST_CASE("laurent handling") {
    auto R = make_ring(FieldSpec::rationals(), {{"t", true}, {"s", false}});
    Poly p = Poly::variable(R, 0, -2) + Poly::variable(R, 1);
    Poly cleared = p.clear_units();
    CHECK(cleared == Poly::one(R) + Poly::variable(R, 1) * Poly::variable(R, 0, 2));
    CHECK(parse_poly(R, "t^-1").is_unit_form());
    CHECK(!parse_poly(R, "t + 1").is_unit_form());
    CHECK_THROWS_AS(parse_poly(R, "s^-1"), Error);
}

TEST_CASE("multivariate gcd") {
    auto R = qring({{"x", false}, {"y", false}});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Poly a = (x + y) * (x - y);
    Poly b = (x + y) * (x * x + Poly::from_int(R, 1));
    CHECK(poly_gcd(a, b) == x + y);
    CHECK(poly_gcd(a, Poly::zero(R)) == a.make_monic(MonOrder::lex()));
    Poly c = (x * y - Poly::from_int(R, 1)) * (y + Poly::from_int(R, 2));
    Poly d = (x * y - Poly::from_int(R, 1)) * (y - Poly::from_int(R, 2));
    CHECK(poly_gcd(c, d) == x * y - Poly::from_int(R, 1));
}

TEST_CASE("univariate factorization over Q") {
    auto R = qring({{"x", false}});
    Poly x = Poly::variable(R, 0);

    SUBCASE("x^2-1") {
        auto f = factor_univariate(x * x - Poly::from_int(R, 1));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.reassemble(R) == x * x - Poly::from_int(R, 1));
    }
    SUBCASE("irreducible quadratic") {
        Poly p = x * x + x + Poly::from_int(R, 1);
        auto f = factor_univariate(p);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].second == 1);
        CHECK(f.factors[0].first == p);
    }
    SUBCASE("repeated factors and content") {
        Poly p = (x - Poly::from_int(R, 1)).pow(2) * (x + Poly::from_int(R, 3)) * Poly::from_int(R, 6);
        auto f = factor_univariate(p);
        CHECK(f.reassemble(R) == p);
        REQUIRE(f.factors.size() == 2);
    }
    SUBCASE("non-monic with nontrivial recombination") {
        // (2x^2+3x+7)(x^2+5) stays irreducible over Q but splits mod small primes
        Poly p = (Poly::from_int(R, 2) * x * x + Poly::from_int(R, 3) * x + Poly::from_int(R, 7)) *
                 (x * x + Poly::from_int(R, 5));
        auto f = factor_univariate(p);
        CHECK(f.reassemble(R) == p);
        REQUIRE(f.factors.size() == 2);
        for (auto& [g, m] : f.factors) CHECK(m == 1);
    }
    SUBCASE("degree six swinnerton-dyer-ish") {
        // (x^2-2)(x^2-3)(x^2-6): pairwise products are squares patterns mod many primes
        Poly p = (x * x - Poly::from_int(R, 2)) * (x * x - Poly::from_int(R, 3)) *
                 (x * x - Poly::from_int(R, 6));
        auto f = factor_univariate(p);
        CHECK(f.reassemble(R) == p);
        CHECK(f.factors.size() == 3);
    }
}

TEST_CASE("univariate factorization over F_p") {
    auto F5 = FieldSpec::prime_field(5);
    auto R = make_ring(F5, {{"x", false}});
    Poly x = Poly::variable(R, 0);
    SUBCASE("x^2+1 over F5 splits") {
        auto f = factor_univariate(x * x + Poly::from_int(R, 1));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.reassemble(R) == x * x + Poly::from_int(R, 1));
        // roots are +-2
        CHECK(f.factors[0].first.str() != f.factors[1].first.str());
    }
    SUBCASE("x^2+x+1 splits over F7 (cube roots of unity 1,2,4), prime over F5") {
        auto F7 = FieldSpec::prime_field(7);
        auto R7 = make_ring(F7, {{"x", false}});
        Poly x7 = Poly::variable(R7, 0);
        auto f7 = factor_univariate(x7 * x7 + x7 + Poly::from_int(R7, 1));
        REQUIRE(f7.factors.size() == 2);
        CHECK(f7.reassemble(R7) == x7 * x7 + x7 + Poly::from_int(R7, 1));
        auto f5 = factor_univariate(x * x + x + Poly::from_int(R, 1));
        CHECK(f5.factors.size() == 1);
    }
    SUBCASE("wild multiplicity: x^5 - x over F5 and (x^5)") {
        auto f = factor_univariate(x.pow(5) - x);
        CHECK(f.factors.size() == 5);
        auto g = factor_univariate(x.pow(5));
        REQUIRE(g.factors.size() == 1);
        CHECK(g.factors[0].second == 5);
    }
    SUBCASE("over F2 with trace splitting") {
        auto F2 = FieldSpec::prime_field(2);
        auto R2 = make_ring(F2, {{"x", false}});
        Poly x2 = Poly::variable(R2, 0);
        // x^4 + x^3 + x^2 + x = x (x+1)^3 over F2
        Poly p = x2.pow(4) + x2.pow(3) + x2.pow(2) + x2;
        auto f = factor_univariate(p);
        CHECK(f.reassemble(R2) == p);
        REQUIRE(f.factors.size() == 2);
        // and a genuine equal-degree split: x^2+x+1 times x^2+x... (x^2+x+1)(x^2+1)
        Poly q = (x2 * x2 + x2 + Poly::from_int(R2, 1)) * (x2 * x2 + Poly::from_int(R2, 1));
        auto g = factor_univariate(q);
        CHECK(g.reassemble(R2) == q);
    }
}

TEST_CASE("factorization re-multiplies to the input (random property)") {
    auto R = qring({{"x", false}});
    Poly x = Poly::variable(R, 0);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = Poly::one(R);
        int nf = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < nf; ++i) {
            long long a = static_cast<long long>(rng() % 9) - 4;
            long long b = 1 + static_cast<long long>(rng() % 4);
            Poly f = Poly::from_int(R, b) * x + Poly::from_int(R, a);
            p = p * f.pow(1 + static_cast<int>(rng() % 2));
        }
        auto fac = factor_univariate(p, trial);
        CHECK(fac.reassemble(R) == p);
    }
}

TEST_CASE("bivariate factorization over Q and fraction-field reading") {
    auto R = qring({{"t", false}, {"y", false}});
    Poly t = Poly::variable(R, 0), y = Poly::variable(R, 1);

    SUBCASE("y^2 - t^2 splits") {
        auto f = factor_poly(y * y - t * t);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.reassemble(R) == y * y - t * t);
    }
    SUBCASE("y^2 - t irreducible over Q(t)") {
        auto f = factor_poly(y * y - t);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].second == 1);
    }
    SUBCASE("content and primitive part") {
        Poly p = (t * t - Poly::from_int(R, 1)) * (y - t) * (y + t);
        auto f = factor_poly(p);
        CHECK(f.reassemble(R) == p);
        CHECK(f.factors.size() == 4);
    }
    SUBCASE("nontrivial recombination: product of conjugate-mixing factors") {
        // (y^2 - t)(y^2 - 2t): specializations can pair the roots wrongly
        Poly p = (y * y - t) * (y * y - Poly::from_int(R, 2) * t);
        auto f = factor_poly(p);
        CHECK(f.reassemble(R) == p);
        CHECK(f.factors.size() == 2);
    }
    SUBCASE("multiplicities") {
        Poly p = (y - t).pow(3) * (y + t);
        auto f = factor_poly(p);
        CHECK(f.reassemble(R) == p);
        REQUIRE(f.factors.size() == 2);
    }
    SUBCASE("cubic cover: y^3 - t irreducible") {
        auto f = factor_poly(y.pow(3) - t);
        CHECK(f.factors.size() == 1);
    }
}

TEST_CASE("bivariate factorization over F7") {
    auto F7 = FieldSpec::prime_field(7);
    auto R = make_ring(F7, {{"t", false}, {"y", false}});
    Poly t = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Poly p = (y * y - t) * (y - t - Poly::from_int(R, 1));
    auto f = factor_poly(p);
    CHECK(f.reassemble(R) == p);
    CHECK(f.factors.size() == 2);
}
