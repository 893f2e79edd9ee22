#include <doctest.h>

#include <cmath>

#include "selberg/parse.hpp"
#include "selberg/poly.hpp"

using namespace selberg;

TEST_CASE("parse_poly grammar") {
    const LaurentPoly p = parse_poly("x1^2 + x2^2", 2);
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms().at({2, 0}) == cplx(1.0));
    CHECK(p.terms().at({0, 2}) == cplx(1.0));

    const LaurentPoly q = parse_poly("3/2*x1*x2^-1", 2);
    REQUIRE(q.terms().size() == 1);
    CHECK(q.terms().at({1, -1}) == cplx(1.5));
    CHECK(!q.is_polynomial());

    CHECK_THROWS_AS(parse_poly("x3", 2), variable_out_of_range);
    CHECK_THROWS_AS(parse_poly("x1 +", 2), syntax_error);
    CHECK_THROWS_AS(parse_poly("1/0", 2), syntax_error);

    const LaurentPoly c = parse_poly("2 - 0.5*x1", 1);
    CHECK(c.terms().at({0}) == cplx(2.0));
    CHECK(c.terms().at({1}) == cplx(-0.5));
}

TEST_CASE("parse/emit round trip on random polynomials") {
    std::uint64_t st = 42;
    auto next = [&]() {
        st ^= st << 13;
        st ^= st >> 7;
        st ^= st << 17;
        return st;
    };
    for (int t = 0; t < 1000; ++t) {
        const int N = 1 + static_cast<int>(next() % 3);
        LaurentPoly p(N);
        const int terms = 1 + static_cast<int>(next() % 4);
        for (int i = 0; i < terms; ++i) {
            std::vector<int> k(static_cast<std::size_t>(N));
            for (auto& e : k) e = static_cast<int>(next() % 7) - 3;
            const double coeff = (static_cast<double>(next() % 2000) - 1000.0) / 64.0;
            if (coeff != 0.0) p.add_term(k, coeff);
        }
        const std::string s = emit_poly(p);
        const LaurentPoly q = parse_poly(s, N);
        REQUIRE(q.terms().size() == p.terms().size());
        for (const auto& [k, c] : p.terms()) {
            REQUIRE(q.terms().count(k) == 1);
            CHECK(std::abs(q.terms().at(k) - c) <= 1e-12 * (1.0 + std::abs(c)));
        }
    }
}

TEST_CASE("vanishing profile") {
    // F = 1
    const VanishingProfile v1 = vanishing_profile(LaurentPoly::one(2));
    CHECK(v1.delta == std::vector<int>{0, 0});
    CHECK(v1.atled == std::vector<int>{0, 0});
    CHECK(v1.deg == std::vector<int>{0, 0});

    // F = x1^2 + x2^2
    const LaurentPoly F = parse_poly("x1^2+x2^2", 2);
    const VanishingProfile v = vanishing_profile(F);
    CHECK(v.delta == std::vector<int>{0, 2});
    CHECK(v.deg == std::vector<int>{2, 2});
    CHECK(v.atled == std::vector<int>{0, 0});
    CHECK(v.bar_delta == std::vector<int>{0, 1});
    CHECK(v.bar_d == std::vector<int>{1, 2});
    CHECK(v.bar_atled == std::vector<int>{0, 0});

    // coordinate swap symmetry of the profile for symmetric F
    const LaurentPoly Fs = F.permuted({2, 1});
    const VanishingProfile vs = vanishing_profile(Fs);
    CHECK(vs.delta == v.delta);
    CHECK(vs.deg == v.deg);

    // x1^d vs x2^d related by the swap
    const VanishingProfile va = vanishing_profile(parse_poly("x1^3", 2));
    const VanishingProfile vb = vanishing_profile(parse_poly("x2^3", 2));
    CHECK(va.delta == std::vector<int>{3, 3});
    CHECK(vb.delta == std::vector<int>{0, 3});
    CHECK(va.deg == std::vector<int>{3, 3});
    CHECK(vb.deg == std::vector<int>{0, 3});
    // atled via the refl expansion: (1-x)^3 has a constant term
    CHECK(va.atled == std::vector<int>{0, 0});

    CHECK_THROWS_AS(vanishing_profile(parse_poly("x1^-1", 1)), laurent_input);
}

TEST_CASE("poly algebra") {
    const LaurentPoly F = parse_poly("x1 + 2*x2", 2);
    const LaurentPoly G = F.permuted({2, 1});
    CHECK(G.terms().at({0, 1}) == cplx(1.0));
    CHECK(G.terms().at({1, 0}) == cplx(2.0));
    const LaurentPoly R = parse_poly("x1^2", 1).reflected();
    CHECK(R.terms().at({0}) == cplx(1.0));
    CHECK(R.terms().at({1}) == cplx(-2.0));
    CHECK(R.terms().at({2}) == cplx(1.0));
    const LaurentPoly D = parse_poly("x1^3*x2", 2).derivative(1);
    CHECK(D.terms().at({2, 1}) == cplx(3.0));
    // restriction x1 = x2
    const LaurentPoly S = parse_poly("x1*x2 + x2^2", 2).restrict_equal(1, 2);
    CHECK(S.terms().at({2}) == cplx(2.0));
    std::vector<cplx> xv = {cplx(0.3), cplx(0.4)};
    CHECK(std::abs(F.eval(xv) - cplx(1.1)) < 1e-15);
}
