#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "starres/error.hpp"
#include "starres/gradedring.hpp"
#include "starres/io.hpp"
#include "starres/lgroup.hpp"

using namespace starres;

namespace {

Parameters P(std::vector<int> p) { return Parameters::with_default_points(std::move(p)); }

LElement L(const Parameters& params, std::vector<long long> a, long long c) {
    return LElement::normal_form(params, a, c);
}

bool has_form(const LElement& x, std::vector<long long> a, long long c) {
    return x.arms() == a && x.c_coeff() == c;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InternalConsistency;
}

}  // namespace

TEST_CASE("parameters validate weights and points") {
    CHECK_NOTHROW(P({3, 5, 5}));
    CHECK(code_of([] { P({1, 3}); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { Parameters({2, 3}, {default_point(0)}); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { Parameters({2, 3}, {Point{0, 0}, default_point(1)}); }) ==
          ErrorCode::InvalidParameters);
    CHECK(code_of([] { Parameters({2, 3}, {Point{1, 1}, Point{2, 2}}); }) == ErrorCode::InvalidParameters);
    CHECK(P({2, 3, 3}).normalized());
    CHECK_FALSE(Parameters({2, 3}, {Point{1, 1}, Point{0, 1}}).normalized());
    CHECK(P({2, 3, 4}).lcm() == 12);
    CHECK_NOTHROW(P({}));
}

TEST_CASE("normal form examples") {
    const Parameters p233 = P({2, 3, 3});
    CHECK(has_form(L(p233, {0, 3, 0}, 0), {0, 0, 0}, 1));
    CHECK(has_form(L(p233, {-1, -1, -1}, 1), {1, 2, 2}, -2));
    CHECK(has_form(L(P({3, 5, 5}), {2, 2, 3}, 0), {2, 2, 3}, 0));
}

TEST_CASE("normal form agrees with carrying oracle and is idempotent") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-40, 40);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> p = {2 + trial % 4, 3 + trial % 3, 2 + trial % 5};
        std::vector<long long> a = {coef(rng), coef(rng), coef(rng)};
        const long long c = coef(rng);
        const LElement x = LElement::normal_form(p, a, c);
        const auto [ea, ec] = oracle::normal_form(p, a, c);
        CHECK(x.arms() == ea);
        CHECK(x.c_coeff() == ec);
        CHECK(LElement::normal_form(p, x.arms(), x.c_coeff()) == x);
    }
}

TEST_CASE("group operations") {
    const Parameters p233 = P({2, 3, 3});
    const auto se = special_elements(p233);
    CHECK(has_form(l_scale(6, se.omega), {0, 0, 0}, -1));
    CHECK(l_add(se.s, l_neg(se.s)).is_zero());
    const Parameters p235 = P({2, 3, 5});
    CHECK(l_scale(31, special_elements(p235).omega) == l_neg(special_elements(p235).s));
    for (int i = 0; i < 3; ++i) CHECK(l_scale(p235.p(i), LElement::generator(p235, i)) == LElement::c(p235));
    CHECK(code_of([&] { l_add(se.s, special_elements(p235).s); }) == ErrorCode::ParameterMismatch);
}

TEST_CASE("group axioms on random elements") {
    const Parameters params = P({3, 4, 6});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-12, 12);
    auto rnd = [&] { return L(params, {coef(rng), coef(rng), coef(rng)}, coef(rng)); };
    const LElement zero = LElement::zero(params);
    for (int t = 0; t < 200; ++t) {
        const LElement a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + zero == a);
        CHECK((a + (-a)).is_zero());
        CHECK(3 * a == a + a + a);
        CHECK(degree(a + b) == degree(a) + degree(b));
        if (is_positive(a) && is_positive(-a)) CHECK(a.c_coeff() == 0);
    }
}

TEST_CASE("positivity and the interval [0,c]") {
    const Parameters p233 = P({2, 3, 3});
    const auto se = special_elements(p233);
    CHECK(is_positive(se.s));
    CHECK_FALSE(is_positive(se.omega));
    CHECK(is_positive(se.c));

    const Parameters p355 = P({3, 5, 5});
    CHECK(in_interval_0_c(L(p355, {2, 0, 0}, 0)));
    CHECK_FALSE(in_interval_0_c(L(p355, {1, 1, 0}, 0)));
    CHECK(in_interval_0_c(LElement::c(p355)));
    CHECK(l_leq(LElement::zero(p355), LElement::c(p355)));
    CHECK_FALSE(l_leq(LElement::c(p355), LElement::zero(p355)));
}

TEST_CASE("closed-form interval test matches the definition") {
    const Parameters params = P({2, 3, 4});
    const LElement zero = LElement::zero(params), c = LElement::c(params);
    for (long long a0 = 0; a0 < 2; ++a0)
        for (long long a1 = 0; a1 < 3; ++a1)
            for (long long a2 = 0; a2 < 4; ++a2)
                for (long long k = -2; k <= 2; ++k) {
                    const LElement x = L(params, {a0, a1, a2}, k);
                    CHECK(in_interval_0_c(x) == (l_leq(zero, x) && l_leq(x, c)));
                }
}

TEST_CASE("torsion") {
    const Parameters p22 = P({2, 2});
    const LElement t = L(p22, {1, -1}, 0);
    CHECK(has_form(t, {1, 1}, -1));
    CHECK(is_torsion(t));
    CHECK_FALSE(is_torsion(LElement::c(p22)));
    CHECK_FALSE(is_torsion(special_elements(P({2, 3, 3})).s));
}

TEST_CASE("special elements") {
    CHECK(has_form(special_elements(P({2, 3, 3})).omega, {1, 2, 2}, -2));
    CHECK(has_form(special_elements(P({2, 3, 4})).s_a(1), {1, 1, 1}, 1));
    const auto se235 = special_elements(P({2, 3, 5}));
    CHECK(l_scale(30, se235.omega) == -se235.c);
    for (const auto& triple : std::vector<std::vector<int>>{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}}) {
        const long long h = triple[2] == 3 ? 6 : triple[2] == 4 ? 12 : 30;
        const auto se = special_elements(P(triple));
        CHECK(l_scale(h + 1, se.omega) == -se.s);
        for (int m = 3; m <= 8; ++m) CHECK(l_scale(h * (m - 2) + 1, se.omega) == -se.s_a(m - 3));
    }
}

TEST_CASE("coprime criterion and reduction") {
    const Parameters p355 = P({3, 5, 5});
    const LElement x = L(p355, {2, 2, 3}, 0);
    CHECK(coprime_criterion(p355, x));
    const Parameters p24 = P({2, 4});
    const LElement y = L(p24, {0, 2}, 1);
    CHECK_FALSE(coprime_criterion(p24, y));
    CHECK(coprime_criterion(P({2, 3, 3}), special_elements(P({2, 3, 3})).s));
    CHECK(code_of([&] { coprime_criterion(P({2, 2}), L(P({2, 2}), {1, 1}, -1)); }) == ErrorCode::Precondition);

    auto [rp, rx] = reduce_parameters(p24, y);
    CHECK(rp.weights() == std::vector<int>{2});
    CHECK(projectively_equal(rp.points()[0], p24.points()[1]));
    CHECK(has_form(rx, {1}, 1));

    auto [rp2, rx2] = reduce_parameters(p355, x);
    CHECK(rp2 == p355);
    CHECK(rx2 == x);

    const Parameters p233 = P({2, 3, 3});
    auto [rp3, rx3] = reduce_parameters(p233, L(p233, {1, 0, 0}, 2));
    CHECK(rp3.weights() == std::vector<int>{2});
    CHECK(projectively_equal(rp3.points()[0], p233.points()[0]));
    CHECK(has_form(rx3, {1}, 2));
}

TEST_CASE("reduction is idempotent, coprime, and preserves graded dimensions") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> w(2, 8);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> p = {w(rng), w(rng), w(rng)};
        const Parameters params = P(p);
        std::vector<long long> a(3);
        for (int i = 0; i < 3; ++i) a[i] = std::uniform_int_distribution<int>(0, p[i] - 1)(rng);
        const LElement x = L(params, a, std::uniform_int_distribution<int>(0, 3)(rng));
        if (x.is_zero() || is_torsion(x)) continue;
        auto [rp, rx] = reduce_parameters(params, x);
        CHECK(coprime_criterion(rp, rx));
        CHECK(rx.c_coeff() == x.c_coeff());
        auto [rp2, rx2] = reduce_parameters(rp, rx);
        CHECK(rp2 == rp);
        CHECK(rx2 == rx);
        for (int k = 0; k <= 8; ++k) CHECK(graded_dim(params, k * x) == graded_dim(rp, k * rx));
    }
}

TEST_CASE("all a_i equal one") {
    const Parameters p233 = P({2, 3, 3});
    CHECK(all_ai_one(p233, special_elements(p233).s_a(2)));
    CHECK_FALSE(all_ai_one(P({3, 5, 5}), L(P({3, 5, 5}), {2, 2, 3}, 0)));
    CHECK(all_ai_one(P({2, 3}), L(P({2, 3}), {1, 1}, 0)));
    CHECK(code_of([&] { all_ai_one(p233, L(p233, {1, 0, 0}, 0)); }) == ErrorCode::Precondition);
}

TEST_CASE("parameters and elements round-trip through JSON") {
    const Json pj = Json::parse(R"({"p":[3,5,5],"lambda":[[1,0],[0,1],[1,1]]})");
    const Parameters params = parameters_from_json(pj);
    CHECK(to_json(params).dump() == pj.dump());
    const Json xj = Json::parse(R"({"xi":[2,2,3],"c":0})");
    CHECK(to_json(lelement_from_json(params, xj)).dump() == xj.dump());

    const Json rj = Json::parse(R"({"p":[2,3,4],"lambda":[[1,0],[0,1],["1/2",3]]})");
    CHECK(to_json(parameters_from_json(rj)).dump() == rj.dump());
}
