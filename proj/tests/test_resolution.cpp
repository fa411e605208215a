#include <doctest.h>

#include <random>

#include "starres/error.hpp"
#include "starres/hj.hpp"
#include "starres/io.hpp"
#include "starres/resolution.hpp"
#include "starres/sweep.hpp"

using namespace starres;

namespace {

Parameters P(std::vector<int> p) { return Parameters::with_default_points(std::move(p)); }

LElement L(const Parameters& params, std::vector<long long> a, long long c) {
    return LElement::normal_form(params, a, c);
}

std::vector<int> arm_labels(const DualGraph& g, int k) {
    std::vector<int> out;
    for (int v : g.arms[k].vertices) out.push_back(-g.labels[v]);
    return out;
}

DualGraph chain(std::vector<int> labels) {
    DualGraph g;
    g.shape = GraphShape::Chain;
    g.labels = std::move(labels);
    Arm arm{-1, {}};
    for (int i = 1; i < g.size(); ++i) arm.vertices.push_back(i);
    if (!arm.vertices.empty()) g.arms.push_back(arm);
    return g;
}

std::vector<std::string> displays(const std::vector<SpecialAssignment>& s) {
    std::vector<std::string> out;
    for (const auto& a : s) out.push_back(a.label.display());
    return out;
}

}  // namespace

TEST_CASE("dual graph of the (3,5,5) example") {
    const Parameters params = P({3, 5, 5});
    const DualGraph g = dual_graph(params, L(params, {2, 2, 3}, 0));
    CHECK(g.shape == GraphShape::Star);
    CHECK(g.labels[g.center()] == -3);
    REQUIRE(g.arms.size() == 3);
    CHECK(arm_labels(g, 0) == std::vector<int>{3});
    CHECK(arm_labels(g, 1) == std::vector<int>{2, 3});
    CHECK(arm_labels(g, 2) == std::vector<int>{3, 2});
    CHECK(g.edges().size() == 5u);
    CHECK(g.all_labels_at_most(-2));
}

TEST_CASE("dual graphs of Wahl-type elements are -2 stars") {
    for (const auto& p : std::vector<std::vector<int>>{{2, 3, 3}, {2, 3, 4, 5}, {3, 3}}) {
        const Parameters params = P(p);
        for (int k = 0; k <= 3; ++k) {
            const DualGraph g = dual_graph(params, special_elements(params).s_a(k));
            CHECK(g.labels[0] == -(params.n() + k));
            REQUIRE(static_cast<int>(g.arms.size()) == params.n());
            for (int i = 0; i < params.n(); ++i) {
                CHECK(static_cast<int>(g.arms[i].vertices.size()) == p[i] - 1);
                for (int v : g.arms[i].vertices) CHECK(g.labels[v] == -2);
            }
        }
    }
}

TEST_CASE("degenerate dual graphs") {
    const Parameters p233 = P({2, 3, 3});
    const DualGraph pt = dual_graph(p233, 3 * LElement::c(p233));
    CHECK(pt.shape == GraphShape::Point);
    CHECK(pt.labels == std::vector<int>{-3});

    const DualGraph ch = dual_graph(p233, L(p233, {0, 2, 0}, 1));
    CHECK(ch.shape == GraphShape::Chain);
    CHECK(ch.labels == std::vector<int>{-2, -3});

    const DualGraph nonmin = dual_graph(p233, L(p233, {0, 2, 0}, 0));
    CHECK(nonmin.labels == std::vector<int>{-1, -3});

    CHECK_THROWS_AS(dual_graph(p233, LElement::zero(p233)), Error);
    CHECK_THROWS_AS(dual_graph(p233, special_elements(p233).omega), Error);
}

TEST_CASE("arm labels are negated expansions and vertex counts add up") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        RandomInputSpec spec;
        spec.n_max = 4;
        spec.p_max = 7;
        auto [params, x] = random_input(rng, spec);
        const DualGraph g = dual_graph(params, x);
        int expected = 1;
        for (const auto& arm : g.arms) {
            const int j = arm.index;
            const auto alphas = hj_expand(params.p(j), params.p(j) - static_cast<int>(x.arm(j))).alphas;
            CHECK(arm_labels(g, static_cast<int>(&arm - g.arms.data())) == alphas);
            expected += static_cast<int>(alphas.size());
        }
        CHECK(g.size() == expected);
        if (g.shape == GraphShape::Star) CHECK(g.labels[0] == -(x.c_coeff() + x.support_size()));
        CHECK(static_cast<int>(specials(params, x).size()) - 1 == g.size());
    }
}

TEST_CASE("reduction leaves the dual graph unchanged") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; ++t) {
        RandomInputSpec spec;
        spec.coprime = false;
        spec.n_max = 4;
        spec.p_max = 8;
        spec.require_noncoprime = true;
        auto [params, x] = random_input(rng, spec);
        auto [rp, rx] = reduce_parameters(params, x);
        const DualGraph a = dual_graph(params, x), b = dual_graph(rp, rx);
        CHECK(a.labels == b.labels);
        CHECK(a.edges() == b.edges());
    }
}

TEST_CASE("minimality") {
    const Parameters p355 = P({3, 5, 5});
    CHECK_FALSE(is_minimal(p355, L(p355, {2, 0, 0}, 0)));
    CHECK(is_minimal(p355, L(p355, {2, 2, 3}, 0)));
    CHECK_FALSE(is_minimal(p355, LElement::c(p355)));
}

TEST_CASE("blowing down chains") {
    CHECK(blow_down_chain(chain({-1, -3})).labels == std::vector<int>{-2});
    CHECK(blow_down_chain(chain({-2, -1, -3})).labels == std::vector<int>{-1});
    CHECK(blow_down_chain(chain({-2, -3, -4})).labels == std::vector<int>{-2, -3, -4});
    CHECK(blow_down_chain(chain({-1, -2, -2})).labels == std::vector<int>{-1});
    const Parameters p355 = P({3, 5, 5});
    CHECK_THROWS_AS(blow_down_chain(dual_graph(p355, L(p355, {2, 2, 3}, 0))), Error);
}

TEST_CASE("special modules") {
    const Parameters p355 = P({3, 5, 5});
    const auto s = specials(p355, L(p355, {2, 2, 3}, 0));
    CHECK(displays(s) ==
          std::vector<std::string>{"R", "S(c)", "S(x1)", "S(3x2)", "S(x2)", "S(2x3)", "S(x3)"});
    CHECK(s[0].vertex == -1);
    for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k].vertex == static_cast<int>(k) - 1);

    const Parameters p233 = P({2, 3, 3});
    CHECK(displays(specials(p233, L(p233, {0, 2, 0}, 1))) == std::vector<std::string>{"R", "S(c)", "S(x2)"});
    CHECK_THROWS_AS(specials(p355, L(p355, {2, 0, 0}, 0)), Error);

    const auto w = specials(p233, special_elements(p233).s_a(1));
    CHECK(displays(w) ==
          std::vector<std::string>{"R", "S(c)", "S(x1)", "S(2x2)", "S(x2)", "S(2x3)", "S(x3)"});
}

TEST_CASE("speciality oracle examples") {
    const Parameters p355 = P({3, 5, 5});
    const LElement x = L(p355, {2, 2, 3}, 0);
    const LElement x2 = LElement::generator(p355, 1);
    CHECK(speciality_oracle(p355, x, x2).special);
    const OracleResult bad = speciality_oracle(p355, x, 2 * x2);
    CHECK_FALSE(bad.special);
    REQUIRE(bad.witness);
    CHECK(*bad.witness >= 1);
    CHECK(*bad.witness <= 8);
    CHECK(speciality_oracle(p355, x, LElement::c(p355)).special);
    CHECK(speciality_oracle(p355, x, LElement::zero(p355)).special);
    CHECK_THROWS_AS(speciality_oracle(p355, L(p355, {2, 0, 0}, 0), x2), Error);
}

TEST_CASE("speciality oracle agrees with the i-series classification") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        auto [params, x] = random_input(rng, RandomInputSpec{1, 3, 5, 3, true});
        for (int j = 0; j < params.n(); ++j) {
            const int p = params.p(j);
            const auto expected = i_set(p, p - static_cast<int>(x.arm(j)));
            for (int u = 0; u <= p; ++u) {
                std::vector<long long> raw(params.n(), 0);
                raw[j] = u;
                const auto res = speciality_oracle(params, x, L(params, raw, 0));
                CHECK(res.special == (expected.count(u) > 0));
                CHECK(res.witness.has_value() != res.special);
            }
        }
    }
}

TEST_CASE("dual graph JSON round-trip") {
    const Parameters p355 = P({3, 5, 5});
    for (const LElement& x : {L(p355, {2, 2, 3}, 0), L(p355, {0, 2, 0}, 1), 2 * LElement::c(p355)}) {
        const DualGraph g = dual_graph(p355, x);
        const DualGraph back = dual_graph_from_json(Json::parse(to_json(g).dump()));
        CHECK(back == g);
    }
}

TEST_CASE("DOT export") {
    const Parameters p355 = P({3, 5, 5});
    const LElement x = L(p355, {2, 2, 3}, 0);
    const std::string dot = graph_to_dot(dual_graph(p355, x), specials(p355, x));
    CHECK(dot.rfind("graph ", 0) == 0);
    CHECK(dot.find("center [label=\"-3\"") != std::string::npos);
    CHECK(dot.find("E_2_2 [label=\"-3\", tooltip=\"S(x2)\"]") != std::string::npos);
    CHECK(dot.find("E_2_1 -- E_2_2") != std::string::npos);
    CHECK(dot.back() == '\n');
}
