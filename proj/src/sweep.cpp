#include "starres/sweep.hpp"

#include <numeric>
#include <set>

#include "starres/gradedring.hpp"
#include "starres/hj.hpp"
#include "starres/io.hpp"
#include "starres/reconalg.hpp"
#include "starres/resolution.hpp"

namespace starres {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string describe(const Parameters& params, const LElement& x) {
    return Json{{"params", to_json(params)}, {"x", to_json(x)}}.dump();
}

void record(SweepCheck& check, bool agree, const std::string& what) {
    ++check.cases;
    if (agree) return;
    ++check.disagreements;
    if (!check.first_counterexample) check.first_counterexample = what;
}

}  // namespace

std::pair<Parameters, LElement> random_input(std::mt19937_64& rng, const RandomInputSpec& spec) {
    for (;;) {
        const int n = uniform(rng, spec.n_min, spec.n_max);
        std::vector<int> weights(n);
        std::vector<long long> arms(n);
        for (int i = 0; i < n; ++i) {
            weights[i] = uniform(rng, 2, spec.p_max);
            if (spec.coprime) {
                do arms[i] = uniform(rng, 1, weights[i] - 1);
                while (std::gcd(static_cast<long long>(weights[i]), arms[i]) != 1);
            } else {
                arms[i] = uniform(rng, 0, weights[i] - 1);
            }
        }
        Parameters params = Parameters::with_default_points(weights);
        LElement x = LElement::normal_form(params, arms, uniform(rng, 0, spec.a_max));
        if (x.is_zero() || is_torsion(x)) continue;
        if (spec.minimal && in_interval_0_c(x)) continue;
        if (x.support_size() < spec.min_support) continue;
        if (spec.require_noncoprime && coprime_criterion(params, x)) continue;
        return {params, x};
    }
}

std::optional<std::vector<long long>> brute_force_fundamental_cycle(const IntersectionMatrix& M, int box) {
    const int n = M.size();
    std::vector<long long> z(n, 0), best;
    bool found = false;
    for (;;) {
        int k = 0;
        while (k < n && z[k] == box) z[k++] = 0;
        if (k == n) break;
        ++z[k];
        bool top = true;
        for (int i = 0; i < n && top; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += z[j] * M(j, i);
            top = s <= 0;
        }
        if (!top) continue;
        if (!found) best = z;
        for (int i = 0; i < n; ++i) best[i] = std::min(best[i], z[i]);
        found = true;
    }
    if (!found) return std::nullopt;
    return best;
}

std::vector<SweepCheck> run_sweep(const SweepConfig& config) {
    std::vector<SweepCheck> checks;
    std::mt19937_64 rng(config.seed);

    SweepCheck triangle{"hj_triangle", 0, 0, std::nullopt};
    for (int r = 2; r <= config.r_max; ++r)
        for (int a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            const std::set<int> rec = i_set(r, a);
            std::set<int> res, rec_low;
            for (int u = 0; u < r; ++u) {
                if (residue_criterion(r, r - a, u)) res.insert(u);
                if (rec.count(u)) rec_low.insert(u);
            }
            record(triangle, ito_oracle(r, a) == rec && res == rec_low,
                   "r=" + std::to_string(r) + " a=" + std::to_string(a));
        }
    checks.push_back(triangle);

    SweepCheck special{"speciality_oracle", 0, 0, std::nullopt};
    for (int s = 0; s < config.samples; ++s) {
        auto [params, x] = random_input(rng, RandomInputSpec{1, 3, 5, 3, true});
        for (int j = 0; j < params.n(); ++j) {
            const int p = params.p(j);
            const std::set<int> expected = i_set(p, p - static_cast<int>(x.arm(j)));
            for (int u = 0; u <= p; ++u) {
                std::vector<long long> raw(params.n(), 0);
                raw[j] = u;
                const LElement y = LElement::normal_form(params, raw, 0);
                const bool got = speciality_oracle(params, x, y, config.l_max).special;
                record(special, got == (expected.count(u) > 0),
                       describe(params, x) + " j=" + std::to_string(j + 1) + " u=" + std::to_string(u));
            }
        }
    }
    checks.push_back(special);

    SweepCheck quiver{"quiver_cross_construction", 0, 0, std::nullopt};
    SweepCheck beta{"beta_equals_a_plus_v", 0, 0, std::nullopt};
    SweepCheck cycle{"fundamental_cycle", 0, 0, std::nullopt};
    for (int s = 0; s < config.samples; ++s) {
        RandomInputSpec spec{2, 4, 6, 3, false};
        spec.min_support = 2;
        auto [params, x] = random_input(rng, spec);
        const DualGraph g = dual_graph(params, x);
        const QuiverData a = quiver_from_intersection(g, specials(params, x));
        const QuiverData b = quiver_combinatorial(params, x);
        record(quiver, a.same_counts(b), describe(params, x));

        const long long dim = graded_dim(params, x - LElement::c(params));
        record(beta, g.labels[0] == -(x.c_coeff() + x.support_size()) && a.arrows[1][0] == dim,
               describe(params, x));

        const IntersectionMatrix M = matrix_from_graph(g);
        const Cycle zf = fundamental_cycle(M);
        bool ok = is_reduced(zf);
        if (g.size() <= 8) {
            const auto brute = brute_force_fundamental_cycle(M, 4);
            ok = ok && brute && integer_cycle(*brute) == zf;
        }
        record(cycle, ok, describe(params, x));
    }
    checks.push_back(quiver);
    checks.push_back(beta);
    checks.push_back(cycle);
    return checks;
}

}  // namespace starres
