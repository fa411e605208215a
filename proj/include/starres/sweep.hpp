#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "starres/intersection.hpp"
#include "starres/lgroup.hpp"

namespace starres {

struct RandomInputSpec {
    int n_min = 1;
    int n_max = 3;
    int p_max = 5;
    int a_max = 3;                 // c-coefficient range [0, a_max]
    bool coprime = true;           // every a_i prime to p_i (so nonzero)
    bool require_noncoprime = false;
    bool minimal = true;           // x outside [0, c]
    int min_support = 0;           // v >= min_support
};

// Default points (1:0), (0:1), (1:1), ...; retries until every constraint holds.
std::pair<Parameters, LElement> random_input(std::mt19937_64& rng, const RandomInputSpec& spec);

// Componentwise-minimal element of Z_top inside [0, box]^V, if any lies there.
std::optional<std::vector<long long>> brute_force_fundamental_cycle(const IntersectionMatrix& M, int box);

struct SweepConfig {
    int r_max = 40;
    int samples = 20;
    int l_max = 8;
    std::uint64_t seed = 0;
};

struct SweepCheck {
    std::string name;
    long long cases = 0;
    long long disagreements = 0;
    std::optional<std::string> first_counterexample;
};

std::vector<SweepCheck> run_sweep(const SweepConfig& config);

}  // namespace starres
