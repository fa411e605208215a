#pragma once

#include <set>
#include <vector>

#include "starres/rational.hpp"

namespace starres {

struct HJExpansion {
    int r = 1;
    int a = 1;
    std::vector<int> alphas;  // empty iff a == r
};

// r/a = [alpha_1, ..., alpha_m] with every alpha >= 2; requires 1 <= a <= r.
HJExpansion hj_expand(int r, int a);

// alpha_1 - 1/(alpha_2 - 1/(...)); the empty expansion evaluates to 1.
Rational hj_eval(const std::vector<int>& alphas);

struct ISeries {
    std::vector<int> terms;  // strictly decreasing, ends in 0; empty for a == r
    std::set<int> as_set;
};

ISeries i_series(int r, int a);
std::set<int> i_set(int r, int a);

// Reversal of the i-series of r/(r-a); requires 1 <= a < r.
ISeries j_series(int r, int a);

struct GridMonomial {
    int x_exp;
    int y_exp;
    int weight;
};

// Monomials of B(G) \ L(G) for G = 1/r(1,a), with weights (i + a j) mod r.
struct WeightGrid {
    int r = 1;
    int a = 1;
    std::vector<GridMonomial> region;
};

WeightGrid ito_region(int r, int a);
std::set<int> ito_oracle(int r, int a);

// [k]_r in [0, r-1]
int residue(long long k, int r);

// u in I(r, r-a) via the residue test, quantifier truncated to l in [1, r].
bool residue_criterion(int r, int a, int u);

}  // namespace starres
