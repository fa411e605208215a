#include "starres/hj.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "starres/error.hpp"

namespace starres {

namespace {

void require_range(int r, int a) {
    if (r < 1 || a < 1 || a > r)
        fail(ErrorCode::OutOfRange, "need 1 <= a <= r, got r=" + std::to_string(r) +
                                        " a=" + std::to_string(a));
}

void require_coprime_proper(int r, int a) {
    if (r < 2 || a < 1 || a >= r)
        fail(ErrorCode::OutOfRange, "need 1 <= a < r, got r=" + std::to_string(r) +
                                        " a=" + std::to_string(a));
    if (std::gcd(r, a) != 1)
        fail(ErrorCode::Precondition, "gcd(" + std::to_string(r) + "," + std::to_string(a) +
                                          ") != 1; reduce by the gcd first");
}

}  // namespace

HJExpansion hj_expand(int r, int a) {
    require_range(r, a);
    HJExpansion e{r, a, {}};
    if (a == r) return e;
    long long num = r, den = a;
    while (den > 0) {
        long long alpha = (num + den - 1) / den;
        e.alphas.push_back(static_cast<int>(alpha));
        long long next = alpha * den - num;
        num = den;
        den = next;
    }
    return e;
}

Rational hj_eval(const std::vector<int>& alphas) {
    for (int v : alphas)
        if (v < 2) fail(ErrorCode::OutOfRange, "continued fraction entry " + std::to_string(v) + " < 2");
    if (alphas.empty()) return 1;
    Rational value = alphas.back();
    for (auto it = alphas.rbegin() + 1; it != alphas.rend(); ++it) value = *it - 1 / value;
    return value;
}

ISeries i_series(int r, int a) {
    require_range(r, a);
    ISeries s;
    if (a == r) return s;
    HJExpansion e = hj_expand(r, a);
    s.terms = {r, a};
    for (std::size_t t = 0; t < e.alphas.size(); ++t) {
        long long next = static_cast<long long>(e.alphas[t]) * s.terms[t + 1] - s.terms[t];
        s.terms.push_back(static_cast<int>(next));
    }
    s.as_set.insert(s.terms.begin(), s.terms.end());
    return s;
}

std::set<int> i_set(int r, int a) { return i_series(r, a).as_set; }

ISeries j_series(int r, int a) {
    require_range(r, a);
    if (a == r) fail(ErrorCode::OutOfRange, "j-series undefined for a = r");
    ISeries s = i_series(r, r - a);
    std::reverse(s.terms.begin(), s.terms.end());
    return s;
}

WeightGrid ito_region(int r, int a) {
    require_coprime_proper(r, a);
    // covered[i][j]: x^i y^j is divisible by a nonconstant invariant monomial
    std::vector<std::vector<char>> covered(r, std::vector<char>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            bool invariant = (i + j > 0) && (i + static_cast<long long>(a) * j) % r == 0;
            bool below = (i > 0 && covered[i - 1][j]) || (j > 0 && covered[i][j - 1]);
            covered[i][j] = invariant || below;
        }
    WeightGrid g{r, a, {}};
    for (int i = 1; i < r; ++i)
        for (int j = 1; j < r; ++j)
            if (!covered[i][j])
                g.region.push_back({i, j, static_cast<int>((i + static_cast<long long>(a) * j) % r)});
    return g;
}

std::set<int> ito_oracle(int r, int a) {
    WeightGrid g = ito_region(r, a);
    std::set<int> out;
    for (int u = 0; u <= r; ++u) out.insert(u);
    for (const auto& m : g.region) out.erase(m.weight);
    return out;
}

int residue(long long k, int r) {
    if (r < 1) fail(ErrorCode::OutOfRange, "residue modulus must be positive");
    long long m = k % r;
    if (m < 0) m += r;
    return static_cast<int>(m);
}

bool residue_criterion(int r, int a, int u) {
    if (r < 1 || std::gcd(r, a) != 1)
        fail(ErrorCode::Precondition, "residue criterion requires gcd(r, a) = 1");
    if (u < 0 || u > r - 1) fail(ErrorCode::OutOfRange, "need 0 <= u <= r-1");
    for (long long l = 1; l <= r; ++l) {
        int lhs = residue(u + l * a - 1, r);
        bool found = false;
        for (long long m = 1; m <= l && !found; ++m) found = lhs >= residue(m * a - 1, r);
        if (!found) return false;
    }
    return true;
}

}  // namespace starres
