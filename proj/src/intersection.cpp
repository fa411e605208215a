#include "starres/intersection.hpp"

#include <string>

#include "starres/error.hpp"

namespace starres {

namespace {

void require_same_size(const IntersectionMatrix& M, const Cycle& z) {
    if (z.size() != M.size())
        fail(ErrorCode::ParameterMismatch, "cycle has " + std::to_string(z.size()) +
                                               " coefficients for a graph with " +
                                               std::to_string(M.size()) + " vertices");
}

// Z.E_i for an integer cycle
long long dot_vertex(const IntersectionMatrix& M, const std::vector<long long>& z, int i) {
    long long s = 0;
    for (int k = 0; k < M.size(); ++k) s += z[k] * M(k, i);
    return s;
}

}  // namespace

IntersectionMatrix matrix_from_graph(const DualGraph& g) {
    return matrix_from_tree(g.labels, g.edges());
}

IntersectionMatrix matrix_from_tree(const std::vector<int>& labels,
                                    const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(labels.size());
    IntersectionMatrix M{IntMatrix(n, std::vector<long long>(n, 0))};
    for (int i = 0; i < n; ++i) M.m[i][i] = labels[i];
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            fail(ErrorCode::OutOfRange, "edge endpoint outside the vertex range");
        M.m[a][b] += 1;
        M.m[b][a] += 1;
    }
    return M;
}

bool is_negative_definite(const IntersectionMatrix& M) {
    QMatrix q = to_rational(M.m);
    for (int k = 1; k <= M.size(); ++k) {
        QMatrix minor(k);
        for (int i = 0; i < k; ++i) minor[i].assign(q[i].begin(), q[i].begin() + k);
        Rational d = determinant(minor);
        if ((k % 2 == 0 ? d : -d) <= 0) return false;
    }
    return true;
}

Cycle basis_cycle(int size, int i) {
    Cycle z{std::vector<Rational>(size, 0)};
    z.coeffs.at(i) = 1;
    return z;
}

Cycle integer_cycle(const std::vector<long long>& coeffs) {
    Cycle z;
    for (long long c : coeffs) z.coeffs.emplace_back(static_cast<long>(c));
    return z;
}

Rational pair(const IntersectionMatrix& M, const Cycle& a, const Cycle& b) {
    require_same_size(M, a);
    require_same_size(M, b);
    Rational s = 0;
    for (int i = 0; i < M.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < M.size(); ++j)
            if (M(i, j) != 0) s += a.coeffs[i] * Rational(static_cast<long>(M(i, j))) * b.coeffs[j];
    }
    return s;
}

Cycle laufer(const IntersectionMatrix& M, int start, const LauferChooser& choose) {
    if (!is_negative_definite(M))
        fail(ErrorCode::NotNegativeDefinite, "fundamental cycle needs a negative definite matrix");
    if (start < 0 || start >= M.size()) fail(ErrorCode::OutOfRange, "start vertex out of range");
    std::vector<long long> z(M.size(), 0);
    z[start] = 1;
    for (;;) {
        std::vector<int> candidates;
        for (int i = 0; i < M.size(); ++i)
            if (dot_vertex(M, z, i) > 0) candidates.push_back(i);
        if (candidates.empty()) break;
        int pick = choose ? choose(candidates) : candidates.front();
        z.at(pick) += 1;
    }
    return integer_cycle(z);
}

Cycle fundamental_cycle(const IntersectionMatrix& M) {
    if (M.size() == 0) fail(ErrorCode::OutOfRange, "empty graph");
    return laufer(M, 0);
}

bool is_reduced(const Cycle& z) {
    for (const Rational& c : z.coeffs) {
        if (!is_integer(c)) fail(ErrorCode::Precondition, "is_reduced expects an integer cycle");
        if (c != 1) return false;
    }
    return true;
}

Cycle canonical_cycle(const IntersectionMatrix& M) {
    std::vector<Rational> rhs;
    for (int i = 0; i < M.size(); ++i) rhs.emplace_back(static_cast<long>(M(i, i) + 2));
    return Cycle{solve(to_rational(M.m), rhs)};
}

}  // namespace starres
