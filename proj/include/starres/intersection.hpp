#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "starres/linalg.hpp"
#include "starres/rational.hpp"
#include "starres/resolution.hpp"

namespace starres {

struct IntersectionMatrix {
    IntMatrix m;

    int size() const { return static_cast<int>(m.size()); }
    long long operator()(int i, int j) const { return m[i][j]; }
};

struct Cycle {
    std::vector<Rational> coeffs;

    int size() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const Cycle&) const = default;
};

IntersectionMatrix matrix_from_graph(const DualGraph& g);
IntersectionMatrix matrix_from_tree(const std::vector<int>& labels,
                                    const std::vector<std::pair<int, int>>& edges);

bool is_negative_definite(const IntersectionMatrix& M);

Cycle basis_cycle(int size, int i);
Cycle integer_cycle(const std::vector<long long>& coeffs);

Rational pair(const IntersectionMatrix& M, const Cycle& a, const Cycle& b);

// Picks one vertex among those with Z.E_i > 0 (given in increasing order).
using LauferChooser = std::function<int(const std::vector<int>& candidates)>;

// Laufer increments from E_start; the default chooser takes the lowest index.
Cycle laufer(const IntersectionMatrix& M, int start, const LauferChooser& choose = {});
Cycle fundamental_cycle(const IntersectionMatrix& M);

bool is_reduced(const Cycle& z);

// Unique rational Z with Z.E_i = E_i^2 + 2.
Cycle canonical_cycle(const IntersectionMatrix& M);

}  // namespace starres
