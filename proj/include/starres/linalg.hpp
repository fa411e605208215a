#pragma once

#include <vector>

#include "starres/rational.hpp"

namespace starres {

using QMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long long>>;

// In-place reduced row echelon form; zero rows are dropped. Returns the rank.
int rref(QMatrix& rows);

int rank(QMatrix rows);

Rational determinant(QMatrix m);

// Solves m * z = rhs for square invertible m; throws SingularMatrix otherwise.
std::vector<Rational> solve(QMatrix m, std::vector<Rational> rhs);

QMatrix to_rational(const IntMatrix& m);

}  // namespace starres
