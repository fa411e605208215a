#include <stdexcept>
#include <utility>

#include "starres/error.hpp"
#include "starres/linalg.hpp"
#include "starres/rational.hpp"

namespace starres {

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParameters: return "invalid_parameters";
        case ErrorCode::ParameterMismatch: return "parameter_mismatch";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::OutOfRange: return "out_of_range";
        case ErrorCode::NotMinimal: return "not_minimal";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::NotNegativeDefinite: return "not_negative_definite";
        case ErrorCode::SingularMatrix: return "singular_matrix";
        case ErrorCode::Degenerate: return "degenerate";
        case ErrorCode::InternalConsistency: return "internal_consistency";
    }
    return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false, digit_after = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            if (seen_slash || !digit_before) throw std::invalid_argument("bad rational: " + text);
            seen_slash = true;
        } else if (ch >= '0' && ch <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("bad rational: " + text);
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw std::invalid_argument("bad rational: " + text);
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational q;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long long to_ll(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(ErrorCode::OutOfRange, "value is not a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

int rref(QMatrix& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

int rank(QMatrix rows) { return rref(rows); }

Rational determinant(QMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<Rational> solve(QMatrix m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) fail(ErrorCode::ParameterMismatch, "solve: dimension mismatch");
    if (n == 0) return {};
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    QMatrix aug = m;
    int r = rref(aug);
    if (r != static_cast<int>(n)) fail(ErrorCode::SingularMatrix, "matrix is singular");
    // pivots must sit on the diagonal, otherwise one landed in the rhs column
    for (std::size_t i = 0; i < n; ++i)
        if (aug[i][i] != 1) fail(ErrorCode::SingularMatrix, "matrix is singular");
    std::vector<Rational> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = aug[i][n];
    return z;
}

QMatrix to_rational(const IntMatrix& m) {
    QMatrix q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) q[i].emplace_back(static_cast<long>(v));
    return q;
}

}  // namespace starres
