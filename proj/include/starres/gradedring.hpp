#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starres/lgroup.hpp"
#include "starres/linalg.hpp"
#include "starres/rational.hpp"

namespace starres {

// t0^e0 t1^e1 prod x_i^f_i with 0 <= f_i < p_i.
struct Exponents {
    int e0 = 0;
    int e1 = 0;
    std::vector<int> f;

    auto operator<=>(const Exponents&) const = default;
    bool operator==(const Exponents&) const = default;
};

struct Monomial {
    Rational coeff;
    Exponents exp;
};

// "t0^2*t1*x1^3"; "1" for the empty monomial.
std::string monomial_string(const Exponents& e);

// Finite sum of reduced monomials of S.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<int> weights) : weights_(std::move(weights)) {}

    const std::vector<int>& weights() const { return weights_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& coeff);

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly scaled(const Rational& k) const;
    bool operator==(const Poly& other) const = default;

    std::string to_string() const;

private:
    std::vector<int> weights_;
    std::map<Exponents, Rational> terms_;
};

struct LinearForm {
    Rational t0;
    Rational t1;
};

// Form vanishing at (u:w): (1:0) -> t1, (0:1) -> t0, otherwise (w/u) t0 - t1.
LinearForm linear_form(const Point& point);

struct GradedPiece {
    LElement degree;
    std::vector<Monomial> basis;  // t0^a, t0^(a-1) t1, ..., t1^a times prod x_i^a_i

    int dim() const { return static_cast<int>(basis.size()); }
};

// Row space inside a graded piece, kept in reduced row echelon form.
struct Subspace {
    GradedPiece ambient;
    QMatrix rows;

    int rank() const { return static_cast<int>(rows.size()); }
    bool is_full() const { return rank() == ambient.dim(); }
};

class GradedRing {
public:
    explicit GradedRing(Parameters params);

    const Parameters& params() const { return params_; }
    const LinearForm& ell(int i) const { return ells_[i]; }

    Poly zero() const { return Poly(params_.weights()); }
    Poly one() const;
    Poly t0() const;
    Poly t1() const;
    Poly x(int i) const;
    // coeff * t0^e0 t1^e1 prod x_i^k_i for arbitrary k_i >= 0, fully reduced.
    Poly monomial(const Rational& coeff, int e0, int e1, const std::vector<int>& x_exps) const;

    Poly multiply(const Poly& a, const Poly& b) const;
    Poly power(const Poly& a, int k) const;

    // Degree of a nonzero homogeneous element; nullopt otherwise.
    std::optional<LElement> degree(const Poly& f) const;
    LElement degree(const Exponents& e) const;

    GradedPiece piece(const LElement& y) const;
    // Throws Precondition if f is not homogeneous of degree y.
    std::vector<Rational> coordinates(const Poly& f, const LElement& y) const;
    Subspace span(const LElement& y, const std::vector<Poly>& elements) const;
    Subspace piece_product(const LElement& y, const LElement& z) const;

private:
    void check(const Poly& f) const;

    Parameters params_;
    std::vector<LinearForm> ells_;
};

int graded_dim(const Parameters& params, const LElement& y);
GradedPiece graded_basis(const Parameters& params, const LElement& y);
Poly multiply(const Parameters& params, const Poly& u, const Poly& v);
Subspace piece_product(const Parameters& params, const LElement& y, const LElement& z);

Subspace zero_subspace(const GradedPiece& ambient);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_equal(const Subspace& a, const Subspace& b);

}  // namespace starres
