#include "starres/lgroup.hpp"

#include <numeric>
#include <string>

#include "starres/error.hpp"

namespace starres {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void require_same(const LElement& a, const LElement& b) {
    if (a.weights() != b.weights())
        fail(ErrorCode::ParameterMismatch, "elements belong to groups with different weights");
}

void require_matches(const Parameters& params, const LElement& x) {
    if (params.weights() != x.weights())
        fail(ErrorCode::ParameterMismatch, "element does not belong to L(p) of these parameters");
}

}  // namespace

bool projectively_equal(const Point& a, const Point& b) { return a.u * b.w == b.u * a.w; }

Point default_point(int index) {
    if (index == 0) return {1, 0};
    if (index == 1) return {0, 1};
    return {Rational(index - 1), 1};
}

Parameters::Parameters(std::vector<int> weights, std::vector<Point> points)
    : weights_(std::move(weights)), points_(std::move(points)) {
    if (weights_.size() != points_.size())
        fail(ErrorCode::InvalidParameters, "number of points (" + std::to_string(points_.size()) +
                                               ") differs from number of weights (" +
                                               std::to_string(weights_.size()) + ")");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 2)
            fail(ErrorCode::InvalidParameters,
                 "weight p" + std::to_string(i + 1) + " = " + std::to_string(weights_[i]) + " < 2");
        if (points_[i].u == 0 && points_[i].w == 0)
            fail(ErrorCode::InvalidParameters, "point " + std::to_string(i + 1) + " is (0:0)");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (projectively_equal(points_[i], points_[j]))
                fail(ErrorCode::InvalidParameters, "points " + std::to_string(i + 1) + " and " +
                                                       std::to_string(j + 1) + " coincide");
}

Parameters Parameters::with_default_points(std::vector<int> weights) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < weights.size(); ++i) pts.push_back(default_point(static_cast<int>(i)));
    return Parameters(std::move(weights), std::move(pts));
}

long long Parameters::lcm() const {
    long long l = 1;
    for (int p : weights_) l = std::lcm(l, static_cast<long long>(p));
    return l;
}

bool Parameters::normalized() const {
    if (n() < 2) return true;
    return projectively_equal(points_[0], {1, 0}) && projectively_equal(points_[1], {0, 1});
}

bool Parameters::operator==(const Parameters& other) const {
    if (weights_ != other.weights_) return false;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].u != other.points_[i].u || points_[i].w != other.points_[i].w) return false;
    return true;
}

LElement LElement::normal_form(const std::vector<int>& weights,
                               const std::vector<long long>& raw_arms, long long raw_c) {
    if (raw_arms.size() != weights.size())
        fail(ErrorCode::ParameterMismatch, "expected " + std::to_string(weights.size()) +
                                               " arm coefficients, got " +
                                               std::to_string(raw_arms.size()));
    LElement e;
    e.weights_ = weights;
    e.arms_.resize(raw_arms.size());
    e.c_ = raw_c;
    for (std::size_t i = 0; i < raw_arms.size(); ++i) {
        long long q = floor_div(raw_arms[i], weights[i]);
        e.arms_[i] = raw_arms[i] - q * weights[i];
        e.c_ += q;
    }
    return e;
}

LElement LElement::normal_form(const Parameters& params, const std::vector<long long>& raw_arms,
                               long long raw_c) {
    return normal_form(params.weights(), raw_arms, raw_c);
}

LElement LElement::zero(const Parameters& params) {
    return normal_form(params, std::vector<long long>(params.n(), 0), 0);
}

LElement LElement::generator(const Parameters& params, int i) {
    std::vector<long long> raw(params.n(), 0);
    raw.at(i) = 1;
    return normal_form(params, raw, 0);
}

LElement LElement::c(const Parameters& params) {
    return normal_form(params, std::vector<long long>(params.n(), 0), 1);
}

int LElement::support_size() const {
    int v = 0;
    for (long long a : arms_) v += a != 0;
    return v;
}

bool LElement::is_zero() const { return c_ == 0 && support_size() == 0; }

LElement l_add(const LElement& a, const LElement& b) {
    require_same(a, b);
    std::vector<long long> raw(a.n());
    for (int i = 0; i < a.n(); ++i) raw[i] = a.arm(i) + b.arm(i);
    return LElement::normal_form(a.weights(), raw, a.c_coeff() + b.c_coeff());
}

LElement l_neg(const LElement& a) {
    std::vector<long long> raw(a.n());
    for (int i = 0; i < a.n(); ++i) raw[i] = -a.arm(i);
    return LElement::normal_form(a.weights(), raw, -a.c_coeff());
}

LElement l_sub(const LElement& a, const LElement& b) { return l_add(a, l_neg(b)); }

LElement l_scale(long long k, const LElement& a) {
    std::vector<long long> raw(a.n());
    for (int i = 0; i < a.n(); ++i) raw[i] = k * a.arm(i);
    return LElement::normal_form(a.weights(), raw, k * a.c_coeff());
}

bool is_positive(const LElement& a) { return a.c_coeff() >= 0; }

bool l_leq(const LElement& a, const LElement& b) { return is_positive(l_sub(b, a)); }

bool in_interval_0_c(const LElement& a) {
    return a.c_coeff() >= 0 && a.c_coeff() + a.support_size() <= 1;
}

long long degree(const LElement& a) {
    long long l = 1;
    for (int p : a.weights()) l = std::lcm(l, static_cast<long long>(p));
    long long d = a.c_coeff() * l;
    for (int i = 0; i < a.n(); ++i) d += a.arm(i) * (l / a.weights()[i]);
    return d;
}

bool is_torsion(const LElement& a) { return degree(a) == 0; }

LElement SpecialElements::s_a(long long k) const {
    if (k < 0) fail(ErrorCode::Precondition, "s_a requires a >= 0");
    return l_add(s, l_scale(k, c));
}

SpecialElements special_elements(const Parameters& params) {
    const int n = params.n();
    SpecialElements out;
    out.weights = params.weights();
    out.c = LElement::c(params);
    out.s = LElement::normal_form(params, std::vector<long long>(n, 1), 0);
    out.omega = LElement::normal_form(params, std::vector<long long>(n, -1), n - 2);
    return out;
}

bool coprime_criterion(const Parameters& params, const LElement& x) {
    require_matches(params, x);
    if (is_torsion(x)) fail(ErrorCode::Precondition, "coprime criterion requires non-torsion x");
    for (int i = 0; i < x.n(); ++i)
        if (std::gcd(static_cast<long long>(params.p(i)), x.arm(i)) != 1) return false;
    return true;
}

std::pair<Parameters, LElement> reduce_parameters(const Parameters& params, const LElement& x) {
    require_matches(params, x);
    if (is_torsion(x)) fail(ErrorCode::Precondition, "parameter reduction requires non-torsion x");
    std::vector<int> weights;
    std::vector<Point> points;
    std::vector<long long> arms;
    for (int i = 0; i < x.n(); ++i) {
        if (x.arm(i) == 0) continue;
        long long d = std::gcd(static_cast<long long>(params.p(i)), x.arm(i));
        weights.push_back(static_cast<int>(params.p(i) / d));
        points.push_back(params.points()[i]);
        arms.push_back(x.arm(i) / d);
    }
    Parameters reduced(std::move(weights), std::move(points));
    LElement xr = LElement::normal_form(reduced, arms, x.c_coeff());
    return {reduced, xr};
}

bool all_ai_one(const Parameters& params, const LElement& x) {
    if (!coprime_criterion(params, x))
        fail(ErrorCode::Precondition, "all_ai_one requires gcd(p_i, a_i) = 1 for all i");
    for (long long a : x.arms())
        if (a != 1) return false;
    return true;
}

}  // namespace starres
