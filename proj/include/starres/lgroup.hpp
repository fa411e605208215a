#pragma once

#include <utility>
#include <vector>

#include "starres/rational.hpp"

namespace starres {

// Homogeneous point (u:w) of P^1 in the coordinates (t0:t1).
struct Point {
    Rational u;
    Rational w;
};

bool projectively_equal(const Point& a, const Point& b);

// (1:0), (0:1), (1:1), (2:1), (3:1), ... for index 0, 1, 2, ...
Point default_point(int index);

class Parameters {
public:
    Parameters() = default;
    // Throws InvalidParameters on p_i < 2, size mismatch, a zero pair or repeated points.
    Parameters(std::vector<int> weights, std::vector<Point> points);

    static Parameters with_default_points(std::vector<int> weights);

    int n() const { return static_cast<int>(weights_.size()); }
    int p(int i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Point>& points() const { return points_; }

    long long lcm() const;
    // points[0] = (1:0) and points[1] = (0:1); vacuously true for n < 2.
    bool normalized() const;

    bool operator==(const Parameters& other) const;

private:
    std::vector<int> weights_;
    std::vector<Point> points_;
};

// Element sum a_i x_i + a c with 0 <= a_i < p_i. Carries its weight vector so
// that mixing groups is detected.
class LElement {
public:
    LElement() = default;

    static LElement normal_form(const Parameters& params, const std::vector<long long>& raw_arms,
                                long long raw_c);
    static LElement normal_form(const std::vector<int>& weights,
                                const std::vector<long long>& raw_arms, long long raw_c);
    static LElement zero(const Parameters& params);
    static LElement generator(const Parameters& params, int i);  // x_i
    static LElement c(const Parameters& params);

    const std::vector<int>& weights() const { return weights_; }
    const std::vector<long long>& arms() const { return arms_; }
    long long arm(int i) const { return arms_[i]; }
    long long c_coeff() const { return c_; }
    int n() const { return static_cast<int>(arms_.size()); }

    // v = #{i : a_i != 0}
    int support_size() const;
    bool is_zero() const;

    bool operator==(const LElement& other) const = default;

private:
    std::vector<int> weights_;
    std::vector<long long> arms_;
    long long c_ = 0;
};

LElement l_add(const LElement& a, const LElement& b);
LElement l_neg(const LElement& a);
LElement l_sub(const LElement& a, const LElement& b);
LElement l_scale(long long k, const LElement& a);

inline LElement operator+(const LElement& a, const LElement& b) { return l_add(a, b); }
inline LElement operator-(const LElement& a, const LElement& b) { return l_sub(a, b); }
inline LElement operator-(const LElement& a) { return l_neg(a); }
inline LElement operator*(long long k, const LElement& a) { return l_scale(k, a); }

bool is_positive(const LElement& a);
bool l_leq(const LElement& a, const LElement& b);
bool in_interval_0_c(const LElement& a);

// delta(x_i) = lcm/p_i, delta(c) = lcm
long long degree(const LElement& a);
bool is_torsion(const LElement& a);

struct SpecialElements {
    LElement c;
    LElement omega;
    LElement s;
    std::vector<int> weights;

    LElement s_a(long long k) const;
};

SpecialElements special_elements(const Parameters& params);

bool coprime_criterion(const Parameters& params, const LElement& x);
std::pair<Parameters, LElement> reduce_parameters(const Parameters& params, const LElement& x);
bool all_ai_one(const Parameters& params, const LElement& x);

}  // namespace starres
