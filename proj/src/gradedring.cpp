#include "starres/gradedring.hpp"

#include <string>
#include <utility>

#include "starres/error.hpp"

namespace starres {

namespace {

using TPoly = std::map<std::pair<int, int>, Rational>;

TPoly times_form(const TPoly& p, const LinearForm& l) {
    TPoly out;
    for (const auto& [e, c] : p) {
        if (l.t0 != 0) out[{e.first + 1, e.second}] += c * l.t0;
        if (l.t1 != 0) out[{e.first, e.second + 1}] += c * l.t1;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::string power_string(const std::string& var, int k) {
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

}  // namespace

std::string monomial_string(const Exponents& e) {
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += "*";
        out += part;
    };
    if (e.e0 > 0) append(power_string("t0", e.e0));
    if (e.e1 > 0) append(power_string("t1", e.e1));
    for (std::size_t i = 0; i < e.f.size(); ++i)
        if (e.f[i] > 0) append(power_string("x" + std::to_string(i + 1), e.f[i]));
    return out.empty() ? "1" : out;
}

void Poly::add_term(const Exponents& e, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& other) const {
    if (weights_ != other.weights_)
        fail(ErrorCode::ParameterMismatch, "adding ring elements over different parameters");
    Poly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + other.scaled(-1); }

Poly Poly::scaled(const Rational& k) const {
    Poly out(weights_);
    if (k == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_string(e);
        Rational mag = abs(c);
        std::string body = mono == "1" ? starres::to_string(mag)
                           : mag == 1  ? mono
                                       : starres::to_string(mag) + "*" + mono;
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

LinearForm linear_form(const Point& point) {
    if (point.w == 0) return {0, 1};
    if (point.u == 0) return {1, 0};
    return {point.w / point.u, -1};
}

GradedRing::GradedRing(Parameters params) : params_(std::move(params)) {
    for (const Point& pt : params_.points()) ells_.push_back(linear_form(pt));
}

Poly GradedRing::one() const { return monomial(1, 0, 0, std::vector<int>(params_.n(), 0)); }
Poly GradedRing::t0() const { return monomial(1, 1, 0, std::vector<int>(params_.n(), 0)); }
Poly GradedRing::t1() const { return monomial(1, 0, 1, std::vector<int>(params_.n(), 0)); }

Poly GradedRing::x(int i) const {
    std::vector<int> k(params_.n(), 0);
    k.at(i) = 1;
    return monomial(1, 0, 0, k);
}

Poly GradedRing::monomial(const Rational& coeff, int e0, int e1,
                          const std::vector<int>& x_exps) const {
    if (static_cast<int>(x_exps.size()) != params_.n())
        fail(ErrorCode::ParameterMismatch, "monomial has wrong number of x exponents");
    if (e0 < 0 || e1 < 0) fail(ErrorCode::OutOfRange, "negative t exponent");
    TPoly tp{{{e0, e1}, coeff}};
    std::vector<int> f(params_.n());
    for (int i = 0; i < params_.n(); ++i) {
        if (x_exps[i] < 0) fail(ErrorCode::OutOfRange, "negative x exponent");
        f[i] = x_exps[i] % params_.p(i);
        for (int q = 0; q < x_exps[i] / params_.p(i); ++q) tp = times_form(tp, ells_[i]);
    }
    Poly out(params_.weights());
    if (coeff == 0) return out;
    for (const auto& [e, c] : tp) out.add_term(Exponents{e.first, e.second, f}, c);
    return out;
}

void GradedRing::check(const Poly& f) const {
    if (f.weights() != params_.weights())
        fail(ErrorCode::ParameterMismatch, "ring element belongs to different parameters");
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < params_.n(); ++i)
            if (e.f[i] < 0 || e.f[i] >= params_.p(i))
                fail(ErrorCode::Precondition, "monomial " + monomial_string(e) + " is not reduced");
}

Poly GradedRing::multiply(const Poly& a, const Poly& b) const {
    check(a);
    check(b);
    const int n = params_.n();
    Poly out(params_.weights());
    std::vector<int> f(n);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            TPoly tp{{{ea.e0 + eb.e0, ea.e1 + eb.e1}, ca * cb}};
            for (int i = 0; i < n; ++i) {
                f[i] = ea.f[i] + eb.f[i];
                if (f[i] >= params_.p(i)) {
                    f[i] -= params_.p(i);
                    tp = times_form(tp, ells_[i]);
                }
            }
            for (const auto& [e, c] : tp) out.add_term(Exponents{e.first, e.second, f}, c);
        }
    }
    return out;
}

Poly GradedRing::power(const Poly& a, int k) const {
    if (k < 0) fail(ErrorCode::OutOfRange, "negative power");
    Poly result = one();
    Poly base = a;
    while (k > 0) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return result;
}

LElement GradedRing::degree(const Exponents& e) const {
    std::vector<long long> raw(e.f.begin(), e.f.end());
    return LElement::normal_form(params_, raw, e.e0 + e.e1);
}

std::optional<LElement> GradedRing::degree(const Poly& f) const {
    if (f.is_zero()) return std::nullopt;
    std::optional<LElement> d;
    for (const auto& [e, c] : f.terms()) {
        LElement de = degree(e);
        if (d && !(*d == de)) return std::nullopt;
        d = de;
    }
    return d;
}

GradedPiece GradedRing::piece(const LElement& y) const {
    if (y.weights() != params_.weights())
        fail(ErrorCode::ParameterMismatch, "degree belongs to a different group");
    GradedPiece gp{y, {}};
    const long long a = y.c_coeff();
    std::vector<int> f(y.arms().begin(), y.arms().end());
    for (long long j = a; j >= 0; --j)
        gp.basis.push_back(Monomial{1, Exponents{static_cast<int>(j), static_cast<int>(a - j), f}});
    return gp;
}

std::vector<Rational> GradedRing::coordinates(const Poly& f, const LElement& y) const {
    check(f);
    const long long a = y.c_coeff();
    std::vector<Rational> coords(a >= 0 ? a + 1 : 0);
    for (const auto& [e, c] : f.terms()) {
        bool ok = e.e0 + e.e1 == a;
        for (int i = 0; ok && i < params_.n(); ++i) ok = e.f[i] == y.arm(i);
        if (!ok)
            fail(ErrorCode::Precondition,
                 "term " + monomial_string(e) + " does not lie in the requested graded piece");
        coords[a - e.e0] = c;
    }
    return coords;
}

Subspace GradedRing::span(const LElement& y, const std::vector<Poly>& elements) const {
    Subspace s{piece(y), {}};
    for (const Poly& f : elements) {
        auto row = coordinates(f, y);
        if (!row.empty()) s.rows.push_back(std::move(row));
    }
    rref(s.rows);
    return s;
}

Subspace GradedRing::piece_product(const LElement& y, const LElement& z) const {
    GradedPiece py = piece(y), pz = piece(z);
    std::vector<Poly> products;
    for (const Monomial& my : py.basis) {
        Poly fy(params_.weights());
        fy.add_term(my.exp, my.coeff);
        for (const Monomial& mz : pz.basis) {
            Poly fz(params_.weights());
            fz.add_term(mz.exp, mz.coeff);
            products.push_back(multiply(fy, fz));
        }
    }
    return span(l_add(y, z), products);
}

int graded_dim(const Parameters& params, const LElement& y) {
    if (y.weights() != params.weights())
        fail(ErrorCode::ParameterMismatch, "degree belongs to a different group");
    return y.c_coeff() >= 0 ? static_cast<int>(y.c_coeff() + 1) : 0;
}

GradedPiece graded_basis(const Parameters& params, const LElement& y) {
    return GradedRing(params).piece(y);
}

Poly multiply(const Parameters& params, const Poly& u, const Poly& v) {
    return GradedRing(params).multiply(u, v);
}

Subspace piece_product(const Parameters& params, const LElement& y, const LElement& z) {
    return GradedRing(params).piece_product(y, z);
}

Subspace zero_subspace(const GradedPiece& ambient) { return Subspace{ambient, {}}; }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (!(a.ambient.degree == b.ambient.degree))
        fail(ErrorCode::ParameterMismatch, "subspaces live in different graded pieces");
    Subspace out{a.ambient, a.rows};
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    rref(out.rows);
    return out;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (!(a.ambient.degree == b.ambient.degree))
        fail(ErrorCode::ParameterMismatch, "subspaces live in different graded pieces");
    return a.rows == b.rows;
}

}  // namespace starres
