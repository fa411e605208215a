#include "starres/resolution.hpp"

#include <algorithm>
#include <string>

#include "starres/error.hpp"
#include "starres/gradedring.hpp"
#include "starres/hj.hpp"

namespace starres {

namespace {

void require_valid_x(const Parameters& params, const LElement& x) {
    if (x.weights() != params.weights())
        fail(ErrorCode::ParameterMismatch, "x does not belong to L(p) of these parameters");
    if (!is_positive(x)) fail(ErrorCode::Precondition, "x must lie in L_+");
    if (x.is_zero()) fail(ErrorCode::Precondition, "x must be nonzero");
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

bool same_params(const std::optional<Parameters>& a, const std::optional<Parameters>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

}  // namespace

std::string shape_name(GraphShape shape) {
    switch (shape) {
        case GraphShape::Point: return "point";
        case GraphShape::Chain: return "chain";
        case GraphShape::Star: return "star";
    }
    return "unknown";
}

std::vector<std::pair<int, int>> DualGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const Arm& arm : arms) {
        int prev = center();
        for (int v : arm.vertices) {
            out.emplace_back(prev, v);
            prev = v;
        }
    }
    return out;
}

std::vector<std::vector<int>> DualGraph::adjacency() const {
    std::vector<std::vector<int>> adj(size());
    for (auto [a, b] : edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool DualGraph::all_labels_at_most(int bound) const {
    return std::all_of(labels.begin(), labels.end(), [bound](int l) { return l <= bound; });
}

bool DualGraph::operator==(const DualGraph& other) const {
    if (shape != other.shape || labels != other.labels || arms.size() != other.arms.size())
        return false;
    for (std::size_t i = 0; i < arms.size(); ++i)
        if (arms[i].index != other.arms[i].index || arms[i].vertices != other.arms[i].vertices)
            return false;
    if (!same_params(params, other.params)) return false;
    return x == other.x;
}

std::string ModuleLabel::display() const {
    switch (kind) {
        case Kind::R: return "R";
        case Kind::SC: return "S(c)";
        case Kind::Arm: {
            std::string coeff = u == 1 ? "" : std::to_string(u);
            return "S(" + coeff + "x" + std::to_string(j + 1) + ")";
        }
    }
    return "?";
}

DualGraph dual_graph(const Parameters& params, const LElement& x) {
    require_valid_x(params, x);
    const int v = x.support_size();
    DualGraph g;
    g.params = params;
    g.x = x;
    g.shape = v == 0 ? GraphShape::Point : v == 1 ? GraphShape::Chain : GraphShape::Star;
    g.labels.push_back(static_cast<int>(-(x.c_coeff() + v)));
    for (int i = 0; i < x.n(); ++i) {
        if (x.arm(i) == 0) continue;
        HJExpansion e = hj_expand(params.p(i), params.p(i) - static_cast<int>(x.arm(i)));
        Arm arm{i, {}};
        for (int alpha : e.alphas) {
            arm.vertices.push_back(g.size());
            g.labels.push_back(-alpha);
        }
        g.arms.push_back(std::move(arm));
    }
    return g;
}

bool is_minimal(const Parameters& params, const LElement& x) {
    require_valid_x(params, x);
    return !in_interval_0_c(x);
}

DualGraph blow_down_chain(const DualGraph& g) {
    if (g.shape == GraphShape::Star || g.arms.size() > 1)
        fail(ErrorCode::Precondition, "blow-down is only defined for chains");
    std::vector<int> chain;
    for (int i = 0; i < g.size(); ++i) chain.push_back(i);
    if (!g.arms.empty()) {
        chain = {g.center()};
        chain.insert(chain.end(), g.arms[0].vertices.begin(), g.arms[0].vertices.end());
    }
    std::vector<int> labels;
    for (int v : chain) labels.push_back(g.labels[v]);

    while (labels.size() > 1) {
        auto it = std::find(labels.begin(), labels.end(), -1);
        if (it == labels.end()) break;
        std::size_t k = it - labels.begin();
        if (k > 0) labels[k - 1] += 1;
        if (k + 1 < labels.size()) labels[k + 1] += 1;
        labels.erase(labels.begin() + k);
    }

    DualGraph out;
    out.shape = GraphShape::Chain;
    out.labels = labels;
    out.params = g.params;
    out.x = g.x;
    if (labels.size() > 1) {
        Arm arm{g.arms.empty() ? -1 : g.arms[0].index, {}};
        for (int i = 1; i < static_cast<int>(labels.size()); ++i) arm.vertices.push_back(i);
        out.arms.push_back(std::move(arm));
    }
    return out;
}

std::vector<SpecialAssignment> specials(const Parameters& params, const LElement& x) {
    require_valid_x(params, x);
    if (in_interval_0_c(x))
        fail(ErrorCode::NotMinimal, "x lies in [0,c]; the resolution is not minimal");
    DualGraph g = dual_graph(params, x);
    std::vector<SpecialAssignment> out;
    out.push_back({{ModuleLabel::Kind::R, -1, 0}, -1});
    out.push_back({{ModuleLabel::Kind::SC, -1, 0}, g.center()});
    for (const Arm& arm : g.arms) {
        const int p = params.p(arm.index);
        std::set<int> values = i_set(p, p - static_cast<int>(x.arm(arm.index)));
        values.erase(0);
        values.erase(p);
        if (values.size() != arm.vertices.size())
            fail(ErrorCode::InternalConsistency, "arm length disagrees with the i-series");
        auto u = values.rbegin();
        for (int vertex : arm.vertices) out.push_back({{ModuleLabel::Kind::Arm, arm.index, *u++}, vertex});
    }
    return out;
}

OracleResult speciality_oracle(const Parameters& params, const LElement& x, const LElement& y,
                               int l_max) {
    require_valid_x(params, x);
    if (!coprime_criterion(params, x))
        fail(ErrorCode::Precondition, "speciality oracle needs gcd(p_i, a_i) = 1; reduce parameters first");
    if (in_interval_0_c(x)) fail(ErrorCode::NotMinimal, "x lies in [0,c]");
    if (y.weights() != params.weights())
        fail(ErrorCode::ParameterMismatch, "y does not belong to L(p) of these parameters");
    if (l_max < 1) fail(ErrorCode::OutOfRange, "l_max must be positive");

    GradedRing ring(params);
    const LElement omega = special_elements(params).omega;
    const long long dx = degree(x);
    for (int l = 1; l <= l_max; ++l) {
        const LElement target = y + omega + l_scale(l, x);
        Subspace sum = zero_subspace(ring.piece(target));
        // every m where both factors can be nonzero; the degree bounds make it finite
        const long long m_lo = -floor_div(degree(omega), dx);
        const long long m_hi = l + floor_div(degree(y), dx);
        for (long long m = m_lo; m <= m_hi; ++m) {
            const LElement left = omega + l_scale(m, x);
            const LElement right = y + l_scale(l - m, x);
            if (!is_positive(left) || !is_positive(right)) continue;
            sum = subspace_sum(sum, ring.piece_product(left, right));
            if (sum.is_full()) break;
        }
        if (!sum.is_full()) return {false, l};
    }
    return {true, std::nullopt};
}

}  // namespace starres
