#include "starres/reconalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "starres/error.hpp"
#include "starres/hj.hpp"

namespace starres {

namespace {

long long positive_part(long long a) { return a > 0 ? a : 0; }
long long negative_part(long long a) { return a < 0 ? -a : 0; }

IntMatrix zeros(int n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

std::string v_power(int k) {
    if (k == 0) return "1";
    return k == 1 ? "v" : "v^" + std::to_string(k);
}

std::string u_name(int i) { return "u" + std::to_string(i + 1); }

void require_wahl_params(const Parameters& params, bool need_normalized) {
    if (params.n() < 3) fail(ErrorCode::Precondition, "the 0-Wahl presentation needs n >= 3");
    if (need_normalized && !params.normalized())
        fail(ErrorCode::Precondition, "the 0-Wahl presentation needs points (1:0), (0:1) first");
}

void require_minimal_input(const Parameters& params, const LElement& x) {
    if (x.weights() != params.weights())
        fail(ErrorCode::ParameterMismatch, "x does not belong to L(p) of these parameters");
    if (!is_positive(x) || x.is_zero()) fail(ErrorCode::Precondition, "x must be a nonzero element of L_+");
    if (in_interval_0_c(x)) fail(ErrorCode::NotMinimal, "x lies in [0,c]; the resolution is not minimal");
}

std::vector<std::string> vertex_names(int size, const std::vector<SpecialAssignment>& labels) {
    std::vector<std::string> names(size + 1);
    names[0] = "R";
    for (int k = 0; k < size; ++k) names[k + 1] = "E" + std::to_string(k);
    for (const auto& a : labels)
        if (a.vertex >= 0 && a.vertex < size) names[a.vertex + 1] = a.label.display();
    return names;
}

std::vector<int> vertex_depths(const DualGraph& g) {
    std::vector<int> depth(g.size() + 1, 0);
    depth[0] = -1;
    for (const Arm& arm : g.arms)
        for (std::size_t k = 0; k < arm.vertices.size(); ++k) depth[arm.vertices[k] + 1] = static_cast<int>(k + 1);
    return depth;
}

}  // namespace

bool QuiverData::same_counts(const QuiverData& other) const {
    return vertices == other.vertices && arrows == other.arrows && relations == other.relations;
}

QuiverData quiver_from_intersection(const DualGraph& g, const std::vector<SpecialAssignment>& labels) {
    if (!g.all_labels_at_most(-2))
        fail(ErrorCode::NotMinimal, "quiver needs a minimal graph (all labels <= -2)");
    IntersectionMatrix M = matrix_from_graph(g);
    if (!is_negative_definite(M)) fail(ErrorCode::NotNegativeDefinite, "intersection matrix is not negative definite");
    const int n = M.size();
    const Cycle zf = fundamental_cycle(M);
    const Cycle zk = canonical_cycle(M);

    QuiverData q;
    q.vertices = vertex_names(n, labels);
    q.depth = vertex_depths(g);
    q.arrows = zeros(n + 1);
    q.relations = zeros(n + 1);
    q.degenerate = g.shape != GraphShape::Star;

    Cycle diff = zk;
    for (int i = 0; i < n; ++i) diff.coeffs[i] -= zf.coeffs[i];
    for (int i = 0; i < n; ++i) {
        const Cycle ei = basis_cycle(n, i);
        for (int j = 0; j < n; ++j) {
            q.arrows[i + 1][j + 1] = positive_part(M(i, j));
            q.relations[i + 1][j + 1] = positive_part(-1 - M(i, j));
        }
        q.arrows[i + 1][0] = -to_ll(pair(M, ei, zf));
        const long long t = to_ll(pair(M, diff, ei));
        q.arrows[0][i + 1] = positive_part(t);
        q.relations[0][i + 1] = negative_part(t);
    }
    q.relations[0][0] = -1 - to_ll(pair(M, zf, zf));
    return q;
}

QuiverData quiver_combinatorial(const Parameters& params, const LElement& x) {
    require_minimal_input(params, x);
    const int v = x.support_size();
    if (v < 2) fail(ErrorCode::Degenerate, "v = " + std::to_string(v) + " is degenerate; use the intersection route");
    const long long a = x.c_coeff();

    std::vector<std::vector<int>> arms;
    int size = 1;
    for (int i = 0; i < x.n(); ++i) {
        if (x.arm(i) == 0) continue;
        arms.push_back(hj_expand(params.p(i), params.p(i) - static_cast<int>(x.arm(i))).alphas);
        size += static_cast<int>(arms.back().size());
    }

    QuiverData q;
    q.arrows = zeros(size + 1);
    q.relations = zeros(size + 1);
    q.depth.assign(size + 1, 0);
    q.depth[0] = -1;
    const int star = 0, center = 1;

    q.arrows[center][star] += a;
    q.relations[center][center] = a + v - 1;
    q.relations[star][center] = v - 2;
    long long star_loops = a - 1;

    int next = 2;
    for (const auto& alphas : arms) {
        int prev = center;
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            const int vert = next++;
            q.depth[vert] = static_cast<int>(k + 1);
            q.arrows[prev][vert] += 1;
            q.arrows[vert][prev] += 1;
            q.arrows[vert][star] += alphas[k] - 2;
            q.relations[vert][vert] = alphas[k] - 1;
            star_loops += alphas[k] - 2;
            prev = vert;
        }
        q.arrows[star][prev] += 1;
        q.arrows[prev][star] += 1;
        star_loops += 1;
    }
    q.relations[star][star] = star_loops;

    std::vector<SpecialAssignment> labels = specials(params, x);
    q.vertices = vertex_names(size, labels);
    return q;
}

CanonicalAlgebraDesc degree_zero_canonical(const Parameters& params, const LElement& x) {
    require_minimal_input(params, x);
    CanonicalAlgebraDesc d;
    for (int i = 0; i < x.n(); ++i) {
        if (x.arm(i) == 0) continue;
        const int m = static_cast<int>(hj_expand(params.p(i), params.p(i) - static_cast<int>(x.arm(i))).alphas.size());
        d.q.push_back(m + 1);
        d.mu.push_back(params.points()[i]);
        d.arm_lengths.push_back(m);
    }
    auto power = [](int var, int exp) {
        return "x" + std::to_string(var) + "^" + std::to_string(exp);
    };
    for (std::size_t i = 2; i < d.q.size(); ++i)
        d.relations.push_back(power(1, d.q[0]) + " - mu" + std::to_string(i + 1) + "*" + power(2, d.q[1]) +
                              " + " + power(static_cast<int>(i + 1), d.q[i]));
    return d;
}

std::string entry_string(const WahlEntry& e) {
    std::string out;
    for (const WahlWord& w : e) {
        std::string body;
        if (w.u_index >= 0) body = u_name(w.u_index);
        if (w.v_power > 0) body += (body.empty() ? "" : "*") + v_power(w.v_power);
        if (body.empty()) body = "1";
        Rational mag = abs(w.coeff);
        if (mag != 1) body = to_string(mag) + "*" + body;
        if (out.empty())
            out = (w.coeff < 0 ? "-" : "") + body;
        else
            out += (w.coeff < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

WahlPresentation wahl_generators(const Parameters& params) {
    require_wahl_params(params, true);
    const int n = params.n();
    GradedRing ring(params);
    const int p1 = params.p(0), p2 = params.p(1);

    WahlPresentation w;
    auto add = [&](const Rational& coeff, const std::vector<int>& exps, int deg) {
        w.u.push_back(ring.monomial(coeff, 0, 0, exps));
        w.u_formulas.push_back((coeff < 0 ? "-" : "") + monomial_string(Exponents{0, 0, exps}));
        w.u_degrees.push_back(deg);
    };

    std::vector<int> e(n, p2);
    e[0] = p1 + p2;
    e[1] = 0;
    add(1, e, p2);
    e.assign(n, p1);
    e[0] = 0;
    e[1] = p1 + p2;
    add(1, e, p1);
    for (int i = 2; i < n; ++i) {
        const int pi = params.p(i);
        e.assign(n, pi);
        e[1] = p2 + pi;
        e[i] = 0;
        add(-1, e, pi);
    }
    w.v = ring.monomial(1, 0, 0, std::vector<int>(n, 1));
    w.v_formula = monomial_string(Exponents{0, 0, std::vector<int>(n, 1)});

    w.matrix.assign(2, {});
    w.matrix[0].push_back({{1, 1, 0}});
    w.matrix[1].push_back({{1, -1, p1}});
    for (int i = 2; i < n; ++i) {
        const Rational lambda = linear_form(params.points()[i]).t0;
        w.matrix[0].push_back({{1, i, 0}});
        w.matrix[1].push_back({{lambda, i, 0}, {1, -1, params.p(i)}});
    }
    w.matrix[0].push_back({{1, -1, p2}});
    w.matrix[1].push_back({{1, 0, 0}});
    return w;
}

namespace {

Poly evaluate(const GradedRing& ring, const WahlPresentation& w, const WahlEntry& entry) {
    Poly out = ring.zero();
    for (const WahlWord& word : entry) {
        Poly term = ring.power(w.v, word.v_power);
        if (word.u_index >= 0) term = ring.multiply(term, w.u[word.u_index]);
        out = out + term.scaled(word.coeff);
    }
    return out;
}

}  // namespace

WahlReport wahl_verify(const Parameters& params, int max_degree) {
    WahlPresentation w = wahl_generators(params);
    GradedRing ring(params);
    const int n = params.n();
    WahlReport report;

    std::vector<std::vector<Poly>> entries(2);
    for (int r = 0; r < 2; ++r)
        for (const WahlEntry& e : w.matrix[r]) entries[r].push_back(evaluate(ring, w, e));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Poly minor = ring.multiply(entries[0][a], entries[1][b]) - ring.multiply(entries[0][b], entries[1][a]);
            ++report.minors_checked;
            if (!minor.is_zero())
                report.minor_failures.push_back("columns " + std::to_string(a + 1) + "," +
                                                std::to_string(b + 1) + ": " + minor.to_string());
        }

    // generators: index 0..n-1 are u_i, index n is v
    std::vector<Poly> gens = w.u;
    gens.push_back(w.v);
    std::vector<int> gen_deg = w.u_degrees;
    gen_deg.push_back(w.v_degree);
    const LElement s = special_elements(params).s;

    std::vector<std::map<std::vector<int>, Poly>> words(std::max(max_degree, 0) + 1);
    words[0].emplace(std::vector<int>(n + 1, 0), ring.one());
    for (int N = 0; N <= max_degree; ++N) {
        for (int g = 0; g <= n; ++g) {
            if (N - gen_deg[g] < 0) continue;
            for (const auto& [exps, poly] : words[N - gen_deg[g]]) {
                std::vector<int> next = exps;
                next[g] += 1;
                if (!words[N].count(next)) words[N].emplace(next, ring.multiply(poly, gens[g]));
            }
        }
        std::vector<Poly> elems;
        for (const auto& [exps, poly] : words[N]) elems.push_back(poly);
        const LElement target = l_scale(N, s);
        DegreeCheck check{N, ring.span(target, elems).rank(), 1};
        for (int i = 0; i < n; ++i) check.expected += N / params.p(i);
        if (check.expected != graded_dim(params, target))
            fail(ErrorCode::InternalConsistency, "graded dimension formula disagrees with the ring");
        if (check.span_dim != check.expected) report.ok = false;
        report.degrees.push_back(check);
    }
    if (!report.minor_failures.empty()) report.ok = false;
    return report;
}

std::vector<std::pair<ModuleLabel, std::string>> wahl_special_ideals(const Parameters& params) {
    require_wahl_params(params, false);
    const int p2 = params.p(1);
    std::vector<std::pair<ModuleLabel, std::string>> out;
    auto ideal = [](const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; };
    out.emplace_back(ModuleLabel{ModuleLabel::Kind::SC, -1, 0}, ideal(v_power(p2), "u1"));
    for (int j = 0; j < params.n(); ++j) {
        const int pj = params.p(j);
        for (int k = 1; k < pj; ++k) {
            ModuleLabel label{ModuleLabel::Kind::Arm, j, pj - k};
            std::string text = j == 0   ? ideal(v_power(p2 + k), "u1")
                               : j == 1 ? ideal("u1", v_power(p2 - k))
                                        : ideal(u_name(j), v_power(pj - k));
            out.emplace_back(label, text);
        }
    }
    return out;
}

WahlQuiver wahl_relations(const Parameters& params) {
    require_wahl_params(params, false);
    const int n = params.n();
    const int p2 = params.p(1);
    const SpecialElements se = special_elements(params);

    WahlQuiver q;
    q.vertices = {"R", "S(c)"};
    // pos[j][k] for k = 1..p_j - 1
    std::vector<std::vector<int>> pos(n);
    for (int j = 0; j < n; ++j) {
        pos[j].assign(params.p(j), -1);
        for (int k = 1; k < params.p(j); ++k) {
            pos[j][k] = static_cast<int>(q.vertices.size());
            q.vertices.push_back(ModuleLabel{ModuleLabel::Kind::Arm, j, params.p(j) - k}.display());
        }
    }
    const int star = 0, center = 1;

    std::vector<std::vector<int>> black_path(n);  // R -> ... -> center along arm j
    std::map<std::pair<int, int>, int> arrow_id;
    auto add_arrow = [&](int from, int to, const std::string& label, bool black, int j) {
        const LElement xj = LElement::generator(params, j);
        LabelledArrow a{from, to, label, black, black ? xj : se.s - xj, black ? 0 : 1};
        arrow_id[{from, to}] = static_cast<int>(q.arrows.size());
        q.arrows.push_back(a);
        return arrow_id[{from, to}];
    };

    for (int j = 0; j < n; ++j) {
        const int pj = params.p(j);
        const std::string black_step = j == 0 ? "inc" : "v";
        const std::string red_step = j == 0 ? "v" : "inc";
        const std::string black_in = j == 0 ? "inc" : j == 1 ? "v" : v_power(p2 + 1) + "/" + u_name(j);
        const std::string red_out = j == 0 ? "v" : j == 1 ? "inc" : u_name(j) + "/" + v_power(p2);

        black_path[j].push_back(add_arrow(star, pos[j][pj - 1], j == 0 ? "u1" : "v", true, j));
        add_arrow(pos[j][pj - 1], star, j == 0 ? "v/u1" : "inc", false, j);
        for (int k = pj - 1; k > 1; --k) {
            black_path[j].push_back(add_arrow(pos[j][k], pos[j][k - 1], black_step, true, j));
            add_arrow(pos[j][k - 1], pos[j][k], red_step, false, j);
        }
        black_path[j].push_back(add_arrow(pos[j][1], center, black_in, true, j));
        add_arrow(center, pos[j][1], red_out, false, j);
    }

    for (int i = 2; i < n; ++i) {
        const Rational lambda = linear_form(params.points()[i]).t0;
        QuiverRelation r{"canonical", {{1, black_path[0]}, {-lambda, black_path[1]}, {1, black_path[i]}}, {}};
        r.text = "x1^" + std::to_string(params.p(0)) + " - lambda" + std::to_string(i + 1) + "*x2^" +
                 std::to_string(p2) + " + x" + std::to_string(i + 1) + "^" + std::to_string(params.p(i));
        q.relations.push_back(std::move(r));
    }

    std::vector<std::vector<int>> neighbours(q.vertices.size());
    for (const LabelledArrow& a : q.arrows)
        if (a.black) {
            neighbours[a.from].push_back(a.to);
            neighbours[a.to].push_back(a.from);
        }
    for (int vtx = 0; vtx < static_cast<int>(q.vertices.size()); ++vtx) {
        auto& nb = neighbours[vtx];
        std::sort(nb.begin(), nb.end());
        auto cycle = [&](int w) {
            return std::vector<int>{arrow_id.at({vtx, w}), arrow_id.at({w, vtx})};
        };
        for (std::size_t t = 1; t < nb.size(); ++t) {
            QuiverRelation r{"two-cycle", {{1, cycle(nb[0])}, {-1, cycle(nb[t])}}, {}};
            r.text = q.vertices[vtx] + ": (" + q.vertices[nb[0]] + ") = (" + q.vertices[nb[t]] + ")";
            q.relations.push_back(std::move(r));
        }
    }
    return q;
}

bool relation_is_homogeneous(const WahlQuiver& q, const QuiverRelation& r) {
    if (r.terms.empty()) return false;
    std::optional<std::pair<int, int>> ends;
    std::optional<LElement> l_deg;
    std::optional<int> z_deg;
    for (const RelationTerm& t : r.terms) {
        if (t.path.empty()) return false;
        LElement ld = l_scale(0, q.arrows[t.path[0]].l_degree);
        int zd = 0;
        for (std::size_t k = 0; k < t.path.size(); ++k) {
            const LabelledArrow& a = q.arrows[t.path[k]];
            if (k > 0 && q.arrows[t.path[k - 1]].to != a.from) return false;
            ld = ld + a.l_degree;
            zd += a.z_degree;
        }
        std::pair<int, int> e{q.arrows[t.path.front()].from, q.arrows[t.path.back()].to};
        if (ends && *ends != e) return false;
        if (l_deg && !(*l_deg == ld)) return false;
        if (z_deg && *z_deg != zd) return false;
        ends = e;
        l_deg = ld;
        z_deg = zd;
    }
    return true;
}

std::string DomesticInfo::label() const { return std::string(1, group) + "_" + std::to_string(index); }

DomesticInfo domestic_classify(const Parameters& params, int m) {
    static const std::vector<std::tuple<std::vector<int>, char, int>> table = {
        {{2, 3, 3}, 'T', 6}, {{2, 3, 4}, 'O', 12}, {{2, 3, 5}, 'I', 30}};
    if (m < 3) fail(ErrorCode::OutOfRange, "domestic classification needs m >= 3");
    for (const auto& [triple, group, h] : table) {
        if (params.weights() != triple) continue;
        DomesticInfo d{triple, m, group, h, h * (m - 2) + 1};
        const SpecialElements se = special_elements(params);
        if (!(l_scale(d.index, se.omega) == l_neg(se.s_a(m - 3))))
            fail(ErrorCode::InternalConsistency, "(h(m-2)+1) omega != -s_(m-3)");
        return d;
    }
    fail(ErrorCode::Precondition, "weights are not one of (2,3,3), (2,3,4), (2,3,5)");
}

}  // namespace starres
