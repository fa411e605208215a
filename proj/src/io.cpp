#include "starres/io.hpp"

#include <sstream>
#include <stdexcept>

#include "starres/error.hpp"

namespace starres {

namespace {

Json matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

Json point_json(const Point& p) { return Json::array({rational_to_json(p.u), rational_to_json(p.w)}); }

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string vertex_dot_name(const DualGraph& g, int vertex) {
    if (vertex == g.center()) return "center";
    for (std::size_t a = 0; a < g.arms.size(); ++a) {
        const auto& vs = g.arms[a].vertices;
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (vs[k] == vertex) {
                int j = g.arms[a].index >= 0 ? g.arms[a].index + 1 : static_cast<int>(a) + 1;
                return "E_" + std::to_string(j) + "_" + std::to_string(k + 1);
            }
    }
    return "E_" + std::to_string(vertex);
}

}  // namespace

Json rational_to_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

Json to_json(const Parameters& params) {
    Json lambda = Json::array();
    for (const Point& p : params.points()) lambda.push_back(point_json(p));
    return Json{{"p", params.weights()}, {"lambda", lambda}};
}

Parameters parameters_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p")) throw std::invalid_argument("parameters need a \"p\" array");
    std::vector<int> weights = j.at("p").get<std::vector<int>>();
    std::vector<Point> points;
    if (j.contains("lambda")) {
        for (const Json& pt : j.at("lambda")) {
            if (!pt.is_array() || pt.size() != 2)
                throw std::invalid_argument("each lambda entry must be a pair [u, w]");
            points.push_back({rational_from_json(pt[0]), rational_from_json(pt[1])});
        }
    }
    for (std::size_t i = points.size(); i < weights.size(); ++i) points.push_back(default_point(static_cast<int>(i)));
    return Parameters(std::move(weights), std::move(points));
}

Json to_json(const LElement& x) { return Json{{"xi", x.arms()}, {"c", x.c_coeff()}}; }

LElement lelement_from_json(const Parameters& params, const Json& j) {
    if (!j.is_object() || !j.contains("xi")) throw std::invalid_argument("element needs an \"xi\" array");
    return LElement::normal_form(params, j.at("xi").get<std::vector<long long>>(), j.value("c", 0LL));
}

Json to_json(const HJExpansion& e, const ISeries& s) {
    return Json{{"r", e.r}, {"a", e.a}, {"expansion", e.alphas}, {"series", s.terms}, {"set", s.as_set}};
}

Json to_json(const DualGraph& g) {
    Json arms = Json::array();
    for (const Arm& a : g.arms) arms.push_back(Json{{"index", a.index + 1}, {"vertices", a.vertices}});
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    Json out{{"shape", shape_name(g.shape)}, {"labels", g.labels}, {"center", g.center()},
             {"arms", arms}, {"edges", edges}};
    if (g.params) out["params"] = to_json(*g.params);
    if (g.x) out["x"] = to_json(*g.x);
    return out;
}

DualGraph dual_graph_from_json(const Json& j) {
    DualGraph g;
    const std::string shape = j.at("shape").get<std::string>();
    if (shape == "point") g.shape = GraphShape::Point;
    else if (shape == "chain") g.shape = GraphShape::Chain;
    else if (shape == "star") g.shape = GraphShape::Star;
    else throw std::invalid_argument("unknown graph shape: " + shape);
    g.labels = j.at("labels").get<std::vector<int>>();
    if (g.labels.empty()) throw std::invalid_argument("graph needs at least one vertex");
    for (const Json& a : j.at("arms")) g.arms.push_back({a.at("index").get<int>() - 1, a.at("vertices").get<std::vector<int>>()});
    for (const Arm& a : g.arms)
        for (int v : a.vertices)
            if (v <= 0 || v >= g.size()) throw std::invalid_argument("arm vertex out of range");
    if (j.contains("edges")) {
        std::vector<std::pair<int, int>> given;
        for (const Json& e : j.at("edges")) given.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        if (given != g.edges()) throw std::invalid_argument("edge list does not match the arms");
    }
    if (j.contains("params")) g.params = parameters_from_json(j.at("params"));
    if (j.contains("x")) {
        if (!g.params) throw std::invalid_argument("x given without params");
        g.x = lelement_from_json(*g.params, j.at("x"));
    }
    return g;
}

Json to_json(const std::vector<SpecialAssignment>& specials) {
    Json out = Json::array();
    for (const auto& s : specials) {
        Json item{{"label", s.label.display()}};
        switch (s.label.kind) {
            case ModuleLabel::Kind::R: item["kind"] = "R"; break;
            case ModuleLabel::Kind::SC: item["kind"] = "SC"; break;
            case ModuleLabel::Kind::Arm:
                item["kind"] = "arm";
                item["j"] = s.label.j + 1;
                item["u"] = s.label.u;
                break;
        }
        item["vertex"] = s.vertex >= 0 ? Json(s.vertex) : Json(nullptr);
        out.push_back(item);
    }
    return out;
}

Json to_json(const Cycle& z) {
    Json out = Json::object();
    for (int i = 0; i < z.size(); ++i) out[std::to_string(i)] = rational_to_json(z.coeffs[i]);
    return out;
}

Json to_json(const QuiverData& q) {
    return Json{{"vertices", q.vertices}, {"arrows", matrix_json(q.arrows)},
                {"relations", matrix_json(q.relations)}, {"degenerate", q.degenerate}};
}

Json to_json(const CanonicalAlgebraDesc& d) {
    Json mu = Json::array();
    for (const Point& p : d.mu) mu.push_back(point_json(p));
    return Json{{"q", d.q}, {"mu", mu}, {"arm_lengths", d.arm_lengths}, {"relations", d.relations}};
}

Json to_json(const WahlPresentation& w) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < w.u.size(); ++i)
        gens.push_back(Json{{"name", "u" + std::to_string(i + 1)}, {"formula", w.u_formulas[i]},
                            {"degree", w.u_degrees[i]}});
    gens.push_back(Json{{"name", "v"}, {"formula", w.v_formula}, {"degree", w.v_degree}});
    Json matrix = Json::array();
    for (const auto& row : w.matrix) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(entry_string(e));
        matrix.push_back(r);
    }
    return Json{{"generators", gens}, {"matrix", matrix}};
}

Json to_json(const WahlReport& r) {
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back(Json{{"N", d.N}, {"span_dim", d.span_dim}, {"expected", d.expected}});
    return Json{{"ok", r.ok}, {"minors_checked", r.minors_checked},
                {"minor_failures", r.minor_failures}, {"degrees", degrees}};
}

Json to_json(const WahlQuiver& q) {
    Json arrows = Json::array();
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& a = q.arrows[i];
        arrows.push_back(Json{{"id", i}, {"from", q.vertices[a.from]}, {"to", q.vertices[a.to]},
                              {"label", a.label}, {"color", a.black ? "black" : "red"},
                              {"l_degree", to_json(a.l_degree)}, {"z_degree", a.z_degree}});
    }
    Json rels = Json::array();
    for (const auto& r : q.relations) {
        Json terms = Json::array();
        for (const auto& t : r.terms) terms.push_back(Json{{"coeff", rational_to_json(t.coeff)}, {"path", t.path}});
        rels.push_back(Json{{"kind", r.kind}, {"text", r.text}, {"terms", terms}});
    }
    return Json{{"vertices", q.vertices}, {"arrows", arrows}, {"relations", rels}};
}

std::string graph_to_dot(const DualGraph& g, const std::vector<SpecialAssignment>& specials) {
    std::vector<std::string> tooltip(g.size());
    for (const auto& s : specials)
        if (s.vertex >= 0 && s.vertex < g.size()) tooltip[s.vertex] = s.label.display();
    std::ostringstream out;
    out << "graph dual {\n";
    for (int v = 0; v < g.size(); ++v) {
        out << "  " << vertex_dot_name(g, v) << " [label=\"" << g.labels[v] << "\"";
        if (!tooltip[v].empty()) out << ", tooltip=\"" << dot_escape(tooltip[v]) << "\"";
        out << "];\n";
    }
    for (auto [a, b] : g.edges()) out << "  " << vertex_dot_name(g, a) << " -- " << vertex_dot_name(g, b) << ";\n";
    out << "}\n";
    return out.str();
}

std::string quiver_to_dot(const QuiverData& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (int v = 0; v < q.size(); ++v)
        out << "  v" << v << " [label=\"" << dot_escape(q.vertices[v]) << "\"];\n";
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b) {
            const bool black = q.depth[a] == -1 || (q.depth[b] >= 0 && q.depth[a] == q.depth[b] + 1);
            for (long long k = 0; k < q.arrows[a][b]; ++k)
                out << "  v" << a << " -> v" << b << " [color=" << (black ? "black" : "red") << "];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace starres
