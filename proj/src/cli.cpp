#include "starres/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "starres/error.hpp"
#include "starres/io.hpp"
#include "starres/sweep.hpp"

namespace starres {

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    Parameters params;
    std::optional<LElement> x;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

long long parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    if (s.empty()) return out;
    for (const auto& item : split(s, ',')) out.push_back(parse_int(item));
    return out;
}

std::vector<Point> parse_points(const std::string& s) {
    std::vector<Point> out;
    if (s.empty()) return out;
    for (const auto& item : split(s, ',')) {
        auto parts = split(item, ':');
        if (parts.size() != 2) throw ParseError("lambda entries must look like u:w, got '" + item + "'");
        try {
            out.push_back({parse_rational(parts[0]), parse_rational(parts[1])});
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return out;
}

Json read_json(const RunConfig& config) {
    std::string text;
    if (config.inline_json) {
        text = *config.inline_json;
    } else {
        std::ifstream in(*config.input_path);
        if (!in) throw ParseError("cannot read input file " + *config.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Input load_input(const RunConfig& config) {
    if (config.inline_json || config.input_path) {
        Json j = read_json(config);
        try {
            const Json& pj = j.contains("params") ? j.at("params") : j;
            Input in{parameters_from_json(pj), std::nullopt};
            if (j.contains("x")) in.x = lelement_from_json(in.params, j.at("x"));
            return in;
        } catch (const Json::exception& e) {
            throw ParseError(std::string("malformed input: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (!config.p) throw ParseError("--p is required");
    std::vector<int> weights;
    for (long long w : parse_int_list(*config.p)) weights.push_back(static_cast<int>(w));
    std::vector<Point> points = config.lambda ? parse_points(*config.lambda) : std::vector<Point>{};
    if (points.size() > weights.size()) throw ParseError("more lambda points than weights");
    for (std::size_t i = points.size(); i < weights.size(); ++i) points.push_back(default_point(static_cast<int>(i)));
    Input in{Parameters(weights, points), std::nullopt};
    if (config.x) {
        in.x = LElement::normal_form(in.params, parse_int_list(*config.x), config.c.value_or(0));
    } else if (config.c) {
        in.x = LElement::normal_form(in.params, std::vector<long long>(weights.size(), 0), *config.c);
    }
    return in;
}

const LElement& require_x(const Input& in) {
    if (!in.x) throw ParseError("this command needs x (--x/--c or an \"x\" field)");
    return *in.x;
}

void check_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (config.format == f) return;
    throw ParseError("format '" + config.format + "' is not supported by " + config.command);
}

int cmd_iseries(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json", "text"});
    if (config.positional.size() != 2) throw ParseError("usage: iseries r a");
    const int r = static_cast<int>(parse_int(config.positional[0]));
    const int a = static_cast<int>(parse_int(config.positional[1]));
    const HJExpansion e = hj_expand(r, a);
    const ISeries s = i_series(r, a);
    if (config.format == "text") {
        out << r << "/" << a << " = [";
        for (std::size_t i = 0; i < e.alphas.size(); ++i) out << (i ? "," : "") << e.alphas[i];
        out << "]\nseries:";
        for (int t : s.terms) out << " " << t;
        out << "\nset: {";
        bool first = true;
        for (int t : s.as_set) {
            out << (first ? "" : ",") << t;
            first = false;
        }
        out << "}\n";
    } else {
        out << to_json(e, s).dump() << "\n";
    }
    return 0;
}

int cmd_graph(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json", "dot", "text"});
    const Input in = load_input(config);
    const LElement& x = require_x(in);
    const DualGraph g = dual_graph(in.params, x);
    const bool minimal = is_minimal(in.params, x);
    const std::vector<SpecialAssignment> sp = minimal ? specials(in.params, x) : std::vector<SpecialAssignment>{};
    if (config.format == "dot") {
        out << graph_to_dot(g, sp);
    } else if (config.format == "text") {
        out << shape_name(g.shape) << " center " << g.labels[0] << "\n";
        for (const Arm& arm : g.arms) {
            out << "arm " << arm.index + 1 << ":";
            for (int v : arm.vertices) out << " " << g.labels[v];
            out << "\n";
        }
        out << "minimal: " << (minimal ? "yes" : "no") << "\n";
    } else {
        out << Json{{"graph", to_json(g)}, {"specials", to_json(sp)}, {"minimal", minimal}}.dump() << "\n";
    }
    return 0;
}

int cmd_specials(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json", "text"});
    const Input in = load_input(config);
    const auto sp = specials(in.params, require_x(in));
    if (config.format == "text") {
        for (const auto& s : sp)
            out << s.label.display() << " " << (s.vertex >= 0 ? std::to_string(s.vertex) : "-") << "\n";
    } else {
        out << to_json(sp).dump() << "\n";
    }
    return 0;
}

int cmd_quiver(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json", "dot"});
    const Input in = load_input(config);
    const LElement& x = require_x(in);
    const QuiverData q = quiver_from_intersection(dual_graph(in.params, x), specials(in.params, x));
    if (config.format == "dot") {
        out << quiver_to_dot(q);
        return 0;
    }
    Json j = to_json(q);
    if (!q.degenerate) j["combinatorial_agrees"] = quiver_combinatorial(in.params, x).same_counts(q);
    const CanonicalAlgebraDesc d = degree_zero_canonical(in.params, x);
    Json dz = to_json(d);
    j["degree_zero"] = Json{{"q", dz["q"]}, {"mu", dz["mu"]}, {"relations", dz["relations"]}};
    out << j.dump() << "\n";
    return 0;
}

int cmd_wahl(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json"});
    const Input in = load_input(config);
    if (config.max_degree < 0) throw ParseError("--max-degree must be non-negative");
    Json j = to_json(wahl_generators(in.params));
    Json ideals = Json::array();
    for (const auto& [label, ideal] : wahl_special_ideals(in.params))
        ideals.push_back(Json{{"module", label.display()}, {"ideal", ideal}});
    j["special_ideals"] = ideals;
    j["quiver"] = to_json(wahl_relations(in.params));
    const WahlReport report = wahl_verify(in.params, config.max_degree);
    j["verify"] = to_json(report);
    out << j.dump() << "\n";
    return report.ok ? 0 : 1;
}

int cmd_domestic(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json"});
    if (!config.m) throw ParseError("domestic needs --m");
    const Input in = load_input(config);
    const DomesticInfo d = domestic_classify(in.params, *config.m);
    out << Json{{"group", d.label()}, {"h", d.h}, {"pi_index", d.index}}.dump() << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
    check_format(config, {"json"});
    if (config.r_max < 2 || config.samples < 0 || config.l_max < 1) throw ParseError("sweep bounds must be positive");
    const auto checks = run_sweep(SweepConfig{config.r_max, config.samples, config.l_max, config.seed});
    Json list = Json::array();
    bool ok = true;
    std::optional<std::string> first;
    for (const auto& c : checks) {
        list.push_back(Json{{"name", c.name}, {"cases", c.cases}, {"disagreements", c.disagreements}});
        if (c.disagreements > 0) {
            ok = false;
            if (!first) first = c.name + ": " + *c.first_counterexample;
        }
    }
    Json j{{"seed", config.seed}, {"checks", list}, {"ok", ok}};
    if (first) j["first_counterexample"] = *first;
    out << j.dump() << "\n";
    return ok ? 0 : 3;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
    try {
        if (config.command == "iseries") return cmd_iseries(config, out);
        if (config.command == "graph") return cmd_graph(config, out);
        if (config.command == "specials") return cmd_specials(config, out);
        if (config.command == "quiver") return cmd_quiver(config, out);
        if (config.command == "wahl") return cmd_wahl(config, out);
        if (config.command == "domestic") return cmd_domestic(config, out);
        if (config.command == "sweep") return cmd_sweep(config, out);
        throw ParseError("unknown command '" + config.command + "'");
    } catch (const ParseError& e) {
        out << Json{{"code", "parse_error"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        out << Json{{"code", std::string(code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << Json{{"code", "internal_error"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of Veronese subrings of weighted projective line coordinate rings"};
    app.require_subcommand(1);
    RunConfig config;
    std::string p, lambda, x, input, json_text;
    long long c = 0;
    int m = 0;

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"iseries", "HJ expansion, i-series and I(r,a) of r/a"},
        {"graph", "dual graph of the resolution"},
        {"specials", "special CM modules with vertex assignment"},
        {"quiver", "reconstruction algebra quiver and relation counts"},
        {"wahl", "0-Wahl presentation, special ideals, relations and verification"},
        {"domestic", "domestic (T/O/I) classification"},
        {"sweep", "oracle cross-checks over bounded grids"},
    };
    std::vector<CLI::App*> subs;
    std::map<std::string, std::vector<CLI::Option*>> opts;
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        subs.push_back(sub);
        auto& o = opts[s.name];
        if (std::string(s.name) == "iseries") {
            sub->add_option("values", config.positional, "r a")->expected(2)->required();
        } else if (std::string(s.name) != "sweep") {
            o.push_back(sub->add_option("--p", p, "weights, e.g. 3,5,5"));
            o.push_back(sub->add_option("--lambda", lambda, "points u:w, e.g. 1:0,0:1,1:1"));
            o.push_back(sub->add_option("--x", x, "arm coefficients of x, e.g. 2,2,3"));
            o.push_back(sub->add_option("--c", c, "c-coefficient of x"));
            o.push_back(sub->add_option("--input", input, "JSON file with params and x"));
            o.push_back(sub->add_option("--json", json_text, "inline JSON with params and x"));
        }
        sub->add_option("--format", config.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--lmax", config.l_max, "speciality oracle bound");
        sub->add_option("--seed", config.seed, "sweep seed");
        sub->add_option("--max-degree", config.max_degree, "Wahl verification bound");
        if (std::string(s.name) == "domestic") o.push_back(sub->add_option("--m", m, "m >= 3"));
        if (std::string(s.name) == "sweep") {
            sub->add_option("--r-max", config.r_max, "largest r in the HJ triangle");
            sub->add_option("--samples", config.samples, "random inputs per check");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    for (CLI::App* sub : subs) {
        if (!sub->parsed()) continue;
        config.command = sub->get_name();
        for (CLI::Option* opt : opts[config.command]) {
            if (opt->count() == 0) continue;
            const std::string name = opt->get_name();
            if (name == "--p") config.p = p;
            else if (name == "--lambda") config.lambda = lambda;
            else if (name == "--x") config.x = x;
            else if (name == "--c") config.c = c;
            else if (name == "--input") config.input_path = input;
            else if (name == "--json") config.inline_json = json_text;
            else if (name == "--m") config.m = m;
        }
    }
    if (const char* env = std::getenv("STARRES_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            config.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            out << Json{{"code", "parse_error"}, {"message", "STARRES_SEED is not an unsigned integer"}}.dump() << "\n";
            return 2;
        }
    }
    return run(config, out);
}

}  // namespace starres
