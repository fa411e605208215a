#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starres/lgroup.hpp"

namespace starres {

enum class GraphShape { Point, Chain, Star };

std::string shape_name(GraphShape shape);

struct Arm {
    int index = 0;              // 0-based parameter index j; -1 when unknown
    std::vector<int> vertices;  // from the center outward
};

// Labelled star-shaped tree. Vertex 0 is the center (the head of a chain).
struct DualGraph {
    GraphShape shape = GraphShape::Point;
    std::vector<int> labels;  // self-intersection numbers
    std::vector<Arm> arms;
    std::optional<Parameters> params;
    std::optional<LElement> x;

    int size() const { return static_cast<int>(labels.size()); }
    int center() const { return 0; }
    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::vector<int>> adjacency() const;
    bool all_labels_at_most(int bound) const;

    bool operator==(const DualGraph& other) const;
};

struct ModuleLabel {
    enum class Kind { R, SC, Arm };
    Kind kind = Kind::R;
    int j = -1;  // 0-based arm index for Kind::Arm
    int u = 0;

    std::string display() const;  // "R", "S(c)", "S(x1)", "S(3x2)"
    bool operator==(const ModuleLabel&) const = default;
};

struct SpecialAssignment {
    ModuleLabel label;
    int vertex = -1;  // -1 for R
};

DualGraph dual_graph(const Parameters& params, const LElement& x);
bool is_minimal(const Parameters& params, const LElement& x);
DualGraph blow_down_chain(const DualGraph& g);

std::vector<SpecialAssignment> specials(const Parameters& params, const LElement& x);

struct OracleResult {
    bool special = true;
    std::optional<int> witness;  // first failing l
};

// Bounded check of the speciality equation for S(y)^x over l in [1, l_max].
OracleResult speciality_oracle(const Parameters& params, const LElement& x, const LElement& y,
                               int l_max = 8);

}  // namespace starres
