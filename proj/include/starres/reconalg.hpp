#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starres/gradedring.hpp"
#include "starres/intersection.hpp"
#include "starres/lgroup.hpp"
#include "starres/resolution.hpp"

namespace starres {

// Vertex 0 is the extending vertex (R); vertex 1 + k is graph vertex k.
struct QuiverData {
    std::vector<std::string> vertices;
    std::vector<int> depth;  // -1 for R, 0 for the center, k for arm position k
    IntMatrix arrows;
    IntMatrix relations;
    bool degenerate = false;

    int size() const { return static_cast<int>(vertices.size()); }
    bool same_counts(const QuiverData& other) const;
};

// Counts from Z_f, Z_K and the pairing; labels name the vertices when given.
QuiverData quiver_from_intersection(const DualGraph& g,
                                    const std::vector<SpecialAssignment>& labels = {});
// Counts from the arm expansions alone (double quiver plus extra arrows); needs v >= 2.
QuiverData quiver_combinatorial(const Parameters& params, const LElement& x);

struct CanonicalAlgebraDesc {
    std::vector<int> q;
    std::vector<Point> mu;
    std::vector<int> arm_lengths;  // q_i - 1
    std::vector<std::string> relations;
};

CanonicalAlgebraDesc degree_zero_canonical(const Parameters& params, const LElement& x);

// c * u_index^1 * v^v_power; u_index = -1 for a pure power of v.
struct WahlWord {
    Rational coeff;
    int u_index = -1;
    int v_power = 0;
};

using WahlEntry = std::vector<WahlWord>;

std::string entry_string(const WahlEntry& e);

struct WahlPresentation {
    std::vector<Poly> u;  // u_1 .. u_n
    Poly v;
    std::vector<std::string> u_formulas;
    std::string v_formula;
    std::vector<int> u_degrees;  // multiples of s
    int v_degree = 1;
    std::vector<std::vector<WahlEntry>> matrix;  // 2 x n
};

WahlPresentation wahl_generators(const Parameters& params);

struct DegreeCheck {
    int N = 0;
    int span_dim = 0;
    int expected = 0;
};

struct WahlReport {
    bool ok = true;
    std::vector<std::string> minor_failures;  // "cols i,j: <residual>"
    std::vector<DegreeCheck> degrees;
    int minors_checked = 0;
};

WahlReport wahl_verify(const Parameters& params, int max_degree);

std::vector<std::pair<ModuleLabel, std::string>> wahl_special_ideals(const Parameters& params);

struct LabelledArrow {
    int from = 0;
    int to = 0;
    std::string label;
    bool black = true;
    LElement l_degree;
    int z_degree = 0;
};

struct RelationTerm {
    Rational coeff;
    std::vector<int> path;  // arrow ids, composed left to right
};

struct QuiverRelation {
    std::string kind;  // "canonical" or "two-cycle"
    std::vector<RelationTerm> terms;
    std::string text;
};

struct WahlQuiver {
    std::vector<std::string> vertices;  // R, S(c), then arms outward
    std::vector<LabelledArrow> arrows;
    std::vector<QuiverRelation> relations;
};

WahlQuiver wahl_relations(const Parameters& params);

// Terms compose, share endpoints, and carry equal L- and Z-degrees.
bool relation_is_homogeneous(const WahlQuiver& q, const QuiverRelation& r);

struct DomesticInfo {
    std::vector<int> triple;
    int m = 3;
    char group = 'T';
    int h = 6;
    int index = 7;  // h(m-2)+1, also the preprojective Veronese index

    std::string label() const;  // "O_13"
};

DomesticInfo domestic_classify(const Parameters& params, int m);

}  // namespace starres
