#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sforge/fusion_ring.hpp"
#include "sforge/validation.hpp"

namespace sforge {

/* Simple directed graph: at most one arrow per ordered vertex pair. */
struct DirectedGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
};

std::string to_dot(const DirectedGraph& g, const std::string& name = "g");

struct SpeciesVertex {
    std::string label;
    RingElement algebra_class;       /* class of the vertex division algebra */
    std::optional<std::string> tag;  /* free-form descriptor, e.g. a subgroup */

    friend bool operator==(const SpeciesVertex&, const SpeciesVertex&) = default;
};

struct SpeciesArrow {
    int from = 0;
    int to = 0;
    RingElement cls;

    friend bool operator==(const SpeciesArrow&, const SpeciesArrow&) = default;
};

/*
 * Finite set of vertices carrying division-algebra classes over a common
 * fusion ring, with at most one class-labelled arrow per ordered pair.
 */
struct Species {
    FusionRing ring;
    std::vector<SpeciesVertex> vertices;
    std::vector<SpeciesArrow> arrows;

    friend bool operator==(const Species&, const Species&) = default;
};

struct SpeciesReport {
    ValidationReport report;
    bool is_quiver = false;
};

SpeciesReport validate_species(const Species& s);

/* True when every vertex algebra class is exactly the unit basis element. */
bool is_quiver(const Species& s);

DirectedGraph underlying_graph(const Species& s);

struct AcyclicityResult {
    bool acyclic = true;
    std::vector<int> cycle;  /* witness vertex sequence, first == last, when cyclic */
};

AcyclicityResult is_acyclic(const Species& s);

struct GradedEntry {
    std::vector<int> vertices;        /* path as a vertex sequence */
    std::optional<RingElement> cls;   /* exact class; present for quivers */
    double fpdim = 0.0;
};

struct GradedComponent {
    int degree = 0;
    std::vector<GradedEntry> entries;
};

/*
 * Degree-k piece of the tensor path algebra.  Degree 0 lists one entry per
 * vertex with its algebra class.  Path classes compose right-to-left: the
 * class of i1 -> i2 -> ... -> in is E(i_{n-1},i_n) * ... * E(i1,i2).  In the
 * non-quiver case the fpdim divides out the interior vertex algebras.
 */
GradedComponent graded_component(const Species& s, int degree,
                                 long long path_guard = 1'000'000);

/* Total path count at the given degree, saturating instead of overflowing. */
long long path_count(const Species& s, int degree);

struct TotalClass {
    std::optional<RingElement> cls;  /* exact total; present for quivers */
    double fpdim = 0.0;
};

/* Sum of all graded pieces; requires an acyclic species. */
TotalClass total_class(const Species& s, long long path_guard = 1'000'000);

/* Weakly connected components, vertices renumbered, deterministic order. */
std::vector<Species> connected_components(const Species& s);

struct HereditaryReport {
    bool acyclic = true;
    std::string verdict;
    std::vector<int> cycle;
};

HereditaryReport hereditary_report(const Species& s);

}
