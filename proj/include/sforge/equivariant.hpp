#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sforge/finite_group.hpp"
#include "sforge/species.hpp"
#include "sforge/validation.hpp"
#include "sforge/zplus_module.hpp"

namespace sforge {

/* Directed multigraph: parallel arrows are distinct entries. */
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

/*
 * Finite group acting on a quiver: per group element, a vertex permutation
 * and an arrow permutation that transports endpoints accordingly.
 */
struct EquivariantQuiver {
    FiniteGroup group;
    Quiver quiver;
    std::vector<std::vector<int>> vertex_action;  /* vertex_action[g][v] = g.v */
    std::vector<std::vector<int>> arrow_action;   /* arrow_action[g][a] = g.a */

    friend bool operator==(const EquivariantQuiver&, const EquivariantQuiver&) = default;
};

/* Multiplicity vector over the group ring of the acting group. */
using GradedObject = RingElement;

/* Group axioms, permutation well-formedness, homomorphism and compatibility. */
ValidationReport validate_equivariant(const EquivariantQuiver& eq);

struct Orbits {
    std::vector<std::vector<int>> classes;  /* sorted members, sorted by representative */
    std::vector<int> representatives;       /* smallest member of each class */
};

Orbits orbits(const EquivariantQuiver& eq);

struct InternalEnd {
    GradedObject object;         /* degree g multiplicity = [g.v == v] */
    std::vector<int> stabilizer; /* subgroup fixing v, ascending */
};

InternalEnd internal_end(const EquivariantQuiver& eq, int v);

/* Degree g multiplicity = number of arrows from g.u to v. */
GradedObject internal_ext(const EquivariantQuiver& eq, int u, int v);

/*
 * Species on orbit representatives over the group ring: vertex algebras from
 * internal_end (stabilizer recorded as the tag), arrow classes the duals of
 * internal_ext.
 */
Species species_of(const EquivariantQuiver& eq);

struct GraphCertificate {
    bool pass = true;
    long long pairs_checked = 0;
};

struct ModuleGraph {
    DirectedGraph graph;
    GraphCertificate certificate;
};

/*
 * Arrow [u] -> [v] when internal_ext of the representatives is nonzero.  The
 * certificate re-evaluates the predicate over every representative pair;
 * disagreement throws, since it indicates an action-compatibility bug.
 */
ModuleGraph directed_graph_of(const EquivariantQuiver& eq);

/* Permutation module over the group ring, basis the quiver vertices. */
ZPlusModule grothendieck_module(const EquivariantQuiver& eq);

/* Tag convention shared by species_of and the pointed unfolding. */
std::string format_subgroup_tag(const FiniteGroup& g, const std::vector<int>& subgroup,
                                const std::string& twist = "none");

struct ParsedTag {
    std::vector<int> subgroup;
    std::string twist;
};

/* Parses "subgroup:<names>;twist:<marker>"; unknown names raise DataError. */
ParsedTag parse_subgroup_tag(const FiniteGroup& g, const std::string& tag);

}
