#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sforge/equivariant.hpp"
#include "sforge/species.hpp"
#include "sforge/validation.hpp"

namespace sforge {

struct QuiverArrow {
    int from = 0;
    int to = 0;
    std::int64_t mult = 1;

    friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

/* Directed graph with arrow multiplicities; one entry per ordered pair. */
struct OrdinaryQuiver {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;

    friend bool operator==(const OrdinaryQuiver&, const OrdinaryQuiver&) = default;
};

std::string to_dot(const OrdinaryQuiver& q, const std::string& name = "g");

/* Collapses parallel arrows of a multigraph into multiplicities. */
OrdinaryQuiver quiver_of(const Quiver& q);

/*
 * Unfolds a quiver-species over any fusion ring: vertices are (vertex, ring
 * basis) pairs and the arrow multiplicity into (j, Y) from (i, X) is the
 * coefficient of Y in E(i,j) * X.
 */
OrdinaryQuiver unfold_quiver_species(const Species& s);

/*
 * Unfolds a species over a group ring whose vertex algebras are subgroup
 * indicators: vertices are (vertex, coset) pairs and the multiplicity from
 * (i, aH_i) to (j, bH_j) is the coefficient of a^{-1}b in E(i,j).  Arrow
 * coefficients must be constant on H_i-H_j double cosets.
 */
OrdinaryQuiver pointed_unfold(const Species& s);

/*
 * Multiplicity-preserving vertex bijection between two quivers, found by
 * backtracking over degree-compatible assignments.  The guard bounds the
 * vertex count of the search.
 */
std::optional<std::vector<int>> quiver_isomorphism(const OrdinaryQuiver& a,
                                                   const OrdinaryQuiver& b,
                                                   int vertex_guard = 12);

struct RoundTripReport {
    bool isomorphic = false;
    std::vector<int> witness;  /* original vertex index -> rebuilt vertex index */
    OrdinaryQuiver original;
    OrdinaryQuiver rebuilt;
};

/* species_of then pointed_unfold; compares against the starting quiver. */
RoundTripReport round_trip(const EquivariantQuiver& eq, int vertex_guard = 12);

}
