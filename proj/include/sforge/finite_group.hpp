#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sforge/fusion_ring.hpp"
#include "sforge/validation.hpp"

namespace sforge {

/* Finite group given by its full multiplication table: mult(g,h) = g*h. */
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> elements, int unit,
                std::vector<std::vector<int>> mult);

    int order() const { return order_; }
    int unit() const { return unit_; }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int g) const { return elements_[static_cast<std::size_t>(g)]; }
    int mult(int g, int h) const { return mult_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }

    /* -1 when no two-sided inverse exists (invalid table). */
    int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
    int order_ = 0;
    std::vector<std::string> elements_;
    int unit_ = 0;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inverse_;
};

/* Exhaustive unit, associativity and inverse checks. */
ValidationReport validate_group(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

/* Basis = group elements, products from the table, duals = inverses. */
FusionRing group_ring(const FiniteGroup& g);

/* Reconstructs the group when every basis product is a single basis element. */
std::optional<FiniteGroup> group_from_pointed_ring(const FusionRing& ring);

/* All subgroups as sorted element-index lists, ordered by size then lexicographically. */
std::vector<std::vector<int>> subgroups(const FiniteGroup& g);

/*
 * Invariant factors d1 | d2 | ... | dt of an abelian group, recovered from
 * element-order counts within each Sylow component.
 */
std::vector<std::int64_t> abelian_invariant_factors(const FiniteGroup& g,
                                                    const std::vector<int>& subgroup_elements);

/* |H^2(A, k*)| over algebraically closed k of characteristic 0: prod_{i<j} gcd(d_i, d_j). */
std::int64_t schur_multiplier_order(const std::vector<std::int64_t>& invariant_factors);

struct PointedModuleDatum {
    std::vector<int> subgroup;
    std::vector<std::int64_t> invariant_factors;
    std::int64_t h2_order = 1;
};

/* Per-subgroup cocycle class counts for an abelian group; throws DataError otherwise. */
std::vector<PointedModuleDatum> pointed_module_data(const FiniteGroup& g);

}
