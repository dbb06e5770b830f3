#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sforge/fusion_ring.hpp"
#include "sforge/int_matrix.hpp"
#include "sforge/validation.hpp"

namespace sforge {

/*
 * Module over a fusion ring with a distinguished basis and nonnegative
 * integer action matrices: column b of action(i) expands (basis i) |> b.
 */
class ZPlusModule {
public:
    ZPlusModule(FusionRing ring, std::vector<std::string> labels,
                std::vector<IntMatrix> action);

    const FusionRing& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
    const IntMatrix& action(int i) const { return action_[static_cast<std::size_t>(i)]; }
    const std::vector<IntMatrix>& actions() const { return action_; }

    friend bool operator==(const ZPlusModule&, const ZPlusModule&) = default;

private:
    FusionRing ring_;
    int rank_ = 0;
    std::vector<std::string> labels_;
    std::vector<IntMatrix> action_;
};

/* Unit-acts-as-identity, associativity and transpose-duality checks. */
ValidationReport validate_module(const ZPlusModule& m);

ZPlusModule regular_module(const FusionRing& ring);

/*
 * Connected components of the support graph (edge a-b when some action matrix
 * links them); canonical partition, classes and members ascending.
 */
std::vector<std::vector<int>> equivalence_classes(const ZPlusModule& m);

/*
 * Relabeling onto the regular module when one exists: witness[i] is the
 * module basis index carrying ring basis i.  Searches every base column whose
 * action columns are all standard basis vectors.
 */
std::optional<std::vector<int>> is_regular_iso(const ZPlusModule& m);

ZPlusModule restrict_to_basis(const ZPlusModule& m, const std::vector<int>& basis);

struct FreeSummand {
    std::vector<int> basis;   /* module basis indices of the summand */
    std::vector<int> witness; /* ring basis i -> position within `basis` */
};

/* Splits into regular summands, or nullopt when any class is not regular. */
std::optional<std::vector<FreeSummand>> decompose_free(const ZPlusModule& m);

/*
 * All irreducible modules with rank <= max_rank and entries <= max_entry, up
 * to basis relabeling, in a deterministic order.  Exhaustive search over
 * action-matrix tuples; the guard caps max_rank at 6 and max_entry at 4.
 */
std::vector<ZPlusModule> enumerate_irreducible(const FusionRing& ring, int max_rank,
                                               int max_entry, bool enforce_guard = true);

}
