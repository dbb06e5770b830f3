#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sforge/int_matrix.hpp"
#include "sforge/validation.hpp"

namespace sforge {

/* Nonnegative integer combination of ring basis elements. */
struct RingElement {
    std::vector<std::int64_t> coeffs;

    bool is_zero() const {
        for (auto c : coeffs)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

/*
 * Based ring with nonnegative structure constants, a distinguished unit
 * basis element and a duality involution on the basis.  n(i,j,k) is the
 * multiplicity of basis k in the product (basis i)*(basis j).
 */
class FusionRing {
public:
    /* Empty placeholder; meaningful rings come from the checked constructor. */
    FusionRing() = default;

    FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
               std::vector<std::int64_t> n_flat);

    int rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    int unit() const { return unit_; }
    int dual(int i) const { return dual_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& dual_map() const { return dual_; }

    std::int64_t n(int i, int j, int k) const {
        return n_[(static_cast<std::size_t>(i) * rank_ + j) * rank_ + k];
    }
    const std::vector<std::int64_t>& n_flat() const { return n_; }

    /* (M_i)_{ab} = n(i,a,b); its largest real eigenvalue is the FP dimension. */
    IntMatrix left_mult_matrix(int i) const;

    /* Column b holds the basis expansion of (basis i)*(basis b): (A_i)_{ab} = n(i,b,a). */
    IntMatrix regular_action_matrix(int i) const;

    RingElement zero() const { return {std::vector<std::int64_t>(rank_, 0)}; }
    RingElement basis_element(int i) const {
        RingElement e = zero();
        e.coeffs[static_cast<std::size_t>(i)] = 1;
        return e;
    }

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    int rank_ = 0;
    std::vector<std::string> labels_;
    int unit_ = 0;
    std::vector<int> dual_;
    std::vector<std::int64_t> n_;
};

/* Checks unit, associativity and duality axioms; one violation per witness. */
ValidationReport validate_ring(const FusionRing& ring);

RingElement multiply(const FusionRing& ring, const RingElement& a, const RingElement& b);

/* Involution extended linearly to arbitrary elements. */
RingElement dual_element(const FusionRing& ring, const RingElement& a);

double fpdim_basis(const FusionRing& ring, int i);
double fpdim(const FusionRing& ring, const RingElement& a);

/* "k0 + 2*k1" style rendering for reports. */
std::string format_element(const FusionRing& ring, const RingElement& a);

/*
 * Largest real eigenvalue of a nonnegative integer matrix.  Power iteration
 * with a Rayleigh-quotient convergence check; if the iteration stalls (equal
 * modulus eigenvalues), brackets the largest characteristic root by bisection
 * on the sign of the leading principal minors of lambda*I - M.
 */
double spectral_radius(const IntMatrix& m);

}
