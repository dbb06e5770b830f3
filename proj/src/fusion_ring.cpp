#include "sforge/fusion_ring.hpp"

#include <cmath>
#include <sstream>

namespace sforge {

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       std::vector<std::int64_t> n_flat)
    : rank_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      unit_(unit),
      dual_(std::move(dual)),
      n_(std::move(n_flat)) {
    if (rank_ == 0) throw ShapeError("labels: must be nonempty");
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(j)])
                throw ShapeError("labels: must be distinct");
    if (unit_ < 0 || unit_ >= rank_) throw ShapeError("unit: index out of range");
    if (static_cast<int>(dual_.size()) != rank_)
        throw ShapeError("dual: length must equal rank");
    for (int i = 0; i < rank_; ++i)
        if (dual_[i] < 0 || dual_[i] >= rank_) throw ShapeError("dual: index out of range");
    const auto expected = static_cast<std::size_t>(rank_) * rank_ * rank_;
    if (n_.size() != expected)
        throw ShapeError("N: must be a rank x rank x rank array");
    for (auto v : n_)
        if (v < 0) throw ShapeError("N: entries must be nonnegative");
}

IntMatrix FusionRing::left_mult_matrix(int i) const {
    IntMatrix m(rank_, rank_);
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) m.at(a, b) = n(i, a, b);
    return m;
}

IntMatrix FusionRing::regular_action_matrix(int i) const {
    IntMatrix m(rank_, rank_);
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) m.at(a, b) = n(i, b, a);
    return m;
}

ValidationReport validate_ring(const FusionRing& ring) {
    ValidationReport rep;
    const int r = ring.rank();
    const int e = ring.unit();

    auto delta = [](int a, int b) -> std::int64_t { return a == b ? 1 : 0; };

    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            if (ring.n(e, j, k) != delta(j, k))
                rep.add("unit", {e, j, k}, "N[unit][j][k] must equal delta(j,k)");
            if (ring.n(j, e, k) != delta(j, k))
                rep.add("unit", {j, e, k}, "N[i][unit][k] must equal delta(i,k)");
        }

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += ring.n(i, j, m) * ring.n(m, k, l);
                        rhs += ring.n(j, k, m) * ring.n(i, m, l);
                    }
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "lhs=" << lhs << " rhs=" << rhs;
                        rep.add("associativity", {i, j, k, l}, os.str());
                    }
                }

    for (int i = 0; i < r; ++i) {
        if (ring.dual(ring.dual(i)) != i)
            rep.add("duality", {i}, "dual is not an involution");
        for (int j = 0; j < r; ++j) {
            if (ring.n(i, j, e) != delta(j, ring.dual(i)))
                rep.add("duality", {i, j}, "N[i][j][unit] must equal delta(j,dual(i))");
            for (int k = 0; k < r; ++k)
                if (ring.n(i, j, k) != ring.n(ring.dual(j), ring.dual(i), ring.dual(k)))
                    rep.add("duality", {i, j, k},
                            "N[i][j][k] must equal N[dual(j)][dual(i)][dual(k)]");
        }
    }

    return rep;
}

RingElement multiply(const FusionRing& ring, const RingElement& a, const RingElement& b) {
    const int r = ring.rank();
    if (static_cast<int>(a.coeffs.size()) != r)
        throw ShapeError("element a: length must equal rank");
    if (static_cast<int>(b.coeffs.size()) != r)
        throw ShapeError("element b: length must equal rank");
    RingElement out = ring.zero();
    for (int i = 0; i < r; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < r; ++j) {
            if (b.coeffs[j] == 0) continue;
            const std::int64_t c = a.coeffs[i] * b.coeffs[j];
            for (int k = 0; k < r; ++k) out.coeffs[k] += c * ring.n(i, j, k);
        }
    }
    return out;
}

RingElement dual_element(const FusionRing& ring, const RingElement& a) {
    const int r = ring.rank();
    if (static_cast<int>(a.coeffs.size()) != r)
        throw ShapeError("element: length must equal rank");
    RingElement out = ring.zero();
    for (int i = 0; i < r; ++i) out.coeffs[ring.dual(i)] = a.coeffs[i];
    return out;
}

namespace {

/*
 * True when every leading principal minor of lambda*I - M is positive, which
 * for nonnegative M holds exactly when lambda exceeds the spectral radius.
 * Gaussian elimination without pivoting; the pivots are the minor ratios.
 */
bool spectral_radius_below(const IntMatrix& m, double lambda) {
    const int n = m.rows();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] =
                (i == j ? lambda : 0.0) - static_cast<double>(m.at(i, j));
    for (int k = 0; k < n; ++k) {
        const double pivot = a[static_cast<std::size_t>(k) * n + k];
        if (!(pivot > 0.0)) return false;
        for (int i = k + 1; i < n; ++i) {
            const double f = a[static_cast<std::size_t>(i) * n + k] / pivot;
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] -=
                    f * a[static_cast<std::size_t>(k) * n + j];
        }
    }
    return true;
}

}

double spectral_radius(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 0.0;

    std::vector<double> v(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(static_cast<std::size_t>(n));
    const int max_iter = 5000;
    for (int it = 0; it < max_iter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += static_cast<double>(m.at(i, j)) * v[j];
            w[i] = s;
        }
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += v[i] * w[i];
        double res = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = w[i] - lambda * v[i];
            res += d * d;
            norm += w[i] * w[i];
        }
        if (std::sqrt(res) <= 1e-13 * std::max(1.0, std::abs(lambda))) return lambda;
        norm = std::sqrt(norm);
        if (norm < 1e-300) break;
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    }

    /* Stalled: bracket the largest characteristic root instead. */
    double hi = 1.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += static_cast<double>(m.at(i, j));
        hi = std::max(hi, row + 1.0);
    }
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (spectral_radius_below(m, mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double fpdim_basis(const FusionRing& ring, int i) {
    return spectral_radius(ring.left_mult_matrix(i));
}

double fpdim(const FusionRing& ring, const RingElement& a) {
    const int r = ring.rank();
    if (static_cast<int>(a.coeffs.size()) != r)
        throw ShapeError("element: length must equal rank");
    double s = 0.0;
    for (int i = 0; i < r; ++i)
        if (a.coeffs[i] != 0) s += static_cast<double>(a.coeffs[i]) * fpdim_basis(ring, i);
    return s;
}

std::string format_element(const FusionRing& ring, const RingElement& a) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ring.rank(); ++i) {
        const auto c = a.coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        if (c != 1) os << c << "*";
        os << ring.label(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}
