#include "sforge/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sforge {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, int unit,
                         std::vector<std::vector<int>> mult)
    : order_(static_cast<int>(elements.size())),
      elements_(std::move(elements)),
      unit_(unit),
      mult_(std::move(mult)) {
    if (order_ == 0) throw ShapeError("elements: must be nonempty");
    if (unit_ < 0 || unit_ >= order_) throw ShapeError("unit: index out of range");
    if (static_cast<int>(mult_.size()) != order_)
        throw ShapeError("mult: must have one row per element");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != order_)
            throw ShapeError("mult: every row must have one entry per element");
        for (int v : row)
            if (v < 0 || v >= order_) throw ShapeError("mult: entry out of range");
    }
    inverse_.assign(static_cast<std::size_t>(order_), -1);
    for (int g = 0; g < order_; ++g)
        for (int h = 0; h < order_; ++h)
            if (mult_[g][h] == unit_ && mult_[h][g] == unit_) {
                inverse_[static_cast<std::size_t>(g)] = h;
                break;
            }
}

ValidationReport validate_group(const FiniteGroup& g) {
    ValidationReport rep;
    const int n = g.order();
    const int e = g.unit();
    for (int x = 0; x < n; ++x) {
        if (g.mult(e, x) != x) rep.add("unit", {e, x}, "unit*x must equal x");
        if (g.mult(x, e) != x) rep.add("unit", {x, e}, "x*unit must equal x");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
                    rep.add("associativity", {a, b, c}, "(a*b)*c must equal a*(b*c)");
    for (int x = 0; x < n; ++x)
        if (g.inverse(x) < 0) rep.add("inverse", {x}, "no two-sided inverse");
    return rep;
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.mult(a, b) != g.mult(b, a)) return false;
    return true;
}

FusionRing group_ring(const FiniteGroup& g) {
    const auto rep = validate_group(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw DataError("group axioms violated: " + v.axiom + " (" + v.detail + ")");
    }
    const int n = g.order();
    std::vector<std::int64_t> nf(static_cast<std::size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            nf[(static_cast<std::size_t>(a) * n + b) * n + g.mult(a, b)] = 1;
    std::vector<int> dual(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) dual[static_cast<std::size_t>(a)] = g.inverse(a);
    return FusionRing(g.elements(), g.unit(), std::move(dual), std::move(nf));
}

std::optional<FiniteGroup> group_from_pointed_ring(const FusionRing& ring) {
    const int r = ring.rank();
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(r),
                                       std::vector<int>(static_cast<std::size_t>(r), -1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int hit = -1;
            for (int k = 0; k < r; ++k) {
                const auto c = ring.n(i, j, k);
                if (c == 0) continue;
                if (c != 1 || hit >= 0) return std::nullopt;
                hit = k;
            }
            if (hit < 0) return std::nullopt;
            mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = hit;
        }
    FiniteGroup g(ring.labels(), ring.unit(), std::move(mult));
    if (!validate_group(g).ok()) return std::nullopt;
    return g;
}

namespace {

std::vector<int> close_under_mult(const FiniteGroup& g, std::set<int> gens) {
    std::set<int> h = {g.unit()};
    for (int x : gens) h.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(h.begin(), h.end());
        for (int a : cur)
            for (int b : cur) {
                if (h.insert(g.mult(a, b)).second) grew = true;
            }
    }
    return {h.begin(), h.end()};
}

int element_order(const FiniteGroup& g, int x) {
    int acc = x, ord = 1;
    while (acc != g.unit()) {
        acc = g.mult(acc, x);
        ++ord;
    }
    return ord;
}

/* x^k by repeated multiplication; k >= 0. */
int element_power(const FiniteGroup& g, int x, std::int64_t k) {
    int acc = g.unit();
    for (std::int64_t i = 0; i < k; ++i) acc = g.mult(acc, x);
    return acc;
}

}

std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert(close_under_mult(g, {}));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (const auto& h : cur) {
            const std::set<int> members(h.begin(), h.end());
            for (int x = 0; x < g.order(); ++x) {
                if (members.count(x)) continue;
                std::set<int> gens = members;
                gens.insert(x);
                if (found.insert(close_under_mult(g, std::move(gens))).second) grew = true;
            }
        }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::int64_t> abelian_invariant_factors(const FiniteGroup& g,
                                                    const std::vector<int>& subgroup_elements) {
    /*
     * Per prime p: the counts c_j of Sylow-p elements killed by p^j determine
     * the conjugate of the type partition (a_1 >= a_2 >= ...); the invariant
     * factors multiply the i-th largest parts across primes.
     */
    const auto n = static_cast<std::int64_t>(subgroup_elements.size());
    if (n == 1) return {};

    std::vector<std::int64_t> primes;
    {
        std::int64_t m = n;
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
    }

    std::map<std::int64_t, std::vector<int>> parts_by_prime;
    for (const auto p : primes) {
        std::vector<int> sylow;
        for (int x : subgroup_elements) {
            int ord = element_order(g, x);
            bool p_power = true;
            while (ord > 1) {
                if (ord % p != 0) {
                    p_power = false;
                    break;
                }
                ord = static_cast<int>(ord / p);
            }
            if (p_power) sylow.push_back(x);
        }
        std::vector<int> conjugate;
        std::int64_t prev = 1, pj = p;
        while (true) {
            std::int64_t cj = 0;
            for (int x : sylow)
                if (element_power(g, x, pj) == g.unit()) ++cj;
            if (cj == prev) break;
            int mj = 0;
            std::int64_t ratio = cj / prev;
            while (ratio > 1) {
                ratio /= p;
                ++mj;
            }
            conjugate.push_back(mj);
            prev = cj;
            pj *= p;
        }
        /* a_i = #{j : conjugate_j >= i} */
        std::vector<int> parts;
        const int max_part = conjugate.empty() ? 0 : *std::max_element(conjugate.begin(), conjugate.end());
        for (int i = 1; i <= max_part; ++i) {
            int ai = 0;
            for (std::size_t j = 0; j < conjugate.size(); ++j)
                if (conjugate[j] >= i) ++ai;
            parts.push_back(ai);
        }
        std::sort(parts.rbegin(), parts.rend());
        parts_by_prime[p] = parts;
    }

    std::size_t t = 0;
    for (const auto& [p, parts] : parts_by_prime) t = std::max(t, parts.size());
    std::vector<std::int64_t> factors;
    for (std::size_t i = 0; i < t; ++i) {
        std::int64_t d = 1;
        for (const auto& [p, parts] : parts_by_prime)
            if (i < parts.size())
                for (int rep = 0; rep < parts[i]; ++rep) d *= p;
        factors.push_back(d);
    }
    std::reverse(factors.begin(), factors.end());  /* d_1 | d_2 | ... | d_t */
    return factors;
}

std::int64_t schur_multiplier_order(const std::vector<std::int64_t>& invariant_factors) {
    std::int64_t order = 1;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        for (std::size_t j = i + 1; j < invariant_factors.size(); ++j)
            order *= std::gcd(invariant_factors[i], invariant_factors[j]);
    return order;
}

std::vector<PointedModuleDatum> pointed_module_data(const FiniteGroup& g) {
    const auto rep = validate_group(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw DataError("group axioms violated: " + v.axiom + " (" + v.detail + ")");
    }
    if (!is_abelian(g))
        throw DataError("unsupported input: cocycle-class counting requires an abelian group");
    std::vector<PointedModuleDatum> out;
    for (auto& h : subgroups(g)) {
        PointedModuleDatum d;
        d.invariant_factors = abelian_invariant_factors(g, h);
        d.h2_order = schur_multiplier_order(d.invariant_factors);
        d.subgroup = std::move(h);
        out.push_back(std::move(d));
    }
    return out;
}

}
