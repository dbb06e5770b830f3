#include "sforge/zplus_module.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sforge {

ZPlusModule::ZPlusModule(FusionRing ring, std::vector<std::string> labels,
                         std::vector<IntMatrix> action)
    : ring_(std::move(ring)),
      rank_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      action_(std::move(action)) {
    if (rank_ == 0) throw ShapeError("labels: must be nonempty");
    if (static_cast<int>(action_.size()) != ring_.rank())
        throw ShapeError("action: must have one matrix per ring basis element");
    for (const auto& a : action_) {
        if (a.rows() != rank_ || a.cols() != rank_)
            throw ShapeError("action: matrices must be module-rank square");
        for (auto v : a.flat())
            if (v < 0) throw ShapeError("action: entries must be nonnegative");
    }
}

ValidationReport validate_module(const ZPlusModule& m) {
    ValidationReport rep;
    const auto& ring = m.ring();
    const int r = ring.rank();
    const int mr = m.rank();

    if (m.action(ring.unit()) != IntMatrix::identity(mr))
        rep.add("unit", {ring.unit()}, "unit action must be the identity matrix");

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            IntMatrix expected(mr, mr);
            for (int k = 0; k < r; ++k) add_scaled(expected, ring.n(i, j, k), m.action(k));
            if (m.action(i) * m.action(j) != expected)
                rep.add("associativity", {i, j},
                        "A_i * A_j must equal sum_k N[i][j][k] * A_k");
        }

    for (int i = 0; i < r; ++i)
        if (m.action(ring.dual(i)) != m.action(i).transposed())
            rep.add("duality", {i}, "A_dual(i) must equal transpose of A_i");

    return rep;
}

ZPlusModule regular_module(const FusionRing& ring) {
    std::vector<IntMatrix> action;
    action.reserve(static_cast<std::size_t>(ring.rank()));
    for (int i = 0; i < ring.rank(); ++i) action.push_back(ring.regular_action_matrix(i));
    return ZPlusModule(ring, ring.labels(), std::move(action));
}

std::vector<std::vector<int>> equivalence_classes(const ZPlusModule& m) {
    const int mr = m.rank();
    std::vector<int> parent(static_cast<std::size_t>(mr));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    for (const auto& a : m.actions())
        for (int i = 0; i < mr; ++i)
            for (int j = 0; j < mr; ++j)
                if (a.at(i, j) > 0) unite(i, j);

    std::vector<std::vector<int>> classes;
    std::vector<int> root_to_class(static_cast<std::size_t>(mr), -1);
    for (int v = 0; v < mr; ++v) {
        const int root = find(v);
        if (root_to_class[static_cast<std::size_t>(root)] < 0) {
            root_to_class[static_cast<std::size_t>(root)] = static_cast<int>(classes.size());
            classes.push_back({});
        }
        classes[static_cast<std::size_t>(root_to_class[static_cast<std::size_t>(root)])].push_back(v);
    }
    return classes;
}

std::optional<std::vector<int>> is_regular_iso(const ZPlusModule& m) {
    const auto& ring = m.ring();
    const int r = ring.rank();
    if (m.rank() != r) return std::nullopt;

    for (int base = 0; base < r; ++base) {
        std::vector<int> sigma(static_cast<std::size_t>(r), -1);
        bool feasible = true;
        for (int i = 0; i < r && feasible; ++i) {
            int hit = -1;
            for (int a = 0; a < r; ++a) {
                const auto v = m.action(i).at(a, base);
                if (v == 0) continue;
                if (v != 1 || hit >= 0) {
                    feasible = false;
                    break;
                }
                hit = a;
            }
            if (hit < 0) feasible = false;
            if (feasible) sigma[static_cast<std::size_t>(i)] = hit;
        }
        if (!feasible) continue;

        std::vector<char> used(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r && feasible; ++i) {
            const int s = sigma[static_cast<std::size_t>(i)];
            if (used[static_cast<std::size_t>(s)]) feasible = false;
            used[static_cast<std::size_t>(s)] = 1;
        }
        if (!feasible) continue;

        for (int i = 0; i < r && feasible; ++i)
            for (int a = 0; a < r && feasible; ++a)
                for (int b = 0; b < r; ++b)
                    if (m.action(i).at(sigma[static_cast<std::size_t>(a)],
                                       sigma[static_cast<std::size_t>(b)]) != ring.n(i, b, a)) {
                        feasible = false;
                        break;
                    }
        if (feasible) return sigma;
    }
    return std::nullopt;
}

ZPlusModule restrict_to_basis(const ZPlusModule& m, const std::vector<int>& basis) {
    const int mr = m.rank();
    std::vector<char> keep(static_cast<std::size_t>(mr), 0);
    for (int v : basis) {
        if (v < 0 || v >= mr) throw ShapeError("basis: index out of range");
        keep[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& a : m.actions())
        for (int i = 0; i < mr; ++i)
            for (int j = 0; j < mr; ++j)
                if (a.at(i, j) != 0 && keep[static_cast<std::size_t>(i)] != keep[static_cast<std::size_t>(j)])
                    throw DataError("basis subset is not closed under the ring action");

    const int sub = static_cast<int>(basis.size());
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(sub));
    for (int v : basis) labels.push_back(m.label(v));
    std::vector<IntMatrix> action;
    for (const auto& a : m.actions()) {
        IntMatrix s(sub, sub);
        for (int i = 0; i < sub; ++i)
            for (int j = 0; j < sub; ++j) s.at(i, j) = a.at(basis[static_cast<std::size_t>(i)],
                                                            basis[static_cast<std::size_t>(j)]);
        action.push_back(std::move(s));
    }
    return ZPlusModule(m.ring(), std::move(labels), std::move(action));
}

std::optional<std::vector<FreeSummand>> decompose_free(const ZPlusModule& m) {
    std::vector<FreeSummand> out;
    for (const auto& cls : equivalence_classes(m)) {
        const auto restricted = restrict_to_basis(m, cls);
        auto witness = is_regular_iso(restricted);
        if (!witness) return std::nullopt;
        out.push_back({cls, std::move(*witness)});
    }
    return out;
}

namespace {

/* Lexicographically minimal flattening over simultaneous basis permutations. */
std::vector<std::int64_t> canonical_key(const std::vector<IntMatrix>& mats, int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::int64_t> best;
    do {
        std::vector<std::int64_t> key;
        key.reserve(mats.size() * static_cast<std::size_t>(m) * m);
        for (const auto& a : mats)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    key.push_back(a.at(perm[static_cast<std::size_t>(i)],
                                       perm[static_cast<std::size_t>(j)]));
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct EnumSearch {
    const FusionRing& ring;
    int m = 0;
    int max_entry = 0;
    std::vector<int> reps;
    std::vector<IntMatrix> mats;
    std::vector<char> assigned;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::pair<std::vector<std::int64_t>, ZPlusModule>>* found = nullptr;

    bool pair_determined(int i, int j) const {
        if (!assigned[static_cast<std::size_t>(i)] || !assigned[static_cast<std::size_t>(j)])
            return false;
        for (int k = 0; k < ring.rank(); ++k)
            if (ring.n(i, j, k) != 0 && !assigned[static_cast<std::size_t>(k)]) return false;
        return true;
    }

    bool determined_pairs_hold() const {
        for (int i = 0; i < ring.rank(); ++i)
            for (int j = 0; j < ring.rank(); ++j) {
                if (!pair_determined(i, j)) continue;
                IntMatrix expected(m, m);
                for (int k = 0; k < ring.rank(); ++k)
                    add_scaled(expected, ring.n(i, j, k), mats[static_cast<std::size_t>(k)]);
                if (mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)] != expected)
                    return false;
            }
        return true;
    }

    void emit() {
        std::vector<std::string> labels;
        for (int v = 0; v < m; ++v) labels.push_back("b" + std::to_string(v));
        ZPlusModule mod(ring, std::move(labels), mats);
        if (!validate_module(mod).ok()) return;
        if (equivalence_classes(mod).size() != 1) return;
        auto key = canonical_key(mod.actions(), m);
        if (!seen.insert(key).second) return;
        found->emplace_back(std::move(key), std::move(mod));
    }

    /* Row/column sum-of-square caps from A_i * A_dual(i) = sum_k N(i,dual(i),k) A_k. */
    std::int64_t row_cap(int i) const {
        std::int64_t cap = 1;
        for (int k = 0; k < ring.rank(); ++k)
            if (k != ring.unit()) cap += ring.n(i, ring.dual(i), k) * max_entry;
        return cap;
    }
    std::int64_t col_cap(int i) const {
        std::int64_t cap = 1;
        for (int k = 0; k < ring.rank(); ++k)
            if (k != ring.unit()) cap += ring.n(ring.dual(i), i, k) * max_entry;
        return cap;
    }

    void fill_rep(std::size_t t) {
        if (t == reps.size()) {
            emit();
            return;
        }
        const int i = reps[t];
        const bool symmetric = ring.dual(i) == i;
        std::vector<std::pair<int, int>> cells;
        for (int a = 0; a < m; ++a)
            for (int b = symmetric ? a : 0; b < m; ++b) cells.emplace_back(a, b);

        IntMatrix mat(m, m);
        std::vector<std::int64_t> row_sq(static_cast<std::size_t>(m), 0);
        std::vector<std::int64_t> col_sq(static_cast<std::size_t>(m), 0);
        const std::int64_t rcap = row_cap(i), ccap = col_cap(i);

        auto dfs_cells = [&](auto&& self, std::size_t c) -> void {
            if (c == cells.size()) {
                mats[static_cast<std::size_t>(i)] = mat;
                assigned[static_cast<std::size_t>(i)] = 1;
                const int di = ring.dual(i);
                if (di != i) {
                    mats[static_cast<std::size_t>(di)] = mat.transposed();
                    assigned[static_cast<std::size_t>(di)] = 1;
                }
                if (determined_pairs_hold()) fill_rep(t + 1);
                assigned[static_cast<std::size_t>(i)] = 0;
                if (di != i) assigned[static_cast<std::size_t>(di)] = 0;
                return;
            }
            const auto [a, b] = cells[c];
            for (std::int64_t v = 0; v <= max_entry; ++v) {
                const std::int64_t sq = v * v;
                const std::int64_t mirrored = (symmetric && a != b) ? sq : 0;
                if (row_sq[static_cast<std::size_t>(a)] + sq > rcap) break;
                if (col_sq[static_cast<std::size_t>(b)] + sq > ccap) break;
                if (symmetric && a != b &&
                    (row_sq[static_cast<std::size_t>(b)] + mirrored > rcap ||
                     col_sq[static_cast<std::size_t>(a)] + mirrored > ccap))
                    break;
                mat.at(a, b) = v;
                row_sq[static_cast<std::size_t>(a)] += sq;
                col_sq[static_cast<std::size_t>(b)] += sq;
                if (symmetric && a != b) {
                    mat.at(b, a) = v;
                    row_sq[static_cast<std::size_t>(b)] += sq;
                    col_sq[static_cast<std::size_t>(a)] += sq;
                }
                self(self, c + 1);
                mat.at(a, b) = 0;
                row_sq[static_cast<std::size_t>(a)] -= sq;
                col_sq[static_cast<std::size_t>(b)] -= sq;
                if (symmetric && a != b) {
                    mat.at(b, a) = 0;
                    row_sq[static_cast<std::size_t>(b)] -= sq;
                    col_sq[static_cast<std::size_t>(a)] -= sq;
                }
            }
        };
        dfs_cells(dfs_cells, 0);
    }
};

}

std::vector<ZPlusModule> enumerate_irreducible(const FusionRing& ring, int max_rank,
                                               int max_entry, bool enforce_guard) {
    if (max_rank < 1) throw GuardError("enumeration guard: max_rank must be at least 1");
    if (max_entry < 1) throw GuardError("enumeration guard: max_entry must be at least 1");
    if (enforce_guard && (max_rank > 6 || max_entry > 4))
        throw GuardError(
            "enumeration guard: max_rank <= 6 and max_entry <= 4 (set SPECIES_FORGE_GUARDS=off "
            "to lift)");
    {
        const auto rep = validate_ring(ring);
        if (!rep.ok())
            throw DataError("ring axioms violated: " + rep.violations.front().axiom);
    }

    std::vector<std::pair<std::vector<std::int64_t>, ZPlusModule>> found;
    for (int m = 1; m <= max_rank; ++m) {
        EnumSearch search{ring, m, max_entry, {}, {}, {}, {}, &found};
        for (int i = 0; i < ring.rank(); ++i)
            if (i != ring.unit() && i <= ring.dual(i)) search.reps.push_back(i);
        search.mats.assign(static_cast<std::size_t>(ring.rank()), IntMatrix(m, m));
        search.assigned.assign(static_cast<std::size_t>(ring.rank()), 0);
        search.mats[static_cast<std::size_t>(ring.unit())] = IntMatrix::identity(m);
        search.assigned[static_cast<std::size_t>(ring.unit())] = 1;
        const std::size_t before = found.size();
        search.fill_rep(0);
        std::sort(found.begin() + static_cast<std::ptrdiff_t>(before), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    std::vector<ZPlusModule> out;
    out.reserve(found.size());
    for (auto& [key, mod] : found) out.push_back(std::move(mod));
    return out;
}

}
