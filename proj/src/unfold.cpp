#include "sforge/unfold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sforge {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void require_valid_species(const Species& s) {
    const auto rep = validate_species(s);
    if (!rep.report.ok()) {
        const auto& v = rep.report.violations.front();
        throw DataError("species invalid: " + v.axiom + " (" + v.detail + ")");
    }
}

/* Indicator subgroup of a class: indices with coefficient 1, all others 0. */
std::vector<int> subgroup_of_class(const RingElement& cls) {
    std::vector<int> members;
    for (std::size_t i = 0; i < cls.coeffs.size(); ++i) {
        if (cls.coeffs[i] == 0) continue;
        if (cls.coeffs[i] != 1) return {};
        members.push_back(static_cast<int>(i));
    }
    return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    if (members.empty()) return false;
    const std::set<int> set(members.begin(), members.end());
    if (!set.count(g.unit())) return false;
    for (int a : members) {
        if (!set.count(g.inverse(a))) return false;
        for (int b : members)
            if (!set.count(g.mult(a, b))) return false;
    }
    return true;
}

}

std::string to_dot(const OrdinaryQuiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (const auto& v : q.vertices) os << "  \"" << dot_escape(v) << "\";\n";
    for (const auto& a : q.arrows)
        os << "  \"" << dot_escape(q.vertices[static_cast<std::size_t>(a.from)]) << "\" -> \""
           << dot_escape(q.vertices[static_cast<std::size_t>(a.to)]) << "\" [label=\"" << a.mult
           << "\"];\n";
    os << "}\n";
    return os.str();
}

OrdinaryQuiver quiver_of(const Quiver& q) {
    OrdinaryQuiver out;
    out.vertices = q.vertices;
    std::map<std::pair<int, int>, std::int64_t> mult;
    for (const auto& [from, to] : q.arrows) ++mult[{from, to}];
    for (const auto& [pair, m] : mult) out.arrows.push_back({pair.first, pair.second, m});
    return out;
}

OrdinaryQuiver unfold_quiver_species(const Species& s) {
    require_valid_species(s);
    if (!is_quiver(s))
        throw DataError(
            "unfolding by ring basis requires a quiver species (all vertex algebras the unit); "
            "species over a pointed ring unfold by cosets instead");

    const int r = s.ring.rank();
    OrdinaryQuiver out;
    for (const auto& v : s.vertices)
        for (int x = 0; x < r; ++x)
            out.vertices.push_back("(" + v.label + "," + s.ring.label(x) + ")");

    auto arrows = s.arrows;
    std::sort(arrows.begin(), arrows.end(),
              [](const SpeciesArrow& a, const SpeciesArrow& b) {
                  return std::pair(a.from, a.to) < std::pair(b.from, b.to);
              });
    for (const auto& arrow : arrows)
        for (int x = 0; x < r; ++x) {
            const auto product = multiply(s.ring, arrow.cls, s.ring.basis_element(x));
            for (int y = 0; y < r; ++y) {
                const auto m = product.coeffs[static_cast<std::size_t>(y)];
                if (m > 0)
                    out.arrows.push_back({arrow.from * r + x, arrow.to * r + y, m});
            }
        }
    std::sort(out.arrows.begin(), out.arrows.end(), [](const QuiverArrow& a, const QuiverArrow& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    return out;
}

OrdinaryQuiver pointed_unfold(const Species& s) {
    require_valid_species(s);
    const auto group = group_from_pointed_ring(s.ring);
    if (!group)
        throw DataError("coset unfolding requires a group ring (every basis product a basis element)");

    const int n = static_cast<int>(s.vertices.size());
    std::vector<std::vector<int>> subgroup(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& vertex = s.vertices[static_cast<std::size_t>(i)];
        auto members = subgroup_of_class(vertex.algebra_class);
        if (vertex.tag) {
            const auto parsed = parse_subgroup_tag(*group, *vertex.tag);
            if (parsed.twist != "none")
                throw DataError("twisted vertex algebra is unsupported: vertex " +
                                vertex.label + " has twist \"" + parsed.twist + "\"");
            if (parsed.subgroup != members)
                throw DataError("tag subgroup disagrees with the vertex algebra class: vertex " +
                                vertex.label);
        }
        if (!is_subgroup(*group, members))
            throw DataError("vertex algebra class is not a subgroup indicator: vertex " +
                            vertex.label);
        subgroup[static_cast<std::size_t>(i)] = std::move(members);
    }

    /* Left cosets a*H_i, one representative each (the smallest member). */
    std::vector<std::vector<int>> coset_reps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::set<int> seen;
        for (int a = 0; a < group->order(); ++a) {
            if (seen.count(a)) continue;
            int rep = a;
            for (int h : subgroup[static_cast<std::size_t>(i)]) {
                const int member = group->mult(a, h);
                seen.insert(member);
                rep = std::min(rep, member);
            }
            coset_reps[static_cast<std::size_t>(i)].push_back(rep);
        }
        std::sort(coset_reps[static_cast<std::size_t>(i)].begin(),
                  coset_reps[static_cast<std::size_t>(i)].end());
    }

    OrdinaryQuiver out;
    std::vector<int> vertex_base(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        vertex_base[static_cast<std::size_t>(i)] = static_cast<int>(out.vertices.size());
        for (int rep : coset_reps[static_cast<std::size_t>(i)])
            out.vertices.push_back("(" + s.vertices[static_cast<std::size_t>(i)].label + "," +
                                   group->element(rep) + ")");
    }

    auto arrows = s.arrows;
    std::sort(arrows.begin(), arrows.end(),
              [](const SpeciesArrow& a, const SpeciesArrow& b) {
                  return std::pair(a.from, a.to) < std::pair(b.from, b.to);
              });
    for (const auto& arrow : arrows) {
        const auto& hi = subgroup[static_cast<std::size_t>(arrow.from)];
        const auto& hj = subgroup[static_cast<std::size_t>(arrow.to)];
        for (int g = 0; g < group->order(); ++g) {
            const auto expected = arrow.cls.coeffs[static_cast<std::size_t>(g)];
            for (int h : hi)
                for (int h2 : hj) {
                    const int moved = group->mult(group->mult(h, g), h2);
                    if (arrow.cls.coeffs[static_cast<std::size_t>(moved)] != expected)
                        throw DataError(
                            "arrow class is not constant on stabilizer double cosets: arrow " +
                            s.vertices[static_cast<std::size_t>(arrow.from)].label + " -> " +
                            s.vertices[static_cast<std::size_t>(arrow.to)].label);
                }
        }
        for (std::size_t ai = 0; ai < coset_reps[static_cast<std::size_t>(arrow.from)].size(); ++ai)
            for (std::size_t bi = 0; bi < coset_reps[static_cast<std::size_t>(arrow.to)].size(); ++bi) {
                const int a = coset_reps[static_cast<std::size_t>(arrow.from)][ai];
                const int b = coset_reps[static_cast<std::size_t>(arrow.to)][bi];
                const int rel = group->mult(group->inverse(a), b);
                const auto m = arrow.cls.coeffs[static_cast<std::size_t>(rel)];
                if (m > 0)
                    out.arrows.push_back({vertex_base[static_cast<std::size_t>(arrow.from)] +
                                              static_cast<int>(ai),
                                          vertex_base[static_cast<std::size_t>(arrow.to)] +
                                              static_cast<int>(bi),
                                          m});
            }
    }
    std::sort(out.arrows.begin(), out.arrows.end(), [](const QuiverArrow& a, const QuiverArrow& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    return out;
}

namespace {

struct VertexSignature {
    std::vector<std::int64_t> out_mults;
    std::vector<std::int64_t> in_mults;
    std::int64_t loop = 0;

    friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
    friend auto operator<=>(const VertexSignature&, const VertexSignature&) = default;
};

std::vector<VertexSignature> signatures(const OrdinaryQuiver& q) {
    std::vector<VertexSignature> sig(q.vertices.size());
    for (const auto& a : q.arrows) {
        if (a.from == a.to) {
            sig[static_cast<std::size_t>(a.from)].loop = a.mult;
            continue;
        }
        sig[static_cast<std::size_t>(a.from)].out_mults.push_back(a.mult);
        sig[static_cast<std::size_t>(a.to)].in_mults.push_back(a.mult);
    }
    for (auto& s : sig) {
        std::sort(s.out_mults.begin(), s.out_mults.end());
        std::sort(s.in_mults.begin(), s.in_mults.end());
    }
    return sig;
}

}

std::optional<std::vector<int>> quiver_isomorphism(const OrdinaryQuiver& a,
                                                   const OrdinaryQuiver& b, int vertex_guard) {
    const int n = static_cast<int>(a.vertices.size());
    if (vertex_guard > 0 && (n > vertex_guard || static_cast<int>(b.vertices.size()) > vertex_guard)) {
        std::ostringstream os;
        os << "isomorphism guard: more than " << vertex_guard << " vertices";
        throw GuardError(os.str());
    }
    if (static_cast<int>(b.vertices.size()) != n) return std::nullopt;

    std::map<std::pair<int, int>, std::int64_t> ma, mb;
    for (const auto& arrow : a.arrows) ma[{arrow.from, arrow.to}] = arrow.mult;
    for (const auto& arrow : b.arrows) mb[{arrow.from, arrow.to}] = arrow.mult;
    if (ma.size() != mb.size()) return std::nullopt;

    const auto sig_a = signatures(a);
    const auto sig_b = signatures(b);
    {
        auto sorted_a = sig_a, sorted_b = sig_b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) return std::nullopt;
    }

    /* Most constrained first: rarer signatures earlier. */
    std::map<VertexSignature, int> freq;
    for (const auto& s : sig_a) ++freq[s];
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto fx = freq[sig_a[static_cast<std::size_t>(x)]];
        const auto fy = freq[sig_a[static_cast<std::size_t>(y)]];
        if (fx != fy) return fx < fy;
        return x < y;
    });

    std::vector<int> map_ab(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto mult_of = [](const std::map<std::pair<int, int>, std::int64_t>& m, int u,
                      int v) -> std::int64_t {
        const auto it = m.find({u, v});
        return it == m.end() ? 0 : it->second;
    };

    auto dfs = [&](auto&& self, std::size_t t) -> bool {
        if (t == order.size()) return true;
        const int v = order[t];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < t && ok; ++prev) {
                const int u = order[prev];
                const int mu = map_ab[static_cast<std::size_t>(u)];
                ok = mult_of(ma, v, u) == mult_of(mb, w, mu) &&
                     mult_of(ma, u, v) == mult_of(mb, mu, w);
            }
            if (ok && mult_of(ma, v, v) != mult_of(mb, w, w)) ok = false;
            if (!ok) continue;
            map_ab[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, t + 1)) return true;
            map_ab[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return map_ab;
}

RoundTripReport round_trip(const EquivariantQuiver& eq, int vertex_guard) {
    RoundTripReport rep;
    rep.original = quiver_of(eq.quiver);
    rep.rebuilt = pointed_unfold(species_of(eq));
    auto witness = quiver_isomorphism(rep.original, rep.rebuilt, vertex_guard);
    rep.isomorphic = witness.has_value();
    if (witness) rep.witness = std::move(*witness);
    return rep;
}

}
