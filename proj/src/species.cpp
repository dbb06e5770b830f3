#include "sforge/species.hpp"

#include <algorithm>
#include <limits>
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

void shape_violations(const Species& s, ValidationReport& rep) {
    const int n = static_cast<int>(s.vertices.size());
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(s.vertices[static_cast<std::size_t>(v)].algebra_class.coeffs.size()) !=
            s.ring.rank())
            rep.add("shape", {v}, "vertex class length must equal ring rank");
    for (std::size_t a = 0; a < s.arrows.size(); ++a) {
        const auto& arrow = s.arrows[a];
        if (arrow.from < 0 || arrow.from >= n || arrow.to < 0 || arrow.to >= n)
            rep.add("shape", {static_cast<std::int64_t>(a)}, "arrow endpoint out of range");
        if (static_cast<int>(arrow.cls.coeffs.size()) != s.ring.rank())
            rep.add("shape", {static_cast<std::int64_t>(a)},
                    "arrow class length must equal ring rank");
    }
}

void require_shape(const Species& s) {
    ValidationReport rep;
    shape_violations(s, rep);
    if (!rep.ok()) throw ShapeError(rep.violations.front().detail);
}

constexpr long long kSaturate = std::numeric_limits<long long>::max() / 4;

long long sat_add(long long a, long long b) {
    return (a > kSaturate - b) ? kSaturate : a + b;
}

}

std::string to_dot(const DirectedGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (const auto& v : g.vertices) os << "  \"" << dot_escape(v) << "\";\n";
    for (const auto& [from, to] : g.arrows)
        os << "  \"" << dot_escape(g.vertices[static_cast<std::size_t>(from)]) << "\" -> \""
           << dot_escape(g.vertices[static_cast<std::size_t>(to)]) << "\";\n";
    os << "}\n";
    return os.str();
}

bool is_quiver(const Species& s) {
    for (const auto& v : s.vertices) {
        if (static_cast<int>(v.algebra_class.coeffs.size()) != s.ring.rank()) return false;
        for (int i = 0; i < s.ring.rank(); ++i) {
            const auto want = (i == s.ring.unit()) ? 1 : 0;
            if (v.algebra_class.coeffs[static_cast<std::size_t>(i)] != want) return false;
        }
    }
    return true;
}

SpeciesReport validate_species(const Species& s) {
    SpeciesReport out;
    auto& rep = out.report;
    shape_violations(s, rep);
    if (!rep.ok()) {
        out.is_quiver = false;
        return out;
    }

    for (const auto& v : validate_ring(s.ring).violations)
        rep.add("ring:" + v.axiom, v.where, v.detail);

    const int n = static_cast<int>(s.vertices.size());
    if (n == 0) rep.add("vertices", {}, "species must have at least one vertex");
    for (int v = 0; v < n; ++v) {
        const auto& cls = s.vertices[static_cast<std::size_t>(v)].algebra_class;
        for (auto c : cls.coeffs)
            if (c < 0) rep.add("vertex_class", {v}, "multiplicities must be nonnegative");
        if (cls.is_zero()) rep.add("vertex_class", {v}, "vertex algebra class must be nonzero");
        else if (cls.coeffs[static_cast<std::size_t>(s.ring.unit())] < 1)
            rep.add("vertex_class", {v}, "unit multiplicity must be at least 1");
    }

    std::set<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < s.arrows.size(); ++a) {
        const auto& arrow = s.arrows[a];
        for (auto c : arrow.cls.coeffs)
            if (c < 0)
                rep.add("arrow_class", {static_cast<std::int64_t>(a)},
                        "multiplicities must be nonnegative");
        if (arrow.cls.is_zero())
            rep.add("arrow_class", {static_cast<std::int64_t>(a)}, "arrow class must be nonzero");
        if (!pairs.insert({arrow.from, arrow.to}).second)
            rep.add("arrows", {arrow.from, arrow.to},
                    "at most one arrow per ordered vertex pair");
    }

    out.is_quiver = rep.ok() && is_quiver(s);
    return out;
}

DirectedGraph underlying_graph(const Species& s) {
    require_shape(s);
    DirectedGraph g;
    for (const auto& v : s.vertices) g.vertices.push_back(v.label);
    for (const auto& a : s.arrows) g.arrows.emplace_back(a.from, a.to);
    std::sort(g.arrows.begin(), g.arrows.end());
    return g;
}

AcyclicityResult is_acyclic(const Species& s) {
    require_shape(s);
    const int n = static_cast<int>(s.vertices.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& a : s.arrows) adj[static_cast<std::size_t>(a.from)].push_back(a.to);
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<int> color(static_cast<std::size_t>(n), 0);  /* 0 new, 1 on stack, 2 done */
    std::vector<int> stack;
    AcyclicityResult res;

    auto dfs = [&](auto&& self, int v) -> bool {
        color[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(w)] == 1) {
                const auto it = std::find(stack.begin(), stack.end(), w);
                res.cycle.assign(it, stack.end());
                res.cycle.push_back(w);
                return false;
            }
            if (color[static_cast<std::size_t>(w)] == 0 && !self(self, w)) return false;
        }
        stack.pop_back();
        color[static_cast<std::size_t>(v)] = 2;
        return true;
    };

    for (int v = 0; v < n; ++v)
        if (color[static_cast<std::size_t>(v)] == 0 && !dfs(dfs, v)) {
            res.acyclic = false;
            return res;
        }
    return res;
}

long long path_count(const Species& s, int degree) {
    require_shape(s);
    const int n = static_cast<int>(s.vertices.size());
    if (degree == 0) return n;
    std::vector<long long> walks(static_cast<std::size_t>(n), 1);
    std::vector<std::vector<int>> in_adj(static_cast<std::size_t>(n));
    for (const auto& a : s.arrows) in_adj[static_cast<std::size_t>(a.to)].push_back(a.from);
    for (int step = 0; step < degree; ++step) {
        std::vector<long long> next(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int u : in_adj[static_cast<std::size_t>(v)])
                next[static_cast<std::size_t>(v)] =
                    sat_add(next[static_cast<std::size_t>(v)], walks[static_cast<std::size_t>(u)]);
        walks = std::move(next);
    }
    long long total = 0;
    for (auto w : walks) total = sat_add(total, w);
    return total;
}

GradedComponent graded_component(const Species& s, int degree, long long path_guard) {
    require_shape(s);
    if (degree < 0) throw DataError("degree must be nonnegative");
    const bool quiver = is_quiver(s);
    GradedComponent out;
    out.degree = degree;

    if (degree == 0) {
        for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
            GradedEntry e;
            e.vertices = {v};
            e.cls = s.vertices[static_cast<std::size_t>(v)].algebra_class;
            e.fpdim = fpdim(s.ring, *e.cls);
            out.entries.push_back(std::move(e));
        }
        return out;
    }

    if (path_guard > 0 && path_count(s, degree) > path_guard) {
        std::ostringstream os;
        os << "path guard: more than " << path_guard << " paths at degree " << degree;
        throw GuardError(os.str());
    }

    const int n = static_cast<int>(s.vertices.size());
    std::vector<std::vector<std::pair<int, const RingElement*>>> adj(static_cast<std::size_t>(n));
    for (const auto& a : s.arrows)
        adj[static_cast<std::size_t>(a.from)].emplace_back(a.to, &a.cls);
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<int> path;
    auto emit = [&]() {
        GradedEntry e;
        e.vertices = path;
        double arrow_prod = 1.0;
        for (int t = 0; t + 1 <= degree; ++t) {
            const int u = path[static_cast<std::size_t>(t)];
            const int v = path[static_cast<std::size_t>(t) + 1];
            for (const auto& [w, cls] : adj[static_cast<std::size_t>(u)])
                if (w == v) {
                    arrow_prod *= fpdim(s.ring, *cls);
                    break;
                }
        }
        double interior_prod = 1.0;
        for (int t = 1; t < degree; ++t)
            interior_prod *=
                fpdim(s.ring, s.vertices[static_cast<std::size_t>(path[static_cast<std::size_t>(t)])]
                                  .algebra_class);
        e.fpdim = arrow_prod / interior_prod;

        if (quiver) {
            /* Right-to-left composition: class of the last arrow multiplied through. */
            const RingElement* last = nullptr;
            for (const auto& [w, cls] :
                 adj[static_cast<std::size_t>(path[static_cast<std::size_t>(degree - 1)])])
                if (w == path[static_cast<std::size_t>(degree)]) {
                    last = cls;
                    break;
                }
            RingElement acc = *last;
            for (int t = degree - 2; t >= 0; --t) {
                const RingElement* step = nullptr;
                for (const auto& [w, cls] : adj[static_cast<std::size_t>(path[static_cast<std::size_t>(t)])])
                    if (w == path[static_cast<std::size_t>(t) + 1]) {
                        step = cls;
                        break;
                    }
                acc = multiply(s.ring, acc, *step);
            }
            e.cls = std::move(acc);
        }
        out.entries.push_back(std::move(e));
    };

    auto dfs = [&](auto&& self, int v, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (const auto& [w, cls] : adj[static_cast<std::size_t>(v)]) {
            path.push_back(w);
            self(self, w, remaining - 1);
            path.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        path = {v};
        dfs(dfs, v, degree);
    }
    return out;
}

TotalClass total_class(const Species& s, long long path_guard) {
    require_shape(s);
    const auto acyc = is_acyclic(s);
    if (!acyc.acyclic)
        throw DataError("total class diverges: species has a directed cycle");
    const bool quiver = is_quiver(s);
    TotalClass out;
    if (quiver) out.cls = s.ring.zero();
    const int n = static_cast<int>(s.vertices.size());
    for (int k = 0; k <= n; ++k) {
        const auto comp = graded_component(s, k, path_guard);
        for (const auto& e : comp.entries) {
            out.fpdim += e.fpdim;
            if (quiver && e.cls)
                for (std::size_t i = 0; i < out.cls->coeffs.size(); ++i)
                    out.cls->coeffs[i] += e.cls->coeffs[i];
        }
    }
    return out;
}

std::vector<Species> connected_components(const Species& s) {
    require_shape(s);
    const int n = static_cast<int>(s.vertices.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& a : s.arrows)
        parent[static_cast<std::size_t>(find(a.from))] = find(a.to);

    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int root = find(v);
        if (group_of[static_cast<std::size_t>(root)] < 0) {
            group_of[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
            groups.push_back({});
        }
        groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(root)])].push_back(v);
    }

    std::vector<Species> out;
    for (const auto& group : groups) {
        std::vector<int> renumber(static_cast<std::size_t>(n), -1);
        Species comp;
        comp.ring = s.ring;
        for (int v : group) {
            renumber[static_cast<std::size_t>(v)] = static_cast<int>(comp.vertices.size());
            comp.vertices.push_back(s.vertices[static_cast<std::size_t>(v)]);
        }
        for (const auto& a : s.arrows)
            if (renumber[static_cast<std::size_t>(a.from)] >= 0 &&
                renumber[static_cast<std::size_t>(a.to)] >= 0)
                comp.arrows.push_back({renumber[static_cast<std::size_t>(a.from)],
                                       renumber[static_cast<std::size_t>(a.to)], a.cls});
        out.push_back(std::move(comp));
    }
    return out;
}

HereditaryReport hereditary_report(const Species& s) {
    const auto acyc = is_acyclic(s);
    HereditaryReport rep;
    rep.acyclic = acyc.acyclic;
    rep.cycle = acyc.cycle;
    rep.verdict = acyc.acyclic
                      ? "hereditary: the tensor path algebra is finite dimensional as given"
                      : "not hereditary as given: a directed cycle forces an admissible quotient";
    return rep;
}

}
