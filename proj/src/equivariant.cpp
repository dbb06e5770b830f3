#include "sforge/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sforge {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

void require_valid(const EquivariantQuiver& eq) {
    const auto rep = validate_equivariant(eq);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw DataError("equivariant quiver invalid: " + v.axiom + " (" + v.detail + ")");
    }
}

}

ValidationReport validate_equivariant(const EquivariantQuiver& eq) {
    ValidationReport rep;
    for (const auto& v : validate_group(eq.group).violations)
        rep.add("group:" + v.axiom, v.where, v.detail);

    const int n = static_cast<int>(eq.quiver.vertices.size());
    const int na = static_cast<int>(eq.quiver.arrows.size());
    const int order = eq.group.order();

    for (std::size_t a = 0; a < eq.quiver.arrows.size(); ++a) {
        const auto& [from, to] = eq.quiver.arrows[a];
        if (from < 0 || from >= n || to < 0 || to >= n)
            rep.add("shape", {static_cast<std::int64_t>(a)}, "arrow endpoint out of range");
    }
    if (static_cast<int>(eq.vertex_action.size()) != order)
        rep.add("shape", {}, "vertex_action must have one permutation per group element");
    if (static_cast<int>(eq.arrow_action.size()) != order)
        rep.add("shape", {}, "arrow_action must have one permutation per group element");
    if (!rep.ok()) return rep;

    for (int g = 0; g < order; ++g) {
        if (!is_permutation(eq.vertex_action[static_cast<std::size_t>(g)], n))
            rep.add("permutation", {g}, "vertex_action entry is not a vertex permutation");
        if (!is_permutation(eq.arrow_action[static_cast<std::size_t>(g)], na))
            rep.add("permutation", {g}, "arrow_action entry is not an arrow permutation");
    }
    if (!rep.ok()) return rep;

    /* Homomorphism: the permutation of g*h is the composite of the two. */
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) {
            const int gh = eq.group.mult(g, h);
            for (int v = 0; v < n; ++v) {
                const int via = eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(
                    eq.vertex_action[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)])];
                if (eq.vertex_action[static_cast<std::size_t>(gh)][static_cast<std::size_t>(v)] != via)
                    rep.add("homomorphism", {g, h, v},
                            "vertex_action[g*h] must equal vertex_action[g] o vertex_action[h]");
            }
            for (int a = 0; a < na; ++a) {
                const int via = eq.arrow_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(
                    eq.arrow_action[static_cast<std::size_t>(h)][static_cast<std::size_t>(a)])];
                if (eq.arrow_action[static_cast<std::size_t>(gh)][static_cast<std::size_t>(a)] != via)
                    rep.add("homomorphism", {g, h, a},
                            "arrow_action[g*h] must equal arrow_action[g] o arrow_action[h]");
            }
        }

    /* Compatibility: the g-image of an arrow joins the g-images of its endpoints. */
    for (int g = 0; g < order; ++g)
        for (int a = 0; a < na; ++a) {
            const auto& [from, to] = eq.quiver.arrows[static_cast<std::size_t>(a)];
            const auto& [ifrom, ito] =
                eq.quiver.arrows[static_cast<std::size_t>(eq.arrow_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)])];
            if (ifrom != eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(from)] ||
                ito != eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(to)])
                rep.add("compatibility", {g, a},
                        "image arrow endpoints must be the images of the endpoints");
        }

    return rep;
}

Orbits orbits(const EquivariantQuiver& eq) {
    require_valid(eq);
    const int n = static_cast<int>(eq.quiver.vertices.size());
    Orbits out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::set<int> orbit;
        for (int g = 0; g < eq.group.order(); ++g)
            orbit.insert(eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)]);
        for (int w : orbit) seen[static_cast<std::size_t>(w)] = 1;
        out.classes.emplace_back(orbit.begin(), orbit.end());
        out.representatives.push_back(*orbit.begin());
    }
    return out;
}

InternalEnd internal_end(const EquivariantQuiver& eq, int v) {
    require_valid(eq);
    const int n = static_cast<int>(eq.quiver.vertices.size());
    if (v < 0 || v >= n) throw ShapeError("vertex: index out of range");
    InternalEnd out;
    out.object.coeffs.assign(static_cast<std::size_t>(eq.group.order()), 0);
    for (int g = 0; g < eq.group.order(); ++g)
        if (eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)] == v) {
            out.object.coeffs[static_cast<std::size_t>(g)] = 1;
            out.stabilizer.push_back(g);
        }
    return out;
}

GradedObject internal_ext(const EquivariantQuiver& eq, int u, int v) {
    require_valid(eq);
    const int n = static_cast<int>(eq.quiver.vertices.size());
    if (u < 0 || u >= n || v < 0 || v >= n) throw ShapeError("vertex: index out of range");
    GradedObject out;
    out.coeffs.assign(static_cast<std::size_t>(eq.group.order()), 0);
    for (int g = 0; g < eq.group.order(); ++g) {
        const int gu = eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(u)];
        std::int64_t count = 0;
        for (const auto& [from, to] : eq.quiver.arrows)
            if (from == gu && to == v) ++count;
        out.coeffs[static_cast<std::size_t>(g)] = count;
    }
    return out;
}

std::string format_subgroup_tag(const FiniteGroup& g, const std::vector<int>& subgroup,
                                const std::string& twist) {
    std::ostringstream os;
    os << "subgroup:";
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
        if (i) os << ",";
        os << g.element(subgroup[i]);
    }
    os << ";twist:" << twist;
    return os.str();
}

ParsedTag parse_subgroup_tag(const FiniteGroup& g, const std::string& tag) {
    const std::string subgroup_prefix = "subgroup:";
    const std::string twist_marker = ";twist:";
    if (tag.rfind(subgroup_prefix, 0) != 0)
        throw DataError("tag must start with \"subgroup:\": " + tag);
    const auto twist_at = tag.find(twist_marker);
    if (twist_at == std::string::npos)
        throw DataError("tag must contain \";twist:\": " + tag);

    ParsedTag out;
    out.twist = tag.substr(twist_at + twist_marker.size());
    std::string names = tag.substr(subgroup_prefix.size(), twist_at - subgroup_prefix.size());
    std::stringstream ss(names);
    std::string name;
    while (std::getline(ss, name, ',')) {
        int found = -1;
        for (int e = 0; e < g.order(); ++e)
            if (g.element(e) == name) {
                found = e;
                break;
            }
        if (found < 0) throw DataError("tag names unknown group element: " + name);
        out.subgroup.push_back(found);
    }
    std::sort(out.subgroup.begin(), out.subgroup.end());
    return out;
}

Species species_of(const EquivariantQuiver& eq) {
    require_valid(eq);
    const auto orb = orbits(eq);
    const auto ring = group_ring(eq.group);

    Species s;
    s.ring = ring;
    for (const int rep : orb.representatives) {
        const auto end = internal_end(eq, rep);
        SpeciesVertex v;
        v.label = eq.quiver.vertices[static_cast<std::size_t>(rep)];
        v.algebra_class = end.object;
        v.tag = format_subgroup_tag(eq.group, end.stabilizer);
        s.vertices.push_back(std::move(v));
    }
    const int k = static_cast<int>(orb.representatives.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto ext =
                internal_ext(eq, orb.representatives[static_cast<std::size_t>(i)],
                             orb.representatives[static_cast<std::size_t>(j)]);
            if (ext.is_zero()) continue;
            s.arrows.push_back({i, j, dual_element(ring, ext)});
        }
    return s;
}

ModuleGraph directed_graph_of(const EquivariantQuiver& eq) {
    require_valid(eq);
    const auto orb = orbits(eq);
    ModuleGraph out;
    for (const int rep : orb.representatives)
        out.graph.vertices.push_back(eq.quiver.vertices[static_cast<std::size_t>(rep)]);

    const int k = static_cast<int>(orb.classes.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const bool arrow =
                !internal_ext(eq, orb.representatives[static_cast<std::size_t>(i)],
                              orb.representatives[static_cast<std::size_t>(j)])
                     .is_zero();
            /* Representative independence: every pair from the two orbits must agree. */
            for (const int u : orb.classes[static_cast<std::size_t>(i)])
                for (const int v : orb.classes[static_cast<std::size_t>(j)]) {
                    const bool here = !internal_ext(eq, u, v).is_zero();
                    ++out.certificate.pairs_checked;
                    if (here != arrow) {
                        std::ostringstream os;
                        os << "arrow predicate disagrees across representatives: orbit pair ("
                           << i << "," << j << "), members (" << u << "," << v << ")";
                        throw DataError(os.str());
                    }
                }
            if (arrow) out.graph.arrows.emplace_back(i, j);
        }
    out.certificate.pass = true;
    return out;
}

ZPlusModule grothendieck_module(const EquivariantQuiver& eq) {
    require_valid(eq);
    const auto ring = group_ring(eq.group);
    const int n = static_cast<int>(eq.quiver.vertices.size());
    std::vector<IntMatrix> action;
    for (int g = 0; g < eq.group.order(); ++g) {
        IntMatrix a(n, n);
        for (int v = 0; v < n; ++v)
            a.at(eq.vertex_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)], v) = 1;
        action.push_back(std::move(a));
    }
    return ZPlusModule(ring, eq.quiver.vertices, std::move(action));
}

}
