#include "sforge/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace sforge {

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

json element_to_json(const RingElement& e) {
    return json(e.coeffs);
}

json ring_to_json(const FusionRing& ring) {
    const int r = ring.rank();
    json n = json::array();
    for (int i = 0; i < r; ++i) {
        json row = json::array();
        for (int j = 0; j < r; ++j) {
            json cell = json::array();
            for (int k = 0; k < r; ++k) cell.push_back(ring.n(i, j, k));
            row.push_back(std::move(cell));
        }
        n.push_back(std::move(row));
    }
    return json{{"kind", "fusion_ring"},
                {"labels", ring.labels()},
                {"unit", ring.unit()},
                {"dual", ring.dual_map()},
                {"N", std::move(n)}};
}

json group_to_json(const FiniteGroup& g) {
    json mult = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mult(a, b));
        mult.push_back(std::move(row));
    }
    return json{{"kind", "group"},
                {"elements", g.elements()},
                {"unit", g.unit()},
                {"mult", std::move(mult)}};
}

json module_to_json(const ZPlusModule& m) {
    json action = json::array();
    for (const auto& a : m.actions()) {
        json mat = json::array();
        for (int i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
            mat.push_back(std::move(row));
        }
        action.push_back(std::move(mat));
    }
    return json{{"kind", "zplus_module"},
                {"ring", ring_to_json(m.ring())},
                {"labels", m.labels()},
                {"action", std::move(action)}};
}

json species_to_json(const Species& s) {
    json vertices = json::array();
    for (const auto& v : s.vertices) {
        json da{{"class", v.algebra_class.coeffs}};
        if (v.tag) da["tag"] = *v.tag;
        vertices.push_back(json{{"label", v.label}, {"division_algebra", std::move(da)}});
    }
    json arrows = json::array();
    for (const auto& a : s.arrows)
        arrows.push_back(json{{"from", a.from}, {"to", a.to}, {"class", a.cls.coeffs}});
    return json{{"kind", "species"},
                {"ring", ring_to_json(s.ring)},
                {"vertices", std::move(vertices)},
                {"arrows", std::move(arrows)}};
}

json equivariant_to_json(const EquivariantQuiver& eq) {
    json arrows = json::array();
    for (const auto& [from, to] : eq.quiver.arrows)
        arrows.push_back(json{{"from", from}, {"to", to}});
    return json{{"kind", "equivariant_quiver"},
                {"group", group_to_json(eq.group)},
                {"quiver", json{{"vertices", eq.quiver.vertices}, {"arrows", std::move(arrows)}}},
                {"vertex_action", eq.vertex_action},
                {"arrow_action", eq.arrow_action}};
}

json quiver_to_json(const OrdinaryQuiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back(json{{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
    return json{{"kind", "quiver"}, {"vertices", q.vertices}, {"arrows", std::move(arrows)}};
}

namespace {

void expect_kind(const json& j, const std::string& kind) {
    if (j.contains("kind") && j.at("kind").get<std::string>() != kind)
        throw DataError("expected kind \"" + kind + "\" but found \"" +
                        j.at("kind").get<std::string>() + "\"");
}

}

FusionRing ring_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        const auto path = base_dir / j.get<std::string>();
        return load_ring(path);
    }
    expect_kind(j, "fusion_ring");
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    const int unit = j.at("unit").get<int>();
    const auto dual = j.at("dual").get<std::vector<int>>();
    const auto& n = j.at("N");
    const auto r = labels.size();
    if (!n.is_array() || n.size() != r)
        throw ShapeError("N: must be a rank x rank x rank array");
    std::vector<std::int64_t> flat;
    flat.reserve(r * r * r);
    for (const auto& row : n) {
        if (!row.is_array() || row.size() != r)
            throw ShapeError("N: must be a rank x rank x rank array");
        for (const auto& cell : row) {
            if (!cell.is_array() || cell.size() != r)
                throw ShapeError("N: must be a rank x rank x rank array");
            for (const auto& v : cell) flat.push_back(v.get<std::int64_t>());
        }
    }
    return FusionRing(labels, unit, dual, std::move(flat));
}

FiniteGroup group_from_json(const json& j) {
    expect_kind(j, "group");
    return FiniteGroup(j.at("elements").get<std::vector<std::string>>(),
                       j.at("unit").get<int>(),
                       j.at("mult").get<std::vector<std::vector<int>>>());
}

ZPlusModule module_from_json(const json& j, const std::filesystem::path& base_dir) {
    expect_kind(j, "zplus_module");
    auto ring = ring_from_json(j.at("ring"), base_dir);
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    const auto& action = j.at("action");
    if (!action.is_array() || static_cast<int>(action.size()) != ring.rank())
        throw ShapeError("action: must have one matrix per ring basis element");
    const auto m = labels.size();
    std::vector<IntMatrix> mats;
    for (const auto& mat : action) {
        if (!mat.is_array() || mat.size() != m)
            throw ShapeError("action: matrices must be module-rank square");
        IntMatrix a(static_cast<int>(m), static_cast<int>(m));
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = mat[i];
            if (!row.is_array() || row.size() != m)
                throw ShapeError("action: matrices must be module-rank square");
            for (std::size_t k = 0; k < m; ++k)
                a.at(static_cast<int>(i), static_cast<int>(k)) = row[k].get<std::int64_t>();
        }
        mats.push_back(std::move(a));
    }
    return ZPlusModule(std::move(ring), labels, std::move(mats));
}

Species species_from_json(const json& j, const std::filesystem::path& base_dir) {
    expect_kind(j, "species");
    Species s;
    s.ring = ring_from_json(j.at("ring"), base_dir);
    for (const auto& v : j.at("vertices")) {
        SpeciesVertex vertex;
        vertex.label = v.at("label").get<std::string>();
        const auto& da = v.at("division_algebra");
        vertex.algebra_class.coeffs = da.at("class").get<std::vector<std::int64_t>>();
        if (da.contains("tag")) vertex.tag = da.at("tag").get<std::string>();
        s.vertices.push_back(std::move(vertex));
    }
    for (const auto& a : j.at("arrows")) {
        SpeciesArrow arrow;
        arrow.from = a.at("from").get<int>();
        arrow.to = a.at("to").get<int>();
        arrow.cls.coeffs = a.at("class").get<std::vector<std::int64_t>>();
        s.arrows.push_back(std::move(arrow));
    }
    return s;
}

EquivariantQuiver equivariant_from_json(const json& j) {
    expect_kind(j, "equivariant_quiver");
    EquivariantQuiver eq{group_from_json(j.at("group")), {}, {}, {}};
    const auto& q = j.at("quiver");
    eq.quiver.vertices = q.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : q.at("arrows"))
        eq.quiver.arrows.emplace_back(a.at("from").get<int>(), a.at("to").get<int>());
    eq.vertex_action = j.at("vertex_action").get<std::vector<std::vector<int>>>();
    eq.arrow_action = j.at("arrow_action").get<std::vector<std::vector<int>>>();
    return eq;
}

OrdinaryQuiver quiver_from_json(const json& j) {
    expect_kind(j, "quiver");
    OrdinaryQuiver q;
    q.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("from").get<int>(), a.at("to").get<int>(),
                            a.contains("mult") ? a.at("mult").get<std::int64_t>() : 1});
    return q;
}

DocumentValue document_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object() || !j.contains("kind"))
        throw DataError("document must be an object with a \"kind\" field");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "fusion_ring") return ring_from_json(j, base_dir);
    if (kind == "group") return group_from_json(j);
    if (kind == "zplus_module") return module_from_json(j, base_dir);
    if (kind == "species") return species_from_json(j, base_dir);
    if (kind == "equivariant_quiver") return equivariant_from_json(j);
    if (kind == "quiver") return quiver_from_json(j);
    throw DataError("unknown document kind \"" + kind + "\"");
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

DocumentValue load_document(const std::filesystem::path& path) {
    try {
        return document_from_json(load_json(path), path.parent_path());
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    } catch (const ShapeError& e) {
        throw ShapeError(path.string() + ": " + e.what());
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

namespace {

template <typename T>
T load_kind(const std::filesystem::path& path, const char* kind) {
    auto doc = load_document(path);
    if (auto* value = std::get_if<T>(&doc)) return std::move(*value);
    throw DataError(path.string() + ": expected a " + std::string(kind) + " document");
}

}

FusionRing load_ring(const std::filesystem::path& path) {
    return load_kind<FusionRing>(path, "fusion_ring");
}
FiniteGroup load_group(const std::filesystem::path& path) {
    return load_kind<FiniteGroup>(path, "group");
}
ZPlusModule load_module(const std::filesystem::path& path) {
    return load_kind<ZPlusModule>(path, "zplus_module");
}
Species load_species(const std::filesystem::path& path) {
    return load_kind<Species>(path, "species");
}
EquivariantQuiver load_equivariant(const std::filesystem::path& path) {
    return load_kind<EquivariantQuiver>(path, "equivariant_quiver");
}

}
