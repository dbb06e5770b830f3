#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "sforge/equivariant.hpp"
#include "sforge/finite_group.hpp"
#include "sforge/fusion_ring.hpp"
#include "sforge/species.hpp"
#include "sforge/unfold.hpp"
#include "sforge/zplus_module.hpp"

namespace sforge {

using json = nlohmann::json;

/* Round to the given number of significant digits for stable serialization. */
double round_sig(double x, int digits = 12);

json ring_to_json(const FusionRing& ring);
json group_to_json(const FiniteGroup& g);
json module_to_json(const ZPlusModule& m);
json species_to_json(const Species& s);
json equivariant_to_json(const EquivariantQuiver& eq);
json quiver_to_json(const OrdinaryQuiver& q);
json element_to_json(const RingElement& e);

/*
 * base_dir resolves "ring" fields given as file paths; it is the directory
 * of the containing document.
 */
FusionRing ring_from_json(const json& j, const std::filesystem::path& base_dir = ".");
FiniteGroup group_from_json(const json& j);
ZPlusModule module_from_json(const json& j, const std::filesystem::path& base_dir = ".");
Species species_from_json(const json& j, const std::filesystem::path& base_dir = ".");
EquivariantQuiver equivariant_from_json(const json& j);
OrdinaryQuiver quiver_from_json(const json& j);

using DocumentValue =
    std::variant<FusionRing, FiniteGroup, ZPlusModule, Species, EquivariantQuiver, OrdinaryQuiver>;

/* Dispatches on the "kind" field; unknown kinds raise DataError. */
DocumentValue document_from_json(const json& j, const std::filesystem::path& base_dir = ".");

/* Loads and parses a document file; errors name the file. */
DocumentValue load_document(const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

FusionRing load_ring(const std::filesystem::path& path);
FiniteGroup load_group(const std::filesystem::path& path);
ZPlusModule load_module(const std::filesystem::path& path);
Species load_species(const std::filesystem::path& path);
EquivariantQuiver load_equivariant(const std::filesystem::path& path);

}
