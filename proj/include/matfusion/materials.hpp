#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace matfusion {

using MaterialId = std::uint8_t;

inline constexpr int kNumMaterials = 23;
inline constexpr MaterialId kUnknownMaterial = 255;

// Fixed id order (0-based, alphabetical MINC category names).
inline constexpr std::array<std::string_view, kNumMaterials> kMaterialNames = {
    "brick", "carpet", "ceramic", "fabric",  "foliage",        "food",  "glass", "hair",
    "leather", "metal", "mirror", "other",   "painted",        "paper", "plastic", "polished_stone",
    "skin",  "sky",    "stone",   "tile",    "wallpaper",      "water", "wood"};

namespace material {
inline constexpr MaterialId kFabric = 3;
inline constexpr MaterialId kGlass = 6;
inline constexpr MaterialId kMetal = 9;
inline constexpr MaterialId kWood = 22;
}  // namespace material

std::optional<MaterialId> material_from_name(std::string_view name);
std::string_view material_name(MaterialId id);  // "unknown" for the sentinel

inline bool is_valid_material(MaterialId id) { return id < kNumMaterials; }

/// Display color used for PLY export.
std::array<std::uint8_t, 3> material_color(MaterialId id);

}  // namespace matfusion
