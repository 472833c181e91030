#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "matfusion/fusion.hpp"
#include "matfusion/label_fusion.hpp"
#include "matfusion/query_engine.hpp"
#include "matfusion/semantics.hpp"
#include "matfusion/synthetic_world.hpp"

namespace matfusion::io {

namespace fs = std::filesystem;
using nlohmann::json;

json read_json(const fs::path& path);
void write_json(const fs::path& path, const json& j);

// Scene: {"primitives": [{"kind": "box"|"sphere"|"plane", ..., "material": name, "color": [r, g, b]}]}
Scene scene_from_json(const json& j);
json scene_to_json(const Scene& scene);
Scene load_scene(const fs::path& path);

// Trajectory: list of 4x4 row-major camera-to-world matrices.
Trajectory trajectory_from_json(const json& j);
json trajectory_to_json(const Trajectory& traj);
Trajectory load_trajectory(const fs::path& path);
void save_trajectory(const fs::path& path, const Trajectory& traj);

// Material table: {material-name: {restitution, friction, hardness, decal, debris_count_range,
// debris_speed_fraction, sound_id, penetrable}}, optional "_reference_energy_j".
MaterialTable material_table_from_json(const json& j);
json material_table_to_json(const MaterialTable& t);
MaterialTable load_material_table(const fs::path& path);

std::vector<ImpactEvent> impact_events_from_json(const json& j);
json impact_events_to_json(const std::vector<ImpactEvent>& events);
json replay_to_json(const std::vector<ReplayEntry>& entries);
json hit_to_json(const RayQueryHit& hit);

// TSDF snapshot: "TSDF", u32 version, u32 N, f64 voxel_size, 3 x f64 origin, f64 truncation,
// f64 max_weight, then N^3 (f32 tsdf, f32 weight) records, little-endian, x fastest.
void save_tsdf(const fs::path& path, const TsdfVolume& vol);
TsdfVolume load_tsdf(const fs::path& path);

// Label volume snapshot: "LVOL", u32 version, u32 N, f64 voxel_size, 3 x f64 origin,
// then N^3 (23 x f32 log-likelihood, u32 count) records, little-endian, x fastest.
void save_label_volume(const fs::path& path, const LabelVolume& lv);
LabelVolume load_label_volume(const fs::path& path);

// Probability map: "PMAP", u32 width, u32 height, u32 classes (= 23), then f32 data,
// pixel-major in row-major pixel order. Invalid pixels are stored as all zeros.
void save_probability_map(const fs::path& path, const ProbabilityMap& map);
ProbabilityMap load_probability_map(const fs::path& path);

// Binary PGM (P5), maxval 255.
void save_label_pgm(const fs::path& path, const LabelImage& labels);
LabelImage load_label_pgm(const fs::path& path);

// RGB-D frame: "RGBD", u32 version, u32 width, u32 height, i32 frame_index, then
// f64 depth[w*h], f32 color[w*h*3], u8 labels[w*h].
void save_frame(const fs::path& path, const RgbdFrame& frame);
RgbdFrame load_frame(const fs::path& path);

// Binary little-endian PLY: x y z nx ny nz (f32), red green blue material (u8), confidence (f32).
void export_ply(const LabeledSurfaceModel& model, const fs::path& path);
LabeledSurfaceModel import_ply(const fs::path& path);

}  // namespace matfusion::io
