#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "matfusion/fusion.hpp"
#include "matfusion/label_fusion.hpp"
#include "matfusion/query_engine.hpp"
#include "matfusion/semantics.hpp"
#include "matfusion/synthetic_world.hpp"
#include "matfusion/tracking.hpp"

namespace matfusion {

struct OrbitParams {
  std::optional<Vec3> center;  // default: center of the scene's bounded primitives
  double radius = 1.0;
  double height = 0.5;
  int n_frames = 60;
  double arc_degrees = 90.0;
};

enum class SegmenterModel { kOracle, kFlip };

struct SegmenterConfig {
  SegmenterModel model = SegmenterModel::kOracle;
  double confusion_prob = 0.0;
  int leak_concentration = 1;
  double flip_prob = 0.0;
};

struct PipelineConfig {
  std::optional<std::filesystem::path> scene_path;  // default: built-in three-primitive scene
  std::optional<std::filesystem::path> trajectory_path;
  OrbitParams orbit;
  CameraIntrinsics intrinsics{110.0, 110.0, 63.5, 63.5, 128, 128};
  SensorNoise sensor_noise;  // seed is derived from the master seed
  SegmenterConfig segmenter;
  VolumeParams volume;
  IcpConfig icp;
  bool crf_enabled = true;
  CrfParams crf;
  std::uint32_t min_observations = kDefaultMinObservations;
  std::size_t leaf_capacity = kDefaultLeafCapacity;
  int max_depth = kDefaultMaxDepth;
  std::optional<double> hit_radius;  // default: voxel size
  std::optional<std::filesystem::path> material_table_path;
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;
  bool record_stage_times = false;
};

/// Parses a config document. Relative paths resolve against `base_dir`.
PipelineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
nlohmann::json config_to_json(const PipelineConfig& cfg);
PipelineConfig load_config(const std::filesystem::path& path);
void validate(const PipelineConfig& cfg);

enum class Stage { kRender, kTrack, kSegment, kLabelFuse, kExtract, kIndex, kMetrics };
std::string_view stage_name(Stage s);
std::optional<Stage> stage_from_name(std::string_view name);

struct LengthMismatch : Error {
  LengthMismatch(std::size_t a, std::size_t b);
};

/// RMSE of translation differences after left-aligning `estimated` to `truth` at frame 0.
double compute_ate(const Trajectory& estimated, const Trajectory& truth);

struct SurfaceErrorStats {
  double mean = 0;
  double p95 = 0;
  double within_voxel_fraction = 0;
  std::size_t count = 0;
};

/// Point-to-nearest-primitive distances; `voxel_size` sets the within-one-voxel threshold.
SurfaceErrorStats surface_error(const SurfacePointCloud& cloud, const Scene& scene, double voxel_size);

/// Fraction of model points whose material equals that of the nearest scene primitive.
double label_accuracy(const LabeledSurfaceModel& model, const Scene& scene);

/// Argmax accuracy of a probability map against true labels over pixels with valid depth.
std::pair<std::size_t, std::size_t> frame_label_hits(const ProbabilityMap& prob, const RgbdFrame& frame);

struct MetricsReport {
  std::string status = "ok";
  std::optional<int> failed_frame;
  std::string failure;
  double ate_rmse_m = 0;
  double surface_mean_m = 0;
  double surface_p95_m = 0;
  double surface_within_voxel_fraction = 0;
  double voxel_size_m = 0;
  double label_accuracy = 0;
  double frame_label_accuracy_mean = 0;
  std::map<std::string, double> stage_times_s;
  std::map<std::string, std::uint64_t> counts;

  nlohmann::json to_json(bool include_times) const;
};

/// Fixed artifact layout inside the output directory.
struct ArtifactPaths {
  std::filesystem::path root;

  std::filesystem::path frames_dir() const { return root / "frames"; }
  std::filesystem::path frame(int i) const;
  std::filesystem::path prob_dir() const { return root / "prob"; }
  std::filesystem::path prob(int i) const;
  std::filesystem::path label_pgm(int i) const;
  std::filesystem::path ground_truth_trajectory() const { return root / "ground_truth_trajectory.json"; }
  std::filesystem::path trajectory() const { return root / "trajectory.json"; }
  std::filesystem::path tsdf() const { return root / "volume.tsdf"; }
  std::filesystem::path label_volume() const { return root / "labels.lvol"; }
  std::filesystem::path ply() const { return root / "model.ply"; }
  std::filesystem::path metrics() const { return root / "metrics.json"; }
  std::filesystem::path timings() const { return root / "timings.json"; }
};

struct PipelineOptions {
  Stage start = Stage::kRender;  // later stages reload earlier artifacts from disk
  Stage stop = Stage::kMetrics;
  bool quiet = false;
};

struct PipelineResult {
  MetricsReport report;
  bool tracking_lost = false;
};

/// render -> track + fuse -> segment (+CRF) -> label-fuse -> extract + label -> index -> metrics.
PipelineResult run_pipeline(const PipelineConfig& cfg, const PipelineOptions& opts = {});

// Building blocks shared with the CLI's single-stage commands.
Scene resolve_scene(const PipelineConfig& cfg);
Trajectory resolve_trajectory(const PipelineConfig& cfg, const Scene& scene);
GridGeometry resolve_grid(const PipelineConfig& cfg, const Scene& scene);
MaterialTable resolve_material_table(const PipelineConfig& cfg);
ProbabilityMap segment_frame(const PipelineConfig& cfg, const RgbdFrame& frame);

struct TrackingOutcome {
  Trajectory poses;
  TsdfVolume volume;
  std::optional<int> failed_frame;
  std::string failure;
};

/// Frame 0 takes the ground-truth pose; every later frame is aligned against
/// the ray-cast prediction from the previous estimate, then integrated.
TrackingOutcome track_and_fuse(const std::vector<RgbdFrame>& frames, const RigidPose& first_pose,
                               const GridGeometry& grid, const PipelineConfig& cfg);

/// Rounds every stored value to the precision of its on-disk format.
ProbabilityMap to_file_precision(const ProbabilityMap& map);
LabelVolume to_file_precision(const LabelVolume& lv);
LabeledSurfaceModel to_file_precision(const LabeledSurfaceModel& model);

}  // namespace matfusion
