#pragma once

#include <cstdint>
#include <vector>

#include "matfusion/fusion.hpp"
#include "matfusion/semantics.hpp"

namespace matfusion {

/// Probability floor applied before taking logs.
inline constexpr double kLabelProbFloor = 1e-6;

/// Per-voxel accumulated class log-likelihoods on a TSDF-aligned grid.
/// Storage is sparse: only observed voxels own an accumulator slot.
class LabelVolume {
 public:
  LabelVolume() = default;
  explicit LabelVolume(const GridGeometry& grid);

  const GridGeometry& grid() const { return grid_; }

  ClassVector accumulator(std::size_t voxel) const;
  std::uint32_t observation_count(std::size_t voxel) const;
  bool observed(std::size_t voxel) const { return slot_[voxel] >= 0; }

  /// Adds `log_likelihood` to the voxel's accumulator and `count` to its observations.
  void add(std::size_t voxel, const ClassVector& log_likelihood, std::uint32_t count);

  /// Observed voxel indices in increasing order.
  std::vector<std::size_t> observed_voxels() const;

  bool operator==(const LabelVolume& o) const;

 private:
  GridGeometry grid_;
  std::vector<std::int32_t> slot_;
  std::vector<ClassVector> acc_;
  std::vector<std::uint32_t> count_;
};

struct GridMismatch : Error {
  GridMismatch() : Error(ErrorKind::kInvalidArgument, "label volume grid differs from the reconstruction grid") {}
};

struct LabelFusionStats {
  std::size_t fused_pixels = 0;
  std::size_t outside_pixels = 0;
};

/// Independent-observation Bayesian update: each valid pixel adds
/// log(max(p, floor)) to the voxel containing its back-projected point.
LabelFusionStats fuse_frame_labels(LabelVolume& lv, const ProbabilityMap& prob, const DepthImage& depth,
                                   const RigidPose& pose, const CameraIntrinsics& intr,
                                   const GridGeometry& reconstruction);

struct VoxelLabels {
  std::vector<MaterialId> material;  // 255 = unlabeled
  std::vector<double> confidence;    // softmax posterior of the chosen class
};

inline constexpr std::uint32_t kDefaultMinObservations = 3;

VoxelLabels finalize_labels(const LabelVolume& lv, std::uint32_t min_observations);

struct LabeledSurfaceModel {
  SurfacePointCloud points;
  std::vector<MaterialId> material;
  std::vector<double> confidence;
  std::size_t dropped = 0;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Labels each point by its voxel, falling back to the most-observed labeled
/// 26-neighbor; points with neither are dropped.
LabeledSurfaceModel label_surface(const SurfacePointCloud& points, const LabelVolume& lv, const VoxelLabels& labels);

}  // namespace matfusion
