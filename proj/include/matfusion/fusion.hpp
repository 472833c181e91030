#pragma once

#include <optional>
#include <vector>

#include "matfusion/core.hpp"
#include "matfusion/synthetic_world.hpp"
#include "matfusion/tracking.hpp"

namespace matfusion {

/// Dense cubic voxel grid geometry. Voxel (i, j, k) covers
/// [origin + (i, j, k) * voxel_size, origin + (i + 1, j + 1, k + 1) * voxel_size).
struct GridGeometry {
  int resolution = 0;
  double voxel_size = 0;
  Vec3 origin = Vec3::Zero();

  std::size_t voxel_count() const {
    const auto n = static_cast<std::size_t>(resolution);
    return n * n * n;
  }
  std::size_t index(int x, int y, int z) const {
    const auto n = static_cast<std::size_t>(resolution);
    return static_cast<std::size_t>(x) + n * (static_cast<std::size_t>(y) + n * static_cast<std::size_t>(z));
  }
  bool contains(int x, int y, int z) const {
    return x >= 0 && y >= 0 && z >= 0 && x < resolution && y < resolution && z < resolution;
  }
  Vec3 voxel_center(int x, int y, int z) const { return origin + (Eigen::Vector3d(x, y, z).array() + 0.5).matrix() * voxel_size; }
  /// Voxel containing `p`, or nullopt outside the grid.
  std::optional<Eigen::Vector3i> locate(const Vec3& p) const;
  Eigen::AlignedBox3d bounds() const {
    return {origin, origin + Vec3::Constant(voxel_size * resolution)};
  }
  bool operator==(const GridGeometry& o) const {
    return resolution == o.resolution && voxel_size == o.voxel_size && origin == o.origin;
  }
};

inline constexpr double kMinObservedWeight = 0.75;

class TsdfVolume {
 public:
  TsdfVolume() = default;
  TsdfVolume(const GridGeometry& grid, double truncation, double max_weight);

  const GridGeometry& grid() const { return grid_; }
  double truncation() const { return truncation_; }
  double max_weight() const { return max_weight_; }

  float tsdf(std::size_t i) const { return tsdf_[i]; }
  float weight(std::size_t i) const { return weight_[i]; }
  float tsdf(int x, int y, int z) const { return tsdf_[grid_.index(x, y, z)]; }
  float weight(int x, int y, int z) const { return weight_[grid_.index(x, y, z)]; }

  /// Weighted running-average update of one voxel with a normalized measurement in [-1, 1].
  void update_voxel(std::size_t i, double measurement);

  std::vector<float>& tsdf_data() { return tsdf_; }
  std::vector<float>& weight_data() { return weight_; }
  const std::vector<float>& tsdf_data() const { return tsdf_; }
  const std::vector<float>& weight_data() const { return weight_; }

  std::size_t touched_voxels() const;

  /// Trilinear interpolation over the observed corners, renormalized. nullopt outside the
  /// lattice of voxel centers or when observed corners carry < kMinObservedWeight of the weight.
  std::optional<double> interpolate(const Vec3& p) const;
  /// Central-difference gradient of the interpolated field, normalized. Axes with one
  /// unobserved neighbor fall back to a one-sided difference.
  std::optional<Vec3> surface_normal(const Vec3& p) const;

 private:
  GridGeometry grid_;
  double truncation_ = 0;
  double max_weight_ = 0;
  std::vector<float> tsdf_;
  std::vector<float> weight_;
};

struct VolumeParams {
  int resolution = 128;
  std::optional<double> voxel_size;  // auto: scene bounds + margin
  double margin = 0.2;
  double truncation_factor = 4.0;
  double max_weight = 64.0;
};

/// Cube centered on the scene's bounded primitives, padded by `margin` on every side.
GridGeometry fit_grid_to_scene(const Scene& scene, const VolumeParams& params);
TsdfVolume make_volume(const GridGeometry& grid, const VolumeParams& params);

// Depth is read bilinearly at the projected voxel center unless the 2x2 neighborhood
// spans more than this (then the nearest pixel is used).
inline constexpr double kSmoothDepthSpread = 0.05;

void integrate_frame(TsdfVolume& vol, const DepthImage& depth, const RigidPose& pose, const CameraIntrinsics& intr);

/// World-frame vertex and normal maps predicted by marching camera rays through the volume.
MapLevel raycast_surface(const TsdfVolume& vol, const RigidPose& pose, const CameraIntrinsics& intr);

/// Raycast at every pyramid level of `intr` (halving the resolution per level).
ModelPrediction predict_model(const TsdfVolume& vol, const RigidPose& pose, const CameraIntrinsics& intr, int levels);

struct SurfacePoint {
  Vec3 position;
  Vec3 normal;
};

using SurfacePointCloud = std::vector<SurfacePoint>;

/// Zero crossings along every axis-aligned voxel edge whose endpoints are both observed.
SurfacePointCloud extract_surface_points(const TsdfVolume& vol);

}  // namespace matfusion
