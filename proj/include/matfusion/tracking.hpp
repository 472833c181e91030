#pragma once

#include <optional>
#include <vector>

#include "matfusion/core.hpp"

namespace matfusion {

/// Per-pixel 3D points with a validity mask. Frame-level maps are in camera
/// coordinates; maps predicted from the model are in world coordinates.
struct PointMap {
  Image<Vec3> points;
  Mask valid;

  PointMap() = default;
  PointMap(int w, int h) : points(w, h, Vec3::Zero()), valid(w, h, 0) {}
  int width() const { return points.width; }
  int height() const { return points.height; }
};

using VertexMap = PointMap;
using NormalMap = PointMap;

VertexMap backproject(const DepthImage& depth, const CameraIntrinsics& intr);

/// Cross product of central differences, oriented towards the camera.
NormalMap compute_normals(const VertexMap& vmap);

struct DepthLevel {
  DepthImage depth;
  CameraIntrinsics intrinsics;
};

/// Depth spread above which a 2x2 block is treated as a discontinuity.
inline constexpr double kPyramidMaxSpread = 0.05;

/// Level 0 is the input; each further level halves the resolution.
std::vector<DepthLevel> build_pyramid(const DepthImage& depth, const CameraIntrinsics& intr, int levels);

struct MapLevel {
  VertexMap vertices;
  NormalMap normals;
  CameraIntrinsics intrinsics;
};

using MapPyramid = std::vector<MapLevel>;

/// Back-projects and computes normals on every pyramid level.
MapPyramid make_frame_pyramid(const DepthImage& depth, const CameraIntrinsics& intr, int levels);

/// World-frame surface prediction plus the camera pose it was predicted from.
struct ModelPrediction {
  MapPyramid levels;
  RigidPose view_pose = RigidPose::Identity();
};

struct IcpConfig {
  int pyramid_levels = 3;
  std::vector<int> iterations_per_level = {10, 5, 4};  // coarsest first
  double max_correspondence_dist = 0.1;
  double max_normal_angle_deg = 20.0;
  int min_valid_correspondences = 100;
};

void validate(const IcpConfig& cfg);

struct IcpResult {
  RigidPose pose = RigidPose::Identity();
  double final_residual_rms = 0;
  int correspondence_count = 0;
  bool converged = false;
  /// Residual RMS per iteration, coarsest level first, measured before each update.
  std::vector<std::vector<double>> residual_history;
};

struct InsufficientCorrespondences : Error {
  InsufficientCorrespondences(int level, int found, int required);
  int level;
  int found;
};

struct SingularSystem : Error {
  explicit SingularSystem(int level);
  int level;
};

/// One point-to-plane pair: source point (already transformed) and target point/normal.
struct Correspondence {
  Vec3 source;
  Vec3 target;
  Vec3 normal;
};

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Normal equations of the linearized point-to-plane objective in the
/// unknowns (alpha, beta, gamma, tx, ty, tz).
struct NormalEquations {
  Matrix6 ata = Matrix6::Zero();
  Vector6 atb = Vector6::Zero();
  double sum_sq = 0;
  int count = 0;

  void add(const Correspondence& c);
  NormalEquations& operator+=(const NormalEquations& o);
};

/// Ratio below which min/max eigenvalue of the 6x6 system counts as singular.
inline constexpr double kSingularEigenRatio = 1e-10;

/// Solves the 6x6 system; nullopt if it is condition-pathological.
std::optional<Vector6> solve_point_to_plane(const NormalEquations& eq);

/// Rigid increment from a small-angle twist, re-projected onto SO(3).
RigidPose twist_to_pose(const Vector6& x);

/// Coarse-to-fine projective point-to-plane ICP. `frame` holds camera-frame
/// maps; the result is the frame's camera-to-world pose.
IcpResult icp_align(const MapPyramid& frame, const ModelPrediction& model, const RigidPose& init,
                    const IcpConfig& cfg);

}  // namespace matfusion
