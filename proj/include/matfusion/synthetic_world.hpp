#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "matfusion/core.hpp"
#include "matfusion/materials.hpp"

namespace matfusion {

struct Box {
  Vec3 min_corner;
  Vec3 max_corner;
};

struct Sphere {
  Vec3 center;
  double radius = 0;
};

/// Solid half-space {x : normal·x <= offset}; the surface normal points out of the solid.
struct HalfSpace {
  Vec3 normal;
  double offset = 0;
};

struct Primitive {
  std::variant<Box, Sphere, HalfSpace> shape;
  MaterialId material = 0;
  Eigen::Vector3f color = Eigen::Vector3f::Constant(0.5f);
};

struct Scene {
  std::vector<Primitive> primitives;
};

void validate(const Scene& scene);

/// Smallest ray parameter t > 0 at which `origin + t * dir` enters the primitive.
std::optional<double> intersect(const Primitive& prim, const Vec3& origin, const Vec3& dir);

/// Unsigned distance from `p` to the primitive's boundary surface.
double surface_distance(const Primitive& prim, const Vec3& p);

/// Distance to the closest primitive surface and that primitive's index.
std::pair<double, std::size_t> nearest_surface(const Scene& scene, const Vec3& p);

/// Axis-aligned bounds of the bounded primitives (boxes and spheres).
/// Half-spaces are unbounded and ignored; nullopt when none are bounded.
std::optional<Eigen::AlignedBox3d> bounded_extent(const Scene& scene);

struct RgbdFrame {
  DepthImage depth;         // projective depth (camera z), 0 = invalid
  ColorImage color;
  LabelImage true_labels;   // 255 = no surface
  int frame_index = 0;
};

inline constexpr double kMinDepth = 0.1;
inline constexpr double kMaxDepth = 10.0;

struct SensorNoise {
  double depth_sigma_base = 0;
  double depth_sigma_slope = 0;
  double dropout_prob = 0;
  std::uint64_t seed = 0;
};

using Trajectory = std::vector<RigidPose>;

RgbdFrame render_frame(const Scene& scene, const CameraIntrinsics& intr, const RigidPose& pose, int frame_index = 0);

/// Gaussian depth noise with sigma = base + slope * depth, plus independent dropout.
/// Perturbed depths leaving the valid sensor range are invalidated. Labels are untouched.
RgbdFrame apply_sensor_noise(const RgbdFrame& frame, const SensorNoise& noise);

/// Camera poses on a horizontal circle of `radius` around `center`, raised by `height`,
/// looking at `center`. Pose i sits at angle i * arc / n_frames (arc in degrees, 360 closes the loop).
Trajectory generate_orbit_trajectory(const Vec3& center, double radius, double height, int n_frames,
                                     double arc_degrees = 360.0);

/// Rotation < 15 deg and translation < 0.1 m between consecutive poses.
bool is_tracking_feasible(const Trajectory& traj);

/// Floor (wood), floating box (fabric) and sphere (glass): the default evaluation scene.
Scene make_three_primitive_scene();

}  // namespace matfusion
