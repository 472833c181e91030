#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matfusion {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// Camera-to-world rigid transform.
using RigidPose = Eigen::Isometry3d;

// ---------------------------------------------------------------------------
// Errors. Every failure the library reports derives from Error and carries a
// coarse category the CLI maps onto exit codes.

enum class ErrorKind {
  kConfig,
  kIo,
  kTrackingLost,
  kSingularSystem,
  kInvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::kInvalidArgument, what) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorKind::kConfig, what) {}
};
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

// ---------------------------------------------------------------------------

/// Row-major 2D grid addressed as (u, v) = (column, row).
template <typename T>
struct Image {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Image() = default;
  Image(int w, int h, const T& fill = T{})
      : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  T& operator()(int u, int v) { return data[index(u, v)]; }
  const T& operator()(int u, int v) const { return data[index(u, v)]; }
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(width) + static_cast<std::size_t>(u);
  }
  std::size_t size() const { return data.size(); }
  bool contains(int u, int v) const { return u >= 0 && v >= 0 && u < width && v < height; }
  bool same_shape(int w, int h) const { return width == w && height == h; }
};

using DepthImage = Image<double>;    // meters, 0 = invalid
using ColorImage = Image<Eigen::Vector3f>;  // unit-interval albedo
using LabelImage = Image<std::uint8_t>;     // MaterialId, 255 = none
using Mask = Image<std::uint8_t>;

struct CameraIntrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int width = 0, height = 0;

  bool valid() const {
    return fx > 0 && fy > 0 && width > 0 && height > 0 && cx > 0 && cx < width && cy > 0 && cy < height;
  }
  /// Pinhole projection of a camera-frame point to continuous pixel coords.
  Eigen::Vector2d project(const Vec3& p) const { return {fx * p.x() / p.z() + cx, fy * p.y() / p.z() + cy}; }
  Vec3 backproject(double u, double v, double depth) const {
    return {(u - cx) * depth / fx, (v - cy) * depth / fy, depth};
  }
  CameraIntrinsics scaled(double s) const {
    return {fx * s, fy * s, cx * s, cy * s, static_cast<int>(width * s), static_cast<int>(height * s)};
  }
};

void validate(const CameraIntrinsics& intr);

// ---------------------------------------------------------------------------
// Rigid pose helpers.

/// Closest rotation in Frobenius norm (SVD projection onto SO(3)).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 3> nearest_rotation(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, 3, 3>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix<Scalar, 3, 3> d = Eigen::Matrix<Scalar, 3, 3>::Identity();
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < Scalar(0)) d(2, 2) = Scalar(-1);
  return svd.matrixU() * d * svd.matrixV().transpose();
}

/// Deviation of R from orthonormality: max(|RᵀR − I|∞, |det R − 1|).
template <typename Derived>
typename Derived::Scalar rotation_error(const Eigen::MatrixBase<Derived>& r) {
  using Scalar = typename Derived::Scalar;
  const Scalar ortho = (r.transpose() * r - Eigen::Matrix<Scalar, 3, 3>::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(r.determinant() - Scalar(1)));
}

inline bool is_valid_pose(const RigidPose& pose, double tol = 1e-6) {
  return pose.matrix().allFinite() && rotation_error(pose.linear()) <= tol;
}

inline RigidPose make_pose(const Mat3& r, const Vec3& t) {
  RigidPose p = RigidPose::Identity();
  p.linear() = r;
  p.translation() = t;
  return p;
}

/// Rotation angle of R in radians.
inline double rotation_angle(const Mat3& r) {
  const double c = std::clamp((r.trace() - 1.0) * 0.5, -1.0, 1.0);
  return std::acos(c);
}

/// 64-bit seed derived from a master seed and a stage name (FNV-1a + splitmix).
std::uint64_t derive_seed(std::uint64_t master, const std::string& stage, std::uint64_t index = 0);

}  // namespace matfusion
