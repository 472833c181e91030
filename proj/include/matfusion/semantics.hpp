#pragma once

#include <cstdint>
#include <functional>

#include "matfusion/core.hpp"
#include "matfusion/materials.hpp"

namespace matfusion {

using ClassMatrix = Eigen::Matrix<double, kNumMaterials, Eigen::Dynamic>;
using ClassVector = Eigen::Matrix<double, kNumMaterials, 1>;

/// Per-pixel class distribution stored column-per-pixel (row-major pixel order).
struct ProbabilityMap {
  int width = 0;
  int height = 0;
  ClassMatrix prob;
  Mask valid;

  ProbabilityMap() = default;
  ProbabilityMap(int w, int h)
      : width(w), height(h), prob(ClassMatrix::Zero(kNumMaterials, static_cast<Eigen::Index>(w) * h)), valid(w, h, 0) {}

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
  auto pixel(int u, int v) { return prob.col(static_cast<Eigen::Index>(valid.index(u, v))); }
  auto pixel(int u, int v) const { return prob.col(static_cast<Eigen::Index>(valid.index(u, v))); }
};

/// Throws InvalidArgument unless every valid column is a distribution within `tol`.
void validate(const ProbabilityMap& map, double tol = 1e-6);

struct SegmenterNoise {
  double confusion_prob = 0;
  int leak_concentration = 1;
  std::uint64_t seed = 0;
};

/// Soft noise: mass confusion_prob leaks evenly onto leak_concentration random distractors.
ProbabilityMap oracle_segment(const LabelImage& true_labels, const SegmenterNoise& noise);

inline constexpr double kFlipModalProb = 0.8;

/// Hard noise: with flip_prob the modal class is a random wrong class. The modal
/// class gets 0.8 and the remaining 0.2 is spread over the other 22 classes.
ProbabilityMap flip_segment(const LabelImage& true_labels, double flip_prob, std::uint64_t seed);

/// How pairwise messages are summed. Both methods are exact over all pixel pairs;
/// the separable one groups pixels by guide color and applies the spatial Gaussians
/// as dense matrix products, which is only used when few distinct colors exist.
enum class MessagePassing { kAuto, kBruteForce, kSeparable };

struct CrfParams {
  double w_appearance = 10.0;
  double w_smooth = 3.0;
  double theta_alpha = 60.0;  // px
  double theta_beta = 20.0;   // color units on a 0..255 scale
  double theta_gamma = 3.0;   // px
  int iterations = 5;
  MessagePassing method = MessagePassing::kAuto;
};

void validate(const CrfParams& params);

inline constexpr std::size_t kMaxCrfPixels = 16384;
inline constexpr std::size_t kMaxSeparableColors = 32;

struct ImageTooLarge : Error {
  explicit ImageTooLarge(std::size_t pixels);
};
struct InvalidUnary : Error {
  explicit InvalidUnary(const std::string& what);
};

/// Called after every mean-field iteration with (iteration index, current Q).
using CrfObserver = std::function<void(int, const ProbabilityMap&)>;

/// Mean-field inference in the fully connected Potts CRF with appearance and
/// smoothness Gaussian kernels. Guide colors are unit-interval and scaled to 0..255.
ProbabilityMap dense_crf_refine(const ProbabilityMap& unary, const ColorImage& guide, const CrfParams& params,
                                const CrfObserver& observer = {});

/// Per-pixel argmax, lowest class id on ties, 255 for invalid pixels.
LabelImage argmax_labels(const ProbabilityMap& prob);

}  // namespace matfusion
