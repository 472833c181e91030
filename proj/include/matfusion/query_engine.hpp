#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matfusion/label_fusion.hpp"

namespace matfusion {

struct OctreeNode {
  Vec3 center;
  double half_extent = 0;
  int depth = 0;
  std::int32_t first_child = -1;  // children occupy [first_child, first_child + 8) in octant order
  std::vector<std::uint32_t> points;  // only populated in leaves

  bool is_leaf() const { return first_child < 0; }
  Eigen::AlignedBox3d bounds() const {
    return {center - Vec3::Constant(half_extent), center + Vec3::Constant(half_extent)};
  }
};

struct Octree {
  std::vector<OctreeNode> nodes;  // nodes[0] is the root
  int max_depth = 0;
  std::size_t leaf_capacity = 0;

  const OctreeNode& root() const { return nodes.front(); }
};

inline constexpr std::size_t kDefaultLeafCapacity = 32;
inline constexpr int kDefaultMaxDepth = 10;

struct EmptyModel : Error {
  EmptyModel() : Error(ErrorKind::kInvalidArgument, "octree: labeled surface model is empty") {}
};

/// Octant of `p` relative to `center`: bit 0 for x, bit 1 for y, bit 2 for z (set when >= center).
int octant_of(const Vec3& center, const Vec3& p);

Octree build_octree(const LabeledSurfaceModel& model, std::size_t leaf_capacity = kDefaultLeafCapacity,
                    int max_depth = kDefaultMaxDepth);

/// Index of the leaf reached by descending towards `p`.
std::size_t locate_leaf(const Octree& tree, const Vec3& p);

struct RayQueryHit {
  Vec3 position;
  Vec3 normal;
  MaterialId material = kUnknownMaterial;
  double confidence = 0;
  double traversal_distance = 0;
  std::uint32_t point_index = 0;
};

struct RayQueryOptions {
  bool prune = true;             // skip nodes entered beyond the current best hit
  std::size_t* nodes_visited = nullptr;
};

/// Nearest indexed point along the ray (minimal ray parameter t >= 0) whose
/// perpendicular distance to the ray is at most `radius`; ties go to the smaller index.
std::optional<RayQueryHit> raycast_query(const Octree& tree, const LabeledSurfaceModel& model, const Vec3& origin,
                                         const Vec3& direction, double radius, const RayQueryOptions& opts = {});

// ---------------------------------------------------------------------------
// Material responses.

enum class DecalKind { kHole, kCrack, kDent, kNone };

struct MaterialResponse {
  double restitution = 0;
  double friction = 0;
  double hardness = 0;
  DecalKind decal = DecalKind::kNone;
  int debris_min = 0;
  int debris_max = 0;
  double debris_speed_fraction = 0;
  std::string sound_id;
  bool penetrable = false;
};

struct MaterialTable {
  std::array<MaterialResponse, kNumMaterials> responses;
  double reference_energy = 50.0;  // J, penetration scale

  const MaterialResponse& operator[](MaterialId id) const { return responses.at(id); }
};

void validate(const MaterialResponse& r);
void validate(const MaterialTable& t);

MaterialTable default_material_table();

std::string_view decal_name(DecalKind k);
std::optional<DecalKind> decal_from_name(std::string_view name);

struct ImpactEvent {
  Vec3 origin = Vec3::Zero();
  Vec3 direction = Vec3::UnitZ();
  double mass = 0.01;   // kg
  double speed = 300;   // m/s
  std::uint64_t seed = 0;
};

enum class ImpactOutcome { kStopped, kRicochet, kPenetrated };
std::string_view outcome_name(ImpactOutcome o);

struct Debris {
  Vec3 position;
  Vec3 velocity;
  double mass = 0;
};

struct ImpactResult {
  DecalKind decal = DecalKind::kNone;
  Vec3 decal_position = Vec3::Zero();
  Vec3 decal_normal = Vec3::UnitZ();
  std::vector<Debris> debris;
  std::string sound_id;
  ImpactOutcome outcome = ImpactOutcome::kStopped;
  Vec3 outgoing_direction = Vec3::Zero();  // ricochet / penetration only
  double outgoing_speed = 0;
  MaterialId material = kUnknownMaterial;

  bool operator==(const ImpactResult& o) const;
};

inline constexpr double kRicochetMaxAngleDeg = 25.0;
inline constexpr double kRicochetMinHardness = 0.7;
inline constexpr double kDebrisConeDeg = 60.0;

struct UnknownMaterial : Error {
  explicit UnknownMaterial(MaterialId id);
};

double kinetic_energy(const ImpactEvent& e);
double debris_energy(const ImpactResult& r);

ImpactResult simulate_impact(const RayQueryHit& hit, const ImpactEvent& event, const MaterialTable& table);

struct ReplayEntry {
  std::optional<RayQueryHit> hit;
  std::optional<ImpactResult> result;
};

/// Casts each event's ray into the model and simulates the impact where it lands.
std::vector<ReplayEntry> replay_impacts(const Octree& tree, const LabeledSurfaceModel& model,
                                        const std::vector<ImpactEvent>& events, const MaterialTable& table,
                                        double radius);

}  // namespace matfusion
