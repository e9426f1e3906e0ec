#pragma once

// The planar lattice network whose path matrix is the Toeplitz matrix of a
// PF-regime ray, and the Lindstrom-Gessel-Viennot identity checks built on
// it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raypf/bigint.hpp"
#include "raypf/budget.hpp"
#include "raypf/exact_core.hpp"
#include "raypf/total_positivity.hpp"

namespace raypf {

struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  // Every edge raises i + j, by 1 (unit steps) or 2 (diagonals).
  std::int64_t level() const noexcept { return i + j; }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Vertices V = {(i, j) : i >= 0, 0 <= (b-a)i + bj <= bn - ak} clipped to
/// 0 <= i <= max sink i-coordinate, in topological order (level, then i).
/// Edges go (i,j)->(i+1,j) and (i,j)->(i,j+1), plus (i,j)->(i+1,j+1) in
/// Delannoy mode, whenever both endpoints are in V.
class LatticeNetwork {
 public:
  const RayParams& params() const noexcept { return params_; }
  bool delannoy_mode() const noexcept { return delannoy_; }
  int source_count() const noexcept { return static_cast<int>(sources_.size()); }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return succ_.at(v); }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return pred_.at(v); }
  std::size_t edge_count() const noexcept;

  /// Exact membership in V (ignores the materialization clip).
  bool in_band(std::int64_t i, std::int64_t j) const noexcept;
  std::optional<std::size_t> index_of(std::int64_t i, std::int64_t j) const;

  std::size_t source(int r) const { return sources_.at(static_cast<std::size_t>(r)); }
  std::size_t sink(int r) const { return sinks_.at(static_cast<std::size_t>(r)); }

  /// s_r = (b r, (a-b) r) and t_r = (k + b r, n - k + (a-b) r).
  static LatticePoint source_point(const RayParams& p, std::int64_t r);
  static LatticePoint sink_point(const RayParams& p, std::int64_t r);

 private:
  friend LatticeNetwork build_network(const RayParams&, int, bool);
  explicit LatticeNetwork(const RayParams& p) : params_(p) {}

  RayParams params_;
  bool delannoy_ = false;
  std::int64_t i_min_ = 0, i_max_ = -1;
  std::vector<LatticePoint> vertices_;
  std::vector<std::vector<std::size_t>> succ_, pred_;
  // Dense lookup over the clipped (i, j) box; npos marks vertices outside V.
  std::int64_t j_min_ = 0, j_span_ = 0;
  std::vector<std::size_t> lookup_;
  std::vector<std::size_t> sources_, sinks_;
};

/// Materializes the network for sources s_0..s_{count-1} and sinks
/// t_0..t_{count-1}. Throws std::invalid_argument outside the PF regime.
LatticeNetwork build_network(const RayParams& params, int source_count, bool delannoy_mode);

enum class SweepDirection { SourceToSink, SinkToSource };

/// Number of directed paths s_i -> t_j.
BigInt path_count(const LatticeNetwork& net, int i, int j,
                  SweepDirection direction = SweepDirection::SourceToSink);

/// Paths from s_r to every vertex, indexed like net.vertices().
std::vector<BigInt> paths_from_source(const LatticeNetwork& net, int r);

/// w(i, j) = path_count(i, j) for all source/sink pairs.
BigMatrix path_matrix(const LatticeNetwork& net);

/// Families of pairwise vertex-disjoint paths s_{I_r} -> t_{J_r}, matched by
/// rank. Counted exactly by a level-synchronous search over joint path
/// positions, with identical frontiers merged; `budget` caps the number of
/// frontier states visited (BudgetExceeded beyond it).
BigInt disjoint_families(const LatticeNetwork& net, const std::vector<int>& sources,
                         const std::vector<int>& sinks,
                         std::uint64_t budget = default_enumeration_budget());

struct LgvMismatch {
  MinorSpec spec;
  BigInt minor;
  BigInt families;
};

struct LgvReport {
  explicit LgvReport(const RayParams& p) : params(p) {}

  RayParams params;
  int window = 0;
  int max_order = 0;
  bool delannoy_mode = false;
  BigMatrix path_matrix;
  std::vector<BigInt> sequence;  // C_j or D_j for j < window

  bool toeplitz_match = true;
  std::optional<std::pair<int, int>> toeplitz_mismatch;  // first (i, j)
  bool minors_match_families = true;
  std::optional<LgvMismatch> family_mismatch;
  bool minors_nonnegative = true;
  std::optional<MinorWitness> negative_minor;
  std::uint64_t minors_checked = 0;

  bool passed() const noexcept {
    return toeplitz_match && minors_match_families && minors_nonnegative;
  }
};

/// Builds the network, compares its path matrix with the Toeplitz window of
/// the exact ray sequence, and compares every minor up to max_order with the
/// disjoint-family count. Stops at the first mismatch of either kind.
LgvReport verify_lgv(const RayParams& params, int window, int max_order, bool delannoy_mode,
                     std::uint64_t minor_budget = default_minor_budget(),
                     std::uint64_t enumeration_budget = default_enumeration_budget());

/// Graphviz text; vertices pinned at (i, j), sources and sinks labeled.
std::string export_dot(const LatticeNetwork& net);

}  // namespace raypf
