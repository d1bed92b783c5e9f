#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tschsim/topology.hpp"

namespace tschsim {

using WeightMatrix = std::vector<std::vector<double>>;

/// Perfect matching on a padded square instance: every row and every column
/// appears exactly once across `pairs`.
struct Assignment {
  std::vector<std::pair<int, int>> pairs;  // (row, column), sorted by row
  double total_weight = 0.0;
};

/// Scheduling bipartite graph: catalog entries (rows) against slot-frame
/// cells (columns), zero-padded to square so a perfect matching always
/// exists. Cell c covers slot c / n_offsets at channel offset c % n_offsets.
class BipartiteSchedulingGraph {
 public:
  BipartiteSchedulingGraph() = default;
  BipartiteSchedulingGraph(std::size_t n_sets, int n_slots, int n_offsets, WeightMatrix weights);

  std::size_t n_real_sets() const { return n_sets_; }
  std::size_t n_real_cells() const { return n_cells_; }
  std::size_t padded_size() const { return weights_.size(); }
  int n_slots() const { return n_slots_; }
  int n_offsets() const { return n_offsets_; }
  int cell_slot(std::size_t cell) const { return static_cast<int>(cell) / n_offsets_; }
  int cell_offset(std::size_t cell) const { return static_cast<int>(cell) % n_offsets_; }

  std::size_t n_edges() const { return n_sets_ * n_cells_; }
  std::size_t edge_id(std::size_t set, std::size_t cell) const { return set * n_cells_ + cell; }
  std::size_t edge_set(std::size_t edge) const { return edge / n_cells_; }
  std::size_t edge_cell(std::size_t edge) const { return edge % n_cells_; }

  double weight(std::size_t row, std::size_t col) const { return weights_[row][col]; }
  const WeightMatrix& weights() const { return weights_; }

 private:
  std::size_t n_sets_ = 0;
  std::size_t n_cells_ = 0;
  int n_slots_ = 0;
  int n_offsets_ = 0;
  WeightMatrix weights_;
};

/// Builds the graph from one weight per catalog entry; the weight repeats
/// across all cells of that row (hopping makes cells interchangeable in the
/// mean) and zero padding squares the instance.
BipartiteSchedulingGraph build_bipartite(const IndependentSetCatalog& catalog, int n_slots, int n_offsets,
                                         std::span<const double> set_weights);

/// Max-weight perfect matching on a square non-negative matrix, O(n^3).
/// Deterministic: rows are processed in ascending order and column scans
/// break ties toward lower indices. Throws std::invalid_argument for
/// non-square or negative input.
Assignment hungarian_max_weight(const WeightMatrix& weights);

/// Max-weight perfect matching constrained to contain (forced_row,
/// forced_col), via a large additive bonus on that entry. The returned total
/// is computed against the original weights.
Assignment hungarian_with_forced(const WeightMatrix& weights, std::size_t forced_row, std::size_t forced_col);

/// Total weight of an assignment under a weight matrix; validates that the
/// pairs fit the matrix and form a matching.
double assignment_weight(const Assignment& assignment, const WeightMatrix& weights);

/// Zero-padded square matrix with entry (set, cell) taken from a
/// per-(set, cell) weight callback. Shared helper for schedules built from
/// realized (slot-dependent) weights.
template <typename WeightFn>
WeightMatrix padded_square_matrix(std::size_t n_sets, std::size_t n_cells, WeightFn&& fn) {
  const std::size_t n = n_sets > n_cells ? n_sets : n_cells;
  WeightMatrix w(n, std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < n_sets; ++r)
    for (std::size_t c = 0; c < n_cells; ++c) w[r][c] = fn(r, c);
  return w;
}

}  // namespace tschsim
