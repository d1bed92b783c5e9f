#include "tschsim/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tschsim {

BipartiteSchedulingGraph::BipartiteSchedulingGraph(std::size_t n_sets, int n_slots, int n_offsets,
                                                   WeightMatrix weights)
    : n_sets_(n_sets),
      n_cells_(static_cast<std::size_t>(n_slots) * static_cast<std::size_t>(n_offsets)),
      n_slots_(n_slots),
      n_offsets_(n_offsets),
      weights_(std::move(weights)) {}

BipartiteSchedulingGraph build_bipartite(const IndependentSetCatalog& catalog, int n_slots, int n_offsets,
                                         std::span<const double> set_weights) {
  if (n_slots < 1 || n_offsets < 1) throw std::invalid_argument("slot-frame dimensions must be >= 1");
  if (set_weights.size() != catalog.size())
    throw std::invalid_argument("need exactly one weight per catalog entry");
  for (double w : set_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("set weights must be finite and >= 0");
  }
  const std::size_t n_cells = static_cast<std::size_t>(n_slots) * static_cast<std::size_t>(n_offsets);
  WeightMatrix w = padded_square_matrix(catalog.size(), n_cells,
                                        [&](std::size_t r, std::size_t) { return set_weights[r]; });
  return BipartiteSchedulingGraph(catalog.size(), n_slots, n_offsets, std::move(w));
}

namespace {

void check_square_non_negative(const WeightMatrix& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("empty weight matrix");
  for (const auto& row : w) {
    if (row.size() != n) throw std::invalid_argument("weight matrix must be square");
    for (double x : row) {
      if (!std::isfinite(x)) throw std::invalid_argument("weight matrix entries must be finite");
      if (x < 0.0) throw std::invalid_argument("weight matrix entries must be non-negative");
    }
  }
}

}  // namespace

Assignment hungarian_max_weight(const WeightMatrix& w) {
  check_square_non_negative(w);
  const std::size_t n = w.size();
  const double inf = std::numeric_limits<double>::infinity();

  // Kuhn-Munkres with potentials on cost = -weight, 1-based arrays.
  // match_col[j] holds the row currently matched to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    match_col[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match_col[j0];
      std::size_t j1 = 0;
      double delta = inf;
      const auto& row = w[i0 - 1];
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = -row[j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment result;
  result.pairs.resize(n);
  for (std::size_t j = 1; j <= n; ++j)
    result.pairs[match_col[j] - 1] = {static_cast<int>(match_col[j] - 1), static_cast<int>(j - 1)};
  for (const auto& [r, c] : result.pairs) result.total_weight += w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return result;
}

Assignment hungarian_with_forced(const WeightMatrix& weights, std::size_t forced_row, std::size_t forced_col) {
  check_square_non_negative(weights);
  const std::size_t n = weights.size();
  if (forced_row >= n || forced_col >= n) throw std::invalid_argument("forced entry outside matrix");

  double max_w = 0.0;
  for (const auto& row : weights)
    for (double x : row) max_w = std::max(max_w, x);
  const double bonus = 1.0 + static_cast<double>(n) * max_w;

  WeightMatrix boosted = weights;
  boosted[forced_row][forced_col] += bonus;
  Assignment a = hungarian_max_weight(boosted);

  bool contains = false;
  for (const auto& [r, c] : a.pairs)
    if (static_cast<std::size_t>(r) == forced_row && static_cast<std::size_t>(c) == forced_col) contains = true;
  if (!contains) throw std::logic_error("forced edge missing from the optimal matching");

  a.total_weight = assignment_weight(a, weights);
  return a;
}

double assignment_weight(const Assignment& assignment, const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  std::vector<char> row_seen(n, 0), col_seen(n, 0);
  double total = 0.0;
  for (const auto& [r, c] : assignment.pairs) {
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= n || static_cast<std::size_t>(c) >= n)
      throw std::invalid_argument("assignment pair outside the weight matrix");
    if (row_seen[static_cast<std::size_t>(r)] || col_seen[static_cast<std::size_t>(c)])
      throw std::invalid_argument("assignment reuses a vertex");
    row_seen[static_cast<std::size_t>(r)] = 1;
    col_seen[static_cast<std::size_t>(c)] = 1;
    total += weights[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return total;
}

}  // namespace tschsim
