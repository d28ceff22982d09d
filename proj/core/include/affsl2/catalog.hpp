#pragma once

#include <vector>

#include "affsl2/partition.hpp"

namespace affsl2 {

/// The leading term pi_{m.alpha}(n) of the relation r_{m.alpha}(n) at level
/// k: the unique smallest colored partition of length k+1 and shape
/// (j-1)^a j^b with a(j-1)+bj = n, a+b = k+1, colored according to m.
/// Requires |m| <= k+1.
ColoredPartition catalog_lt_R(int k, int m, int n);

/// Splits n = (k+1)j - a with 0 <= a <= k; returns {j, a}.
std::pair<int, int> catalog_shape_params(int k, int n);

/// One generator of the leading-term ideal of R-bar acting on the highest
/// weight vector of M(Lambda): the partition, the relation label (m, n)
/// realizing it, and whether it is one of the short initial terms
/// x(-1)^a y^b of length < k+1.
struct LtGenerator {
  ColoredPartition partition;
  int m = 0;
  int n = 0;
  bool short_term = false;
};

/// All generators of (lt(R-bar v_Lambda)) with degree >= min_degree:
/// pi_{m.alpha}(n) for -k-1 <= n <= min_degree... i.e. n in
/// [min_degree, -k-1], together with the Lambda-dependent initial terms
/// (-k-1 < n <= 0).  min_degree <= 0; pass the degree of the partition
/// being tested (generators below it cannot embed).
std::vector<LtGenerator> catalog_lt_R_vLambda(int k0, int k1, int min_degree);

/// Convenience: just the partitions of catalog_lt_R_vLambda.
std::vector<ColoredPartition> catalog_lt_R_vLambda_partitions(int k0, int k1,
                                                              int min_degree);

/// The Lambda-dependent initial terms alone (the generators with
/// -k-1 < n <= 0), deduplicated.
std::vector<LtGenerator> catalog_initial_terms(int k0, int k1);

/// Difference conditions (four sliding-window sums <= k for every j) and
/// initial conditions pi(x(-1)) <= k0, pi(y(0)) <= k1.
bool satisfies_conditions(const ColoredPartition& pi, int k0, int k1);

}  // namespace affsl2
