#pragma once

#include <map>
#include <optional>

#include "affsl2/catalog.hpp"
#include "affsl2/liealg.hpp"

namespace affsl2 {

/// Label (i, n) of the relation coefficient r_{i.alpha}(n) at level k;
/// |i| <= k+1.
struct RelationId {
  int i = 0;
  int n = 0;
};

/// Applies r_{i.alpha}(n) to v, exactly.  The bottom component
/// r_{-(k+1).alpha}(n) is the full symmetric sum of y-monomials; higher
/// components follow by the adjoint x(0) recursion with the 1/(k+1+i)!
/// normalization.  Sums are finite because modes above -degree(v) kill v.
ModuleVector r_apply(RelationId id, const ModuleVector& v);

/// r_apply on a single PBW basis vector; memoized per (module, i, n, pi).
ModuleVector r_apply_basis(RelationId id, HighestWeight hw,
                           const ColoredPartition& pi);

/// The derivative identity sum_j ((k+2)j - n) x(j) r_{(k+1)a}(n-j) = 0
/// evaluated on v; true iff exactly zero.
bool check_8_1(int n, const ModuleVector& v);

/// The adjoint family of the derivative identity, i in [-k-2, k+2];
/// relation components out of |m| <= k+1 are absent.
bool check_8_4(int i, int n, const ModuleVector& v);

/// The Sugawara-derivation identity
///   (k+2-i) {x, r_{(i-1)a}}(n) + i {h, r_{ia}}(n) + (k+2+i) {y, r_{(i+1)a}}(n)
///     = (k+2)(-n-k-1) r_{ia}(n)
/// with creation modes left, annihilation modes right; i in [-k-1, k+1].
bool check_8_5(int i, int n, const ModuleVector& v);

/// Closed-form expectation for lt(r_{ia}(n) vacuum): the catalog partition
/// for n <= -k-1; for -k-1 < n <= 0 the Lambda-dependent initial term, or
/// nothing when the relation vanishes on the vacuum.  On N(k.Lambda0) all
/// components with n > -k-1 vanish.
std::optional<ColoredPartition> expected_vacuum_leading_term(RelationId id,
                                                             HighestWeight hw);

struct SweepEntry {
  RelationId id;
  std::optional<ColoredPartition> computed;  // nullopt when the vector is 0
  std::optional<ColoredPartition> expected;
  bool match = false;
};

/// Computes lt(r_{ia}(n) vacuum) for all |i| <= k+1, n in [n_min, n_max],
/// against the closed-form catalog.
std::vector<SweepEntry> leading_terms_sweep(HighestWeight hw, int n_min, int n_max);

}  // namespace affsl2
