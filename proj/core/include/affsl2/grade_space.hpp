#pragma once

#include <map>

#include "affsl2/relations.hpp"

namespace affsl2 {

/// Exact integer matrix rank by fraction-free (Bareiss) elimination.
int matrix_rank(std::vector<std::vector<Int>> m);

/// One graded piece of M(Lambda) together with the span of
/// M^1(Lambda) = R-bar M(Lambda) inside it.  The span rows are kept in
/// echelon form pivoted on the last nonzero column; with the basis listed
/// descending, each pivot column is the leading term of its row.
struct GradeSpace {
  HighestWeight hw;
  int d = 0;
  int w = 0;
  std::vector<ColoredPartition> basis;    // descending, index 0 largest
  std::vector<std::vector<Rat>> m1_span;  // echelon rows spanning M^1
  std::vector<std::size_t> pivots;        // pivot column of each row
  int rank = 0;

  /// Coordinates of v in this grade's basis; throws if a key is missing.
  std::vector<Rat> coordinates(const ModuleVector& v) const;
  ModuleVector vector_of_row(const std::vector<Rat>& row) const;
  /// True iff v lies in the span of m1_span.
  bool contains(const ModuleVector& v) const;
  /// Leading terms of the row space: the pivot partitions, ascending.
  std::vector<ColoredPartition> row_space_leading_terms() const;
};

/// The (d, w) grade of M(Lambda) with the M^1 span, built recursively
/// from shallower grades (memoized per module).
const GradeSpace& m1_grade(HighestWeight hw, int d, int w);

/// dim L(Lambda) at (d, w) = dim M(Lambda) grade - rank of the M^1 span.
int l_dimension(HighestWeight hw, int d, int w);
int l_dimension(const GradeSpace& g);

enum class RhoChoice { CmpMinimal, CmpMaximal };

/// Checks that { u(pi/rho(pi)) r(rho(pi)) v_Lambda : pi in the grade's
/// ideal slice } is a linearly independent spanning set of the M^1 grade,
/// with rho(pi) the cmp-minimal or cmp-maximal admissible generator.
/// Also verifies lt(u(rho in pi) v_Lambda) = pi for every vector.
bool basis_check_652(HighestWeight hw, int d, int w, RhoChoice choice);

struct DimensionRow {
  int k0, k1, d, w;
  int dim_M;
  int rank_M1;
  int dim_L;
  int count_conditions;
  bool match;
};

/// Full dimension table for 0 >= d >= -max_depth over the weight window
/// where either side can be nonzero (margin included).
std::vector<DimensionRow> character_table(HighestWeight hw, int max_depth);

/// Applies the r(rho) relation attached to a generator: r_{m a}(n) v_Lambda.
ModuleVector relation_of_generator(const LtGenerator& g, HighestWeight hw);

}  // namespace affsl2
