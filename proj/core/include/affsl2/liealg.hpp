#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "affsl2/partition.hpp"

namespace affsl2 {

using Rat = mpq_class;
using Int = mpz_class;

/// num/den in canonical form.  The raw two-argument mpq_class constructor
/// does not reduce, which breaks gmp comparisons; always build fractions
/// through here.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

enum class ModuleKind { Verma, GeneralizedVerma };

/// Highest weight Lambda = k0.Lambda0 + k1.Lambda1 of level k = k0+k1,
/// together with the module flavor acting under it.  Verma modules use
/// the PBW alphabet of strictly negative modes plus y(0); the generalized
/// Verma module N(k.Lambda0) uses strictly negative modes only (all of
/// g(0) kills its vacuum) and requires k1 = 0.
struct HighestWeight {
  int k0 = 0;
  int k1 = 0;
  ModuleKind kind = ModuleKind::Verma;

  static HighestWeight verma(int k0, int k1);
  static HighestWeight generalized_verma(int k);

  int level() const { return k0 + k1; }
  Alphabet alphabet() const {
    return kind == ModuleKind::Verma ? Alphabet::BMinus : Alphabet::BStrictNeg;
  }
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
};

/// A vector in a highest weight module: a finite rational combination of
/// PBW basis partitions, all sharing one (degree, weight).  The map is
/// keyed in the partition order, so begin() is the leading term.
class ModuleVector {
 public:
  using Terms = std::map<ColoredPartition, Rat, PartitionLess>;

  explicit ModuleVector(HighestWeight hw) : hw_(hw) {}
  static ModuleVector vacuum(HighestWeight hw);
  static ModuleVector basis_vector(HighestWeight hw, const ColoredPartition& pi,
                                   const Rat& c = 1);

  const HighestWeight& hw() const { return hw_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // requires nonzero
  int weight() const;  // requires nonzero

  void add_term(const ColoredPartition& pi, const Rat& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rat& c);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rat& c, ModuleVector v) { return v *= c; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  HighestWeight hw_;
  Terms terms_;
};

/// A word b1(n1)...bs(ns) in the enveloping algebra, applied rightmost
/// factor first; no sortedness assumed.
struct LieWord {
  std::vector<Part> factors;
  Rat scalar = 1;
};

/// Exact action of b(n) on v, straightened to the PBW basis.
ModuleVector act_part(Part a, const ModuleVector& v);
/// u acting factor by factor, rightmost first.
ModuleVector act_word(const LieWord& u, const ModuleVector& v);
/// u(pi) v for a colored partition pi (its sorted word).
ModuleVector act_monomial(const ColoredPartition& pi, const ModuleVector& v);

/// All PBW alphabet partitions at (degree d, weight w), sorted descending
/// in the partition order (index 0 largest).
std::vector<ColoredPartition> grade_basis(HighestWeight hw, int d, int w);

/// The smallest partition appearing in v.  Throws on zero.
const ColoredPartition& leading_term(const ModuleVector& v);

/// Exact Sugawara operator L_m (normal ordering with the larger mode on
/// the right; dual bases x<->y, h<->h/2).  On N(k.Lambda0) this gives
/// L_0 = -degree and the derivation L_{-1}; on M(Lambda) the zero mode
/// adds the conformal weight of the highest weight vector.
ModuleVector sugawara_L(int m, const ModuleVector& v);

/// Conformal weight <Lambda, Lambda+2rho>/(2(k+2)) of the highest weight
/// vector, as the exact rational k1(k1+2)/(4(k+2)).
Rat conformal_weight(HighestWeight hw);

/// Checks [L_m, L_n] v = (m-n) L_{m+n} v + delta_{m+n,0} (m^3-m)/12 *
/// 3k/(k+2) v exactly.
bool virasoro_check(int m, int n, const ModuleVector& v);

/// The derivation formula for L_{-1} on N(k.Lambda0) (sum over factors of
/// the degree-shifted words).  Throws on Verma modules.
ModuleVector l_minus1_derivation(const ModuleVector& v);

/// Text form "c1 * pi1 + c2 * pi2" with exact rational literals, terms
/// ascending in the partition order; "0" for zero.
std::string to_string(const ModuleVector& v);

}  // namespace affsl2
