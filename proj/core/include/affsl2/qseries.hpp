#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "affsl2/partition.hpp"

namespace affsl2 {

using Int = mpz_class;

/// A power series in q with exact integer coefficients, truncated at
/// order N (coefficients 0..N kept).
class QSeries {
 public:
  explicit QSeries(int truncation);
  static QSeries one(int truncation);
  static QSeries monomial(int exponent, const Int& c, int truncation);

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  Int& coeff(int i) { return c_.at(static_cast<std::size_t>(i)); }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Multiplicative inverse; requires constant term +-1.
  QSeries inverse() const;
  friend QSeries operator/(const QSeries& a, const QSeries& b) {
    return a * b.inverse();
  }

  /// In-place multiplication by (1 - q^r)^e for e = +-1, and by (1 + q^r).
  void mul_one_minus_q(int r, int exponent);
  void mul_one_plus_q(int r);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Int> c_;
};

/// First mismatching exponent of two equally truncated series.
std::optional<int> first_mismatch(const QSeries& a, const QSeries& b);
bool identity_check(const QSeries& a, const QSeries& b);

/// A congruence class r0 mod M of positive integers (all r > 0 with
/// r ≡ r0 mod M).
struct CongruenceClass {
  int residue;
  int modulus;
};

/// prod_{classes_plus} (1+q^r) * prod_{classes_minus} (1-q^r)^{-1} to
/// order N; classes may repeat or be empty.
QSeries prod_congruence(const std::vector<CongruenceClass>& classes_plus,
                        const std::vector<CongruenceClass>& classes_minus, int N);

/// General sieve product: for each r in 1..N multiply by (1-q^r)^{e(r)}
/// and (1+q^r)^{p(r)}.
QSeries sieve_product(int N, const std::function<int(int)>& minus_exponent,
                      const std::function<int(int)>& plus_exponent);

/// P(s0,s1;q) = prod_{r = 0,s0 mod s} (1-q^r) prod_{r = s1 mod s} (1-q^r),
/// s = s0+s1.
QSeries P_product(int s0, int s1, int N);

/// Q(m0,2m1;q) = prod_{r = 0,±m0 mod 2m} (1-q^r) prod_{r = ±2m1 mod 4m}
/// (1-q^r), m = m0+m1 (2m1 may be odd).
QSeries Q_product(int m0, int two_m1, int N);

/// Affine Weyl numerator sum_{w} eps(w) q^{-<rho_s, w(L+rho)-(L+rho)>}
/// for Lambda = k0 L0 + k1 L1; the denominator is the k0 = k1 = 0 case.
QSeries weyl_numerator(int k0, int k1, int s0, int s1, int N);
QSeries weyl_denominator(int s0, int s1, int N);

/// Specialized character d^{s0,s1}_{k0,k1}(q) = numerator / denominator.
QSeries specialized_character(int k0, int k1, int s0, int s1, int N);

/// The closed product form of the character when one of the product
/// formulas applies ((s0,s1) = (1,1) or (1,2), or the Wakimoto weights);
/// nullopt when none applies.
std::optional<QSeries> character_product_form(int k0, int k1, int s0, int s1, int N);

/// Exponent maps turning colored partitions into plain partition weights.
struct Specialization {
  int s0 = 1;
  int s1 = 1;
  /// Exponent of one part (y(-j) -> s1+js, h(-j) -> js, x(-j) -> -s1+js;
  /// for s0 = s1 = 1 this is the two-colored principal map).
  int exponent(const Part& a) const;
  int exponent(const ColoredPartition& pi) const;
};

/// Generating function sum_pi q^{spec(pi)} over colored partitions in
/// P(B-minus) satisfying the difference and initial conditions of
/// (k0, k1), truncated at N.
QSeries conditioned_partition_gf(int k0, int k1, const Specialization& spec, int N);

/// Named product identities for the specialized characters.
QSeries rhs_11_1_9(int n, int N);
QSeries rhs_11_1_10(int n, int N);
QSeries rhs_11_1_11(int k0, int k1, int N);
QSeries rhs_11_1_12(int k0, int k1, int N);
QSeries rhs_11_1_13(int n, int N);
QSeries rhs_11_1_14(int n, int N);

/// Text form "1 + q + 2*q^2 + ... + c*q^N + ...".
std::string to_string(const QSeries& f);

}  // namespace affsl2
