#include "affsl2/qseries.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace affsl2 {

QSeries::QSeries(int truncation) {
  if (truncation < 0) throw std::domain_error("negative truncation");
  c_.assign(static_cast<std::size_t>(truncation) + 1, Int(0));
}

QSeries QSeries::one(int truncation) {
  QSeries f(truncation);
  f.c_[0] = 1;
  return f;
}

QSeries QSeries::monomial(int exponent, const Int& c, int truncation) {
  QSeries f(truncation);
  if (exponent >= 0 && exponent <= truncation)
    f.c_[static_cast<std::size_t>(exponent)] = c;
  return f;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (truncation() != o.truncation())
    throw std::invalid_argument("truncation mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (truncation() != o.truncation())
    throw std::invalid_argument("truncation mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("truncation mismatch");
  QSeries out(a.truncation());
  std::size_t n = a.c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

QSeries QSeries::inverse() const {
  if (c_[0] != 1 && c_[0] != -1)
    throw std::domain_error("inverse requires unit constant term");
  QSeries out(truncation());
  out.c_[0] = c_[0];  // 1/c0 = c0 for c0 = +-1
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Int acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * out.c_[n - j];
    out.c_[n] = -c_[0] * acc;
  }
  return out;
}

void QSeries::mul_one_minus_q(int r, int exponent) {
  if (r <= 0) throw std::domain_error("factor exponent must be positive");
  std::size_t R = static_cast<std::size_t>(r);
  if (exponent == 1) {
    for (std::size_t i = c_.size(); i-- > R;) c_[i] -= c_[i - R];
  } else if (exponent == -1) {
    for (std::size_t i = R; i < c_.size(); ++i) c_[i] += c_[i - R];
  } else
    throw std::domain_error("exponent must be +-1");
}

void QSeries::mul_one_plus_q(int r) {
  if (r <= 0) throw std::domain_error("factor exponent must be positive");
  std::size_t R = static_cast<std::size_t>(r);
  for (std::size_t i = c_.size(); i-- > R;) c_[i] += c_[i - R];
}

std::optional<int> first_mismatch(const QSeries& a, const QSeries& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("truncation mismatch");
  for (int i = 0; i <= a.truncation(); ++i)
    if (a.coeff(i) != b.coeff(i)) return i;
  return std::nullopt;
}

bool identity_check(const QSeries& a, const QSeries& b) {
  return !first_mismatch(a, b).has_value();
}

QSeries prod_congruence(const std::vector<CongruenceClass>& classes_plus,
                        const std::vector<CongruenceClass>& classes_minus, int N) {
  QSeries f = QSeries::one(N);
  for (const auto& cl : classes_plus) {
    if (cl.modulus <= 0) throw std::domain_error("modulus must be positive");
    int r0 = ((cl.residue % cl.modulus) + cl.modulus) % cl.modulus;
    if (r0 == 0) r0 = cl.modulus;
    for (int r = r0; r <= N; r += cl.modulus) f.mul_one_plus_q(r);
  }
  for (const auto& cl : classes_minus) {
    if (cl.modulus <= 0) throw std::domain_error("modulus must be positive");
    int r0 = ((cl.residue % cl.modulus) + cl.modulus) % cl.modulus;
    if (r0 == 0) r0 = cl.modulus;
    for (int r = r0; r <= N; r += cl.modulus) f.mul_one_minus_q(r, -1);
  }
  return f;
}

QSeries sieve_product(int N, const std::function<int(int)>& minus_exponent,
                      const std::function<int(int)>& plus_exponent) {
  QSeries f = QSeries::one(N);
  for (int r = 1; r <= N; ++r) {
    int e = minus_exponent(r);
    for (; e > 0; --e) f.mul_one_minus_q(r, 1);
    for (; e < 0; ++e) f.mul_one_minus_q(r, -1);
    for (int p = plus_exponent(r); p > 0; --p) f.mul_one_plus_q(r);
  }
  return f;
}

QSeries P_product(int s0, int s1, int N) {
  if (s0 < 1 || s1 < 1) throw std::domain_error("P: s0, s1 >= 1");
  int s = s0 + s1;
  QSeries f = QSeries::one(N);
  for (int r = s; r <= N; r += s) f.mul_one_minus_q(r, 1);              // 0 mod s
  for (int r = s0; r <= N; r += s) f.mul_one_minus_q(r, 1);             // s0 mod s
  for (int r = s1; r <= N; r += s) f.mul_one_minus_q(r, 1);             // s1 mod s
  return f;
}

QSeries Q_product(int m0, int two_m1, int N) {
  if (m0 < 1 || two_m1 < 1) throw std::domain_error("Q: m0, 2m1 >= 1");
  int two_m = 2 * m0 + two_m1;  // 2m
  int four_m = 2 * two_m;
  QSeries f = QSeries::one(N);
  for (int r = two_m; r <= N; r += two_m) f.mul_one_minus_q(r, 1);      // 0 mod 2m
  for (int r = m0; r <= N; r += two_m) f.mul_one_minus_q(r, 1);        // m0
  for (int r = two_m - m0; r <= N; r += two_m) f.mul_one_minus_q(r, 1); // -m0
  for (int r = two_m1; r <= N; r += four_m) f.mul_one_minus_q(r, 1);    // 2m1
  for (int r = four_m - two_m1; r <= N; r += four_m) f.mul_one_minus_q(r, 1);
  return f;
}

namespace {

// Affine weights as integer triples (Lambda0, Lambda1, delta) with
// alpha0 = (2,-2,1), alpha1 = (-2,2,0).
struct Wt {
  long a0, a1, d;
};

Wt r0(Wt v) { return {-v.a0, v.a1 + 2 * v.a0, v.d - v.a0}; }
Wt r1(Wt v) { return {v.a0 + 2 * v.a1, -v.a1, v.d}; }

// <rho_s, w(L+rho)-(L+rho)> from the root-lattice coordinates of the
// difference: diff = p alpha0 + q alpha1 with p = delta-coefficient and
// q = p - (a0-coefficient)/2.
long pairing(const Wt& diff, int s0, int s1) {
  long p = diff.d;
  long q = p - diff.a0 / 2;
  return p * s0 + q * s1;
}

}  // namespace

QSeries weyl_numerator(int k0, int k1, int s0, int s1, int N) {
  if (k0 < 0 || k1 < 0 || s0 < 1 || s1 < 1)
    throw std::domain_error("weyl_numerator: bad parameters");
  QSeries f = QSeries::one(N);  // identity element contributes q^0

  Wt lam{k0 + 1, k1 + 1, 0};
  for (int chain = 0; chain < 2; ++chain) {
    Wt cur = lam;
    long prev_exp = 0;
    int sign = 1;
    for (int len = 1;; ++len) {
      cur = (chain == 0) == (len % 2 == 1) ? r0(cur) : r1(cur);
      sign = -sign;
      Wt diff{cur.a0 - lam.a0, cur.a1 - lam.a1, cur.d - lam.d};
      long e = -pairing(diff, s0, s1);
      if (e <= prev_exp)
        throw std::logic_error("weyl enumeration: exponents not increasing");
      prev_exp = e;
      if (e > N) break;
      f.coeff(static_cast<int>(e)) += sign;
    }
  }
  return f;
}

QSeries weyl_denominator(int s0, int s1, int N) {
  return weyl_numerator(0, 0, s0, s1, N);
}

QSeries specialized_character(int k0, int k1, int s0, int s1, int N) {
  return weyl_numerator(k0, k1, s0, s1, N) / weyl_denominator(s0, s1, N);
}

std::optional<QSeries> character_product_form(int k0, int k1, int s0, int s1,
                                              int N) {
  if (s0 == 1 && s1 == 1)
    return P_product(k0 + 1, k1 + 1, N) / P_product(1, 1, N);
  if (s0 == 1 && s1 == 2)
    return Q_product(k0 + 1, 2 * (k1 + 1), N) / P_product(1, 2, N);
  if (k0 == k1)  // (11.1.7) with n = k0+1
    return P_product((k0 + 1) * s0, (k0 + 1) * s1, N) / P_product(s0, s1, N);
  if (k1 == 2 * k0 + 1)  // (11.1.5) with n = k0+1
    return Q_product((k0 + 1) * s0, 2 * (k0 + 1) * s1, N) / P_product(s0, s1, N);
  if (k0 == 2 * k1 + 1)  // (11.1.6) with n = k1+1
    return Q_product((k1 + 1) * s1, 2 * (k1 + 1) * s0, N) / P_product(s0, s1, N);
  return std::nullopt;
}

int Specialization::exponent(const Part& a) const {
  int s = s0 + s1;
  int j = -a.degree;
  switch (a.color) {
    case Color::y:
      if (j < 0) throw std::domain_error("part outside B-minus");
      return s1 + j * s;
    case Color::h:
      if (j <= 0) throw std::domain_error("part outside B-minus");
      return j * s;
    case Color::x:
      if (j <= 0) throw std::domain_error("part outside B-minus");
      return -s1 + j * s;
  }
  throw std::logic_error("bad color");
}

int Specialization::exponent(const ColoredPartition& pi) const {
  int e = 0;
  for (const auto& [part, mult] : pi.entries()) e += mult * exponent(part);
  return e;
}

QSeries conditioned_partition_gf(int k0, int k1, const Specialization& spec,
                                 int N) {
  int k = k0 + k1;
  int s = spec.s0 + spec.s1;
  QSeries f(N);

  // multiplicities per level, chosen from degree 0 downward; my/mh/mx of
  // the previous level feed the window sums.
  struct Level {
    int my = 0, mh = 0, mx = 0;
  };
  std::vector<Level> levels;  // levels[j] = multiplicities at degree -j

  std::function<void(int, int)> rec = [&](int j, int budget) {
    // cheapest exponent at this level (x for j >= 1, y(0) at level 0)
    int cheapest = j == 0 ? spec.s1 : j * s - spec.s1;
    if (cheapest > budget) {
      f.coeff(N - budget) += 1;
      return;
    }
    int ey = spec.s1 + j * s;
    int eh = j * s;
    int ex = -spec.s1 + j * s;
    auto prev = [&](int idx, auto sel) {
      return idx >= 0 && idx < static_cast<int>(levels.size())
                 ? sel(levels[static_cast<std::size_t>(idx)])
                 : 0;
    };
    int py = prev(j - 1, [](const Level& l) { return l.my; });
    int ph = prev(j - 1, [](const Level& l) { return l.mh; });
    int px = prev(j - 1, [](const Level& l) { return l.mx; });

    int capy = j == 0 ? std::min(k, k1) : k;
    int caph = j == 0 ? 0 : k;
    int capx = j == 0 ? 0 : (j == 1 ? std::min(k, k0) : k);

    for (int my = 0; my <= capy && my * ey <= budget; ++my)
      for (int mh = 0; mh <= caph && my * ey + mh * eh <= budget; ++mh)
        for (int mx = 0; mx <= capx && my * ey + mh * eh + mx * ex <= budget;
             ++mx) {
          // windows at position -(j-1): parts of degrees -(j) and -(j-1);
          // in the paper's indexing with w = -(j-1):
          //   y(w-1)+h(w-1)+y(w), h(w-1)+x(w-1)+y(w),
          //   x(w-1)+y(w)+h(w),   x(w-1)+h(w)+x(w)
          if (my + mh + py > k) continue;
          if (mh + mx + py > k) continue;
          if (mx + py + ph > k) continue;
          if (mx + ph + px > k) continue;
          levels.push_back({my, mh, mx});
          rec(j + 1, budget - my * ey - mh * eh - mx * ex);
          levels.pop_back();
        }
  };
  levels.reserve(static_cast<std::size_t>(N / s + 3));
  rec(0, N);
  return f;
}

namespace {

int imod(int r, int m) { return ((r % m) + m) % m; }

}  // namespace

QSeries rhs_11_1_9(int n, int N) {
  // n = 2^a b, b odd
  int a = 0, b = n;
  while (b % 2 == 0) {
    b /= 2;
    ++a;
  }
  int aa = a;
  int bb = b;
  return sieve_product(
      N,
      [&](int r) {
        int e = 0;
        if (r % 2 == 1 && imod(r, 2 * bb) != imod(bb, 2 * bb)) e -= 1;
        int m = imod(r, 2 * n);
        if (m != 0 && m != imod(n, 2 * n)) e -= 1;
        return e;
      },
      [&](int r) {
        int p = 0;
        for (int j1 = 1; j1 <= aa; ++j1) {
          int base = (1 << (aa - j1)) * bb;
          if (imod(r, 2 * base) == imod(base, 2 * base)) ++p;
        }
        return p;
      });
}

QSeries rhs_11_1_10(int n, int N) {
  return sieve_product(
      N,
      [&](int r) {
        int e = 0;
        if (r % 2 == 1) e -= 1;
        int m = imod(r, 3 * n);
        if (m != 0 && m != imod(n, 3 * n) && m != imod(-n, 3 * n)) e -= 1;
        return e;
      },
      [](int) { return 0; });
}

QSeries rhs_11_1_11(int k0, int k1, int N) {
  int k = k0 + k1;
  if (k == 2 * k1) throw std::domain_error("11.1.11 requires k != 2 k1");
  return sieve_product(
      N,
      [&](int r) {
        int e = 0;
        if (r % 2 == 1) e -= 1;
        int m = imod(r, k + 2);
        if (m != 0 && m != imod(k0 + 1, k + 2) && m != imod(-(k0 + 1), k + 2))
          e -= 1;
        return e;
      },
      [](int) { return 0; });
}

QSeries rhs_11_1_12(int k0, int k1, int N) {
  int k = k0 + k1;
  if (k == 3 * k1 + 1) throw std::domain_error("11.1.12 requires k != 3 k1 + 1");
  int M2 = 2 * (k + 2), M4 = 4 * (k + 2);
  return sieve_product(
      N,
      [&](int r) {
        int m2 = imod(r, M2);
        bool ex1 = m2 == 0 || m2 == imod(k0 + 1, M2) || m2 == imod(-(k0 + 1), M2);
        int m4 = imod(r, M4);
        bool ex2 = m4 == imod(2 * (k1 + 1), M4) || m4 == imod(-2 * (k1 + 1), M4);
        return (ex1 || ex2) ? 0 : -1;
      },
      [](int) { return 0; });
}

QSeries rhs_11_1_13(int n, int N) {
  return sieve_product(
      N,
      [&](int r) {
        int m = imod(r, 6 * n);
        bool excluded = m == 0 || m == imod(n, 6 * n) || m == imod(-n, 6 * n) ||
                        m == imod(2 * n, 6 * n) || m == imod(-2 * n, 6 * n);
        return excluded ? 0 : -1;
      },
      [&](int r) {
        int m = imod(r, 6 * n);
        return (m == imod(n, 6 * n) || m == imod(-n, 6 * n)) ? 1 : 0;
      });
}

QSeries rhs_11_1_14(int n, int N) {
  return sieve_product(N, [&](int r) { return r % n == 0 ? 0 : -1; },
                       [](int) { return 0; });
}

std::string to_string(const QSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= f.truncation(); ++i) {
    const Int& c = f.coeff(i);
    if (c == 0) continue;
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0)
      os << abs.get_str();
    else {
      if (abs != 1) os << abs.get_str() << '*';
      os << 'q';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  os << " + ...";
  return os.str();
}

}  // namespace affsl2
