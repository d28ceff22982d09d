#include "affsl2/catalog.hpp"

#include <set>
#include <stdexcept>

namespace affsl2 {

std::pair<int, int> catalog_shape_params(int k, int n) {
  // n = (k+1)j - a, 0 <= a <= k
  int kk = k + 1;
  int a = ((-n) % kk + kk) % kk;
  int j = (n + a) / kk;
  return {j, a};
}

ColoredPartition catalog_lt_R(int k, int m, int n) {
  if (m < -k - 1 || m > k + 1)
    throw std::domain_error("catalog_lt_R: |m| > k+1");
  auto [j, a] = catalog_shape_params(k, n);
  int b = k + 1 - a;
  std::vector<ColoredPartition::Entry> es;

  // Four coloring families of the shape (j-1)^a j^b; they overlap at the
  // boundary parameters but agree there, so the first hit wins.
  // 1: y(j-1)^r h(j-1)^(a-r) y(j)^b,  a >= r >= 0,  m = -k-1+a-r
  {
    int r = a - (m + k + 1);
    if (r >= 0 && r <= a) {
      if (r) es.push_back({Y(j - 1), r});
      if (a - r) es.push_back({H(j - 1), a - r});
      if (b) es.push_back({Y(j), b});
      return ColoredPartition(std::move(es));
    }
  }
  // 2: h(j-1)^r x(j-1)^(a-r) y(j)^b,  a > r >= 0,  m = -k-1+2a-r
  {
    int r = 2 * a - (m + k + 1);
    if (r >= 0 && r < a) {
      if (r) es.push_back({H(j - 1), r});
      if (a - r) es.push_back({X(j - 1), a - r});
      if (b) es.push_back({Y(j), b});
      return ColoredPartition(std::move(es));
    }
  }
  // 3: x(j-1)^a y(j)^r h(j)^(b-r),  b >= r >= 0,  m = k+1-b-r
  {
    int r = k + 1 - b - m;
    if (r >= 0 && r <= b) {
      if (a) es.push_back({X(j - 1), a});
      if (r) es.push_back({Y(j), r});
      if (b - r) es.push_back({H(j), b - r});
      return ColoredPartition(std::move(es));
    }
  }
  // 4: x(j-1)^a h(j)^r x(j)^(b-r),  b > r >= 0,  m = k+1-r
  {
    int r = k + 1 - m;
    if (r >= 0 && r < b) {
      if (a) es.push_back({X(j - 1), a});
      if (r) es.push_back({H(j), r});
      if (b - r) es.push_back({X(j), b - r});
      return ColoredPartition(std::move(es));
    }
  }
  throw std::logic_error("catalog_lt_R: no family matched");
}

std::vector<LtGenerator> catalog_initial_terms(int k0, int k1) {
  int k = k0 + k1;
  std::vector<LtGenerator> out;
  std::set<std::vector<ColoredPartition::Entry>> seen;
  auto add = [&](ColoredPartition p, int m, int n, bool short_term) {
    if (seen.insert(p.entries()).second)
      out.push_back({std::move(p), m, n, short_term});
  };

  // Long initial terms, length k+1, shapes (-1)^a 0^b with b > 0:
  // y(-1)^r h(-1)^(a-r) y^b  (m = -r-b, n = -a)
  // h(-1)^r x(-1)^(a-r) y^b  (a > r, m = -b+a-r, n = -a)
  for (int a = 0; a <= k; ++a) {
    int b = k + 1 - a;
    for (int r = 0; r <= a; ++r) {
      std::vector<ColoredPartition::Entry> es;
      if (r) es.push_back({Y(-1), r});
      if (a - r) es.push_back({H(-1), a - r});
      es.push_back({Y(0), b});
      add(ColoredPartition(std::move(es)), -r - b, -a, false);
    }
    for (int r = 0; r < a; ++r) {
      std::vector<ColoredPartition::Entry> es;
      if (r) es.push_back({H(-1), r});
      es.push_back({X(-1), a - r});
      es.push_back({Y(0), b});
      add(ColoredPartition(std::move(es)), -b + a - r, -a, false);
    }
  }
  // Short terms x(-1)^a y^r with a+r < k+1 and a > k0 or r > k1
  // (m = a-r, n = -a).
  for (int a = 0; a <= k; ++a)
    for (int r = 0; a + r < k + 1; ++r) {
      if (!(a > k0 || r > k1)) continue;
      std::vector<ColoredPartition::Entry> es;
      if (a) es.push_back({X(-1), a});
      if (r) es.push_back({Y(0), r});
      add(ColoredPartition(std::move(es)), a - r, -a, true);
    }
  return out;
}

std::vector<LtGenerator> catalog_lt_R_vLambda(int k0, int k1, int min_degree) {
  int k = k0 + k1;
  std::vector<LtGenerator> out = catalog_initial_terms(k0, k1);
  for (int n = -k - 1; n >= min_degree; --n)
    for (int m = -k - 1; m <= k + 1; ++m)
      out.push_back({catalog_lt_R(k, m, n), m, n, false});
  return out;
}

std::vector<ColoredPartition> catalog_lt_R_vLambda_partitions(int k0, int k1,
                                                              int min_degree) {
  std::vector<ColoredPartition> ps;
  for (auto& g : catalog_lt_R_vLambda(k0, k1, min_degree))
    ps.push_back(std::move(g.partition));
  return ps;
}

bool satisfies_conditions(const ColoredPartition& pi, int k0, int k1) {
  int k = k0 + k1;
  if (pi.multiplicity(X(-1)) > k0 || pi.multiplicity(Y(0)) > k1) return false;
  if (pi.empty()) return true;
  auto m = [&pi](Color c, int d) { return pi.multiplicity({c, d}); };
  // windows at j touch degrees j-1 and j; support is [min_degree, 0]
  for (int j = pi.min_degree(); j <= pi.max_degree() + 1; ++j) {
    if (m(Color::y, j - 1) + m(Color::h, j - 1) + m(Color::y, j) > k) return false;
    if (m(Color::h, j - 1) + m(Color::x, j - 1) + m(Color::y, j) > k) return false;
    if (m(Color::x, j - 1) + m(Color::y, j) + m(Color::h, j) > k) return false;
    if (m(Color::x, j - 1) + m(Color::h, j) + m(Color::x, j) > k) return false;
  }
  return true;
}

}  // namespace affsl2
