#include "affsl2/embedding.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace affsl2 {

std::vector<Embedding> find_embeddings(const ColoredPartition& pi, int k) {
  std::vector<Embedding> out;
  if (pi.length() < k + 1 || pi.empty()) return out;
  // candidate shapes (j-1)^a j^b fit inside [min_degree, max_degree]
  for (int j = pi.min_degree(); j <= pi.max_degree() + 1; ++j)
    for (int a = 0; a <= k; ++a) {
      int n = (k + 1) * j - a;
      for (int m = -k - 1; m <= k + 1; ++m) {
        ColoredPartition rho = catalog_lt_R(k, m, n);
        if (pi.contains(rho)) out.push_back({std::move(rho), pi, m, n});
      }
    }
  return out;
}

bool linked(const Embedding& e1, const Embedding& e2, int k) {
  if (!(e1.pi == e2.pi)) throw std::domain_error("linked: embeddings in different pi");
  const ColoredPartition& pi = e1.pi;
  int bound = e1.rho.set_union(e2.rho).length();
  auto nodes = find_embeddings(pi, k);
  auto index_of = [&nodes](const ColoredPartition& rho) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].rho == rho) return i;
    throw std::logic_error("embedding not found among nodes");
  };
  std::size_t src = index_of(e1.rho), dst = index_of(e2.rho);
  if (src == dst) return true;
  std::vector<bool> seen(nodes.size(), false);
  std::queue<std::size_t> q;
  q.push(src);
  seen[src] = true;
  while (!q.empty()) {
    std::size_t cur = q.front();
    q.pop();
    for (std::size_t nxt = 0; nxt < nodes.size(); ++nxt) {
      if (seen[nxt]) continue;
      if (nodes[cur].rho.set_union(nodes[nxt].rho).length() >= bound) continue;
      if (nxt == dst) return true;
      seen[nxt] = true;
      q.push(nxt);
    }
  }
  return false;
}

namespace {

// Exponent of (color, degree) in pi.
int expo(const ColoredPartition& pi, Color c, int d) {
  return pi.multiplicity({c, d});
}

// Every part of pi lies in the given (color, degree) slot set.
bool only_slots(const ColoredPartition& pi, const std::vector<Part>& slots) {
  int total = 0;
  for (const Part& s : slots) total += pi.multiplicity(s);
  return total == pi.length();
}

void try_family(std::vector<FamilyMatch>& out, const ColoredPartition& pi, int k,
                int j) {
  auto e = [&](Color c, int d) { return expo(pi, c, d); };
  auto add = [&](int fam, int a, int b, int c) {
    FamilyMatch m{fam, j, a, b, c};
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };

  // (1) y(j)^a h(j)^{k+1-a} x(j)^a, 2 <= a <= k
  {
    int a = e(Color::y, j);
    if (a >= 2 && a <= k && e(Color::x, j) == a && e(Color::h, j) == k + 1 - a &&
        only_slots(pi, {Y(j), H(j), X(j)}))
      add(1, a, -1, -1);
  }
  // (2) x(j-1)^{k+1-a-b} y(j)^a h(j)^b x(j)^a, a >= 2, a+b <= k
  {
    int a = e(Color::y, j), b = e(Color::h, j);
    if (a >= 2 && a + b <= k && e(Color::x, j) == a &&
        e(Color::x, j - 1) == k + 1 - a - b &&
        only_slots(pi, {X(j - 1), Y(j), H(j), X(j)}))
      add(2, a, b, -1);
  }
  // (3) h(j-1)^{k+1-a-b} x(j-1)^a y(j)^b x(j)^{k+1-a}, 1 <= a <= k-1
  {
    int a = e(Color::x, j - 1), b = e(Color::y, j);
    if (a >= 1 && a <= k - 1 && k + 1 - a - b >= 0 &&
        e(Color::h, j - 1) == k + 1 - a - b && e(Color::x, j) == k + 1 - a &&
        only_slots(pi, {H(j - 1), X(j - 1), Y(j), X(j)}))
      add(3, a, b, -1);
  }
  // (4) h(j-1)^{k+1-a-b} x(j-1)^a y(j)^b h(j)^{k+1-a-b}, 1 <= a+b <= k-1
  {
    int a = e(Color::x, j - 1), b = e(Color::y, j);
    if (a + b >= 1 && a + b <= k - 1 && e(Color::h, j - 1) == k + 1 - a - b &&
        e(Color::h, j) == k + 1 - a - b &&
        only_slots(pi, {H(j - 1), X(j - 1), Y(j), H(j)}))
      add(4, a, b, -1);
  }
  // (5) y(j-1)^{k+1-a} x(j-1)^b y(j)^a h(j)^{k+1-a-b}, 1 <= a <= k-1
  {
    int a = e(Color::y, j), b = e(Color::x, j - 1);
    if (a >= 1 && a <= k - 1 && k + 1 - a - b >= 0 &&
        e(Color::y, j - 1) == k + 1 - a && e(Color::h, j) == k + 1 - a - b &&
        only_slots(pi, {Y(j - 1), X(j - 1), Y(j), H(j)}))
      add(5, a, b, -1);
  }
  // (6) y(j-1)^a h(j-1)^b x(j-1)^a y(j)^{k+1-a-b}, a >= 2, a+b <= k
  {
    int a = e(Color::y, j - 1), b = e(Color::h, j - 1);
    if (a >= 2 && a + b <= k && e(Color::x, j - 1) == a &&
        e(Color::y, j) == k + 1 - a - b &&
        only_slots(pi, {Y(j - 1), H(j - 1), X(j - 1), Y(j)}))
      add(6, a, b, -1);
  }
  // (7) y(j-1)^{k+1-a-c} h(j-1)^c x(j-1)^b y(j)^a h(j)^{k+1-a-b},
  //     a, c >= 1, a+b+c <= k
  {
    int a = e(Color::y, j), b = e(Color::x, j - 1), c = e(Color::h, j - 1);
    if (a >= 1 && c >= 1 && a + b + c <= k &&
        e(Color::y, j - 1) == k + 1 - a - c && e(Color::h, j) == k + 1 - a - b &&
        only_slots(pi, {Y(j - 1), H(j - 1), X(j - 1), Y(j), H(j)}))
      add(7, a, b, c);
  }
  // (8) h(j-1)^{k+1-a-b} x(j-1)^a y(j)^b h(j)^c x(j)^{k+1-a-c},
  //     a, c >= 1, a+b+c <= k
  {
    int a = e(Color::x, j - 1), b = e(Color::y, j), c = e(Color::h, j);
    if (a >= 1 && c >= 1 && a + b + c <= k &&
        e(Color::h, j - 1) == k + 1 - a - b && e(Color::x, j) == k + 1 - a - c &&
        only_slots(pi, {H(j - 1), X(j - 1), Y(j), H(j), X(j)}))
      add(8, a, b, c);
  }
  // (9) x(j-2)^a y(j-1)^b h(j-1)^{k+1-a-b} y(j)^a, 2 <= a <= k
  {
    int a = e(Color::x, j - 2), b = e(Color::y, j - 1);
    if (a >= 2 && a <= k && k + 1 - a - b >= 0 && e(Color::y, j) == a &&
        e(Color::h, j - 1) == k + 1 - a - b &&
        only_slots(pi, {X(j - 2), Y(j - 1), H(j - 1), Y(j)}))
      add(9, a, b, -1);
  }
  // (10) x(j-2)^a h(j-1)^{k+1-a-b} x(j-1)^b y(j)^a, 2 <= a <= k
  {
    int a = e(Color::x, j - 2), b = e(Color::x, j - 1);
    if (a >= 2 && a <= k && k + 1 - a - b >= 0 && e(Color::y, j) == a &&
        e(Color::h, j - 1) == k + 1 - a - b &&
        only_slots(pi, {X(j - 2), H(j - 1), X(j - 1), Y(j)}))
      add(10, a, b, -1);
  }
  // (11) x(j-2)^{k+1-a-b} h(j-1)^a x(j-1)^b y(j)^c h(j)^{k+1-b-c},
  //      1 <= b <= k-1, a+b+c <= k
  {
    int a = e(Color::h, j - 1), b = e(Color::x, j - 1), c = e(Color::y, j);
    if (b >= 1 && b <= k - 1 && a + b + c <= k && k + 1 - a - b >= 0 &&
        e(Color::x, j - 2) == k + 1 - a - b && e(Color::h, j) == k + 1 - b - c &&
        only_slots(pi, {X(j - 2), H(j - 1), X(j - 1), Y(j), H(j)}))
      add(11, a, b, c);
  }
  // (12) x(j-2)^{k+1-a-b} h(j-1)^a x(j-1)^b h(j)^c x(j)^{k+1-b-c},
  //      1 <= b <= k-1, a+b <= k
  {
    int a = e(Color::h, j - 1), b = e(Color::x, j - 1), c = e(Color::h, j);
    if (b >= 1 && b <= k - 1 && a + b <= k && k + 1 - a - b >= 0 &&
        k + 1 - b - c >= 0 && e(Color::x, j - 2) == k + 1 - a - b &&
        e(Color::x, j) == k + 1 - b - c &&
        only_slots(pi, {X(j - 2), H(j - 1), X(j - 1), H(j), X(j)}))
      add(12, a, b, c);
  }
  // (13) h(j-2)^{k+1-b-c} x(j-2)^c y(j-1)^b h(j-1)^a y(j)^{k+1-a-b},
  //      1 <= b <= k-1, a+b+c <= k
  {
    int a = e(Color::h, j - 1), b = e(Color::y, j - 1), c = e(Color::x, j - 2);
    if (b >= 1 && b <= k - 1 && a + b + c <= k && k + 1 - b - c >= 0 &&
        k + 1 - a - b >= 0 && e(Color::h, j - 2) == k + 1 - b - c &&
        e(Color::y, j) == k + 1 - a - b &&
        only_slots(pi, {H(j - 2), X(j - 2), Y(j - 1), H(j - 1), Y(j)}))
      add(13, a, b, c);
  }
  // (14) y(j-2)^{k+1-b-c} h(j-2)^c y(j-1)^b h(j-1)^a y(j)^{k+1-a-b},
  //      1 <= b <= k-1, a+b <= k
  {
    int a = e(Color::h, j - 1), b = e(Color::y, j - 1), c = e(Color::h, j - 2);
    if (b >= 1 && b <= k - 1 && a + b <= k && k + 1 - b - c >= 0 &&
        k + 1 - a - b >= 0 && e(Color::y, j - 2) == k + 1 - b - c &&
        e(Color::y, j) == k + 1 - a - b &&
        only_slots(pi, {Y(j - 2), H(j - 2), Y(j - 1), H(j - 1), Y(j)}))
      add(14, a, b, c);
  }
}

}  // namespace

PairClass classify_pair(const Embedding& e1, const Embedding& e2, int k) {
  if (!(e1.pi == e2.pi))
    throw std::domain_error("classify_pair: embeddings in different pi");
  if (e1.rho == e2.rho) return {PairTag::Identical, {}};
  if (e1.rho.set_intersect(e2.rho).empty()) return {PairTag::Disjoint, {}};
  if (linked(e1, e2, k)) return {PairTag::Linked, {}};

  const ColoredPartition& pi = e1.pi;
  std::vector<FamilyMatch> matches;
  int top = pi.max_degree();
  for (int j = top; j <= top + 2; ++j) try_family(matches, pi, k, j);
  if (matches.empty())
    throw std::logic_error(
        "classify_pair: unlinked pair matches no exceptional family: " +
        to_string(pi));
  return {PairTag::Exceptional, std::move(matches)};
}

bool yx1_linked(const ColoredPartition& rho1, const ColoredPartition& rho2,
                int k0, int k1) {
  ColoredPartition pi = rho1.set_union(rho2);
  int bound = pi.length();
  ColoredPartition step_set =
      ColoredPartition::single(Y(0)).mul(ColoredPartition::single(X(-1)));

  // nodes: every element of lt(R-bar v_Lambda) embedded in pi
  std::vector<ColoredPartition> nodes;
  for (auto& g : catalog_lt_R_vLambda(k0, k1, pi.empty() ? 0 : pi.degree()))
    if (pi.contains(g.partition)) nodes.push_back(std::move(g.partition));
  auto index_of = [&nodes](const ColoredPartition& rho) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == rho) return i;
    return std::nullopt;
  };
  auto s = index_of(rho1), t = index_of(rho2);
  if (!s || !t) throw std::domain_error("yx1_linked: rho not a leading term in pi");
  if (*s == *t) return true;
  std::vector<bool> seen(nodes.size(), false);
  std::queue<std::size_t> q;
  q.push(*s);
  seen[*s] = true;
  while (!q.empty()) {
    std::size_t cur = q.front();
    q.pop();
    for (std::size_t nxt = 0; nxt < nodes.size(); ++nxt) {
      if (seen[nxt]) continue;
      ColoredPartition u = nodes[cur].set_union(nodes[nxt]);
      bool ok = u.length() < bound ||
                (step_set.contains(u.div(nodes[cur])) &&
                 step_set.contains(u.div(nodes[nxt])));
      if (!ok) continue;
      if (nxt == *t) return true;
      seen[nxt] = true;
      q.push(nxt);
    }
  }
  return false;
}

int dual_family(int family) {
  switch (family) {
    case 1: return 1;
    case 2: return 6;
    case 6: return 2;
    case 3: return 5;
    case 5: return 3;
    case 4: return 4;
    case 7: return 8;
    case 8: return 7;
    case 9: return 10;
    case 10: return 9;
    case 11: return 13;
    case 13: return 11;
    case 12: return 14;
    case 14: return 12;
  }
  throw std::domain_error("family index out of range");
}

std::vector<K2Entry> length_k2_catalog(int k, int j) {
  std::vector<K2Entry> out;
  std::set<std::vector<ColoredPartition::Entry>> seen;
  auto add = [&](std::vector<std::pair<Part, int>> es, int N) {
    std::erase_if(es, [](const auto& e) { return e.second == 0; });
    for (const auto& e : es)
      if (e.second < 0) return;  // pattern undefined at these parameters
    ColoredPartition pi(std::move(es));
    if (seen.insert(pi.entries()).second) out.push_back({std::move(pi), N});
  };

  // case (1): shape j^{k+2}
  for (int a = 1; a <= k + 1; ++a) add({{H(j), a}, {X(j), k + 2 - a}}, 2);
  add({{Y(j), 1}, {H(j), k}, {X(j), 1}}, 2);
  for (int a = 1; a <= k + 1; ++a) add({{Y(j), k + 2 - a}, {H(j), a}}, 2);

  // case (2): shape (j-1)^a j^b, a, b > 0, a+b = k+2
  for (int a = 1; a <= k + 1; ++a) {
    int b = k + 2 - a;
    add({{X(j - 1), a}, {X(j), b}}, 2);
    for (int c = 1; c <= b - 1; ++c)
      add({{X(j - 1), a}, {H(j), c}, {X(j), b - c}}, 3);
    add({{X(j - 1), a}, {H(j), b}}, 2);
    if (b >= 2) add({{X(j - 1), a}, {Y(j), 1}, {H(j), b - 2}, {X(j), 1}}, 2);
    for (int c = 1; c <= b - 1; ++c)
      add({{X(j - 1), a}, {Y(j), c}, {H(j), b - c}}, 3);
    add({{X(j - 1), a}, {Y(j), b}}, 2);
    add({{H(j - 1), 1}, {X(j - 1), a - 1}, {Y(j), b - 1}, {H(j), 1}}, 2);
    for (int c = 1; c <= a - 1; ++c)
      add({{H(j - 1), c}, {X(j - 1), a - c}, {Y(j), b}}, 3);
    add({{H(j - 1), a}, {Y(j), b}}, 2);
    if (a >= 2) add({{Y(j - 1), 1}, {H(j - 1), a - 2}, {X(j - 1), 1}, {Y(j), b}}, 2);
    for (int c = 1; c <= a - 1; ++c)
      add({{Y(j - 1), c}, {H(j - 1), a - c}, {Y(j), b}}, 3);
    add({{Y(j - 1), a}, {Y(j), b}}, 2);
    if (b == 1) {
      add({{X(j - 1), a}, {H(j), 1}}, 2);
      add({{H(j - 1), 1}, {X(j - 1), a - 1}, {X(j), 1}}, 2);
    }
    if (a == 1) {
      add({{H(j - 1), 1}, {Y(j), b}}, 2);
      add({{Y(j - 1), 1}, {Y(j), b - 1}, {H(j), 1}}, 2);
    }
  }

  // case (3): shape (j-1) j^k (j+1)
  add({{X(j - 1), 1}, {X(j), k}, {X(j + 1), 1}}, 2);
  add({{X(j - 1), 1}, {X(j), k}, {H(j + 1), 1}}, 2);
  for (int a = 0; a <= k; ++a)
    add({{X(j - 1), 1}, {H(j), a}, {X(j), k - a}, {Y(j + 1), 1}}, 2);
  for (int a = 1; a <= k; ++a)
    add({{X(j - 1), 1}, {Y(j), a}, {H(j), k - a}, {Y(j + 1), 1}}, 2);
  add({{Y(j - 1), 1}, {Y(j), k}, {Y(j + 1), 1}}, 2);
  add({{H(j - 1), 1}, {Y(j), k}, {Y(j + 1), 1}}, 2);

  return out;
}

}  // namespace affsl2
