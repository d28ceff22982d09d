#include "affsl2/relations.hpp"

#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace affsl2 {

namespace {

struct MemoKey {
  HighestWeight hw;
  int i, n;
  ColoredPartition pi;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = PartitionHash{}(k.pi);
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::size_t>(k.hw.k0));
    mix(static_cast<std::size_t>(k.hw.k1));
    mix(static_cast<std::size_t>(k.hw.kind));
    mix(static_cast<std::size_t>(static_cast<std::uint32_t>(k.i)));
    mix(static_cast<std::size_t>(static_cast<std::uint32_t>(k.n)));
    return h;
  }
};

// Symmetric sum over y(j_1)...y(j_{k+1}), sum of modes = n, every mode
// <= cap; each multiset weighted by its multinomial multiplicity.
ModuleVector bottom_component(int n, HighestWeight hw, const ColoredPartition& pi) {
  int k = hw.level();
  int r = k + 1;
  ModuleVector v0 = ModuleVector::basis_vector(hw, pi);
  int cap = -pi.degree();  // larger modes annihilate the vector
  ModuleVector out(hw);

  std::vector<int> modes;  // chosen descending
  Int factorial_r = 1;
  for (int t = 2; t <= r; ++t) factorial_r *= t;

  auto emit = [&] {
    Int denom = 1;
    int run = 1;
    for (std::size_t t = 1; t < modes.size(); ++t) {
      if (modes[t] == modes[t - 1]) {
        ++run;
        denom *= run;
      } else
        run = 1;
    }
    Rat coeff = Rat(factorial_r) / Rat(denom);
    LieWord w;
    for (int j : modes) w.factors.push_back(Y(j));
    out += coeff * act_word(w, v0);
  };

  // Choosing j <= maxmode leaves rem-j for slots-1 modes each <= j, so
  // slots*j >= rem is required and the descent terminates.
  std::function<void(int, int, int)> rec = [&](int slots, int rem, int maxmode) {
    if (slots == 1) {
      if (rem <= maxmode) {
        modes.push_back(rem);
        emit();
        modes.pop_back();
      }
      return;
    }
    for (int j = maxmode; slots * j >= rem; --j) {
      modes.push_back(j);
      rec(slots - 1, rem - j, j);
      modes.pop_back();
    }
  };
  rec(r, n, cap);
  return out;
}

thread_local std::unordered_map<MemoKey, ModuleVector, MemoKeyHash> g_r_memo;

}  // namespace

ModuleVector r_apply_basis(RelationId id, HighestWeight hw,
                           const ColoredPartition& pi) {
  int k = hw.level();
  if (id.i < -k - 1 || id.i > k + 1)
    throw std::domain_error("r_apply: |i| > k+1");

  MemoKey key{hw, id.i, id.n, pi};
  if (auto it = g_r_memo.find(key); it != g_r_memo.end()) return it->second;

  ModuleVector out(hw);
  if (id.i == -k - 1) {
    out = bottom_component(id.n, hw, pi);
  } else {
    // (k+1+i) r_i(n) = [x(0), r_{i-1}(n)]
    RelationId below{id.i - 1, id.n};
    ModuleVector v = ModuleVector::basis_vector(hw, pi);
    ModuleVector xv = act_part(X(0), v);
    ModuleVector first = act_part(X(0), r_apply_basis(below, hw, pi));
    ModuleVector second = r_apply(below, xv);
    out = first - second;
    out *= frac(1, k + 1 + id.i);
  }
  g_r_memo.emplace(std::move(key), out);
  return out;
}

ModuleVector r_apply(RelationId id, const ModuleVector& v) {
  ModuleVector out(v.hw());
  for (const auto& [pi, c] : v.terms())
    out += c * r_apply_basis(id, v.hw(), pi);
  return out;
}

namespace {

// r terms out of range contribute nothing.
ModuleVector r_apply_or_zero(int i, int n, const ModuleVector& v) {
  int k = v.hw().level();
  if (i < -k - 1 || i > k + 1) return ModuleVector(v.hw());
  return r_apply({i, n}, v);
}

}  // namespace

bool check_8_1(int n, const ModuleVector& v) {
  if (v.is_zero()) return true;
  int k = v.hw().level();
  int d = v.degree();
  ModuleVector acc(v.hw());
  // x(j) commutes with the top component, so annihilation modes truncate
  // the sum to n+d <= j <= -d.
  for (int j = n + d; j <= -d; ++j) {
    Rat c = Rat((k + 2)) * j - n;
    if (c == 0) continue;
    acc += c * act_part(X(j), r_apply_or_zero(k + 1, n - j, v));
  }
  return acc.is_zero();
}

bool check_8_4(int i, int n, const ModuleVector& v) {
  if (v.is_zero()) return true;
  int k = v.hw().level();
  if (i < -k - 2 || i > k + 2) throw std::domain_error("check_8_4: |i| > k+2");
  int d = v.degree();
  ModuleVector acc(v.hw());
  for (int j = n + d; j < 0; ++j) {
    Rat c = Rat((k + 2)) * j - n;
    if (c == 0) continue;
    acc += c * act_part(X(j), r_apply_or_zero(i - 1, n - j, v));
    acc -= c * act_part(H(j), r_apply_or_zero(i, n - j, v));
    acc -= c * act_part(Y(j), r_apply_or_zero(i + 1, n - j, v));
  }
  for (int j = 0; j <= -d; ++j) {
    Rat c = Rat((k + 2)) * j - n;
    if (c == 0) continue;
    acc += c * r_apply_or_zero(i - 1, n - j, act_part(X(j), v));
    acc -= c * r_apply_or_zero(i, n - j, act_part(H(j), v));
    acc -= c * r_apply_or_zero(i + 1, n - j, act_part(Y(j), v));
  }
  return acc.is_zero();
}

bool check_8_5(int i, int n, const ModuleVector& v) {
  if (v.is_zero()) return true;
  int k = v.hw().level();
  if (i < -k - 1 || i > k + 1) throw std::domain_error("check_8_5: |i| > k+1");
  int d = v.degree();
  ModuleVector acc(v.hw());
  auto add_group = [&](int comp, Part (*mk)(int), const Rat& c) {
    if (c == 0) return;
    for (int j = n + d; j < 0; ++j)
      acc += c * act_part(mk(j), r_apply_or_zero(comp, n - j, v));
    for (int j = 0; j <= -d; ++j)
      acc += c * r_apply_or_zero(comp, n - j, act_part(mk(j), v));
  };
  add_group(i - 1, X, Rat(k + 2 - i));
  add_group(i, H, Rat(i));
  add_group(i + 1, Y, Rat(k + 2 + i));
  acc -= Rat((k + 2)) * Rat(-n - k - 1) * r_apply({i, n}, v);
  return acc.is_zero();
}

std::optional<ColoredPartition> expected_vacuum_leading_term(RelationId id,
                                                             HighestWeight hw) {
  int k = hw.level();
  int i = id.i, n = id.n;
  if (n <= -k - 1) return catalog_lt_R(k, i, n);
  if (n > 0) return std::nullopt;  // positive degree kills the vacuum

  // -k-1 < n <= 0: set a = -n.
  if (hw.kind == ModuleKind::GeneralizedVerma) return std::nullopt;
  int a = -n;
  if (i <= a - k - 1) {
    // y(-1)^r h(-1)^(a-r) y^b with r = -i - (k+1-a)
    int b = k + 1 - a;
    int r = -i - b;
    std::vector<ColoredPartition::Entry> es;
    if (r) es.push_back({Y(-1), r});
    if (a - r) es.push_back({H(-1), a - r});
    es.push_back({Y(0), b});
    return ColoredPartition(std::move(es));
  }
  if (i <= 2 * a - k - 1) {
    // h(-1)^r x(-1)^(a-r) y^b with r = 2a-k-1-i
    int b = k + 1 - a;
    int r = 2 * a - k - 1 - i;
    std::vector<ColoredPartition::Entry> es;
    if (r) es.push_back({H(-1), r});
    es.push_back({X(-1), a - r});
    es.push_back({Y(0), b});
    return ColoredPartition(std::move(es));
  }
  if (i <= a) {
    // short window: lt = x(-1)^a y^b with b = a-i, when a > k0 or b > k1;
    // otherwise the relation annihilates the highest weight vector.
    int b = a - i;
    if (a > hw.k0 || b > hw.k1) {
      std::vector<ColoredPartition::Entry> es;
      if (a) es.push_back({X(-1), a});
      if (b) es.push_back({Y(0), b});
      return ColoredPartition(std::move(es));
    }
    return std::nullopt;
  }
  // i > a: r(x(-1)^a h^{k+1-a-b} x^b) v with b = i-a > 0 vanishes.
  return std::nullopt;
}

std::vector<SweepEntry> leading_terms_sweep(HighestWeight hw, int n_min, int n_max) {
  int k = hw.level();
  std::vector<SweepEntry> out;
  ModuleVector vac = ModuleVector::vacuum(hw);
  for (int n = n_min; n <= n_max; ++n)
    for (int i = -k - 1; i <= k + 1; ++i) {
      SweepEntry e;
      e.id = {i, n};
      ModuleVector r = r_apply(e.id, vac);
      if (!r.is_zero()) e.computed = leading_term(r);
      e.expected = expected_vacuum_leading_term(e.id, hw);
      e.match = e.computed == e.expected;
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace affsl2
