#include "affsl2/grade_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace affsl2 {

int matrix_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

std::vector<Int> clear_denominators(const std::vector<Rat>& row) {
  Int lcm = 1;
  for (const Rat& r : row)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den().get_mpz_t());
  std::vector<Int> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rat scaled = row[i] * Rat(lcm);
    out[i] = scaled.get_num();
  }
  return out;
}

std::vector<std::vector<Int>> integerize(const std::vector<std::vector<Rat>>& rows) {
  std::vector<std::vector<Int>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(clear_denominators(r));
  return out;
}

// Reduces `row` against the echelon rows (pivot = last nonzero column);
// returns false if it reduces to zero, otherwise inserts it.
bool echelon_add(std::vector<std::vector<Rat>>& rows,
                 std::vector<std::size_t>& pivots, std::vector<Rat> row) {
  auto last_nonzero = [](const std::vector<Rat>& r) -> std::ptrdiff_t {
    for (std::ptrdiff_t c = static_cast<std::ptrdiff_t>(r.size()) - 1; c >= 0; --c)
      if (r[static_cast<std::size_t>(c)] != 0) return c;
    return -1;
  };
  for (;;) {
    std::ptrdiff_t c = last_nonzero(row);
    if (c < 0) return false;
    std::size_t col = static_cast<std::size_t>(c);
    auto it = std::find(pivots.begin(), pivots.end(), col);
    if (it == pivots.end()) {
      Rat inv = 1 / row[col];
      for (auto& x : row) x *= inv;
      rows.push_back(std::move(row));
      pivots.push_back(col);
      return true;
    }
    const auto& base = rows[static_cast<std::size_t>(it - pivots.begin())];
    Rat f = row[col];  // base has pivot entry 1
    for (std::size_t j = 0; j <= col; ++j) row[j] -= f * base[j];
    row[col] = 0;
  }
}

// True iff row reduces to zero against the echelon.
bool echelon_contains(const std::vector<std::vector<Rat>>& rows,
                      const std::vector<std::size_t>& pivots,
                      std::vector<Rat> row) {
  for (;;) {
    std::ptrdiff_t c = -1;
    for (std::ptrdiff_t t = static_cast<std::ptrdiff_t>(row.size()) - 1; t >= 0; --t)
      if (row[static_cast<std::size_t>(t)] != 0) {
        c = t;
        break;
      }
    if (c < 0) return true;
    std::size_t col = static_cast<std::size_t>(c);
    auto it = std::find(pivots.begin(), pivots.end(), col);
    if (it == pivots.end()) return false;
    const auto& base = rows[static_cast<std::size_t>(it - pivots.begin())];
    Rat f = row[col];
    for (std::size_t j = 0; j <= col; ++j) row[j] -= f * base[j];
    row[col] = 0;
  }
}

struct GradeKey {
  int k0, k1, d, w;
  bool operator==(const GradeKey&) const = default;
};
struct GradeKeyHash {
  std::size_t operator()(const GradeKey& k) const {
    std::size_t h = 0;
    for (int v : {k.k0, k.k1, k.d, k.w})
      h = h * 1000003u + static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    return h;
  }
};

thread_local std::unordered_map<GradeKey, GradeSpace, GradeKeyHash> g_grade_cache;

const GradeSpace& build_grade(HighestWeight hw, int d, int w) {
  GradeKey key{hw.k0, hw.k1, d, w};
  if (auto it = g_grade_cache.find(key); it != g_grade_cache.end())
    return it->second;

  GradeSpace g;
  g.hw = hw;
  g.d = d;
  g.w = w;
  g.basis = grade_basis(hw, d, w);
  int k = hw.level();

  if (!g.basis.empty()) {
    // the grade's own relation vector r_{w a}(d) v
    if (w >= -k - 1 && w <= k + 1) {
      ModuleVector rv = r_apply({w, d}, ModuleVector::vacuum(hw));
      if (!rv.is_zero())
        echelon_add(g.m1_span, g.pivots, g.coordinates(rv));
    }
    // parts applied to the spans of shallower grades; every element of
    // M^1 = U(n-)(R-bar v) decomposes through its first PBW factor
    auto absorb = [&](Part b, const GradeSpace& prev) {
      for (const auto& row : prev.m1_span) {
        ModuleVector v = act_part(b, prev.vector_of_row(row));
        if (!v.is_zero()) echelon_add(g.m1_span, g.pivots, g.coordinates(v));
      }
    };
    if (hw.kind == ModuleKind::Verma && w + 1 <= -d) {
      const GradeSpace& prev = build_grade(hw, d, w + 1);
      absorb(Y(0), prev);
    }
    for (int n = -1; n >= d; --n)
      for (Color c : {Color::y, Color::h, Color::x}) {
        int wprev = w - color_weight(c);
        if (wprev > -(d - n)) continue;  // basis empty above the x-string
        const GradeSpace& prev = build_grade(hw, d - n, wprev);
        absorb({c, n}, prev);
      }
  }
  g.rank = static_cast<int>(g.m1_span.size());
  auto [it, inserted] = g_grade_cache.emplace(key, std::move(g));
  return it->second;
}

}  // namespace

std::vector<Rat> GradeSpace::coordinates(const ModuleVector& v) const {
  std::vector<Rat> row(basis.size(), Rat(0));
  for (const auto& [pi, c] : v.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), pi,
                               [](const ColoredPartition& a, const ColoredPartition& b) {
                                 return cmp_less(b, a);  // descending list
                               });
    if (it == basis.end() || !(*it == pi))
      throw std::logic_error("vector key outside the grade basis");
    row[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return row;
}

ModuleVector GradeSpace::vector_of_row(const std::vector<Rat>& row) const {
  ModuleVector v(hw);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) v.add_term(basis[i], row[i]);
  return v;
}

bool GradeSpace::contains(const ModuleVector& v) const {
  if (v.is_zero()) return true;
  return echelon_contains(m1_span, pivots, coordinates(v));
}

std::vector<ColoredPartition> GradeSpace::row_space_leading_terms() const {
  std::vector<ColoredPartition> lts;
  lts.reserve(pivots.size());
  for (std::size_t col : pivots) lts.push_back(basis[col]);
  std::sort(lts.begin(), lts.end(), PartitionLess{});
  return lts;
}

const GradeSpace& m1_grade(HighestWeight hw, int d, int w) {
  if (d > 0) throw std::domain_error("m1_grade: degree must be <= 0");
  if (hw.kind != ModuleKind::Verma)
    throw std::domain_error("m1_grade is defined on Verma modules");
  return build_grade(hw, d, w);
}

int l_dimension(const GradeSpace& g) {
  return static_cast<int>(g.basis.size()) - g.rank;
}

int l_dimension(HighestWeight hw, int d, int w) {
  return l_dimension(m1_grade(hw, d, w));
}

ModuleVector relation_of_generator(const LtGenerator& g, HighestWeight hw) {
  return r_apply({g.m, g.n}, ModuleVector::vacuum(hw));
}

bool basis_check_652(HighestWeight hw, int d, int w, RhoChoice choice) {
  const GradeSpace& g = m1_grade(hw, d, w);
  auto gens = catalog_lt_R_vLambda(hw.k0, hw.k1, d);

  std::vector<std::vector<Rat>> rows;
  int ideal_members = 0;
  for (const auto& pi : g.basis) {
    // admissible generators embedded in pi
    const LtGenerator* pick = nullptr;
    for (const auto& gen : gens) {
      if (!pi.contains(gen.partition)) continue;
      if (!pick) {
        pick = &gen;
        continue;
      }
      Ordering o = cmp(gen.partition, pick->partition);
      if ((choice == RhoChoice::CmpMinimal && o == Ordering::Less) ||
          (choice == RhoChoice::CmpMaximal && o == Ordering::Greater))
        pick = &gen;
    }
    if (!pick) continue;
    ++ideal_members;
    ModuleVector vec =
        act_monomial(pi.div(pick->partition), relation_of_generator(*pick, hw));
    if (vec.is_zero()) return false;
    if (!(leading_term(vec) == pi)) return false;
    rows.push_back(g.coordinates(vec));
  }
  // ideal slice must be exactly as large as the M^1 grade, and the chosen
  // vectors independent; they lie inside M^1 by construction.
  if (ideal_members != g.rank) return false;
  return matrix_rank(integerize(rows)) == ideal_members;
}

std::vector<DimensionRow> character_table(HighestWeight hw, int max_depth) {
  if (max_depth < 0) throw std::domain_error("max_depth must be >= 0");
  std::vector<DimensionRow> out;
  for (int d = 0; d >= -max_depth; --d) {
    int wmax = -d + 2;              // margin beyond the largest x-power
    int wmin = d - hw.k1 - 2;       // margin below the longest y-string
    for (int w = wmax; w >= wmin; --w) {
      const GradeSpace& g = m1_grade(hw, d, w);
      EnumerateOptions opts;
      opts.weight = w;
      opts.conditions = std::make_pair(hw.k0, hw.k1);
      int count = 0;
      enumerate_partitions(Alphabet::BMinus, d, opts,
                           [&count](const ColoredPartition&) { ++count; });
      DimensionRow row{hw.k0,
                       hw.k1,
                       d,
                       w,
                       static_cast<int>(g.basis.size()),
                       g.rank,
                       l_dimension(g),
                       count,
                       l_dimension(g) == count};
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace affsl2
