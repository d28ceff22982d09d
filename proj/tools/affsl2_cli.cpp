#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "affsl2/embedding.hpp"
#include "affsl2/grade_space.hpp"
#include "affsl2/qseries.hpp"

using nlohmann::json;
using namespace affsl2;

namespace {

struct RunConfig {
  int k0 = 1, k1 = 0;
  int depth = 4;
  int truncate = 200;
  std::string suite;
  std::string format = "text";
  std::string out_path;
  std::string formula;
  int n = 2, s0 = 1, s1 = 1, m0 = 1, two_m1 = 2;
  int m = 0, rel_n = -2;
};

std::ostream& output_stream(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.out_path.empty()) return std::cout;
  file.open(cfg.out_path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + cfg.out_path);
  return file;
}

int default_truncation() {
  if (const char* env = std::getenv("AFFSL2_TRUNCATE")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 200;
}

// ---- dims ----------------------------------------------------------------

int cmd_dims(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = output_stream(cfg, file);
  auto rows = character_table(HighestWeight::verma(cfg.k0, cfg.k1), cfg.depth);
  bool all_match = true;
  if (cfg.format == "csv")
    os << "k0,k1,d,w,dim_M,rank_M1,dim_L,count_conditions,match\n";
  for (const auto& r : rows) {
    all_match &= r.match;
    if (cfg.format == "csv") {
      os << r.k0 << ',' << r.k1 << ',' << r.d << ',' << r.w << ',' << r.dim_M
         << ',' << r.rank_M1 << ',' << r.dim_L << ',' << r.count_conditions
         << ',' << (r.match ? 1 : 0) << '\n';
    } else if (cfg.format == "json") {
      json j{{"k0", r.k0},         {"k1", r.k1},
             {"d", r.d},           {"w", r.w},
             {"dim_M", r.dim_M},   {"rank_M1", r.rank_M1},
             {"dim_L", r.dim_L},   {"count_conditions", r.count_conditions},
             {"match", r.match}};
      os << j.dump() << '\n';
    } else {
      os << "d=" << r.d << " w=" << r.w << "  dim M=" << r.dim_M
         << "  rank M1=" << r.rank_M1 << "  dim L=" << r.dim_L
         << "  conditioned count=" << r.count_conditions
         << (r.match ? "  ok" : "  MISMATCH") << '\n';
    }
  }
  return all_match ? 0 : 1;
}

// ---- verify ---------------------------------------------------------------

struct SuiteRunner {
  std::ostream& os;
  bool all_pass = true;

  void report(const std::string& check, const json& params, bool pass) {
    all_pass &= pass;
    json j{{"check", check}, {"params", params}, {"pass", pass}};
    os << j.dump() << '\n';
  }
};

void suite_identities(SuiteRunner& sr, int N) {
  for (int n = 1; n <= 4; ++n)
    sr.report("11.1.9", {{"n", n}},
              identity_check(specialized_character(n - 1, n - 1, 1, 1, N),
                             rhs_11_1_9(n, N)));
  for (int n = 1; n <= 3; ++n)
    sr.report("11.1.10", {{"n", n}},
              identity_check(specialized_character(n - 1, 2 * n - 1, 1, 1, N),
                             rhs_11_1_10(n, N)));
  for (int k = 0; k <= 4; ++k)
    for (int k1 = 0; k1 <= k; ++k1) {
      if (k == 2 * k1) continue;
      sr.report("11.1.11", {{"k0", k - k1}, {"k1", k1}},
                identity_check(specialized_character(k - k1, k1, 1, 1, N),
                               rhs_11_1_11(k - k1, k1, N)));
    }
  for (int k = 0; k <= 4; ++k)
    for (int k1 = 0; k1 <= k; ++k1) {
      if (k == 3 * k1 + 1) continue;
      sr.report("11.1.12", {{"k0", k - k1}, {"k1", k1}},
                identity_check(specialized_character(k - k1, k1, 1, 2, N),
                               rhs_11_1_12(k - k1, k1, N)));
    }
  for (int n = 2; n <= 4; ++n)
    sr.report("11.1.13", {{"n", n}},
              identity_check(specialized_character(2 * n - 1, n - 1, 1, 2, N),
                             rhs_11_1_13(n, N)));
  for (int n = 2; n <= 4; ++n)
    sr.report("11.1.14", {{"n", n}},
              identity_check(specialized_character(n - 1, n - 1, 1, 2, N),
                             rhs_11_1_14(n, N)));
  for (int s0 = 1; s0 <= 4; ++s0)
    for (int s1 = 1; s1 <= 4; ++s1)
      sr.report("denominator-product", {{"s0", s0}, {"s1", s1}},
                identity_check(weyl_denominator(s0, s1, N), P_product(s0, s1, N)));
  for (auto [s0, s1] : {std::pair{1, 2}, {2, 1}, {1, 1}})
    for (int k = 0; k <= 3; ++k)
      for (int k1 = 0; k1 <= k; ++k1)
        sr.report("11.1.1b", {{"s0", s0}, {"s1", s1}, {"k0", k - k1}, {"k1", k1}},
                  identity_check(weyl_numerator(k - k1, k1, s0, s1, N),
                                 weyl_numerator(s0 - 1, s1 - 1, k - k1 + 1, k1 + 1, N)));
}

void suite_relations(SuiteRunner& sr, int k0, int k1, int depth) {
  HighestWeight hw = HighestWeight::verma(k0, k1);
  int k = hw.level();
  for (int d = 0; d >= -depth; --d) {
    for (int w = -d + 1; w >= d - k - 2; --w) {
      for (const auto& pi : grade_basis(hw, d, w)) {
        ModuleVector v = ModuleVector::basis_vector(hw, pi);
        bool ok = true;
        for (int n = -6; n <= 6 && ok; ++n) {
          ok = ok && check_8_1(n, v);
          for (int i = -k - 2; i <= k + 2 && ok; ++i) ok = check_8_4(i, n, v);
          for (int i = -k - 1; i <= k + 1 && ok; ++i) ok = check_8_5(i, n, v);
        }
        sr.report("8.1+8.4+8.5", {{"vector", to_string(pi)}, {"d", d}, {"w", w}}, ok);
      }
    }
  }
}

void suite_leading_terms(SuiteRunner& sr, int kmax) {
  for (int k = 0; k <= kmax; ++k) {
    for (int k1 = 0; k1 <= k; ++k1) {
      auto entries =
          leading_terms_sweep(HighestWeight::verma(k - k1, k1), -12, 0);
      bool ok = true;
      for (const auto& e : entries) ok &= e.match;
      sr.report("leading-terms-verma", {{"k0", k - k1}, {"k1", k1}}, ok);
    }
    auto entries = leading_terms_sweep(HighestWeight::generalized_verma(k), -12, 0);
    bool ok = true;
    for (const auto& e : entries) ok &= e.match;
    sr.report("leading-terms-nk", {{"k", k}}, ok);
  }
}

void suite_basis(SuiteRunner& sr, int k0, int k1, int depth) {
  HighestWeight hw = HighestWeight::verma(k0, k1);
  for (int d = 0; d >= -depth; --d)
    for (int w = -d + 2; w >= d - k0 - k1 - 2; --w) {
      bool ok = basis_check_652(hw, d, w, RhoChoice::CmpMinimal) &&
                basis_check_652(hw, d, w, RhoChoice::CmpMaximal);
      sr.report("6.5.2", {{"d", d}, {"w", w}}, ok);
    }
}

void suite_embeddings(SuiteRunner& sr, int k) {
  // pairwise classification over unions of catalog members anchored at j = -1
  std::vector<Embedding> pool;
  for (int j = -2; j <= 0; ++j)
    for (int a = 0; a <= k; ++a)
      for (int m = -k - 1; m <= k + 1; ++m) {
        ColoredPartition rho = catalog_lt_R(k, m, (k + 1) * j - a);
        pool.push_back({rho, rho, m, (k + 1) * j - a});
      }
  bool ok = true;
  int exceptional = 0, linked_count = 0, disjoint = 0;
  for (std::size_t i = 0; i < pool.size() && ok; ++i)
    for (std::size_t l = i + 1; l < pool.size() && ok; ++l) {
      ColoredPartition pi = pool[i].rho.set_union(pool[l].rho);
      Embedding e1{pool[i].rho, pi, pool[i].m, pool[i].n};
      Embedding e2{pool[l].rho, pi, pool[l].m, pool[l].n};
      try {
        PairClass pc = classify_pair(e1, e2, k);
        switch (pc.tag) {
          case PairTag::Exceptional: ++exceptional; break;
          case PairTag::Linked: ++linked_count; break;
          case PairTag::Disjoint: ++disjoint; break;
          default: break;
        }
      } catch (const std::exception&) {
        ok = false;
      }
    }
  sr.report("7.3.1-classification",
            {{"k", k},
             {"exceptional", exceptional},
             {"linked", linked_count},
             {"disjoint", disjoint}},
            ok);

  // the length-(k+2) catalog agrees with brute-force embedding counts
  bool catalog_ok = true;
  for (const auto& entry : length_k2_catalog(k, -2))
    catalog_ok &= static_cast<int>(find_embeddings(entry.pi, k).size()) ==
                  entry.embedding_count;
  sr.report("7.2-catalog", {{"k", k}}, catalog_ok);
}

int cmd_verify(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = output_stream(cfg, file);
  SuiteRunner sr{os};
  if (cfg.suite == "identities")
    suite_identities(sr, cfg.truncate);
  else if (cfg.suite == "relations")
    suite_relations(sr, cfg.k0, cfg.k1, cfg.depth);
  else if (cfg.suite == "leading-terms")
    suite_leading_terms(sr, 3);
  else if (cfg.suite == "basis")
    suite_basis(sr, cfg.k0, cfg.k1, cfg.depth);
  else if (cfg.suite == "embeddings")
    suite_embeddings(sr, cfg.k0 + cfg.k1);
  else
    throw CLI::ValidationError("--suite", "unknown suite " + cfg.suite);
  return sr.all_pass ? 0 : 1;
}

// ---- qseries ----------------------------------------------------------------

int cmd_qseries(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = output_stream(cfg, file);
  int N = cfg.truncate;
  QSeries f = QSeries::one(N);
  const std::string& id = cfg.formula;
  if (id == "11.1.9") f = rhs_11_1_9(cfg.n, N);
  else if (id == "11.1.10") f = rhs_11_1_10(cfg.n, N);
  else if (id == "11.1.11") f = rhs_11_1_11(cfg.k0, cfg.k1, N);
  else if (id == "11.1.12") f = rhs_11_1_12(cfg.k0, cfg.k1, N);
  else if (id == "11.1.13") f = rhs_11_1_13(cfg.n, N);
  else if (id == "11.1.14") f = rhs_11_1_14(cfg.n, N);
  else if (id == "P") f = P_product(cfg.s0, cfg.s1, N);
  else if (id == "Q") f = Q_product(cfg.m0, cfg.two_m1, N);
  else if (id == "character") f = specialized_character(cfg.k0, cfg.k1, cfg.s0, cfg.s1, N);
  else if (id == "numerator") f = weyl_numerator(cfg.k0, cfg.k1, cfg.s0, cfg.s1, N);
  else if (id == "denominator") f = weyl_denominator(cfg.s0, cfg.s1, N);
  else if (id == "gf")
    f = conditioned_partition_gf(cfg.k0, cfg.k1, {cfg.s0, cfg.s1}, N);
  else
    throw CLI::ValidationError("--formula", "unknown formula " + id);

  if (cfg.format == "json") {
    json coeffs = json::array();
    for (int i = 0; i <= N; ++i) coeffs.push_back(f.coeff(i).get_str());
    os << json{{"formula", id}, {"truncate", N}, {"coefficients", coeffs}}.dump()
       << '\n';
  } else if (cfg.format == "csv") {
    os << "exponent,coefficient\n";
    for (int i = 0; i <= N; ++i) os << i << ',' << f.coeff(i).get_str() << '\n';
  } else {
    os << to_string(f) << '\n';
  }
  return 0;
}

// ---- enumerate / catalog ----------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, int degree, bool conditioned,
                  std::optional<int> weight) {
  std::ofstream file;
  std::ostream& os = output_stream(cfg, file);
  EnumerateOptions opts;
  if (conditioned) opts.conditions = std::make_pair(cfg.k0, cfg.k1);
  if (weight) opts.weight = weight;
  enumerate_partitions(Alphabet::BMinus, degree, opts,
                       [&os, &cfg](const ColoredPartition& pi) {
                         if (cfg.format == "json")
                           os << to_json(pi) << '\n';
                         else
                           os << to_string(pi) << '\n';
                       });
  return 0;
}

int cmd_catalog(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = output_stream(cfg, file);
  int k = cfg.k0 + cfg.k1;
  ColoredPartition pi = catalog_lt_R(k, cfg.m, cfg.rel_n);
  if (cfg.format == "json")
    os << json{{"m", cfg.m}, {"n", cfg.rel_n}, {"lt", to_string(pi)}}.dump() << '\n';
  else
    os << to_string(pi) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for affine sl2 standard modules and their q-series identities"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.truncate = default_truncation();

  auto add_common = [&cfg](CLI::App* c, bool with_trunc = true) {
    c->add_option("--k0", cfg.k0, "Lambda0 coefficient");
    c->add_option("--k1", cfg.k1, "Lambda1 coefficient");
    c->add_option("--depth", cfg.depth, "depth of grades to cover")
        ->check(CLI::NonNegativeNumber);
    if (with_trunc)
      c->add_option("--truncate", cfg.truncate, "q-series truncation order")
          ->check(CLI::PositiveNumber);
    c->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    c->add_option("--out", cfg.out_path, "output file (default stdout)");
  };

  auto* dims = app.add_subcommand("dims", "dimension table of L(Lambda) with the conditioned-partition oracle");
  add_common(dims, false);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", cfg.suite,
                     "identities | relations | leading-terms | basis | embeddings")
      ->required()
      ->check(CLI::IsMember({"identities", "relations", "leading-terms", "basis",
                             "embeddings"}));

  auto* qs = app.add_subcommand("qseries", "print a q-series");
  add_common(qs);
  qs->add_option("--formula", cfg.formula,
                 "11.1.9..11.1.14 | P | Q | character | numerator | denominator | gf")
      ->required();
  qs->add_option("--n", cfg.n, "module family parameter");
  qs->add_option("--s0", cfg.s0, "specialization s0");
  qs->add_option("--s1", cfg.s1, "specialization s1");
  qs->add_option("--m0", cfg.m0, "Q-product m0");
  qs->add_option("--two-m1", cfg.two_m1, "Q-product 2*m1");

  auto* en = app.add_subcommand("enumerate", "list colored partitions of a degree");
  add_common(en, false);
  int degree = 0;
  bool conditioned = false;
  std::optional<int> weight;
  en->add_option("--degree", degree, "degree (<= 0)")->required();
  en->add_flag("--conditioned", conditioned, "apply difference+initial conditions");
  en->add_option("--weight", weight, "restrict to this weight");

  auto* cat = app.add_subcommand("catalog", "leading term pi_{m.alpha}(n) at level k0+k1");
  add_common(cat, false);
  cat->add_option("--m", cfg.m, "weight label m")->required();
  cat->add_option("--n", cfg.rel_n, "degree label n")->required();

  try {
    app.parse(argc, argv);
    if (dims->parsed()) return cmd_dims(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (qs->parsed()) return cmd_qseries(cfg);
    if (en->parsed()) return cmd_enumerate(cfg, degree, conditioned, weight);
    if (cat->parsed()) return cmd_catalog(cfg);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
