#include "affsl2/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace affsl2 {

HighestWeight HighestWeight::verma(int k0, int k1) {
  if (k0 < 0 || k1 < 0) throw std::domain_error("negative highest weight labels");
  return {k0, k1, ModuleKind::Verma};
}

HighestWeight HighestWeight::generalized_verma(int k) {
  if (k < 0) throw std::domain_error("negative level");
  return {k, 0, ModuleKind::GeneralizedVerma};
}

ModuleVector ModuleVector::vacuum(HighestWeight hw) {
  ModuleVector v(hw);
  v.terms_[ColoredPartition{}] = 1;
  return v;
}

ModuleVector ModuleVector::basis_vector(HighestWeight hw,
                                        const ColoredPartition& pi,
                                        const Rat& c) {
  ModuleVector v(hw);
  if (c != 0) v.terms_[pi] = c;
  return v;
}

int ModuleVector::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero vector");
  return terms_.begin()->first.degree();
}

int ModuleVector::weight() const {
  if (is_zero()) throw std::domain_error("weight of zero vector");
  return terms_.begin()->first.weight();
}

void ModuleVector::add_term(const ColoredPartition& pi, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(pi, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (!(hw_ == o.hw_)) throw std::domain_error("mixing modules");
  for (const auto& [pi, c] : o.terms_) add_term(pi, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (!(hw_ == o.hw_)) throw std::domain_error("mixing modules");
  for (const auto& [pi, c] : o.terms_) add_term(pi, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [pi, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

// [a, b] in the affinization: a color bracket at degree m+n plus the
// central term m delta_{m+n,0} (a,b) k.
struct Bracket {
  bool has_part = false;
  Part part{};
  int part_coeff = 0;
  long central_coeff = 0;  // multiplies k
};

int form(Color a, Color b) {  // (x,y) = 1, (h,h) = 2
  if (a == Color::h && b == Color::h) return 2;
  if ((a == Color::x && b == Color::y) || (a == Color::y && b == Color::x)) return 1;
  return 0;
}

Bracket bracket(Part a, Part b) {
  Bracket out;
  int deg = a.degree + b.degree;
  // sl2: [x,y] = h, [h,x] = 2x, [h,y] = -2y
  auto set = [&](Color c, int coeff) {
    out.has_part = true;
    out.part = {c, deg};
    out.part_coeff = coeff;
  };
  if (a.color == Color::x && b.color == Color::y) set(Color::h, 1);
  else if (a.color == Color::y && b.color == Color::x) set(Color::h, -1);
  else if (a.color == Color::h && b.color == Color::x) set(Color::x, 2);
  else if (a.color == Color::x && b.color == Color::h) set(Color::x, -2);
  else if (a.color == Color::h && b.color == Color::y) set(Color::y, -2);
  else if (a.color == Color::y && b.color == Color::h) set(Color::y, 2);
  if (deg == 0) out.central_coeff = static_cast<long>(a.degree) * form(a.color, b.color);
  return out;
}

// a acting on a single PBW basis monomial.
ModuleVector act_on_basis(Part a, HighestWeight hw, const ColoredPartition& pi,
                          const Rat& coeff) {
  ModuleVector out(hw);
  if (coeff == 0) return out;

  if (pi.empty()) {
    // vacuum rules
    if (a.degree > 0) return out;
    if (a.degree == 0) {
      if (a.color == Color::x) return out;
      if (a.color == Color::h) {
        out.add_term(pi, coeff * hw.k1);
        return out;
      }
      // y(0)
      if (hw.kind == ModuleKind::GeneralizedVerma) return out;
      out.add_term(ColoredPartition::single(a), coeff);
      return out;
    }
    out.add_term(ColoredPartition::single(a), coeff);
    return out;
  }

  Part m = pi.entries().front().first;
  if (a <= m) {
    // a is <= every part; a must lie in the module alphabet here (a
    // positive or zero mode other than y(0) is always > members of the
    // negative alphabet), so prepending keeps the monomial sorted.
    out.add_term(pi.mul(a), coeff);
    return out;
  }

  // a m = m a + [a, m] on the remainder pi' = pi / m
  ColoredPartition rest = pi.div(ColoredPartition::single(m));
  ModuleVector inner = act_on_basis(a, hw, rest, coeff);
  for (const auto& [key, c] : inner.terms()) out += act_on_basis(m, hw, key, c);

  Bracket br = bracket(a, m);
  if (br.has_part) {
    ModuleVector b = act_on_basis(br.part, hw, rest, coeff * br.part_coeff);
    out += b;
  }
  if (br.central_coeff != 0) {
    Rat c = coeff * br.central_coeff * hw.level();
    out.add_term(rest, c);
  }
  return out;
}

}  // namespace

ModuleVector act_part(Part a, const ModuleVector& v) {
  ModuleVector out(v.hw());
  for (const auto& [pi, c] : v.terms()) out += act_on_basis(a, v.hw(), pi, c);
  return out;
}

ModuleVector act_word(const LieWord& u, const ModuleVector& v) {
  ModuleVector cur = v;
  cur *= u.scalar;
  for (auto it = u.factors.rbegin(); it != u.factors.rend(); ++it)
    cur = act_part(*it, cur);
  return cur;
}

ModuleVector act_monomial(const ColoredPartition& pi, const ModuleVector& v) {
  ModuleVector cur = v;
  auto ps = pi.parts();
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) cur = act_part(*it, cur);
  return cur;
}

std::vector<ColoredPartition> grade_basis(HighestWeight hw, int d, int w) {
  if (d > 0) throw std::domain_error("grade_basis: degree must be <= 0");
  EnumerateOptions opts;
  opts.weight = w;
  auto v = enumerate_to_vector(hw.alphabet(), d, opts);
  std::sort(v.begin(), v.end(), [](const ColoredPartition& a, const ColoredPartition& b) {
    return cmp_less(b, a);  // descending: index 0 largest
  });
  return v;
}

const ColoredPartition& leading_term(const ModuleVector& v) {
  if (v.is_zero()) throw std::domain_error("leading term of zero vector");
  return v.terms().begin()->first;
}

Rat conformal_weight(HighestWeight hw) {
  int k = hw.level();
  return Rat(hw.k1 * (hw.k1 + 2)) / (4 * (k + 2));
}

ModuleVector sugawara_L(int m, const ModuleVector& v) {
  ModuleVector out(v.hw());
  if (v.is_zero()) return out;
  int k = v.hw().level();
  int d = v.degree();
  Rat norm = Rat(1) / (2 * (k + 2));

  // : a(i) b(m-i) :  with the larger mode to the right; pairs with the
  // right factor above -d kill v, so i ranges over [m+d, -d].
  auto ordered = [&](Part left, Part right, const Rat& c) {
    if (left.degree > right.degree) std::swap(left, right);
    out += c * act_part(left, act_part(right, v));
  };
  for (int i = m + d; i <= -d; ++i) {
    ordered(X(i), Y(m - i), norm);
    ordered(Y(i), X(m - i), norm);
    ordered(H(i), H(m - i), norm / 2);
  }
  return out;
}

bool virasoro_check(int m, int n, const ModuleVector& v) {
  int k = v.hw().level();
  ModuleVector lhs = sugawara_L(m, sugawara_L(n, v)) - sugawara_L(n, sugawara_L(m, v));
  ModuleVector rhs = (Rat(m - n)) * sugawara_L(m + n, v);
  if (m + n == 0) {
    Rat central = frac(static_cast<long>(m) * m * m - m, 12) * frac(3 * k, k + 2);
    ModuleVector cv = v;
    cv *= central;
    rhs += cv;
  }
  return lhs == rhs;
}

ModuleVector l_minus1_derivation(const ModuleVector& v) {
  if (v.hw().kind != ModuleKind::GeneralizedVerma)
    throw std::domain_error("derivation formula for L_{-1} is defined on N(k.Lambda0) only");
  ModuleVector out(v.hw());
  for (const auto& [pi, c] : v.terms()) {
    auto ps = pi.parts();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      LieWord w;
      w.factors = ps;
      w.factors[j].degree -= 1;
      w.scalar = -ps[j].degree;
      out += c * act_word(w, ModuleVector::vacuum(v.hw()));
    }
  }
  return out;
}

std::string to_string(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pi, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << " * " << to_string(pi);
  }
  return os.str();
}

}  // namespace affsl2
