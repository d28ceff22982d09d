#include "affsl2/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace affsl2 {

char color_char(Color c) {
  switch (c) {
    case Color::x: return 'x';
    case Color::h: return 'h';
    case Color::y: return 'y';
  }
  throw std::logic_error("bad color");
}

Color color_from_char(char c) {
  switch (c) {
    case 'x': return Color::x;
    case 'h': return Color::h;
    case 'y': return Color::y;
  }
  throw std::invalid_argument(std::string("not a color: ") + c);
}

int color_weight(Color c) {
  switch (c) {
    case Color::x: return 1;
    case Color::h: return 0;
    case Color::y: return -1;
  }
  throw std::logic_error("bad color");
}

int part_weight(const Part& a) { return color_weight(a.color); }

ColoredPartition::ColoredPartition(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  for (const auto& e : entries_) {
    if (e.second == 0) continue;
    if (e.second < 0) throw std::invalid_argument("negative multiplicity");
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  entries_ = std::move(merged);
}

ColoredPartition ColoredPartition::single(Part a, int mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  ColoredPartition p;
  if (mult > 0) p.entries_.push_back({a, mult});
  return p;
}

ColoredPartition ColoredPartition::from_parts(const std::vector<Part>& parts) {
  std::vector<Entry> es;
  es.reserve(parts.size());
  for (const Part& a : parts) es.push_back({a, 1});
  return ColoredPartition(std::move(es));
}

int ColoredPartition::length() const {
  int s = 0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

int ColoredPartition::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.second * e.first.degree;
  return d;
}

int ColoredPartition::weight() const {
  int w = 0;
  for (const auto& e : entries_) w += e.second * part_weight(e.first);
  return w;
}

int ColoredPartition::multiplicity(Part a) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), a,
      [](const Entry& e, const Part& p) { return e.first < p; });
  if (it != entries_.end() && it->first == a) return it->second;
  return 0;
}

int ColoredPartition::min_degree() const {
  if (empty()) throw std::domain_error("min_degree of empty partition");
  return entries_.front().first.degree;
}

int ColoredPartition::max_degree() const {
  if (empty()) throw std::domain_error("max_degree of empty partition");
  return entries_.back().first.degree;
}

std::vector<int> ColoredPartition::shape() const {
  std::vector<int> s;
  for (const auto& e : entries_)
    for (int i = 0; i < e.second; ++i) s.push_back(e.first.degree);
  return s;  // ascending since entries_ is sorted by (degree, color)
}

std::vector<Part> ColoredPartition::parts() const {
  std::vector<Part> s;
  for (const auto& e : entries_)
    for (int i = 0; i < e.second; ++i) s.push_back(e.first);
  return s;
}

ColoredPartition ColoredPartition::mul(const ColoredPartition& rho) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + rho.entries_.size());
  auto i = entries_.begin();
  auto j = rho.entries_.begin();
  while (i != entries_.end() || j != rho.entries_.end()) {
    if (j == rho.entries_.end() || (i != entries_.end() && i->first < j->first))
      out.push_back(*i++);
    else if (i == entries_.end() || j->first < i->first)
      out.push_back(*j++);
    else {
      out.push_back({i->first, i->second + j->second});
      ++i, ++j;
    }
  }
  ColoredPartition p;
  p.entries_ = std::move(out);
  return p;
}

ColoredPartition ColoredPartition::mul(Part a, int mult) const {
  return mul(single(a, mult));
}

ColoredPartition ColoredPartition::div(const ColoredPartition& rho) const {
  if (!contains(rho)) throw std::domain_error("div: rho not contained in pi");
  std::vector<Entry> out;
  auto j = rho.entries_.begin();
  for (const auto& e : entries_) {
    int m = e.second;
    if (j != rho.entries_.end() && j->first == e.first) m -= (j++)->second;
    if (m > 0) out.push_back({e.first, m});
  }
  ColoredPartition p;
  p.entries_ = std::move(out);
  return p;
}

ColoredPartition ColoredPartition::set_union(const ColoredPartition& nu) const {
  std::vector<Entry> out;
  auto i = entries_.begin();
  auto j = nu.entries_.begin();
  while (i != entries_.end() || j != nu.entries_.end()) {
    if (j == nu.entries_.end() || (i != entries_.end() && i->first < j->first))
      out.push_back(*i++);
    else if (i == entries_.end() || j->first < i->first)
      out.push_back(*j++);
    else {
      out.push_back({i->first, std::max(i->second, j->second)});
      ++i, ++j;
    }
  }
  ColoredPartition p;
  p.entries_ = std::move(out);
  return p;
}

ColoredPartition ColoredPartition::set_intersect(const ColoredPartition& nu) const {
  std::vector<Entry> out;
  auto i = entries_.begin();
  auto j = nu.entries_.begin();
  while (i != entries_.end() && j != nu.entries_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      out.push_back({i->first, std::min(i->second, j->second)});
      ++i, ++j;
    }
  }
  ColoredPartition p;
  p.entries_ = std::move(out);
  return p;
}

bool ColoredPartition::contains(const ColoredPartition& rho) const {
  auto i = entries_.begin();
  for (const auto& r : rho.entries_) {
    while (i != entries_.end() && i->first < r.first) ++i;
    if (i == entries_.end() || !(i->first == r.first) || i->second < r.second)
      return false;
  }
  return true;
}

ColoredPartition ColoredPartition::dual() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    Color c = e.first.color;
    Color cd = c == Color::x ? Color::y : c == Color::y ? Color::x : Color::h;
    out.push_back({{cd, -e.first.degree}, e.second});
  }
  return ColoredPartition(std::move(out));
}

ColoredPartition ColoredPartition::translate(int N) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_)
    out.push_back({{e.first.color, e.first.degree - N}, e.second});
  ColoredPartition p;
  p.entries_ = std::move(out);  // order preserved by a uniform shift
  return p;
}

namespace {

// Reverse scan of the degree sequences (with multiplicity), first
// difference from the top decides.  Adjacent entries can share a degree
// (different colors) and are merged for the degree comparison.
// Precondition: equal lengths.
Ordering cmp_degree_seq_from_top(const std::vector<ColoredPartition::Entry>& a,
                                 const std::vector<ColoredPartition::Entry>& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  int ra = 0, rb = 0;  // remaining multiplicity of the current degree run
  int da = 0, db = 0;
  while (true) {
    if (ra == 0 && ia != a.rend()) {
      da = ia->first.degree;
      while (ia != a.rend() && ia->first.degree == da) ra += (ia++)->second;
    }
    if (rb == 0 && ib != b.rend()) {
      db = ib->first.degree;
      while (ib != b.rend() && ib->first.degree == db) rb += (ib++)->second;
    }
    if (ra == 0 && rb == 0) return Ordering::Equal;
    if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    int step = std::min(ra, rb);
    ra -= step;
    rb -= step;
  }
}

// Reverse scan of the full part sequences; first difference from the top
// decides by the part order.  Precondition: equal shapes.
Ordering cmp_part_seq_from_top(const std::vector<ColoredPartition::Entry>& a,
                               const std::vector<ColoredPartition::Entry>& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  int ra = 0, rb = 0;
  Part pa{}, pb{};
  while (true) {
    if (ra == 0 && ia != a.rend()) {
      pa = ia->first;
      ra = (ia++)->second;
    }
    if (rb == 0 && ib != b.rend()) {
      pb = ib->first;
      rb = (ib++)->second;
    }
    if (ra == 0 && rb == 0) return Ordering::Equal;
    if (!(pa == pb)) return pa < pb ? Ordering::Less : Ordering::Greater;
    int step = std::min(ra, rb);
    ra -= step;
    rb -= step;
  }
}

}  // namespace

Ordering cmp(const ColoredPartition& a, const ColoredPartition& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la > lb ? Ordering::Less : Ordering::Greater;
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  Ordering byshape = cmp_degree_seq_from_top(a.entries(), b.entries());
  if (byshape != Ordering::Equal) return byshape;
  return cmp_part_seq_from_top(a.entries(), b.entries());
}

std::size_t PartitionHash::operator()(const ColoredPartition& p) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& e : p.entries()) {
    mix(static_cast<std::size_t>(e.first.color));
    mix(static_cast<std::size_t>(static_cast<std::uint32_t>(e.first.degree)));
    mix(static_cast<std::size_t>(e.second));
  }
  return h;
}

bool in_ideal(const ColoredPartition& pi,
              const std::vector<ColoredPartition>& generators) {
  for (const auto& rho : generators)
    if (pi.contains(rho)) return true;
  return false;
}

namespace {

// One of the four sliding-window sums at position j.
bool windows_ok_at(const ColoredPartition& pi, int k, int j) {
  auto m = [&pi](Color c, int d) { return pi.multiplicity({c, d}); };
  return m(Color::y, j - 1) + m(Color::h, j - 1) + m(Color::y, j) <= k &&
         m(Color::h, j - 1) + m(Color::x, j - 1) + m(Color::y, j) <= k &&
         m(Color::x, j - 1) + m(Color::y, j) + m(Color::h, j) <= k &&
         m(Color::x, j - 1) + m(Color::h, j) + m(Color::x, j) <= k;
}

struct Enumerator {
  Alphabet alphabet;
  const EnumerateOptions& opts;
  const std::function<void(const ColoredPartition&)>& yield;
  int k = 0, k0 = 0, k1 = 0;
  bool conditioned = false;

  std::vector<ColoredPartition::Entry> stack;  // built top degree first

  void run(int degree) {
    int y0cap = 0;
    if (alphabet == Alphabet::BMinus) {
      int cap = -1;  // unbounded so far
      if (opts.max_length) cap = *opts.max_length;
      if (conditioned) cap = cap < 0 ? k1 : std::min(cap, k1);
      if (opts.weight) {
        int wb = std::max(0, -degree - *opts.weight);
        cap = cap < 0 ? wb : std::min(cap, wb);
      }
      y0cap = std::max(0, cap);
    }
    for (int m = 0; m <= y0cap; ++m) {
      if (m > 0) stack.push_back({Y(0), m});
      descend(-1, degree, m);
      if (m > 0) stack.pop_back();
    }
  }

  void emit() {
    std::vector<ColoredPartition::Entry> es(stack.rbegin(), stack.rend());
    ColoredPartition pi(std::move(es));
    if (opts.weight && pi.weight() != *opts.weight) return;
    if (conditioned && pi.multiplicity(X(-1)) > k0) return;
    yield(pi);
  }

  // remaining <= 0 is the degree still to realize with parts at degrees
  // <= j <= -1; multiplicities are chosen one degree level at a time.
  void descend(int j, int remaining, int used_length) {
    if (remaining == 0) {
      emit();
      return;
    }
    if (j < remaining) return;  // one part at degree j already overshoots

    int maxm = remaining / j;  // both negative
    for (int mx = 0; mx <= maxm; ++mx)
      for (int mh = 0; mh <= maxm - mx; ++mh)
        for (int my = 0; my <= maxm - mx - mh; ++my) {
          int total = mx + mh + my;
          int rest = remaining - total * j;
          int len = used_length + total;
          if (opts.max_length && len > *opts.max_length) continue;
          std::size_t before = stack.size();
          if (my) stack.push_back({Y(j), my});
          if (mh) stack.push_back({H(j), mh});
          if (mx) stack.push_back({X(j), mx});
          bool ok = true;
          if (conditioned) {
            // the window sums at j+1 are final once level j is chosen
            std::vector<ColoredPartition::Entry> es(stack.rbegin(),
                                                    stack.rend());
            ColoredPartition partial(std::move(es));
            ok = windows_ok_at(partial, k, j + 1);
          }
          if (ok) descend(j - 1, rest, len);
          stack.resize(before);
        }
  }
};

}  // namespace

void enumerate_partitions(Alphabet alphabet, int degree,
                          const EnumerateOptions& opts,
                          const std::function<void(const ColoredPartition&)>& yield) {
  if (degree > 0) throw std::domain_error("enumerate: degree must be <= 0");
  Enumerator e{alphabet, opts, yield, 0, 0, 0, false, {}};
  if (opts.conditions) {
    e.conditioned = true;
    e.k0 = opts.conditions->first;
    e.k1 = opts.conditions->second;
    e.k = e.k0 + e.k1;
  }
  e.run(degree);
}

std::vector<ColoredPartition> enumerate_to_vector(Alphabet alphabet, int degree,
                                                  const EnumerateOptions& opts) {
  std::vector<ColoredPartition> out;
  enumerate_partitions(alphabet, degree, opts,
                       [&out](const ColoredPartition& p) { out.push_back(p); });
  return out;
}

std::string to_string(const ColoredPartition& pi) {
  if (pi.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : pi.entries()) {
    if (!first) os << ' ';
    first = false;
    os << color_char(e.first.color) << '(' << e.first.degree << ')';
    if (e.second > 1) os << '^' << e.second;
  }
  return os.str();
}

ColoredPartition parse_partition(const std::string& text) {
  std::vector<ColoredPartition::Entry> es;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing input after 1");
    return {};
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    Color c = color_from_char(text[i++]);
    if (i >= text.size() || text[i] != '(')
      throw std::invalid_argument("expected ( in partition literal");
    ++i;
    std::size_t end = text.find(')', i);
    if (end == std::string::npos)
      throw std::invalid_argument("expected ) in partition literal");
    int deg = std::stoi(text.substr(i, end - i));
    i = end + 1;
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("expected exponent digits");
      mult = std::stoi(text.substr(i, j - i));
      i = j;
    }
    es.push_back({{c, deg}, mult});
    skip_ws();
  }
  return ColoredPartition(std::move(es));
}

std::string to_json(const ColoredPartition& pi) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& e : pi.entries()) {
    if (!first) os << ',';
    first = false;
    os << "[\"" << color_char(e.first.color) << "\"," << e.first.degree << ','
       << e.second << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace affsl2
