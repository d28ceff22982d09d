#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace affsl2 {

/// Color of a part: an sl2 basis element.  The enum order y < h < x is the
/// order used everywhere.
enum class Color : std::uint8_t { y = 0, h = 1, x = 2 };

char color_char(Color c);
Color color_from_char(char c);

/// Weight of a color as an integer multiple of the simple root alpha:
/// x -> +1, h -> 0, y -> -1.
int color_weight(Color c);

/// A part b(n): color b and degree n (the loop-algebra element b ⊗ t^n).
struct Part {
  Color color;
  int degree;

  friend bool operator==(const Part&, const Part&) = default;
  // Part order: by degree, then y < h < x.
  friend auto operator<=>(const Part& a, const Part& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return static_cast<int>(a.color) <=> static_cast<int>(b.color);
  }
};

inline Part X(int n) { return {Color::x, n}; }
inline Part H(int n) { return {Color::h, n}; }
inline Part Y(int n) { return {Color::y, n}; }

int part_weight(const Part& a);

/// Result of comparing two colored partitions in the total order.
enum class Ordering { Less, Equal, Greater };

/// A colored partition: a finite multiset of parts, stored as a sorted
/// association list (part, multiplicity), multiplicities positive.
/// Multiplication is multiset union with added multiplicities; the empty
/// partition is the monoid unit.
class ColoredPartition {
 public:
  using Entry = std::pair<Part, int>;

  ColoredPartition() = default;
  explicit ColoredPartition(std::vector<Entry> entries);  // normalizes
  static ColoredPartition single(Part a, int mult = 1);
  /// Builds from an arbitrary (unsorted, repeating) list of parts.
  static ColoredPartition from_parts(const std::vector<Part>& parts);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int length() const;           // number of parts, with multiplicity
  int degree() const;           // sum of part degrees
  int weight() const;           // sum of part weights (units of alpha)
  int multiplicity(Part a) const;
  int min_degree() const;       // requires nonempty
  int max_degree() const;       // requires nonempty

  /// Shape: the plain partition of the degrees, ascending.
  std::vector<int> shape() const;
  /// All parts expanded with multiplicity, ascending in the part order.
  std::vector<Part> parts() const;

  ColoredPartition mul(const ColoredPartition& rho) const;
  ColoredPartition mul(Part a, int mult = 1) const;
  /// Multiset difference; requires rho ⊂ *this.
  ColoredPartition div(const ColoredPartition& rho) const;
  ColoredPartition set_union(const ColoredPartition& nu) const;      // max
  ColoredPartition set_intersect(const ColoredPartition& nu) const;  // min
  bool contains(const ColoredPartition& rho) const;

  /// Dual: b(j) -> b*(-j) with x and y swapped, h fixed.  An involution.
  ColoredPartition dual() const;
  /// Translation by N: every degree j -> j - N.
  ColoredPartition translate(int N) const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by part, multiplicities > 0
};

/// The total order on colored partitions:
///  (i)   longer partitions are smaller;
///  (ii)  among equal lengths, smaller degree is smaller;
///  (iii) among equal length and degree, compare the sorted degree
///        sequences from the top index downward, first difference decides
///        (smaller degree -> smaller partition);
///  (iv)  among equal shapes, compare the sorted part sequences from the
///        top downward with y < h < x at equal degree.
/// The empty partition is the unique maximum.
Ordering cmp(const ColoredPartition& a, const ColoredPartition& b);

inline bool cmp_less(const ColoredPartition& a, const ColoredPartition& b) {
  return cmp(a, b) == Ordering::Less;
}

/// Comparator object for ordered containers keyed by the partition order.
struct PartitionLess {
  bool operator()(const ColoredPartition& a, const ColoredPartition& b) const {
    return cmp_less(a, b);
  }
};

struct PartitionHash {
  std::size_t operator()(const ColoredPartition& p) const;
};

/// Membership in the monoid ideal generated by `generators`: true iff some
/// generator is contained in pi.
bool in_ideal(const ColoredPartition& pi,
              const std::vector<ColoredPartition>& generators);

/// Part alphabets of the modules: B-bar-minus is all strictly negative
/// modes plus y(0); the strictly negative alphabet omits y(0).
enum class Alphabet { BMinus, BStrictNeg };

struct EnumerateOptions {
  std::optional<int> weight;      // keep only this total weight
  std::optional<int> max_length;  // bound on the number of parts
  // Push-down of the difference+initial conditions for (k0, k1).
  std::optional<std::pair<int, int>> conditions;
};

/// Enumerates every colored partition over the alphabet with the given
/// degree d <= 0, in a deterministic order.  The y(0) multiplicity is
/// bounded by whatever the options imply (weight, conditions, max_length);
/// with no bound in the options it is held at zero, so a plain degree
/// slice lists the strictly-negative partitions once each.
void enumerate_partitions(Alphabet alphabet, int degree,
                          const EnumerateOptions& opts,
                          const std::function<void(const ColoredPartition&)>& yield);

std::vector<ColoredPartition> enumerate_to_vector(Alphabet alphabet, int degree,
                                                  const EnumerateOptions& opts = {});

/// Canonical text form: parts ascending, e.g. "y(-3) x(-2)^2 y(0)"; the
/// empty partition prints as "1".  The parser also accepts the factors
/// without separating spaces.
std::string to_string(const ColoredPartition& pi);
ColoredPartition parse_partition(const std::string& text);

/// JSON array-of-[color, degree, mult] machine form, e.g.
/// [["y",-3,1],["x",-2,2]].
std::string to_json(const ColoredPartition& pi);

}  // namespace affsl2
