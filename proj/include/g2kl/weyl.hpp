#pragma once

// Affine Weyl group of type G2~ realized by affine reflections of the plane.
//
// Points are written in the pairing basis (a, b) = (<x, alpha^>, <x, beta^>)
// where alpha is the short and beta the long simple root. The generators act by
//
//   t = s_alpha       : (a, b) -> (-a, a + b)
//   s = s_beta        : (a, b) -> (a + 3b, -b)
//   r = s_{theta, 1}  : (a, b) -> (a, 1 - a - b)
//
// and an element is identified by the image of the base point v0 = (1/4, 1/4),
// which lies in the open fundamental alcove {a > 0, b > 0, a + 2b < 1}.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2kl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Generator : std::uint8_t { r = 0, s = 1, t = 2 };

inline constexpr std::array<Generator, 3> kGenerators{Generator::r, Generator::s,
                                                      Generator::t};

inline constexpr int index(Generator g) noexcept { return static_cast<int>(g); }
char to_letter(Generator g) noexcept;
char to_digit(Generator g) noexcept;

using Word = std::vector<Generator>;

// Accepts the letter alphabet {r,s,t} or the digit alphabet {0,1,2}; "" and
// "e" denote the empty word. Whitespace is ignored.
Word parse_word(std::string_view text);
std::string to_digits(const Word& word);
std::string to_letters(const Word& word);
Word reversed(Word word);

class DescentSet {
 public:
  constexpr DescentSet() = default;
  constexpr bool contains(Generator g) const noexcept { return (bits_ >> index(g)) & 1U; }
  constexpr void insert(Generator g) noexcept { bits_ |= static_cast<std::uint8_t>(1U << index(g)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept;
  std::string str() const;  // letters in r<s<t order, e.g. "{s,t}"

  friend constexpr bool operator==(DescentSet, DescentSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

struct RationalPoint {
  Rational a;
  Rational b;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  std::string str() const;
};

const RationalPoint& base_point();
RationalPoint act(Generator g, const RationalPoint& p);
// Left action composition: g1(g2(...gn(p))).
RationalPoint evaluate(const Word& word, const RationalPoint& p);
RationalPoint evaluate(const Word& word);
// Hyperplane of g separates p from the fundamental alcove.
bool separates(Generator g, const RationalPoint& p);

class GroupElement {
 public:
  GroupElement();  // identity

  // Canonical element with the given orbit point. The point must lie in the
  // orbit of v0.
  static GroupElement from_point(const RationalPoint& p);
  static GroupElement from_word(const Word& word);
  static GroupElement parse(std::string_view text);

  const Word& word() const noexcept { return word_; }
  const RationalPoint& point() const noexcept { return point_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }
  std::string str() const { return to_digits(word_); }
  std::string letters() const { return to_letters(word_); }

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.word_ == y.word_;
  }
  // Shortlex on the canonical word.
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y);

 private:
  GroupElement(Word word, RationalPoint point);

  Word word_;
  RationalPoint point_;
};

// Canonical reduced form: the lexicographically least reduced word (r<s<t),
// obtained by repeatedly stripping the least left descent of the element.
GroupElement canonicalize(const Word& word);

std::size_t length(const GroupElement& x);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement left_multiply(Generator g, const GroupElement& x);
GroupElement right_multiply(const GroupElement& x, Generator g);
GroupElement power(const GroupElement& x, std::size_t n);

DescentSet left_descents(const GroupElement& x);
DescentSet right_descents(const GroupElement& x);

// Bruhat order by the descent recursion.
bool bruhat_leq(const GroupElement& u, const GroupElement& w);

// Breadth-first enumeration of all elements of length <= n, sorted shortlex.
std::vector<GroupElement> elements_up_to_length(std::size_t n);

// Subword enumeration: distinct elements spelled by subwords of a word.
struct SubwordLimits {
  std::size_t max_length = 16;
  std::size_t max_subwords = 1U << 22;
};

struct SubwordEnumeration {
  std::uint64_t raw_count = 0;  // subwords visited before deduplication
  std::vector<GroupElement> elements;  // distinct, sorted shortlex
};

// Words longer than the split threshold are split in half, each half is
// enumerated and reduced, and the two halves are glued pairwise.
SubwordEnumeration enumerate_subwords(const Word& word, const SubwordLimits& limits = {});

bool bruhat_subword_oracle(const GroupElement& u, const GroupElement& w,
                           const SubwordLimits& limits = {});

}  // namespace g2kl

template <>
struct std::hash<g2kl::GroupElement> {
  std::size_t operator()(const g2kl::GroupElement& x) const noexcept;
};
