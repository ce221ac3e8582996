#include "g2kl/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>
#include <utility>

#include "g2kl/error.hpp"

namespace g2kl {

char to_letter(Generator g) noexcept {
  switch (g) {
    case Generator::r: return 'r';
    case Generator::s: return 's';
    case Generator::t: return 't';
  }
  return '?';
}

char to_digit(Generator g) noexcept { return static_cast<char>('0' + index(g)); }

Word parse_word(std::string_view text) {
  Word word;
  if (text == "e") return word;
  for (char c : text) {
    switch (c) {
      case 'r': case '0': word.push_back(Generator::r); break;
      case 's': case '1': word.push_back(Generator::s); break;
      case 't': case '2': word.push_back(Generator::t); break;
      case ' ': case '\t': break;
      default:
        fail(ErrorCode::parse, "invalid generator '" + std::string(1, c) + "' in word \"" +
                                   std::string(text) + "\"");
    }
  }
  return word;
}

std::string to_digits(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (Generator g : word) out.push_back(to_digit(g));
  return out;
}

std::string to_letters(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  out.reserve(word.size());
  for (Generator g : word) out.push_back(to_letter(g));
  return out;
}

Word reversed(Word word) {
  std::reverse(word.begin(), word.end());
  return word;
}

std::size_t DescentSet::size() const noexcept { return std::popcount(bits_); }

std::string DescentSet::str() const {
  std::string out = "{";
  for (Generator g : kGenerators) {
    if (!contains(g)) continue;
    if (out.size() > 1) out.push_back(',');
    out.push_back(to_letter(g));
  }
  out.push_back('}');
  return out;
}

std::string RationalPoint::str() const {
  return "(" + a.str() + "," + b.str() + ")";
}

const RationalPoint& base_point() {
  static const RationalPoint v0{Rational(1, 4), Rational(1, 4)};
  return v0;
}

RationalPoint act(Generator g, const RationalPoint& p) {
  switch (g) {
    case Generator::t: return {-p.a, p.a + p.b};
    case Generator::s: return {p.a + 3 * p.b, -p.b};
    case Generator::r: return {p.a, 1 - p.a - p.b};
  }
  return p;
}

RationalPoint evaluate(const Word& word, const RationalPoint& p) {
  RationalPoint x = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = act(*it, x);
  return x;
}

RationalPoint evaluate(const Word& word) { return evaluate(word, base_point()); }

bool separates(Generator g, const RationalPoint& p) {
  switch (g) {
    case Generator::t: return p.a < 0;
    case Generator::s: return p.b < 0;
    case Generator::r: return p.a + 2 * p.b > 1;
  }
  return false;
}

namespace {

// Orbit points over a common denominator; the generator maps have integer
// coefficients, so stripping stays in this form.
struct ScaledPoint {
  Integer a;
  Integer b;
  Integer d;

  explicit ScaledPoint(const RationalPoint& p) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer da = denominator(p.a);
    Integer db = denominator(p.b);
    d = boost::multiprecision::lcm(da, db);
    a = numerator(p.a) * (d / da);
    b = numerator(p.b) * (d / db);
  }

  bool separates(Generator g) const {
    switch (g) {
      case Generator::t: return a < 0;
      case Generator::s: return b < 0;
      case Generator::r: return a + 2 * b > d;
    }
    return false;
  }

  void apply(Generator g) {
    switch (g) {
      case Generator::t: b += a; a = -a; break;
      case Generator::s: a += 3 * b; b = -b; break;
      case Generator::r: b = d - a - b; break;
    }
  }

  bool is_base_point() const { return 4 * a == d && 4 * b == d; }
};

}  // namespace

GroupElement::GroupElement() : point_(base_point()) {}

GroupElement::GroupElement(Word word, RationalPoint point)
    : word_(std::move(word)), point_(std::move(point)) {}

GroupElement GroupElement::from_point(const RationalPoint& p) {
  ScaledPoint x(p);
  Word word;
  for (;;) {
    bool stripped = false;
    for (Generator g : kGenerators) {
      if (x.separates(g)) {
        x.apply(g);
        word.push_back(g);
        stripped = true;
        break;
      }
    }
    if (!stripped) break;
  }
  if (!x.is_base_point())
    fail(ErrorCode::invalid_argument, "point " + p.str() + " is not in the orbit of v0");
  return GroupElement(std::move(word), p);
}

GroupElement GroupElement::from_word(const Word& word) { return from_point(evaluate(word)); }

GroupElement GroupElement::parse(std::string_view text) { return from_word(parse_word(text)); }

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  if (auto c = x.length() <=> y.length(); c != 0) return c;
  return x.word_ <=> y.word_;
}

GroupElement canonicalize(const Word& word) { return GroupElement::from_word(word); }

std::size_t length(const GroupElement& x) { return x.length(); }

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  return GroupElement::from_point(evaluate(x.word(), y.point()));
}

GroupElement inverse(const GroupElement& x) { return canonicalize(reversed(x.word())); }

GroupElement left_multiply(Generator g, const GroupElement& x) {
  return GroupElement::from_point(act(g, x.point()));
}

GroupElement right_multiply(const GroupElement& x, Generator g) {
  return GroupElement::from_point(evaluate(x.word(), act(g, base_point())));
}

GroupElement power(const GroupElement& x, std::size_t n) {
  GroupElement result;
  for (std::size_t i = 0; i < n; ++i) result = multiply(result, x);
  return result;
}

DescentSet left_descents(const GroupElement& x) {
  DescentSet out;
  for (Generator g : kGenerators)
    if (separates(g, x.point())) out.insert(g);
  return out;
}

DescentSet right_descents(const GroupElement& x) { return left_descents(inverse(x)); }

bool bruhat_leq(const GroupElement& u, const GroupElement& w) {
  GroupElement x = u;
  GroupElement y = w;
  for (;;) {
    if (x.is_identity()) return true;
    if (x.length() > y.length()) return false;
    const Generator s = y.word().front();  // least left descent of y
    if (separates(s, x.point())) x = left_multiply(s, x);
    y = left_multiply(s, y);
  }
}

std::vector<GroupElement> elements_up_to_length(std::size_t n) {
  std::vector<GroupElement> all{GroupElement()};
  std::vector<GroupElement> level{GroupElement()};
  for (std::size_t len = 1; len <= n; ++len) {
    std::unordered_set<GroupElement> next;
    for (const GroupElement& x : level) {
      DescentSet desc = left_descents(x);
      for (Generator g : kGenerators)
        if (!desc.contains(g)) next.insert(left_multiply(g, x));
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

namespace {

constexpr std::size_t kSplitThreshold = 10;

void enumerate_into(const Word& word, const SubwordLimits& limits, SubwordEnumeration& out) {
  if (word.size() <= kSplitThreshold) {
    const std::uint64_t count = std::uint64_t{1} << word.size();
    out.raw_count += count;
    if (out.raw_count > limits.max_subwords)
      fail(ErrorCode::resource_limit, "subword enumeration exceeds configured cap");
    std::unordered_set<GroupElement> seen;
    Word sub;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < word.size(); ++i)
        if ((mask >> i) & 1U) sub.push_back(word[i]);
      seen.insert(canonicalize(sub));
    }
    out.elements.assign(seen.begin(), seen.end());
    return;
  }
  const auto mid = word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2);
  SubwordEnumeration left;
  SubwordEnumeration right;
  enumerate_into(Word(word.begin(), mid), limits, left);
  enumerate_into(Word(mid, word.end()), limits, right);
  out.raw_count += left.raw_count + right.raw_count +
                   static_cast<std::uint64_t>(left.elements.size()) * right.elements.size();
  if (out.raw_count > limits.max_subwords)
    fail(ErrorCode::resource_limit, "subword enumeration exceeds configured cap");
  std::unordered_set<GroupElement> glued;
  for (const GroupElement& x : left.elements)
    for (const GroupElement& y : right.elements) glued.insert(multiply(x, y));
  out.elements.assign(glued.begin(), glued.end());
}

}  // namespace

SubwordEnumeration enumerate_subwords(const Word& word, const SubwordLimits& limits) {
  if (word.size() > limits.max_length)
    fail(ErrorCode::resource_limit, "word of length " + std::to_string(word.size()) +
                                        " exceeds subword oracle limit " +
                                        std::to_string(limits.max_length));
  SubwordEnumeration out;
  enumerate_into(word, limits, out);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool bruhat_subword_oracle(const GroupElement& u, const GroupElement& w,
                           const SubwordLimits& limits) {
  const SubwordEnumeration subs = enumerate_subwords(w.word(), limits);
  return std::binary_search(subs.elements.begin(), subs.elements.end(), u);
}

}  // namespace g2kl

std::size_t std::hash<g2kl::GroupElement>::operator()(const g2kl::GroupElement& x) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (g2kl::Generator g : x.word()) h = (h ^ (static_cast<std::size_t>(g) + 1)) * 1099511628211ULL;
  return h ^ x.length();
}
