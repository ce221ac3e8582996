#include <random>
#include <set>

#include "doctest.h"
#include "g2kl/error.hpp"
#include "g2kl/weyl.hpp"

using namespace g2kl;

namespace {

GroupElement el(std::string_view w) { return GroupElement::parse(w); }

std::pair<Rational, Rational> key(const RationalPoint& p) { return {p.a, p.b}; }

Word random_word(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 2);
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Generator>(pick(rng)));
  return w;
}

}  // namespace

TEST_CASE("words parse in both alphabets") {
  CHECK(parse_word("rst") == parse_word("012"));
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word(" 1 2 ") == Word{Generator::s, Generator::t});
  CHECK(to_letters(parse_word("0121")) == "rsts");
  CHECK(to_letters({}) == "e");
  CHECK_THROWS_AS(parse_word("0x1"), Error);
  try {
    parse_word("3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
  }
}

TEST_CASE("generators act as reflections fixing the expected walls") {
  const RationalPoint p{Rational(1, 3), Rational(1, 5)};
  for (Generator g : kGenerators) CHECK(act(g, act(g, p)) == p);
  CHECK(act(Generator::t, {0, Rational(1, 2)}) == RationalPoint{0, Rational(1, 2)});
  CHECK(act(Generator::s, {Rational(1, 2), 0}) == RationalPoint{Rational(1, 2), 0});
  CHECK(act(Generator::r, {Rational(1, 2), Rational(1, 4)}) ==
        RationalPoint{Rational(1, 2), Rational(1, 4)});
  for (Generator g : kGenerators) CHECK_FALSE(separates(g, base_point()));
}

TEST_CASE("Coxeter relations of G2~") {
  CHECK(power(el("st"), 6).is_identity());
  CHECK_FALSE(power(el("st"), 3).is_identity());
  CHECK(power(el("rs"), 3).is_identity());
  CHECK(power(el("rt"), 2).is_identity());
  CHECK(el("ss").is_identity());
}

TEST_CASE("canonical words") {
  CHECK(el("ss").str().empty());
  CHECK(el("tststs").str() == "121212");
  CHECK(el("121212").length() == 6);
  CHECK(el("tstsrtstsr").length() == 10);
  CHECK(el("ststsr").length() == 6);
  // Canonical form is the lexicographically least reduced word.
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const GroupElement x = GroupElement::from_word(random_word(rng, 12));
    CHECK(GroupElement::from_word(x.word()) == x);
    CHECK(GroupElement::from_point(x.point()) == x);
    CHECK(x.word() <= reversed(inverse(x).word()));
  }
}

TEST_CASE("translations by the fundamental weights") {
  const RationalPoint p{Rational(1, 7), Rational(2, 9)};
  const RationalPoint xa = evaluate(el("ststsr").word(), p);
  CHECK(xa == RationalPoint{p.a, p.b - 1});
  const RationalPoint xb = evaluate(power(el("tstsr"), 2).word(), p);
  CHECK(xb == RationalPoint{p.a - 3, p.b});
  CHECK(multiply(el("ststsr"), power(el("tstsr"), 2)) ==
        multiply(power(el("tstsr"), 2), el("ststsr")));
}

TEST_CASE("group operations") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GroupElement x = GroupElement::from_word(random_word(rng, 9));
    const GroupElement y = GroupElement::from_word(random_word(rng, 9));
    const GroupElement z = GroupElement::from_word(random_word(rng, 9));
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    CHECK(multiply(x, inverse(x)).is_identity());
    CHECK(length(inverse(x)) == length(x));
    Word concat = x.word();
    concat.insert(concat.end(), y.word().begin(), y.word().end());
    CHECK(GroupElement::from_word(concat) == multiply(x, y));
  }
}

TEST_CASE("descents agree with length changes") {
  for (const GroupElement& x : elements_up_to_length(8)) {
    const DescentSet left = left_descents(x);
    const DescentSet right = right_descents(x);
    for (Generator g : kGenerators) {
      CHECK(left.contains(g) == (left_multiply(g, x).length() < x.length()));
      CHECK(right.contains(g) == (right_multiply(x, g).length() < x.length()));
    }
  }
}

TEST_CASE("ball enumeration matches brute-force word evaluation") {
  constexpr std::size_t n = 7;
  std::set<std::pair<Rational, Rational>> points;
  std::vector<Word> frontier{{}};
  for (std::size_t len = 0; len <= n; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      points.insert(key(evaluate(w)));
      if (len == n) continue;
      for (Generator g : kGenerators) {
        Word longer = w;
        longer.push_back(g);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }
  const auto ball = elements_up_to_length(n);
  CHECK(ball.size() == points.size());
  for (const GroupElement& x : ball) CHECK(points.count(key(x.point())) == 1);
  CHECK(std::is_sorted(ball.begin(), ball.end()));
}

TEST_CASE("Bruhat order: basic facts and subword agreement") {
  CHECK(bruhat_leq(el(""), el("121212")));
  CHECK(bruhat_leq(el("1"), el("121212")));
  CHECK_FALSE(bruhat_leq(el("0"), el("121212")));
  CHECK_FALSE(bruhat_leq(el("12"), el("21")));
  const auto ball = elements_up_to_length(6);
  for (const GroupElement& w : ball)
    for (const GroupElement& u : ball)
      if (u.length() <= w.length()) CHECK(bruhat_leq(u, w) == bruhat_subword_oracle(u, w));
}

TEST_CASE("subword enumeration splits long words consistently") {
  const Word w = el("0121021021212").word();
  const SubwordEnumeration e = enumerate_subwords(w);
  CHECK(e.raw_count > 0);
  for (const GroupElement& u : e.elements) CHECK(bruhat_leq(u, GroupElement::from_word(w)));
  SubwordLimits tiny;
  tiny.max_length = 4;
  CHECK_THROWS_AS(enumerate_subwords(w, tiny), Error);
}

TEST_CASE("points outside the orbit are rejected") {
  CHECK_THROWS_AS(GroupElement::from_point({Rational(1, 3), Rational(1, 3)}), Error);
}
