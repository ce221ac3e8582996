#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "doctest.h"
#include "g2kl/error.hpp"
#include "g2kl/kl.hpp"

using namespace g2kl;

namespace {

GroupElement el(std::string_view w) { return GroupElement::parse(w); }

// R-polynomials in q = v^2 by the right-descent recursion.
class ROracle {
 public:
  LaurentPoly r(const GroupElement& u, const GroupElement& w) {
    if (!bruhat_leq(u, w)) return {};
    if (u == w) return 1;
    auto key = std::make_pair(u, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Generator s = w.word().back();
    const GroupElement ws = right_multiply(w, s);
    const GroupElement us = right_multiply(u, s);
    LaurentPoly out;
    if (us.length() < u.length()) {
      out = r(us, ws);
    } else {
      const LaurentPoly q = LaurentPoly::q_power(1);
      out = (q - 1) * r(u, ws) + q * r(us, ws);
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::map<std::pair<GroupElement, GroupElement>, LaurentPoly> memo_;
};

// P_{x,w} from q^{l(w)-l(x)} bar(P_{x,w}) = sum_{x<=y<=w} R_{x,y} P_{y,w}.
std::map<GroupElement, LaurentPoly> oracle_row(ROracle& R, const GroupElement& w,
                                               const std::vector<GroupElement>& ball) {
  std::vector<GroupElement> below;
  for (const GroupElement& x : ball)
    if (bruhat_leq(x, w)) below.push_back(x);
  std::sort(below.begin(), below.end(),
            [](const GroupElement& a, const GroupElement& b) { return a.length() > b.length(); });
  std::map<GroupElement, LaurentPoly> P;
  for (const GroupElement& x : below) {
    if (x == w) {
      P[x] = 1;
      continue;
    }
    LaurentPoly s;
    for (const auto& [y, py] : P)
      if (y != x && bruhat_leq(x, y)) s += R.r(x, y) * py;
    const int bound = static_cast<int>(w.length() - x.length()) - 1;  // 2*deg_q bound
    LaurentPoly p;
    for (const auto& t : s.terms())
      if (t.exponent <= bound) p += LaurentPoly::monomial(-t.coeff, t.exponent);
    P[x] = p;
  }
  return P;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         (name + "." + std::to_string(std::random_device{}()));
}

}  // namespace

TEST_CASE("KL polynomials agree with the R-polynomial inversion formula") {
  KLEngine engine;
  ROracle R;
  const auto ball = elements_up_to_length(7);
  std::size_t nontrivial = 0;
  for (const GroupElement& w : ball) {
    const auto expected = oracle_row(R, w, ball);
    CHECK(engine.lower_interval(w).size() == expected.size());
    for (const auto& [x, p] : expected) {
      CAPTURE(x.str());
      CAPTURE(w.str());
      CHECK(engine.kl_poly(x, w) == p);
      if (p != LaurentPoly(1)) ++nontrivial;
    }
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("small values") {
  KLEngine engine;
  CHECK(engine.kl_poly(el("1"), el("121212")) == LaurentPoly(1));
  CHECK(q_str(engine.kl_poly(el(""), el("1021"))) == "q+1");
  CHECK(engine.kl_poly(el("0"), el("121212")).is_zero());
  CHECK(engine.kl_poly(el("12"), el("21")).is_zero());
  CHECK(engine.mu(el(""), el("1")) == 1);
  CHECK(engine.mu(el(""), el("1021")) == 0);  // even length difference
  CHECK(engine.mu(el("1"), el("1021")) == 1);
  CHECK(engine.mu(el("1"), el("")) == 0);
  CHECK(engine.mu_symmetric(el("1"), el("")) == 1);
  const auto list = engine.mu_list(el("1021"));
  CHECK_FALSE(list.empty());
  for (const auto& [y, m] : list) CHECK(engine.mu(y, el("1021")) == m);
}

TEST_CASE("first- and last-letter recursions agree") {
  KLEngine engine;
  for (const GroupElement& w : elements_up_to_length(9))
    for (const GroupElement& u : engine.lower_interval(w))
      CHECK(engine.kl_poly(u, w) == engine.kl_poly_right(u, w));
}

TEST_CASE("inverse symmetry") {
  KLEngine engine;
  std::mt19937 rng(3);
  const auto ball = elements_up_to_length(10);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int i = 0; i < 40; ++i) {
    const GroupElement& w = ball[pick(rng)];
    for (const GroupElement& u : engine.lower_interval(w))
      CHECK(engine.kl_poly(u, w) == engine.kl_poly(inverse(u), inverse(w)));
  }
}

TEST_CASE("canonical basis products") {
  KLEngine engine;
  CHECK(engine.c_product(el(""), el("121212")).str() == "C[121212]");
  CHECK(engine.c_product(el("121212"), el("")).str() == "C[121212]");
  CHECK(engine.c_product(el("1"), el("2")).str() == "C[12]");
  CHECK(engine.c_product(el("1"), el("1")).str() == "[2]*C[1]");
  CHECK(engine.c_product(el("12"), el("21")).str() == "[2]*C[121]+[2]*C[1]");
  CHECK(engine.c_product(el("121212"), el("121212")).str() ==
        "([2]^6-4[2]^4+3[2]^2)*C[121212]");
  CHECK(engine.c_product(el("121212"), el("0121212")).str() ==
        "[2]*C[121021021212]+([2]^5-3[2]^3+[2])*C[121212]");
}

TEST_CASE("products are associative and bar-invariant") {
  KLEngine engine;
  const auto ball = elements_up_to_length(3);
  for (const GroupElement& a : ball)
    for (const GroupElement& b : ball)
      for (const GroupElement& c : {el("01"), el("212"), el("1021")}) {
        HeckeCombination left;
        const HeckeCombination ab = engine.c_product(a, b);
        for (const auto& [z, h] : ab.terms()) left += engine.c_product(z, c).scaled(h);
        HeckeCombination right;
        const HeckeCombination bc = engine.c_product(b, c);
        for (const auto& [z, h] : bc.terms())
          right += engine.c_product(a, z).scaled(h);
        CHECK(left == right);
        for (const auto& [z, h] : left.terms()) CHECK(h.is_bar_invariant());
      }
}

TEST_CASE("cs_mul on both sides") {
  KLEngine engine;
  const HeckeCombination w0 = HeckeCombination::basis(el("121212"));
  CHECK(engine.cs_mul(Generator::s, w0, Side::left).str() == "[2]*C[121212]");
  CHECK(engine.cs_mul(Generator::t, w0, Side::right).str() == "[2]*C[121212]");
  CHECK(engine.cs_mul(Generator::r, w0, Side::left) == engine.c_product(el("0"), el("121212")));
  CHECK(engine.cs_mul(Generator::r, w0, Side::right) == engine.c_product(el("121212"), el("0")));
}

TEST_CASE("gamma and delta") {
  KLEngine engine;
  const GammaDelta gd = engine.gamma_delta(el("121212"), el("0121212"), el("121212"), 6);
  CHECK(gd.gamma == 0);
  CHECK(gd.delta == 1);  // [2]^5-3[2]^3+[2] = v^5 + ... + v^-5
  const GammaDelta g2 = engine.gamma_delta(el("121212"), el("121212"), el("121212"), 6);
  CHECK(g2.gamma == 1);
  CHECK(g2.delta == 0);
  CHECK_THROWS_AS(engine.gamma_delta(el("121212"), el("121212"), el("121212"), 5), Error);
}

TEST_CASE("resource caps") {
  EngineConfig cfg;
  cfg.max_product_length = 10;
  KLEngine engine(cfg);
  try {
    engine.c_product(el("121212"), el("121212"));
    FAIL("expected resource limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::resource_limit);
  }
}

TEST_CASE("cache round trip") {
  const auto path = temp_file("g2kl-cache");
  KLEngine a;
  const auto product = a.c_product(el("121212"), el("10121212"));
  a.cache_store(path);
  KLEngine b;
  b.cache_load(path);
  CHECK(b.cache_info().rows == a.cache_info().rows);
  CHECK(b.cache_info().entries == a.cache_info().entries);
  CHECK(b.c_product(el("121212"), el("10121212")) == product);
  // Storing is deterministic.
  const auto path2 = temp_file("g2kl-cache");
  b.cache_store(path2);
  std::ifstream f1(path), f2(path2);
  const std::string s1((std::istreambuf_iterator<char>(f1)), {});
  const std::string s2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(s1 == s2);
  // Loading into an engine that already has the rows is consistent.
  CHECK_NOTHROW(a.cache_load(path));
  a.clear();
  CHECK(a.cache_info().rows == 0);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("cache corruption is detected") {
  KLEngine src;
  src.kl_poly(el(""), el("1021"));
  const auto path = temp_file("g2kl-cache");
  src.cache_store(path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  in.close();

  auto expect = [&](const std::string& content, ErrorCode code) {
    std::ofstream(path, std::ios::trunc) << content;
    KLEngine e;
    try {
      e.cache_load(path);
      FAIL("expected failure");
    } catch (const Error& err) {
      CHECK(err.code() == code);
    }
  };
  expect("garbage\n", ErrorCode::corrupt_file);
  expect("", ErrorCode::corrupt_file);
  {
    std::string v2 = text;
    v2.replace(v2.find("version=1"), 9, "version=2");
    expect(v2, ErrorCode::version_mismatch);
  }
  {
    const auto pos = text.find("\tv^2+1");
    if (pos != std::string::npos) {
      std::string neg = text;
      neg.replace(pos, 6, "\t-v^2+1");
      expect(neg, ErrorCode::corrupt_file);
    }
  }
  {
    // Drop one record: the row is then incomplete.
    const auto nl = text.find('\n', text.find('\n') + 1);
    std::string missing = text.substr(0, text.find('\n') + 1) + text.substr(nl + 1);
    expect(missing, ErrorCode::corrupt_file);
  }
  expect(text.substr(0, text.find('\n') + 1) + "1\t0\t1\n", ErrorCode::corrupt_file);
  try {
    KLEngine e;
    e.cache_load(path.string() + ".missing");
    FAIL("expected io failure");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::io);
  }
  std::filesystem::remove(path);
}
