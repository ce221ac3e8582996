#include "g2kl/g2_rep.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "g2kl/error.hpp"

namespace g2kl::rep {

namespace {

void require_dominant(Weight x, const char* what) {
  if (!x.dominant())
    fail(ErrorCode::invalid_argument, std::string(what) + ": weight " + x.str() + " is not dominant");
}

// Simple-root coordinates of a weight: omega_alpha = 2 alpha + beta,
// omega_beta = 3 alpha + 2 beta.
std::array<int, 2> root_coords(Weight x) {
  return {2 * x.n_alpha + 3 * x.n_beta, x.n_alpha + 2 * x.n_beta};
}

Weight reflect_alpha(Weight x) { return {-x.n_alpha, x.n_alpha + x.n_beta}; }
Weight reflect_beta(Weight x) { return {x.n_alpha + 3 * x.n_beta, -x.n_beta}; }

}  // namespace

std::string Weight::str() const {
  return "(" + std::to_string(n_alpha) + "," + std::to_string(n_beta) + ")";
}

const std::array<Weight, 6>& positive_roots() {
  // alpha, beta, alpha+beta, 2alpha+beta, 3alpha+beta, 3alpha+2beta
  static const std::array<Weight, 6> roots{
      Weight{2, -1}, Weight{-3, 2}, Weight{-1, 1}, Weight{1, 0}, Weight{3, -1}, Weight{0, 1}};
  return roots;
}

const std::array<WeylElement, 12>& weyl_group() {
  static const std::array<WeylElement, 12> group = [] {
    const WeylElement sa{{-1, 0, 1, 1}, -1};
    const WeylElement sb{{1, 3, 0, -1}, -1};
    auto compose = [](const WeylElement& x, const WeylElement& y) {
      WeylElement z;
      z.m = {x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
             x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]};
      z.sign = x.sign * y.sign;
      return z;
    };
    std::vector<WeylElement> found{WeylElement{}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const WeylElement& g : {sa, sb}) {
        WeylElement next = compose(g, found[i]);
        if (std::none_of(found.begin(), found.end(),
                         [&](const WeylElement& e) { return e.m == next.m; }))
          found.push_back(next);
      }
    }
    ensure(found.size() == 12, "Weyl group of G2 must have order 12");
    std::array<WeylElement, 12> out;
    std::copy(found.begin(), found.end(), out.begin());
    return out;
  }();
  return group;
}

Weight rho() { return {1, 1}; }

Rational form(Weight x, Weight y) {
  const auto a = root_coords(x);
  const auto b = root_coords(y);
  // (alpha,alpha) = 2/3, (alpha,beta) = -1, (beta,beta) = 2
  return Rational(2, 3) * a[0] * b[0] - Rational(a[0] * b[1] + a[1] * b[0]) +
         Rational(2 * a[1] * b[1]);
}

int height(Weight x) {
  const auto c = root_coords(x);
  return c[0] + c[1];
}

Weight dominant_representative(Weight x) {
  for (;;) {
    if (x.n_alpha < 0) x = reflect_alpha(x);
    else if (x.n_beta < 0) x = reflect_beta(x);
    else return x;
  }
}

Integer weyl_dim(Weight lambda) {
  require_dominant(lambda, "weyl_dim");
  Rational dim = 1;
  const Weight shifted = lambda + rho();
  for (const Weight& gamma : positive_roots()) dim *= form(shifted, gamma) / form(rho(), gamma);
  ensure(boost::multiprecision::denominator(dim) == 1, "Weyl dimension is not integral");
  return boost::multiprecision::numerator(dim);
}

namespace {

struct MultiplicityCache {
  std::mutex mutex;
  std::map<Weight, Multiplicities> table;
};

MultiplicityCache& multiplicity_cache() {
  static MultiplicityCache cache;
  return cache;
}

Multiplicities compute_freudenthal(Weight lambda) {
  const auto top = root_coords(lambda);
  // Dominant weights mu <= lambda, ordered by depth of lambda - mu.
  std::vector<Weight> dominant;
  for (int a = 0; 2 * a <= top[0]; ++a)
    for (int b = 0; 3 * b <= top[0] && 2 * b <= top[1]; ++b) {
      const Weight mu{a, b};
      const auto c = root_coords(mu);
      if (c[0] <= top[0] && c[1] <= top[1]) dominant.push_back(mu);
    }
  std::sort(dominant.begin(), dominant.end(), [&](Weight x, Weight y) {
    return height(lambda - x) < height(lambda - y) ||
           (height(lambda - x) == height(lambda - y) && x < y);
  });

  std::map<Weight, std::int64_t> dom_mult;
  auto mult_of = [&](Weight nu) -> std::int64_t {
    auto it = dom_mult.find(dominant_representative(nu));
    return it == dom_mult.end() ? 0 : it->second;
  };
  const Weight shifted = lambda + rho();
  const Rational top_norm = form(shifted, shifted);
  const Rational lambda_norm = form(lambda, lambda);
  for (const Weight& mu : dominant) {
    if (mu == lambda) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const Weight& gamma : positive_roots()) {
      for (int k = 1;; ++k) {
        const Weight nu{mu.n_alpha + k * gamma.n_alpha, mu.n_beta + k * gamma.n_beta};
        // (mu + k gamma)^2 grows with k for dominant mu, so stop past lambda's norm.
        if (form(nu, nu) > lambda_norm) break;
        if (const std::int64_t m = mult_of(nu)) sum += m * form(nu, gamma);
      }
    }
    const Weight mu_shifted = mu + rho();
    const Rational denom = top_norm - form(mu_shifted, mu_shifted);
    ensure(denom > 0, "Freudenthal denominator must be positive");
    const Rational value = 2 * sum / denom;
    ensure(boost::multiprecision::denominator(value) == 1,
           "Freudenthal multiplicity of " + mu.str() + " in V" + lambda.str() + " is not integral");
    const auto m = static_cast<std::int64_t>(boost::multiprecision::numerator(value));
    ensure(m >= 0, "negative weight multiplicity");
    if (m > 0) dom_mult[mu] = m;
  }

  Multiplicities out;
  for (const auto& [mu, m] : dom_mult)
    for (const WeylElement& w : weyl_group()) out[w(mu)] = m;
  return out;
}

}  // namespace

const Multiplicities& freudenthal_mults(Weight lambda) {
  require_dominant(lambda, "freudenthal_mults");
  MultiplicityCache& cache = multiplicity_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(lambda); it != cache.table.end()) return it->second;
  }
  Multiplicities computed = compute_freudenthal(lambda);
  std::lock_guard lock(cache.mutex);
  return cache.table.try_emplace(lambda, std::move(computed)).first->second;
}

std::int64_t weight_multiplicity(Weight lambda, Weight mu) {
  const Multiplicities& mults = freudenthal_mults(lambda);
  auto it = mults.find(mu);
  return it == mults.end() ? 0 : it->second;
}

std::int64_t tensor_mult(Weight lambda, Weight lambda_prime, Weight nu) {
  require_dominant(lambda, "tensor_mult");
  require_dominant(lambda_prime, "tensor_mult");
  require_dominant(nu, "tensor_mult");
  const Weight target = nu + rho();
  const Weight base = lambda_prime + rho();
  std::int64_t total = 0;
  for (const WeylElement& w : weyl_group())
    total += w.sign * weight_multiplicity(lambda, w(target) - base);
  ensure(total >= 0, "negative tensor product multiplicity");
  return total;
}

Multiplicities tensor_decomposition(Weight lambda, Weight lambda_prime) {
  std::set<Weight> candidates;
  for (const auto& [mu, m] : freudenthal_mults(lambda)) {
    const Weight nu = mu + lambda_prime;
    if (nu.dominant()) candidates.insert(nu);
  }
  Multiplicities out;
  for (const Weight& nu : candidates)
    if (const std::int64_t m = tensor_mult(lambda, lambda_prime, nu)) out[nu] = m;
  return out;
}

Multiplicities char_product_oracle(Weight lambda, Weight lambda_prime, const OracleLimits& limits) {
  require_dominant(lambda, "char_product_oracle");
  require_dominant(lambda_prime, "char_product_oracle");
  if (weyl_dim(lambda) * weyl_dim(lambda_prime) > limits.max_dimension)
    fail(ErrorCode::resource_limit, "character product dimension exceeds oracle cap");

  std::map<Weight, std::int64_t> character;
  for (const auto& [mu, m] : freudenthal_mults(lambda))
    for (const auto& [nu, n] : freudenthal_mults(lambda_prime)) character[mu + nu] += m * n;

  auto highest_first = [](Weight x, Weight y) {
    return height(x) > height(y) || (height(x) == height(y) && x > y);
  };
  Multiplicities out;
  for (;;) {
    std::erase_if(character, [](const auto& kv) { return kv.second == 0; });
    if (character.empty()) break;
    Weight top = character.begin()->first;
    for (const auto& [mu, m] : character)
      if (highest_first(mu, top)) top = mu;
    const std::int64_t count = character[top];
    ensure(top.dominant() && count > 0,
           "character stripping reached non-dominant or negative top weight " + top.str());
    out[top] += count;
    for (const auto& [mu, m] : freudenthal_mults(top)) {
      std::int64_t& slot = character[mu];
      slot -= count * m;
      ensure(slot >= 0, "character stripping produced a negative coefficient at " + mu.str());
    }
  }
  return out;
}

Weight dual(Weight lambda) {
  require_dominant(lambda, "dual");
  // w0 is the element acting as -1.
  for (const WeylElement& w : weyl_group())
    if (w.m == std::array<int, 4>{-1, 0, 0, -1}) return -w(lambda);
  fail(ErrorCode::internal, "longest element of W0 not found");
}

}  // namespace g2kl::rep
