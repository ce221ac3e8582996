#pragma once

// Finite-dimensional representations of the simple Lie algebra of type G2.
// Weights are written in fundamental-weight coordinates (n_alpha, n_beta),
// alpha short, beta long; V(1,0) is the 7-dimensional module and V(0,1) the
// 14-dimensional adjoint module.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2kl/weyl.hpp"

namespace g2kl::rep {

struct Weight {
  int n_alpha = 0;
  int n_beta = 0;

  bool dominant() const noexcept { return n_alpha >= 0 && n_beta >= 0; }
  std::string str() const;

  friend Weight operator+(Weight x, Weight y) { return {x.n_alpha + y.n_alpha, x.n_beta + y.n_beta}; }
  friend Weight operator-(Weight x, Weight y) { return {x.n_alpha - y.n_alpha, x.n_beta - y.n_beta}; }
  friend Weight operator-(Weight x) { return {-x.n_alpha, -x.n_beta}; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

using Multiplicities = std::map<Weight, std::int64_t>;

// Linear action of W0 on weights: a 2x2 integer matrix and its sign.
struct WeylElement {
  std::array<int, 4> m{1, 0, 0, 1};  // row-major
  int sign = 1;
  Weight operator()(Weight x) const {
    return {m[0] * x.n_alpha + m[1] * x.n_beta, m[2] * x.n_alpha + m[3] * x.n_beta};
  }
};

const std::array<Weight, 6>& positive_roots();
const std::array<WeylElement, 12>& weyl_group();
Weight rho();
// Invariant form normalized by (beta, beta) = 2.
Rational form(Weight x, Weight y);
// Height <x, rho^> = sum of simple-root coordinates; integral since Q = P.
int height(Weight x);
Weight dominant_representative(Weight x);

Integer weyl_dim(Weight lambda);
// All weights of V(lambda) with multiplicities (Freudenthal).
const Multiplicities& freudenthal_mults(Weight lambda);
std::int64_t weight_multiplicity(Weight lambda, Weight mu);

// Multiplicity of V(nu) in V(lambda) (x) V(lambda_prime), Klimyk's formula.
std::int64_t tensor_mult(Weight lambda, Weight lambda_prime, Weight nu);
// Full decomposition by Klimyk's formula.
Multiplicities tensor_decomposition(Weight lambda, Weight lambda_prime);

struct OracleLimits {
  Integer max_dimension = Integer(1000000000);
};

// Brute force: multiply characters, then strip highest weights greedily.
Multiplicities char_product_oracle(Weight lambda, Weight lambda_prime,
                                   const OracleLimits& limits = {});

// -w0(lambda); the identity for G2.
Weight dual(Weight lambda);

}  // namespace g2kl::rep
