#pragma once

// The lowest two-sided cell c0 = { d_u t_x w0 d_v^-1 : u, v in W0, x dominant }
// of G2~, its distinguished coset representatives d_u, and the leading
// coefficients mu(y, w) on c0 computed from delta values and tensor
// multiplicities.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "g2kl/g2_rep.hpp"
#include "g2kl/kl.hpp"
#include "g2kl/weyl.hpp"

namespace g2kl::cell {

using rep::Weight;

enum class W0Index : std::uint8_t { e, s, t, st, ts, sts, tst, stst, tsts, ststs, tstst, ststst };

inline constexpr std::size_t kW0Size = 12;
const std::array<W0Index, kW0Size>& all_w0();
inline constexpr std::size_t position(W0Index u) noexcept { return static_cast<std::size_t>(u); }
std::string_view w0_name(W0Index u);  // "e", "s", ..., "ststst"
std::optional<W0Index> parse_w0(std::string_view name);
GroupElement w0_element(W0Index u);
const GroupElement& longest_element();  // w0 = ststst

// x_alpha, x_beta: the translations by the fundamental weights.
const GroupElement& x_alpha();
const GroupElement& x_beta();
GroupElement translation_element(Weight lambda);

// d_u = u * prod of x_gamma over simple roots gamma with u(gamma) < 0, checked
// against the tabulated word; a mismatch is an invariant violation.
const GroupElement& d_element(W0Index u);
GroupElement d_element_from_formula(W0Index u);
std::string_view d_word_listed(W0Index u);

// v_i * ststst * x^a * y^b * v_j^-1 with x = rststs, y = (rstst)^2 and the
// coset representatives v_1..v_12 of lowest_cell.cpp; i, j in 1..12.
GroupElement c0_element(int i, int j, unsigned a, unsigned b);

struct C0Decomposition {
  W0Index u = W0Index::e;
  Weight lambda;
  W0Index v = W0Index::e;

  std::string str() const;  // "(u,(n_alpha,n_beta),v)"
  friend bool operator==(const C0Decomposition&, const C0Decomposition&) = default;
};

GroupElement assemble(const C0Decomposition& d);
// nullopt if w is not in c0.
std::optional<C0Decomposition> decompose_c0(const GroupElement& w);
C0Decomposition require_c0(const GroupElement& w);

bool same_left_cell_c0(const GroupElement& y, const GroupElement& w);
bool same_right_cell_c0(const GroupElement& y, const GroupElement& w);

enum class ZValue : std::uint8_t { zero, x_alpha, x_beta };
inline constexpr std::array<ZValue, 3> kZValues{ZValue::zero, ZValue::x_alpha, ZValue::x_beta};
Weight weight_of(ZValue z);
std::string_view z_name(ZValue z);  // "0", "xa", "xb"

enum class UClass : std::uint8_t { none, U1, U2, U3, U4, other };
std::string_view u_class_name(UClass c);

// Product C_{w0 d_u^-1} C_{d_u' w0} and its delta values at each z1 w0.
struct PairProduct {
  W0Index u = W0Index::e;
  W0Index uprime = W0Index::e;
  HeckeCombination product;
  std::map<Weight, Integer> gamma;  // only nonzero entries
  std::map<Weight, Integer> delta;  // only nonzero entries
};

struct DeltaRecord {
  W0Index u = W0Index::e;
  W0Index uprime = W0Index::e;
  std::array<std::int64_t, 3> delta{};  // indexed by ZValue
  UClass cls = UClass::none;
};

UClass classify(const std::array<std::int64_t, 3>& delta);

class LowestCell {
 public:
  explicit LowestCell(KLEngine& engine) : engine_(engine) {}

  KLEngine& engine() noexcept { return engine_; }

  // Asserts the support lies in c0 and every delta is 0 or 1 at z in {0, xa, xb}.
  const PairProduct& pair(W0Index u, W0Index uprime);
  std::int64_t delta_triple(W0Index u, W0Index uprime, ZValue z);

  // All 144 records in row-major order. With jobs > 1, missing pair products
  // are computed on private engines; the result does not depend on jobs.
  std::vector<DeltaRecord> delta_table(unsigned jobs = 1);

  // mu(y, w) for y, w in c0 via the delta table and tensor multiplicities.
  std::int64_t mu_lowest(const GroupElement& y, const GroupElement& w);
  // Same-left-cell case on decompositions (v components are ignored).
  std::int64_t mu_formula(const C0Decomposition& y, const C0Decomposition& w);

  // Memoized require_c0.
  const C0Decomposition& decomposition(const GroupElement& w);

 private:
  static PairProduct compute_pair(KLEngine& engine, W0Index u, W0Index uprime);

  KLEngine& engine_;
  std::array<std::unique_ptr<PairProduct>, kW0Size * kW0Size> pairs_;
  std::unordered_map<GroupElement, C0Decomposition> decompositions_;
};

}  // namespace g2kl::cell
