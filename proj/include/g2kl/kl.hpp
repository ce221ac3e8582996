#pragma once

// Kazhdan-Lusztig polynomials, leading coefficients and products in the
// canonical basis {C_w} of the Hecke algebra of G2~, with C_s C_w = [2] C_w
// when sw < w.

#include <array>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "g2kl/laurent.hpp"
#include "g2kl/weyl.hpp"

namespace g2kl {

using ElementId = std::uint32_t;

// Interns group elements to dense ids and caches their generator neighbours.
class ElementRegistry {
 public:
  ElementRegistry();

  ElementId intern(const GroupElement& x);
  const GroupElement& element(ElementId id) const { return nodes_[id].element; }
  std::uint32_t length(ElementId id) const { return nodes_[id].length; }
  std::size_t size() const noexcept { return nodes_.size(); }

  ElementId left_mul(Generator g, ElementId id);
  ElementId right_mul(ElementId id, Generator g);
  DescentSet left_descents(ElementId id) const { return nodes_[id].left_descents; }
  DescentSet right_descents(ElementId id);
  Generator first_letter(ElementId id) const { return nodes_[id].element.word().front(); }
  Generator last_letter(ElementId id) const { return nodes_[id].element.word().back(); }

 private:
  static constexpr ElementId kUnset = ~ElementId{0};

  struct Node {
    GroupElement element;
    std::uint32_t length = 0;
    DescentSet left_descents;
    std::array<ElementId, 3> left{kUnset, kUnset, kUnset};
    std::array<ElementId, 3> right{kUnset, kUnset, kUnset};
  };

  std::deque<Node> nodes_;
  std::unordered_map<GroupElement, ElementId> ids_;
};

enum class Side { left, right };

// A finite sum of h_z C_z with nonzero Laurent coefficients.
class HeckeCombination {
 public:
  using Terms = std::map<GroupElement, LaurentPoly>;

  HeckeCombination() = default;
  static HeckeCombination basis(const GroupElement& z) {
    HeckeCombination c;
    c.add(z, 1);
    return c;
  }

  void add(const GroupElement& z, const LaurentPoly& coeff);
  LaurentPoly coeff(const GroupElement& z) const;
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  HeckeCombination& operator+=(const HeckeCombination& other);
  HeckeCombination& operator-=(const HeckeCombination& other);
  HeckeCombination scaled(const LaurentPoly& c) const;
  friend bool operator==(const HeckeCombination&, const HeckeCombination&) = default;

  // Terms in decreasing shortlex order of z; coefficients written as
  // polynomials in [2], e.g. "[2]*C[121210121212]+([2]^5-3[2]^3+[2])*C[121212]".
  std::string str() const;

 private:
  Terms terms_;
};

struct EngineConfig {
  std::size_t max_support = 20000;
  std::size_t max_product_length = 36;
};

struct GammaDelta {
  Integer gamma;
  Integer delta;
};

struct CacheInfo {
  std::size_t elements = 0;
  std::size_t rows = 0;
  std::size_t entries = 0;
  std::size_t distinct_polynomials = 0;
  std::size_t products = 0;
};

inline constexpr int kCacheFormatVersion = 1;

// Memoizing engine. Not thread-safe: use one engine per thread.
class KLEngine {
 public:
  explicit KLEngine(EngineConfig config = {});
  ~KLEngine();
  KLEngine(const KLEngine&) = delete;
  KLEngine& operator=(const KLEngine&) = delete;

  const EngineConfig& config() const noexcept { return config_; }
  ElementRegistry& registry() noexcept { return registry_; }

  LaurentPoly kl_poly(const GroupElement& u, const GroupElement& w);
  // Independent route peeling the last letter of w, with its own memo.
  LaurentPoly kl_poly_right(const GroupElement& u, const GroupElement& w);
  std::int64_t mu(const GroupElement& u, const GroupElement& w);
  // mu(u, w) if u <= w, mu(w, u) if w <= u, else 0.
  std::int64_t mu_symmetric(const GroupElement& y, const GroupElement& w);
  // All y < w with mu(y, w) != 0, sorted shortlex.
  std::vector<std::pair<GroupElement, std::int64_t>> mu_list(const GroupElement& w);
  // Lower Bruhat interval [e, w], sorted shortlex.
  std::vector<GroupElement> lower_interval(const GroupElement& w);

  HeckeCombination cs_mul(Generator g, const HeckeCombination& c, Side side);
  HeckeCombination c_product(const GroupElement& x, const GroupElement& y);
  LaurentPoly h_coeff(const GroupElement& x, const GroupElement& y, const GroupElement& z);
  GammaDelta gamma_delta(const GroupElement& x, const GroupElement& y, const GroupElement& z,
                         int a_z);

  void cache_store(const std::filesystem::path& path);
  void cache_load(const std::filesystem::path& path);
  CacheInfo cache_info() const;
  void clear();

 private:
  using PolyId = std::uint32_t;
  using IdCombination = std::map<ElementId, LaurentPoly>;

  struct Row {
    std::vector<ElementId> lower;  // [e, w], ascending id
    std::vector<PolyId> poly;      // P_{u,w} parallel to lower
    std::vector<std::pair<ElementId, std::int64_t>> mu;  // ascending id
  };

  PolyId intern_poly(const LaurentPoly& p);
  const LaurentPoly& poly(PolyId id) const { return polys_[id]; }
  const LaurentPoly* lookup(const Row& row, ElementId u) const;
  const Row& row(ElementId w);
  std::unique_ptr<Row> compute_row(ElementId w);
  void finish_row(ElementId w, Row& row) const;
  std::int64_t mu_by_id(ElementId u, ElementId w);

  const LaurentPoly& kl_right(ElementId u, ElementId w);
  const std::vector<ElementId>& right_interval(ElementId w);

  IdCombination cs_mul_ids(Generator g, const IdCombination& c, Side side);
  const IdCombination& product_ids(ElementId x, ElementId y);
  HeckeCombination to_combination(const IdCombination& c) const;
  IdCombination to_ids(const HeckeCombination& c);

  EngineConfig config_;
  ElementRegistry registry_;
  std::deque<LaurentPoly> polys_;
  std::unordered_map<LaurentPoly, PolyId> poly_ids_;
  std::vector<std::unique_ptr<Row>> rows_;
  std::unordered_map<std::uint64_t, IdCombination> products_;
  std::unordered_map<std::uint64_t, LaurentPoly> right_memo_;
  std::unordered_map<ElementId, std::vector<ElementId>> right_intervals_;
};

}  // namespace g2kl
