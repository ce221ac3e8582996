#include "g2kl/kl.hpp"

#include <algorithm>

#include "g2kl/error.hpp"

namespace g2kl {

// ---------------------------------------------------------------------------
// ElementRegistry

ElementRegistry::ElementRegistry() { intern(GroupElement()); }

ElementId ElementRegistry::intern(const GroupElement& x) {
  if (auto it = ids_.find(x); it != ids_.end()) return it->second;
  const auto id = static_cast<ElementId>(nodes_.size());
  Node node;
  node.element = x;
  node.length = static_cast<std::uint32_t>(x.length());
  node.left_descents = g2kl::left_descents(x);
  nodes_.push_back(std::move(node));
  ids_.emplace(x, id);
  return id;
}

ElementId ElementRegistry::left_mul(Generator g, ElementId id) {
  ElementId& slot = nodes_[id].left[index(g)];
  if (slot == kUnset) {
    const ElementId other = intern(left_multiply(g, nodes_[id].element));
    nodes_[id].left[index(g)] = other;
    nodes_[other].left[index(g)] = id;
    return other;
  }
  return slot;
}

ElementId ElementRegistry::right_mul(ElementId id, Generator g) {
  if (nodes_[id].right[index(g)] == kUnset) {
    const ElementId other = intern(right_multiply(nodes_[id].element, g));
    nodes_[id].right[index(g)] = other;
    nodes_[other].right[index(g)] = id;
  }
  return nodes_[id].right[index(g)];
}

DescentSet ElementRegistry::right_descents(ElementId id) {
  DescentSet out;
  for (Generator g : kGenerators)
    if (length(right_mul(id, g)) < length(id)) out.insert(g);
  return out;
}

// ---------------------------------------------------------------------------
// HeckeCombination

void HeckeCombination::add(const GroupElement& z, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(z, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly HeckeCombination::coeff(const GroupElement& z) const {
  auto it = terms_.find(z);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

HeckeCombination& HeckeCombination::operator+=(const HeckeCombination& other) {
  for (const auto& [z, c] : other.terms_) add(z, c);
  return *this;
}

HeckeCombination& HeckeCombination::operator-=(const HeckeCombination& other) {
  for (const auto& [z, c] : other.terms_) add(z, -c);
  return *this;
}

HeckeCombination HeckeCombination::scaled(const LaurentPoly& c) const {
  HeckeCombination out;
  for (const auto& [z, h] : terms_) out.add(z, h * c);
  return out;
}

std::string HeckeCombination::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const LaurentPoly& h = it->second;
    std::string coeff = h.is_bar_invariant() ? two_str(h) : h.str();
    bool negative = false;
    const bool single = coeff.find_first_of("+-", 1) == std::string::npos;
    if (single && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (coeff != "1") out += single ? coeff + "*" : "(" + coeff + ")*";
    out += "C[" + it->first.str() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// KLEngine

KLEngine::KLEngine(EngineConfig config) : config_(config) {
  intern_poly(LaurentPoly(1));
}

KLEngine::~KLEngine() = default;

KLEngine::PolyId KLEngine::intern_poly(const LaurentPoly& p) {
  if (auto it = poly_ids_.find(p); it != poly_ids_.end()) return it->second;
  const auto id = static_cast<PolyId>(polys_.size());
  polys_.push_back(p);
  poly_ids_.emplace(p, id);
  return id;
}

const LaurentPoly* KLEngine::lookup(const Row& row, ElementId u) const {
  auto it = std::lower_bound(row.lower.begin(), row.lower.end(), u);
  if (it == row.lower.end() || *it != u) return nullptr;
  return &polys_[row.poly[static_cast<std::size_t>(it - row.lower.begin())]];
}

const KLEngine::Row& KLEngine::row(ElementId w) {
  if (rows_.size() <= w) rows_.resize(registry_.size());
  if (!rows_[w]) {
    auto computed = compute_row(w);
    if (rows_.size() <= w) rows_.resize(registry_.size());
    rows_[w] = std::move(computed);
  }
  return *rows_[w];
}

namespace {

template <typename Row>
struct Correction {
  std::uint32_t z_length;
  std::int64_t mu;
  const Row* row;
};

}  // namespace

// Left recursion on the first letter s of w = s w':
//   P_{u,w} = q^{1-c} P_{su,w'} + q^c P_{u,w'}
//             - sum_{z < w', sz < z} mu(z,w') q^{(l(w)-l(z))/2} P_{u,z},
// c = 1 if su < u. For su > u the identity P_{u,w} = P_{su,w} is used instead.
std::unique_ptr<KLEngine::Row> KLEngine::compute_row(ElementId w) {
  auto out = std::make_unique<Row>();
  const std::uint32_t len = registry_.length(w);
  if (len == 0) {
    out->lower = {w};
    out->poly = {intern_poly(1)};
    return out;
  }
  const Generator s = registry_.first_letter(w);
  const ElementId wp = registry_.left_mul(s, w);
  const Row& prev = row(wp);

  std::vector<ElementId> lower;
  lower.reserve(prev.lower.size() * 2);
  for (ElementId u : prev.lower) {
    lower.push_back(u);
    lower.push_back(registry_.left_mul(s, u));
  }
  std::sort(lower.begin(), lower.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());

  std::vector<Correction<Row>> corrections;
  for (const auto& [z, m] : prev.mu) {
    if (!registry_.left_descents(z).contains(s)) continue;
    corrections.push_back({registry_.length(z), m, &row(z)});
  }

  out->lower = std::move(lower);
  out->poly.assign(out->lower.size(), 0);
  std::vector<char> done(out->lower.size(), 0);
  const LaurentPoly q = LaurentPoly::q_power(1);

  for (std::size_t i = 0; i < out->lower.size(); ++i) {
    const ElementId u = out->lower[i];
    if (!registry_.left_descents(u).contains(s)) continue;
    const ElementId su = registry_.left_mul(s, u);
    LaurentPoly p;
    if (const LaurentPoly* a = lookup(prev, su)) p += *a;
    if (const LaurentPoly* b = lookup(prev, u)) p += *b * q;
    const std::uint32_t ulen = registry_.length(u);
    for (const auto& corr : corrections) {
      if (corr.z_length < ulen) continue;
      if (const LaurentPoly* pz = lookup(*corr.row, u)) {
        const int shift = static_cast<int>(len - corr.z_length);  // even
        p -= pz->shifted(shift).scaled(corr.mu);
      }
    }
    auto where = [&] {
      return "P(" + registry_.element(u).str() + "," + registry_.element(w).str() + ")";
    };
    if (p.is_zero()) fail(ErrorCode::invariant_violation, where() + " vanishes on [e, w]");
    if (!p.has_only_even_exponents() || p.valuation() < 0)
      fail(ErrorCode::invariant_violation, where() + " is not a polynomial in q");
    if (!p.has_nonnegative_coefficients())
      fail(ErrorCode::invariant_violation, where() + " = " + q_str(p) + " has a negative coefficient");
    if (u == w ? p != LaurentPoly(1) : 2 * q_degree(p) > static_cast<int>(len - ulen) - 1)
      fail(ErrorCode::invariant_violation, where() + " = " + q_str(p) + " violates P(w,w) = 1 or the degree bound");
    out->poly[i] = intern_poly(p);
    done[i] = 1;
  }
  for (std::size_t i = 0; i < out->lower.size(); ++i) {
    if (done[i]) continue;
    const ElementId su = registry_.left_mul(s, out->lower[i]);
    auto it = std::lower_bound(out->lower.begin(), out->lower.end(), su);
    ensure(it != out->lower.end() && *it == su, "interval not closed under left lifting");
    const auto j = static_cast<std::size_t>(it - out->lower.begin());
    ensure(done[j] != 0, "lifting partner not computed");
    out->poly[i] = out->poly[j];
  }
  finish_row(w, *out);
  return out;
}

void KLEngine::finish_row(ElementId w, Row& r) const {
  r.mu.clear();
  const std::uint32_t len = registry_.length(w);
  for (std::size_t i = 0; i < r.lower.size(); ++i) {
    const std::uint32_t ulen = registry_.length(r.lower[i]);
    const std::uint32_t diff = len - ulen;
    if (diff % 2 == 0) continue;
    const Integer top = q_coeff(polys_[r.poly[i]], static_cast<int>(diff - 1) / 2);
    if (top != 0) r.mu.emplace_back(r.lower[i], static_cast<std::int64_t>(top));
  }
}

LaurentPoly KLEngine::kl_poly(const GroupElement& u, const GroupElement& w) {
  if (u.length() > w.length()) return {};
  if (u.length() == w.length()) return u == w ? LaurentPoly(1) : LaurentPoly();
  const ElementId uid = registry_.intern(u);
  const ElementId wid = registry_.intern(w);
  const LaurentPoly* p = lookup(row(wid), uid);
  return p ? *p : LaurentPoly();
}

std::int64_t KLEngine::mu_by_id(ElementId u, ElementId w) {
  const std::uint32_t lu = registry_.length(u);
  const std::uint32_t lw = registry_.length(w);
  if (lu >= lw || (lw - lu) % 2 == 0) return 0;
  const GroupElement& ue = registry_.element(u);
  const GroupElement& we = registry_.element(w);
  if (lw - lu == 1) return bruhat_leq(ue, we) ? 1 : 0;
  // gw < w and gu > u force mu(u, w) = 0 unless u = gw (ruled out by length).
  const DescentSet lu_desc = registry_.left_descents(u);
  const DescentSet lw_desc = registry_.left_descents(w);
  for (Generator g : kGenerators)
    if (lw_desc.contains(g) && !lu_desc.contains(g)) return 0;
  const DescentSet ru_desc = registry_.right_descents(u);
  const DescentSet rw_desc = registry_.right_descents(w);
  for (Generator g : kGenerators)
    if (rw_desc.contains(g) && !ru_desc.contains(g)) return 0;
  const LaurentPoly* p = lookup(row(w), u);
  if (!p) return 0;
  return static_cast<std::int64_t>(q_coeff(*p, static_cast<int>(lw - lu - 1) / 2));
}

std::int64_t KLEngine::mu(const GroupElement& u, const GroupElement& w) {
  return mu_by_id(registry_.intern(u), registry_.intern(w));
}

std::int64_t KLEngine::mu_symmetric(const GroupElement& y, const GroupElement& w) {
  if (y.length() < w.length()) return mu(y, w);
  if (w.length() < y.length()) return mu(w, y);
  return 0;
}

std::vector<std::pair<GroupElement, std::int64_t>> KLEngine::mu_list(const GroupElement& w) {
  const Row& r = row(registry_.intern(w));
  std::vector<std::pair<GroupElement, std::int64_t>> out;
  out.reserve(r.mu.size());
  for (const auto& [y, m] : r.mu) out.emplace_back(registry_.element(y), m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> KLEngine::lower_interval(const GroupElement& w) {
  const Row& r = row(registry_.intern(w));
  std::vector<GroupElement> out;
  out.reserve(r.lower.size());
  for (ElementId u : r.lower) out.push_back(registry_.element(u));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Right-handed recursion (independent route)

const std::vector<ElementId>& KLEngine::right_interval(ElementId w) {
  if (auto it = right_intervals_.find(w); it != right_intervals_.end()) return it->second;
  std::vector<ElementId> out;
  if (registry_.length(w) == 0) {
    out.push_back(w);
  } else {
    const Generator s = registry_.last_letter(w);
    const ElementId wp = registry_.right_mul(w, s);
    const std::vector<ElementId> prev = right_interval(wp);
    for (ElementId u : prev) {
      out.push_back(u);
      out.push_back(registry_.right_mul(u, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return right_intervals_.emplace(w, std::move(out)).first->second;
}

const LaurentPoly& KLEngine::kl_right(ElementId u, ElementId w) {
  static const LaurentPoly kZero;
  static const LaurentPoly kOne(1);
  const std::uint32_t lu = registry_.length(u);
  const std::uint32_t lw = registry_.length(w);
  if (lu > lw) return kZero;
  if (u == w) return kOne;
  if (lu == lw) return kZero;
  const std::uint64_t key = (std::uint64_t{u} << 32) | w;
  if (auto it = right_memo_.find(key); it != right_memo_.end()) return it->second;
  const std::vector<ElementId>& interval = right_interval(w);
  if (!std::binary_search(interval.begin(), interval.end(), u))
    return right_memo_.emplace(key, LaurentPoly()).first->second;

  const Generator s = registry_.last_letter(w);
  const ElementId wp = registry_.right_mul(w, s);
  const ElementId us = registry_.right_mul(u, s);
  const bool c = registry_.length(us) < lu;
  LaurentPoly p = kl_right(us, wp).shifted(c ? 0 : 2) + kl_right(u, wp).shifted(c ? 2 : 0);
  const std::uint32_t lwp = lw - 1;
  const std::vector<ElementId> candidates = right_interval(wp);
  for (ElementId z : candidates) {
    const std::uint32_t lz = registry_.length(z);
    if (lz < lu || lz >= lwp || (lwp - lz) % 2 == 0) continue;
    if (registry_.length(registry_.right_mul(z, s)) > lz) continue;
    const Integer m = q_coeff(kl_right(z, wp), static_cast<int>(lwp - lz - 1) / 2);
    if (m == 0) continue;
    const LaurentPoly& pz = kl_right(u, z);
    if (!pz.is_zero()) p -= pz.shifted(static_cast<int>(lw - lz)).scaled(m);
  }
  return right_memo_.emplace(key, std::move(p)).first->second;
}

LaurentPoly KLEngine::kl_poly_right(const GroupElement& u, const GroupElement& w) {
  return kl_right(registry_.intern(u), registry_.intern(w));
}

// ---------------------------------------------------------------------------
// Canonical basis products

KLEngine::IdCombination KLEngine::cs_mul_ids(Generator g, const IdCombination& c, Side side) {
  IdCombination out;
  auto add = [&out](ElementId z, const LaurentPoly& h) {
    auto [it, inserted] = out.try_emplace(z, h);
    if (!inserted) {
      it->second += h;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  const LaurentPoly two = LaurentPoly::two();
  for (const auto& [w, h] : c) {
    const bool descent = side == Side::left ? registry_.left_descents(w).contains(g)
                                            : registry_.right_descents(w).contains(g);
    if (descent) {
      add(w, h * two);
      continue;
    }
    add(side == Side::left ? registry_.left_mul(g, w) : registry_.right_mul(w, g), h);
    const std::vector<std::pair<ElementId, std::int64_t>> mus = row(w).mu;
    for (const auto& [y, m] : mus) {
      const bool y_descent = side == Side::left ? registry_.left_descents(y).contains(g)
                                                : registry_.right_descents(y).contains(g);
      if (y_descent) add(y, h.scaled(m));
    }
  }
  if (out.size() > config_.max_support)
    fail(ErrorCode::resource_limit, "support exceeds configured cap of " +
                                        std::to_string(config_.max_support));
  return out;
}

HeckeCombination KLEngine::cs_mul(Generator g, const HeckeCombination& c, Side side) {
  return to_combination(cs_mul_ids(g, to_ids(c), side));
}

// C_x = C_g C_{x'} - sum_{z < x', gz < z} mu(z, x') C_z for x = g x' > x'.
const KLEngine::IdCombination& KLEngine::product_ids(ElementId x, ElementId y) {
  const std::uint64_t key = (std::uint64_t{x} << 32) | y;
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  IdCombination out;
  if (registry_.length(x) == 0) {
    out.emplace(y, LaurentPoly(1));
  } else {
    const Generator g = registry_.first_letter(x);
    const ElementId xp = registry_.left_mul(g, x);
    out = cs_mul_ids(g, product_ids(xp, y), Side::left);
    const std::vector<std::pair<ElementId, std::int64_t>> mus = row(xp).mu;
    for (const auto& [z, m] : mus) {
      if (!registry_.left_descents(z).contains(g)) continue;
      for (const auto& [t, h] : product_ids(z, y)) {
        auto [it, inserted] = out.try_emplace(t, h.scaled(-m));
        if (!inserted) {
          it->second -= h.scaled(m);
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return products_.emplace(key, std::move(out)).first->second;
}

HeckeCombination KLEngine::c_product(const GroupElement& x, const GroupElement& y) {
  if (x.length() + y.length() > config_.max_product_length)
    fail(ErrorCode::resource_limit,
         "product of lengths " + std::to_string(x.length()) + "+" + std::to_string(y.length()) +
             " exceeds configured cap " + std::to_string(config_.max_product_length));
  return to_combination(product_ids(registry_.intern(x), registry_.intern(y)));
}

LaurentPoly KLEngine::h_coeff(const GroupElement& x, const GroupElement& y,
                              const GroupElement& z) {
  return c_product(x, y).coeff(z);
}

GammaDelta KLEngine::gamma_delta(const GroupElement& x, const GroupElement& y,
                                 const GroupElement& z, int a_z) {
  const LaurentPoly h = h_coeff(x, y, z);
  if (!h.is_zero() && h.degree() > a_z)
    fail(ErrorCode::invariant_violation, "h(" + x.str() + "," + y.str() + "," + z.str() +
                                             ") = " + h.str() + " exceeds degree a = " +
                                             std::to_string(a_z));
  GammaDelta out{h.coeff(a_z), h.coeff(a_z - 1)};
  ensure(out.gamma >= 0 && out.delta >= 0, "negative gamma/delta for h = " + h.str());
  return out;
}

HeckeCombination KLEngine::to_combination(const IdCombination& c) const {
  HeckeCombination out;
  for (const auto& [z, h] : c) out.add(registry_.element(z), h);
  return out;
}

KLEngine::IdCombination KLEngine::to_ids(const HeckeCombination& c) {
  IdCombination out;
  for (const auto& [z, h] : c.terms()) out.emplace(registry_.intern(z), h);
  return out;
}

CacheInfo KLEngine::cache_info() const {
  CacheInfo info;
  info.elements = registry_.size();
  for (const auto& r : rows_) {
    if (!r) continue;
    ++info.rows;
    info.entries += r->lower.size();
  }
  info.distinct_polynomials = polys_.size();
  info.products = products_.size();
  return info;
}

void KLEngine::clear() {
  rows_.clear();
  products_.clear();
  right_memo_.clear();
  right_intervals_.clear();
}

}  // namespace g2kl
