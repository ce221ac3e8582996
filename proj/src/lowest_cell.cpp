#include "g2kl/lowest_cell.hpp"

#include <algorithm>
#include <thread>

#include "g2kl/error.hpp"

namespace g2kl::cell {

namespace {

constexpr std::array<std::string_view, kW0Size> kNames{
    "e", "s", "t", "st", "ts", "sts", "tst", "stst", "tsts", "ststs", "tstst", "ststst"};

// Tabulated d_u, in the order of kNames.
constexpr std::array<std::string_view, kW0Size> kListedD{
    "e",        "tstsr",   "ststrstsr", "tstrstsr", "stsr",  "tsr",
    "strstsr",  "trstsr",  "sr",        "r",        "rstsr", "rstsrtstsr"};

// v_1..v_12 for the c0 parametrization.
constexpr std::array<std::string_view, kW0Size> kCosetReps{
    "e",     "r",      "sr",      "tsr",      "stsr",      "tstsr",
    "rstsr", "trstsr", "strstsr", "tstrstsr", "ststrstsr", "rststrstsr"};

struct DTables {
  std::array<GroupElement, kW0Size> d;
  std::array<GroupElement, kW0Size> d_inv;
};

const DTables& d_tables() {
  static const DTables tables = [] {
    DTables t;
    for (W0Index u : all_w0()) {
      GroupElement computed = d_element_from_formula(u);
      GroupElement listed = GroupElement::parse(d_word_listed(u));
      if (computed != listed)
        fail(ErrorCode::invariant_violation,
             "d-table mismatch at " + std::string(w0_name(u)) + ": formula gives " +
                 computed.letters() + ", table lists " + listed.letters());
      t.d[position(u)] = computed;
      t.d_inv[position(u)] = inverse(computed);
    }
    return t;
  }();
  return tables;
}

bool is_translation(const GroupElement& t, RationalPoint& shift) {
  // The linear part is trivial iff the displacement of a point in the open
  // fundamental chamber agrees with that of the origin.
  const RationalPoint origin{0, 0};
  const RationalPoint moved = evaluate(t.word(), origin);
  const RationalPoint& p = base_point();
  const RationalPoint& q = t.point();
  if (q.a - p.a != moved.a || q.b - p.b != moved.b) return false;
  shift = moved;
  return true;
}

}  // namespace

const std::array<W0Index, kW0Size>& all_w0() {
  static const std::array<W0Index, kW0Size> all = [] {
    std::array<W0Index, kW0Size> out{};
    for (std::size_t i = 0; i < kW0Size; ++i) out[i] = static_cast<W0Index>(i);
    return out;
  }();
  return all;
}

std::string_view w0_name(W0Index u) { return kNames.at(position(u)); }

std::optional<W0Index> parse_w0(std::string_view name) {
  for (std::size_t i = 0; i < kW0Size; ++i)
    if (kNames[i] == name) return static_cast<W0Index>(i);
  return std::nullopt;
}

GroupElement w0_element(W0Index u) { return GroupElement::parse(w0_name(u)); }

const GroupElement& longest_element() {
  static const GroupElement w0 = GroupElement::parse("ststst");
  return w0;
}

const GroupElement& x_alpha() {
  static const GroupElement x = GroupElement::parse("ststsr");
  return x;
}

const GroupElement& x_beta() {
  static const GroupElement x = power(GroupElement::parse("tstsr"), 2);
  return x;
}

GroupElement translation_element(Weight lambda) {
  if (!lambda.dominant())
    fail(ErrorCode::invalid_argument, "translation weight " + lambda.str() + " is not dominant");
  return multiply(power(x_alpha(), static_cast<std::size_t>(lambda.n_alpha)),
                  power(x_beta(), static_cast<std::size_t>(lambda.n_beta)));
}

GroupElement d_element_from_formula(W0Index u) {
  // u(gamma) < 0 for a simple root gamma exactly when u s_gamma < u.
  GroupElement d = w0_element(u);
  const DescentSet right = right_descents(d);
  if (right.contains(Generator::s)) d = multiply(d, x_alpha());
  if (right.contains(Generator::t)) d = multiply(d, x_beta());
  return d;
}

std::string_view d_word_listed(W0Index u) { return kListedD.at(position(u)); }

const GroupElement& d_element(W0Index u) { return d_tables().d[position(u)]; }

GroupElement c0_element(int i, int j, unsigned a, unsigned b) {
  if (i < 1 || i > 12 || j < 1 || j > 12)
    fail(ErrorCode::invalid_argument, "c0_element indices must lie in 1..12");
  static const GroupElement x = GroupElement::parse("rststs");
  static const GroupElement y = power(GroupElement::parse("rstst"), 2);
  const GroupElement vi = GroupElement::parse(kCosetReps[static_cast<std::size_t>(i - 1)]);
  const GroupElement vj = GroupElement::parse(kCosetReps[static_cast<std::size_t>(j - 1)]);
  GroupElement out = multiply(vi, longest_element());
  out = multiply(out, power(x, a));
  out = multiply(out, power(y, b));
  return multiply(out, inverse(vj));
}

std::string C0Decomposition::str() const {
  return "(" + std::string(w0_name(u)) + "," + lambda.str() + "," + std::string(w0_name(v)) + ")";
}

GroupElement assemble(const C0Decomposition& dec) {
  GroupElement out = multiply(d_element(dec.u), translation_element(dec.lambda));
  out = multiply(out, longest_element());
  return multiply(out, d_tables().d_inv[position(dec.v)]);
}

std::optional<C0Decomposition> decompose_c0(const GroupElement& w) {
  const DTables& tables = d_tables();
  std::optional<C0Decomposition> found;
  for (W0Index u : all_w0()) {
    const std::size_t lu = tables.d[position(u)].length();
    if (lu + 6 > w.length()) continue;
    const GroupElement left = multiply(tables.d_inv[position(u)], w);
    if (left.length() + lu != w.length()) continue;
    for (W0Index v : all_w0()) {
      const std::size_t lv = tables.d[position(v)].length();
      const GroupElement m = multiply(left, tables.d[position(v)]);
      if (lu + m.length() + lv != w.length()) continue;
      RationalPoint shift;
      if (!is_translation(multiply(m, longest_element()), shift)) continue;
      // x_alpha shifts by (0,-1), x_beta by (-3,0).
      const Rational na = -shift.b;
      const Rational nb = -shift.a / 3;
      if (boost::multiprecision::denominator(na) != 1 ||
          boost::multiprecision::denominator(nb) != 1 || na < 0 || nb < 0)
        continue;
      C0Decomposition dec{u,
                          Weight{static_cast<int>(boost::multiprecision::numerator(na)),
                                 static_cast<int>(boost::multiprecision::numerator(nb))},
                          v};
      if (found && !(*found == dec))
        fail(ErrorCode::invariant_violation, "ambiguous c0 decomposition of " + w.str() + ": " +
                                                 found->str() + " and " + dec.str());
      found = dec;
    }
  }
  return found;
}

C0Decomposition require_c0(const GroupElement& w) {
  auto dec = decompose_c0(w);
  if (!dec) fail(ErrorCode::not_in_cell, (w.is_identity() ? "e" : w.str()) + " is not in c0");
  return *dec;
}

bool same_left_cell_c0(const GroupElement& y, const GroupElement& w) {
  return require_c0(y).v == require_c0(w).v;
}

bool same_right_cell_c0(const GroupElement& y, const GroupElement& w) {
  return require_c0(y).u == require_c0(w).u;
}

Weight weight_of(ZValue z) {
  switch (z) {
    case ZValue::zero: return {0, 0};
    case ZValue::x_alpha: return {1, 0};
    case ZValue::x_beta: return {0, 1};
  }
  return {};
}

std::string_view z_name(ZValue z) {
  switch (z) {
    case ZValue::zero: return "0";
    case ZValue::x_alpha: return "xa";
    case ZValue::x_beta: return "xb";
  }
  return "?";
}

std::string_view u_class_name(UClass c) {
  switch (c) {
    case UClass::none: return "none";
    case UClass::U1: return "U1";
    case UClass::U2: return "U2";
    case UClass::U3: return "U3";
    case UClass::U4: return "U4";
    case UClass::other: return "other";
  }
  return "?";
}

UClass classify(const std::array<std::int64_t, 3>& delta) {
  const bool z0 = delta[0] != 0, za = delta[1] != 0, zb = delta[2] != 0;
  const int count = int(z0) + int(za) + int(zb);
  if (count == 0) return UClass::none;
  if (count == 1) return UClass::U1;
  if (count == 3) return UClass::U4;
  if (z0 && za) return UClass::U2;
  if (z0 && zb) return UClass::U3;
  return UClass::other;
}

PairProduct LowestCell::compute_pair(KLEngine& engine, W0Index u, W0Index uprime) {
  PairProduct out;
  out.u = u;
  out.uprime = uprime;
  const GroupElement x = multiply(longest_element(), d_tables().d_inv[position(u)]);
  const GroupElement y = multiply(d_element(uprime), longest_element());
  out.product = engine.c_product(x, y);
  const std::string where = "C[" + x.str() + "]*C[" + y.str() + "]";
  for (const auto& [z, h] : out.product.terms()) {
    auto dec = decompose_c0(z);
    if (!dec || dec->u != W0Index::e || dec->v != W0Index::e)
      fail(ErrorCode::invariant_violation,
           where + " has support element " + z.str() + " outside { z1 w0 }");
    const GammaDelta gd = engine.gamma_delta(x, y, z, 6);
    if (gd.gamma != 0) out.gamma.emplace(dec->lambda, gd.gamma);
    if (gd.delta != 0) out.delta.emplace(dec->lambda, gd.delta);
  }
  for (const auto& [z1, d] : out.delta) {
    const bool allowed = z1 == Weight{0, 0} || z1 == Weight{1, 0} || z1 == Weight{0, 1};
    if (!allowed || d != 1)
      fail(ErrorCode::invariant_violation,
           where + ": delta at " + z1.str() + " is " + d.str() + ", outside {0,1} on {0,xa,xb}");
  }
  return out;
}

const PairProduct& LowestCell::pair(W0Index u, W0Index uprime) {
  auto& slot = pairs_[position(u) * kW0Size + position(uprime)];
  if (!slot) slot = std::make_unique<PairProduct>(compute_pair(engine_, u, uprime));
  return *slot;
}

std::int64_t LowestCell::delta_triple(W0Index u, W0Index uprime, ZValue z) {
  const PairProduct& p = pair(u, uprime);
  auto it = p.delta.find(weight_of(z));
  return it == p.delta.end() ? 0 : static_cast<std::int64_t>(it->second);
}

std::vector<DeltaRecord> LowestCell::delta_table(unsigned jobs) {
  std::vector<std::size_t> missing;
  for (std::size_t k = 0; k < pairs_.size(); ++k)
    if (!pairs_[k]) missing.push_back(k);

  if (jobs > 1 && missing.size() > 1) {
    const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(missing.size()));
    std::vector<std::unique_ptr<PairProduct>> results(missing.size());
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          KLEngine local(engine_.config());
          for (std::size_t i = w; i < missing.size(); i += workers) {
            const std::size_t k = missing[i];
            results[i] = std::make_unique<PairProduct>(compute_pair(
                local, all_w0()[k / kW0Size], all_w0()[k % kW0Size]));
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (std::size_t i = 0; i < missing.size(); ++i) pairs_[missing[i]] = std::move(results[i]);
  }

  std::vector<DeltaRecord> table;
  table.reserve(pairs_.size());
  for (W0Index u : all_w0())
    for (W0Index up : all_w0()) {
      DeltaRecord rec{u, up, {}, UClass::none};
      for (ZValue z : kZValues) rec.delta[static_cast<std::size_t>(z)] = delta_triple(u, up, z);
      rec.cls = classify(rec.delta);
      table.push_back(rec);
    }
  return table;
}

std::int64_t LowestCell::mu_formula(const C0Decomposition& y, const C0Decomposition& w) {
  std::int64_t total = 0;
  for (const auto& [z, d] : pair(y.u, w.u).delta)
    total += static_cast<std::int64_t>(d) * rep::tensor_mult(rep::dual(y.lambda), w.lambda, rep::dual(z));
  return total;
}

const C0Decomposition& LowestCell::decomposition(const GroupElement& w) {
  if (auto it = decompositions_.find(w); it != decompositions_.end()) return it->second;
  return decompositions_.emplace(w, require_c0(w)).first->second;
}

std::int64_t LowestCell::mu_lowest(const GroupElement& y, const GroupElement& w) {
  const C0Decomposition dy = decomposition(y);
  const C0Decomposition dw = decomposition(w);
  if (y == w) return 0;
  if (dy.v == dw.v) return mu_formula(dy, dw);
  // Same right cell: y^-1 = d_v t_x* w0 d_u^-1 shares the left cell.
  if (dy.u == dw.u) return mu_formula(decomposition(inverse(y)), decomposition(inverse(w)));
  return 0;
}

}  // namespace g2kl::cell
