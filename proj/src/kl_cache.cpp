#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "g2kl/error.hpp"
#include "g2kl/kl.hpp"

namespace g2kl {

namespace {

constexpr std::string_view kMagic = "# g2kl kl-cache";

std::string cache_header() {
  return std::string(kMagic) + " version=" + std::to_string(kCacheFormatVersion) +
         " v0=" + base_point().str() + " order=r<s<t";
}

std::string word_field(const GroupElement& x) { return x.is_identity() ? "e" : x.str(); }

[[noreturn]] void corrupt(const std::filesystem::path& path, std::size_t line,
                          const std::string& what) {
  fail(ErrorCode::corrupt_file,
       path.string() + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void KLEngine::cache_store(const std::filesystem::path& path) {
  std::vector<ElementId> ws;
  for (std::size_t w = 0; w < rows_.size(); ++w)
    if (rows_[w]) ws.push_back(static_cast<ElementId>(w));
  auto shortlex = [this](ElementId a, ElementId b) {
    return registry_.element(a) < registry_.element(b);
  };
  std::sort(ws.begin(), ws.end(), shortlex);

  std::ostringstream out;
  out << cache_header() << '\n';
  for (ElementId w : ws) {
    const Row& r = *rows_[w];
    std::vector<std::size_t> order(r.lower.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return shortlex(r.lower[a], r.lower[b]);
    });
    const std::string wf = word_field(registry_.element(w));
    for (std::size_t i : order)
      out << word_field(registry_.element(r.lower[i])) << '\t' << wf << '\t'
          << polys_[r.poly[i]].str() << '\n';
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) fail(ErrorCode::io, "cannot open " + path.string() + " for writing");
  const std::string text = out.str();
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) fail(ErrorCode::io, "write failed for " + path.string());
}

void KLEngine::cache_load(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::io, "cannot open " + path.string());

  std::string line;
  if (!std::getline(file, line)) corrupt(path, 1, "empty cache file");
  if (line.rfind(kMagic, 0) != 0) corrupt(path, 1, "missing cache header");
  if (line != cache_header())
    fail(ErrorCode::version_mismatch,
         path.string() + ": cache header \"" + line + "\" does not match \"" + cache_header() +
             "\"");

  std::map<GroupElement, std::vector<std::pair<GroupElement, LaurentPoly>>> records;
  std::size_t lineno = 1;
  while (std::getline(file, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) corrupt(path, lineno, "expected three tab-separated fields");
    try {
      GroupElement u = GroupElement::parse(line.substr(0, tab1));
      GroupElement w = GroupElement::parse(line.substr(tab1 + 1, tab2 - tab1 - 1));
      LaurentPoly p = LaurentPoly::parse(line.substr(tab2 + 1));
      if (word_field(u) != line.substr(0, tab1) ||
          word_field(w) != line.substr(tab1 + 1, tab2 - tab1 - 1))
        corrupt(path, lineno, "word is not in canonical form");
      records[std::move(w)].emplace_back(std::move(u), std::move(p));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::corrupt_file) throw;
      corrupt(path, lineno, e.what());
    }
  }

  // Shortlex order guarantees w' = s w is processed before w.
  for (auto& [w, entries] : records) {
    const ElementId wid = registry_.intern(w);
    auto r = std::make_unique<Row>();
    std::vector<std::pair<ElementId, PolyId>> pairs;
    pairs.reserve(entries.size());
    for (const auto& [u, p] : entries) {
      const auto ulen = u.length();
      if (ulen > w.length() || (u == w && p != LaurentPoly(1)) || p.is_zero() ||
          !p.has_only_even_exponents() || p.valuation() < 0 ||
          !p.has_nonnegative_coefficients() ||
          (u != w && 2 * q_degree(p) > static_cast<int>(w.length() - ulen) - 1))
        corrupt(path, 0, "invalid entry P(" + u.str() + "," + w.str() + ") = " + p.str());
      pairs.emplace_back(registry_.intern(u), intern_poly(p));
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [u, p] : pairs) {
      if (!r->lower.empty() && r->lower.back() == u) corrupt(path, 0, "duplicate entry");
      r->lower.push_back(u);
      r->poly.push_back(p);
    }

    if (!w.is_identity()) {
      const ElementId wp = registry_.left_mul(w.word().front(), wid);
      if (wp >= rows_.size() || !rows_[wp])
        corrupt(path, 0, "row for " + w.str() + " present without the row of its suffix");
      std::vector<ElementId> expected;
      for (ElementId u : rows_[wp]->lower) {
        expected.push_back(u);
        expected.push_back(registry_.left_mul(w.word().front(), u));
      }
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      if (expected != r->lower) corrupt(path, 0, "row for " + w.str() + " is incomplete");
    } else if (r->lower != std::vector<ElementId>{wid}) {
      corrupt(path, 0, "malformed identity row");
    }
    finish_row(wid, *r);

    if (rows_.size() <= wid) rows_.resize(registry_.size());
    if (rows_[wid]) {
      if (rows_[wid]->lower != r->lower || rows_[wid]->poly != r->poly)
        corrupt(path, 0, "row for " + w.str() + " disagrees with the in-memory table");
      continue;
    }
    rows_[wid] = std::move(r);
  }
}

}  // namespace g2kl
