#include "g2kl/g2kl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "g2kl/error.hpp"
#include "g2kl/g2_rep.hpp"
#include "g2kl/kl.hpp"
#include "g2kl/lowest_cell.hpp"
#include "g2kl/report.hpp"

using namespace g2kl;

struct g2kl_context {
  explicit g2kl_context(const g2kl_config& c)
      : config(c), engine(EngineConfig{c.max_support, c.max_product_length}), cell(engine) {}

  g2kl_config config;
  KLEngine engine;
  cell::LowestCell cell;
  std::string last_error;
  std::string loaded_from;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
g2kl_status guarded(g2kl_context* ctx, F&& body) {
  if (!ctx) return G2KL_E_INVALID_ARGUMENT;
  try {
    body();
    ctx->last_error.clear();
    return G2KL_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return static_cast<g2kl_status>(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return G2KL_E_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return G2KL_E_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown exception";
    return G2KL_E_INTERNAL;
  }
}

void require_out(const void* p) {
  if (!p) fail(ErrorCode::invalid_argument, "null output pointer");
}

GroupElement element(const g2kl_context* ctx, const char* text) {
  if (!text) fail(ErrorCode::invalid_argument, "null word");
  GroupElement x = GroupElement::parse(text);
  if (ctx->config.max_length && x.length() > ctx->config.max_length)
    fail(ErrorCode::resource_limit, "element of length " + std::to_string(x.length()) +
                                        " exceeds max length " +
                                        std::to_string(ctx->config.max_length));
  return x;
}

report::Format format_of(g2kl_format f) {
  switch (f) {
    case G2KL_FORMAT_TEXT: return report::Format::text;
    case G2KL_FORMAT_CSV: return report::Format::csv;
    case G2KL_FORMAT_JSON: return report::Format::json;
    case G2KL_FORMAT_LATEX: return report::Format::latex;
  }
  fail(ErrorCode::invalid_argument, "unknown output format");
}

// Job count is deliberately absent: it never changes the output.
report::Provenance provenance(const g2kl_context* ctx) {
  std::ostringstream s;
  s << "max_length=" << ctx->config.max_length
    << ";max_product_length=" << ctx->config.max_product_length
    << ";max_support=" << ctx->config.max_support;
  return {s.str()};
}

}  // namespace

extern "C" {

const char* g2kl_version(void) { return report::kToolVersion.data(); }

const char* g2kl_status_name(g2kl_status status) {
  return error_code_name(static_cast<ErrorCode>(status));
}

void g2kl_config_default(g2kl_config* config) {
  if (!config) return;
  const EngineConfig engine;
  config->max_length = 64;
  config->max_product_length = engine.max_product_length;
  config->max_support = engine.max_support;
  config->jobs = 1;
}

g2kl_status g2kl_context_create(const g2kl_config* config, g2kl_context** out) {
  if (!out) return G2KL_E_INVALID_ARGUMENT;
  *out = nullptr;
  g2kl_config c;
  g2kl_config_default(&c);
  if (config) c = *config;
  if (c.max_product_length == 0 || c.max_support == 0) return G2KL_E_INVALID_ARGUMENT;
  if (c.jobs == 0) c.jobs = 1;
  try {
    *out = new g2kl_context(c);
    return G2KL_OK;
  } catch (...) {
    return G2KL_E_RESOURCE_LIMIT;
  }
}

void g2kl_context_destroy(g2kl_context* ctx) { delete ctx; }

const char* g2kl_last_error(const g2kl_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void g2kl_string_free(char* s) { std::free(s); }

g2kl_status g2kl_reduce(g2kl_context* ctx, const char* word, char** canonical, size_t* length) {
  return guarded(ctx, [&] {
    const GroupElement x = element(ctx, word);
    if (canonical) *canonical = dup_string(x.str());
    if (length) *length = x.length();
  });
}

g2kl_status g2kl_bruhat_leq(g2kl_context* ctx, const char* u, const char* w, int* out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = bruhat_leq(element(ctx, u), element(ctx, w)) ? 1 : 0;
  });
}

g2kl_status g2kl_kl_poly(g2kl_context* ctx, const char* u, const char* w, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const LaurentPoly p = ctx->engine.kl_poly(element(ctx, u), element(ctx, w));
    *out = dup_string(q_str(p));
  });
}

g2kl_status g2kl_mu(g2kl_context* ctx, const char* u, const char* w, int64_t* out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = ctx->engine.mu(element(ctx, u), element(ctx, w));
  });
}

g2kl_status g2kl_c_product(g2kl_context* ctx, const char* x, const char* y, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = dup_string(ctx->engine.c_product(element(ctx, x), element(ctx, y)).str());
  });
}

g2kl_status g2kl_cell(g2kl_context* ctx, const char* w, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = dup_string(cell::require_c0(element(ctx, w)).str());
  });
}

g2kl_status g2kl_mu_lowest(g2kl_context* ctx, const char* y, const char* w, int64_t* out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = ctx->cell.mu_lowest(element(ctx, y), element(ctx, w));
  });
}

g2kl_status g2kl_delta_table(g2kl_context* ctx, g2kl_format format, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const report::Format f = format_of(format);
    const auto records = ctx->cell.delta_table(ctx->config.jobs);
    *out = dup_string(report::delta_table(records, f, provenance(ctx)));
  });
}

g2kl_status g2kl_mu_table(g2kl_context* ctx, unsigned bound_a, unsigned bound_b,
                          g2kl_format format, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const report::Format f = format_of(format);
    if (bound_a > 64 || bound_b > 64)
      fail(ErrorCode::resource_limit, "mu-table bounds are capped at 64");
    ctx->cell.delta_table(ctx->config.jobs);
    std::vector<cell::C0Decomposition> elements;
    for (cell::W0Index u : cell::all_w0())
      for (unsigned a = 0; a <= bound_a; ++a)
        for (unsigned b = 0; b <= bound_b; ++b)
          elements.push_back({u, {static_cast<int>(a), static_cast<int>(b)}, cell::W0Index::e});
    report::MuSummary summary{static_cast<int>(bound_a), static_cast<int>(bound_b), 0, 0};
    std::vector<report::MuRow> rows;
    for (const auto& y : elements)
      for (const auto& w : elements) {
        if (y == w) continue;
        ++summary.pairs;
        const std::int64_t m = ctx->cell.mu_formula(y, w);
        summary.max_mu = std::max(summary.max_mu, m);
        if (m != 0) {
          const auto& p = ctx->cell.pair(y.u, w.u);
          std::array<std::int64_t, 3> d{};
          for (cell::ZValue z : cell::kZValues) {
            auto it = p.delta.find(cell::weight_of(z));
            d[static_cast<std::size_t>(z)] = it == p.delta.end() ? 0 : 1;
          }
          rows.push_back({y, w, cell::classify(d), m});
        }
      }
    *out = dup_string(report::mu_table(rows, summary, f, provenance(ctx)));
  });
}

g2kl_status g2kl_repmult(g2kl_context* ctx, int a1, int b1, int a2, int b2, g2kl_format format,
                         char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const report::Format f = format_of(format);
    const rep::Weight l1{a1, b1}, l2{a2, b2};
    if (!l1.dominant() || !l2.dominant())
      fail(ErrorCode::invalid_argument, "weights must be dominant");
    if (a1 > 64 || b1 > 64 || a2 > 64 || b2 > 64)
      fail(ErrorCode::resource_limit, "weight coordinates are capped at 64");
    *out = dup_string(report::repmult(l1, l2, rep::tensor_decomposition(l1, l2), f, provenance(ctx)));
  });
}

g2kl_status g2kl_cache_load(g2kl_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) fail(ErrorCode::invalid_argument, "null path");
    ctx->engine.cache_load(path);
    ctx->loaded_from = path;
  });
}

g2kl_status g2kl_cache_store(g2kl_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) fail(ErrorCode::invalid_argument, "null path");
    ctx->engine.cache_store(path);
  });
}

g2kl_status g2kl_cache_info(g2kl_context* ctx, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const CacheInfo info = ctx->engine.cache_info();
    std::ostringstream s;
    s << "format_version=" << kCacheFormatVersion << '\n'
      << "source=" << (ctx->loaded_from.empty() ? "-" : ctx->loaded_from) << '\n'
      << "elements=" << info.elements << '\n'
      << "rows=" << info.rows << '\n'
      << "entries=" << info.entries << '\n'
      << "distinct_polynomials=" << info.distinct_polynomials << '\n'
      << "products=" << info.products << '\n';
    *out = dup_string(s.str());
  });
}

g2kl_status g2kl_cache_clear(g2kl_context* ctx) {
  return guarded(ctx, [&] {
    ctx->engine.clear();
    ctx->loaded_from.clear();
  });
}

}  // extern "C"
