// Command-line front end. Talks to the engine only through g2kl.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2kl/g2kl.h"
#include "json.hpp"

namespace {

constexpr const char* kCacheEnv = "G2KL_CACHE";

struct Options {
  std::string cache;
  std::string format = "text";
  std::size_t max_length = 0;
  std::size_t max_product_length = 0;
  unsigned jobs = 1;
  unsigned bound_a = 3;
  unsigned bound_b = 3;
};

struct Failure {
  g2kl_status status;
  std::string message;
};

class Session {
 public:
  explicit Session(const Options& opt) {
    g2kl_config cfg;
    g2kl_config_default(&cfg);
    if (opt.max_length) cfg.max_length = opt.max_length;
    if (opt.max_product_length) cfg.max_product_length = opt.max_product_length;
    cfg.jobs = opt.jobs;
    if (g2kl_status st = g2kl_context_create(&cfg, &ctx_); st != G2KL_OK)
      throw Failure{st, "cannot create context"};
  }
  ~Session() { g2kl_context_destroy(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  g2kl_context* get() const { return ctx_; }

  void check(g2kl_status st) const {
    if (st != G2KL_OK) throw Failure{st, g2kl_last_error(ctx_)};
  }

  std::string take(char* s) const {
    std::string out = s ? s : "";
    g2kl_string_free(s);
    return out;
  }

 private:
  g2kl_context* ctx_ = nullptr;
};

g2kl_format to_format(const std::string& f) {
  if (f == "csv") return G2KL_FORMAT_CSV;
  if (f == "json") return G2KL_FORMAT_JSON;
  if (f == "latex") return G2KL_FORMAT_LATEX;
  return G2KL_FORMAT_TEXT;
}

// Scalar results: plain text, or a one-object JSON document.
void emit(const Options& opt, const nlohmann::ordered_json& obj, const std::string& text) {
  if (opt.format == "json") std::cout << obj.dump() << '\n';
  else std::cout << text << '\n';
}

std::pair<int, int> parse_weight(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t p1 = 0, p2 = 0;
    const int a = std::stoi(s.substr(0, comma), &p1);
    const int b = std::stoi(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw Failure{G2KL_E_PARSE, "cannot parse weight \"" + text + "\"; expected a,b or (a,b)"};
  }
}

std::string word_or_e(const std::string& w) { return w.empty() ? "e" : w; }

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Kazhdan-Lusztig computations for the affine Weyl group of type G2"};
  app.set_version_flag("--version", std::string(g2kl_version()));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--cache", opt.cache, std::string("KL cache file (default: $") + kCacheEnv + ")");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
  app.add_option("--max-length", opt.max_length, "Longest accepted input element")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-product-length", opt.max_product_length, "Cap on l(x)+l(y) for products")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "Worker threads for table commands")
      ->check(CLI::Range(1U, 256U));

  std::string a1, a2;
  auto words = [&](CLI::App* sub, int n) {
    sub->add_option("word1", a1, "Word in r,s,t or 0,1,2")->required();
    if (n > 1) sub->add_option("word2", a2, "Word in r,s,t or 0,1,2")->required();
    sub->fallthrough();
  };
  words(app.add_subcommand("reduce", "Canonical reduced word and length"), 1);
  words(app.add_subcommand("length", "Length of an element"), 1);
  words(app.add_subcommand("bruhat", "Bruhat comparison u <= w"), 2);
  words(app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{u,w}"), 2);
  words(app.add_subcommand("mu", "Leading coefficient mu(u,w)"), 2);
  words(app.add_subcommand("cproduct", "C_x C_y in the canonical basis"), 2);
  words(app.add_subcommand("cell", "Decomposition (u,(n_alpha,n_beta),v) in the lowest cell"), 1);
  words(app.add_subcommand("mu-lowest", "mu(y,w) on the lowest cell via delta values"), 2);
  app.add_subcommand("delta-table", "Delta values for all 144 pairs")->fallthrough();
  auto* mu_table = app.add_subcommand("mu-table", "Nonzero mu over a weight box in one left cell");
  mu_table->add_option("--bound-a", opt.bound_a, "Maximum n_alpha")->check(CLI::Range(0U, 64U));
  mu_table->add_option("--bound-b", opt.bound_b, "Maximum n_beta")->check(CLI::Range(0U, 64U));
  mu_table->fallthrough();
  auto* repmult = app.add_subcommand("repmult", "Decompose V(lambda) (x) V(lambda')");
  repmult->add_option("lambda", a1, "Weight a,b")->required();
  repmult->add_option("lambda_prime", a2, "Weight a,b")->required();
  repmult->fallthrough();
  auto* cache = app.add_subcommand("cache", "Inspect or delete the KL cache");
  cache->require_subcommand(1);
  cache->add_subcommand("info", "Summary of the cache contents")->fallthrough();
  cache->add_subcommand("clear", "Delete the cache file")->fallthrough();
  cache->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : G2KL_E_INVALID_ARGUMENT;
  }

  if (opt.cache.empty())
    if (const char* env = std::getenv(kCacheEnv)) opt.cache = env;

  try {
    Session session(opt);
    g2kl_context* ctx = session.get();
    const std::string cmd = app.get_subcommands().front()->get_name();
    const bool have_cache = !opt.cache.empty() && std::filesystem::exists(opt.cache);

    if (cmd == "cache") {
      const std::string what = cache->get_subcommands().front()->get_name();
      if (opt.cache.empty()) throw Failure{G2KL_E_INVALID_ARGUMENT, "no cache path given"};
      if (what == "clear") {
        const bool removed = std::filesystem::remove(opt.cache);
        emit(opt, {{"path", opt.cache}, {"removed", removed}},
             (removed ? "removed " : "no cache at ") + opt.cache);
        return 0;
      }
      if (have_cache) session.check(g2kl_cache_load(ctx, opt.cache.c_str()));
      char* info = nullptr;
      session.check(g2kl_cache_info(ctx, &info));
      std::string text = session.take(info);
      if (opt.format == "json") {
        nlohmann::ordered_json obj{{"path", opt.cache}, {"exists", have_cache}};
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) {
          const auto eq = line.find('=');
          obj[line.substr(0, eq)] = line.substr(eq + 1);
        }
        std::cout << obj.dump() << '\n';
      } else {
        std::cout << "path=" << opt.cache << "\nexists=" << (have_cache ? "yes" : "no") << '\n'
                  << text;
      }
      return 0;
    }

    bool uses_engine = false;
    if (have_cache) session.check(g2kl_cache_load(ctx, opt.cache.c_str()));

    if (cmd == "reduce" || cmd == "length") {
      char* canon = nullptr;
      std::size_t len = 0;
      session.check(g2kl_reduce(ctx, a1.c_str(), &canon, &len));
      const std::string w = session.take(canon);
      if (cmd == "reduce")
        emit(opt, {{"word", w}, {"length", len}}, w + "\t" + std::to_string(len));
      else
        emit(opt, {{"length", len}}, std::to_string(len));
    } else if (cmd == "bruhat") {
      int leq = 0;
      session.check(g2kl_bruhat_leq(ctx, a1.c_str(), a2.c_str(), &leq));
      emit(opt, {{"leq", leq != 0}}, leq ? "true" : "false");
    } else if (cmd == "klpoly") {
      char* p = nullptr;
      session.check(g2kl_kl_poly(ctx, a1.c_str(), a2.c_str(), &p));
      const std::string poly = session.take(p);
      emit(opt, {{"u", a1}, {"w", a2}, {"P", poly}}, poly);
      uses_engine = true;
    } else if (cmd == "mu" || cmd == "mu-lowest") {
      std::int64_t m = 0;
      session.check(cmd == "mu" ? g2kl_mu(ctx, a1.c_str(), a2.c_str(), &m)
                                : g2kl_mu_lowest(ctx, a1.c_str(), a2.c_str(), &m));
      emit(opt, {{"mu", m}}, std::to_string(m));
      uses_engine = true;
    } else if (cmd == "cproduct") {
      char* p = nullptr;
      session.check(g2kl_c_product(ctx, a1.c_str(), a2.c_str(), &p));
      const std::string prod = session.take(p);
      emit(opt, {{"x", word_or_e(a1)}, {"y", word_or_e(a2)}, {"product", prod}}, prod);
      uses_engine = true;
    } else if (cmd == "cell") {
      char* p = nullptr;
      session.check(g2kl_cell(ctx, a1.c_str(), &p));
      const std::string dec = session.take(p);
      emit(opt, {{"decomposition", dec}}, dec);
    } else if (cmd == "delta-table") {
      char* p = nullptr;
      session.check(g2kl_delta_table(ctx, to_format(opt.format), &p));
      std::cout << session.take(p);
      uses_engine = true;
    } else if (cmd == "mu-table") {
      char* p = nullptr;
      session.check(g2kl_mu_table(ctx, opt.bound_a, opt.bound_b, to_format(opt.format), &p));
      std::cout << session.take(p);
      uses_engine = true;
    } else if (cmd == "repmult") {
      const auto [x1, y1] = parse_weight(a1);
      const auto [x2, y2] = parse_weight(a2);
      char* p = nullptr;
      session.check(g2kl_repmult(ctx, x1, y1, x2, y2, to_format(opt.format), &p));
      std::cout << session.take(p);
    }

    if (uses_engine && !opt.cache.empty()) session.check(g2kl_cache_store(ctx, opt.cache.c_str()));
    return 0;
  } catch (const Failure& f) {
    std::cerr << "g2kl: " << g2kl_status_name(f.status) << ": " << f.message << '\n';
    return static_cast<int>(f.status);
  } catch (const std::exception& e) {
    std::cerr << "g2kl: " << e.what() << '\n';
    return G2KL_E_INTERNAL;
  }
}
