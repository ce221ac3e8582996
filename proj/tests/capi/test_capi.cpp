#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "g2kl/g2kl.h"

namespace {

struct Ctx {
  Ctx() { REQUIRE(g2kl_context_create(nullptr, &ctx) == G2KL_OK); }
  ~Ctx() { g2kl_context_destroy(ctx); }
  g2kl_context* ctx = nullptr;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  g2kl_string_free(s);
  return out;
}

std::string temp_path(const char* stem) {
  return (std::filesystem::temp_directory_path() / (std::string(stem) + std::to_string(::getpid())))
      .string();
}

}  // namespace

TEST_CASE("basic queries") {
  Ctx c;
  char* w = nullptr;
  size_t len = 99;
  REQUIRE(g2kl_reduce(c.ctx, "ss", &w, &len) == G2KL_OK);
  CHECK(take(w).empty());
  CHECK(len == 0);
  REQUIRE(g2kl_reduce(c.ctx, "tststs", &w, &len) == G2KL_OK);
  CHECK(take(w) == "121212");
  CHECK(len == 6);
  REQUIRE(g2kl_reduce(c.ctx, "tstsrtstsr", nullptr, &len) == G2KL_OK);
  CHECK(len == 10);

  int leq = -1;
  REQUIRE(g2kl_bruhat_leq(c.ctx, "1", "121212", &leq) == G2KL_OK);
  CHECK(leq == 1);
  REQUIRE(g2kl_bruhat_leq(c.ctx, "0", "121212", &leq) == G2KL_OK);
  CHECK(leq == 0);

  char* p = nullptr;
  REQUIRE(g2kl_kl_poly(c.ctx, "1", "121212", &p) == G2KL_OK);
  CHECK(take(p) == "1");
  REQUIRE(g2kl_kl_poly(c.ctx, "0", "121212", &p) == G2KL_OK);
  CHECK(take(p) == "0");
  REQUIRE(g2kl_kl_poly(c.ctx, "", "1021", &p) == G2KL_OK);
  CHECK(take(p) == "q+1");

  int64_t mu = -1;
  REQUIRE(g2kl_mu(c.ctx, "", "1", &mu) == G2KL_OK);
  CHECK(mu == 1);

  REQUIRE(g2kl_c_product(c.ctx, "121212", "121212", &p) == G2KL_OK);
  CHECK(take(p) == "([2]^6-4[2]^4+3[2]^2)*C[121212]");
  REQUIRE(g2kl_c_product(c.ctx, "", "121212", &p) == G2KL_OK);
  CHECK(take(p) == "C[121212]");

  REQUIRE(g2kl_cell(c.ctx, "121212", &p) == G2KL_OK);
  CHECK(take(p) == "(e,(0,0),e)");
  REQUIRE(g2kl_mu_lowest(c.ctx, "121212", "0121212", &mu) == G2KL_OK);
  CHECK(mu == 1);
  CHECK(std::string(g2kl_version()) == "1.0.0");
}

TEST_CASE("errors carry codes and messages") {
  Ctx c;
  char* p = nullptr;
  CHECK(g2kl_reduce(c.ctx, "19", &p, nullptr) == G2KL_E_PARSE);
  CHECK(std::string(g2kl_last_error(c.ctx)).find("'9'") != std::string::npos);
  CHECK(g2kl_cell(c.ctx, "1", &p) == G2KL_E_NOT_IN_CELL);
  CHECK(g2kl_kl_poly(c.ctx, "1", "1", nullptr) == G2KL_E_INVALID_ARGUMENT);
  CHECK(g2kl_reduce(c.ctx, nullptr, &p, nullptr) == G2KL_E_INVALID_ARGUMENT);
  CHECK(g2kl_reduce(nullptr, "1", &p, nullptr) == G2KL_E_INVALID_ARGUMENT);
  CHECK(g2kl_repmult(c.ctx, -1, 0, 1, 0, G2KL_FORMAT_TEXT, &p) == G2KL_E_INVALID_ARGUMENT);
  CHECK(g2kl_delta_table(c.ctx, static_cast<g2kl_format>(42), &p) == G2KL_E_INVALID_ARGUMENT);
  CHECK(g2kl_reduce(c.ctx, "1", &p, nullptr) == G2KL_OK);
  take(p);
  CHECK(std::string(g2kl_last_error(c.ctx)).empty());
  CHECK(std::string(g2kl_status_name(G2KL_E_CORRUPT_FILE)) == "corrupt file");
}

TEST_CASE("resource caps") {
  g2kl_config cfg;
  g2kl_config_default(&cfg);
  cfg.max_length = 8;
  cfg.max_product_length = 10;
  g2kl_context* ctx = nullptr;
  REQUIRE(g2kl_context_create(&cfg, &ctx) == G2KL_OK);
  char* p = nullptr;
  CHECK(g2kl_reduce(ctx, "012101210", &p, nullptr) == G2KL_E_RESOURCE_LIMIT);
  CHECK(g2kl_c_product(ctx, "121212", "121212", &p) == G2KL_E_RESOURCE_LIMIT);
  g2kl_context_destroy(ctx);
  cfg.max_support = 0;
  CHECK(g2kl_context_create(&cfg, &ctx) == G2KL_E_INVALID_ARGUMENT);
}

TEST_CASE("tables are independent of the job count") {
  g2kl_config cfg;
  g2kl_config_default(&cfg);
  g2kl_context* serial = nullptr;
  REQUIRE(g2kl_context_create(&cfg, &serial) == G2KL_OK);
  cfg.jobs = 4;
  g2kl_context* parallel = nullptr;
  REQUIRE(g2kl_context_create(&cfg, &parallel) == G2KL_OK);
  for (g2kl_format f : {G2KL_FORMAT_CSV, G2KL_FORMAT_JSON, G2KL_FORMAT_LATEX, G2KL_FORMAT_TEXT}) {
    char *a = nullptr, *b = nullptr;
    REQUIRE(g2kl_delta_table(serial, f, &a) == G2KL_OK);
    REQUIRE(g2kl_delta_table(parallel, f, &b) == G2KL_OK);
    CHECK(take(a) == take(b));
  }
  char *a = nullptr, *b = nullptr;
  REQUIRE(g2kl_mu_table(serial, 1, 1, G2KL_FORMAT_CSV, &a) == G2KL_OK);
  REQUIRE(g2kl_mu_table(parallel, 1, 1, G2KL_FORMAT_CSV, &b) == G2KL_OK);
  const std::string ta = take(a);
  CHECK(ta == take(b));
  CHECK(ta.find("# max_mu=") != std::string::npos);
  g2kl_context_destroy(serial);
  g2kl_context_destroy(parallel);
}

TEST_CASE("cache through the C API") {
  const std::string path = temp_path("g2kl-capi-cache");
  {
    Ctx c;
    char* p = nullptr;
    REQUIRE(g2kl_c_product(c.ctx, "121212", "0121212", &p) == G2KL_OK);
    take(p);
    REQUIRE(g2kl_cache_store(c.ctx, path.c_str()) == G2KL_OK);
  }
  {
    Ctx c;
    REQUIRE(g2kl_cache_load(c.ctx, path.c_str()) == G2KL_OK);
    char* info = nullptr;
    REQUIRE(g2kl_cache_info(c.ctx, &info) == G2KL_OK);
    const std::string text = take(info);
    CHECK(text.find("source=" + path) != std::string::npos);
    CHECK(text.find("rows=0") == std::string::npos);
    REQUIRE(g2kl_cache_clear(c.ctx) == G2KL_OK);
    REQUIRE(g2kl_cache_info(c.ctx, &info) == G2KL_OK);
    CHECK(take(info).find("rows=0\n") != std::string::npos);
  }
  {
    std::ofstream(path, std::ios::trunc) << "not a cache\n";
    Ctx c;
    CHECK(g2kl_cache_load(c.ctx, path.c_str()) == G2KL_E_CORRUPT_FILE);
    CHECK(g2kl_cache_load(c.ctx, (path + ".none").c_str()) == G2KL_E_IO);
  }
  std::filesystem::remove(path);
}
