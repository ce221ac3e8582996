#pragma once

// Table emission shared by the C API and the command-line tool. Every table
// starts with a provenance header (tool version, base point, config
// fingerprint); output is a pure function of its inputs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2kl/g2_rep.hpp"
#include "g2kl/lowest_cell.hpp"

namespace g2kl::report {

enum class Format { text, csv, json, latex };

std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format f);

inline constexpr std::string_view kToolVersion = "1.0.0";

struct Provenance {
  std::string config;  // canonical "key=value;..." string
  std::string fingerprint() const;  // 16 hex digits of FNV-1a over config
};

std::string delta_table(const std::vector<cell::DeltaRecord>& records, Format f,
                        const Provenance& prov);

struct MuRow {
  cell::C0Decomposition y;
  cell::C0Decomposition w;
  cell::UClass cls = cell::UClass::none;
  std::int64_t mu = 0;
};

struct MuSummary {
  int bound_a = 0;
  int bound_b = 0;
  std::uint64_t pairs = 0;
  std::int64_t max_mu = 0;
};

std::string mu_table(const std::vector<MuRow>& rows, const MuSummary& summary, Format f,
                     const Provenance& prov);

std::string repmult(rep::Weight lambda, rep::Weight lambda_prime,
                    const rep::Multiplicities& decomposition, Format f, const Provenance& prov);

}  // namespace g2kl::report
