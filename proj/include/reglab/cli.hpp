#pragma once

// Command-line front end: compute, fibers, pf, oracle and selfcheck.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace reglab::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kFailure = 1, kValidation = 2, kPrecision = 3 };

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string subcommand;
  int l = 5;
  int digits = 30;
  int oracle_digits = 20;
  Format format = Format::Text;
  std::optional<std::string> cache_dir;  ///< run_cli fills it from --cache or REGLAB_CACHE
  int jobs = 0;  ///< 0 = one per hardware thread
  bool oracle_check = true;
  std::string g2;  ///< fibers / pf: custom family, polynomials in t
  std::string g3;
  int max_m = 3;   ///< pf: relations for t^0 .. t^max_m
};

/// Parses argv and dispatches; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_fibers(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_pf(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// The serialized compute result ("payload" of a cache entry).
nlohmann::json compute_payload(const RunConfig& cfg);
std::string render_payload(const nlohmann::json& payload, Format format);

/// One file per (l, digits, initial truncation, version) key.
std::string cache_file_name(int l, int digits);
/// nullopt when the file is missing; a warning on `err` and nullopt when it
/// is corrupted or belongs to another key.
std::optional<nlohmann::json> cache_load(const std::string& dir, int l, int digits, std::ostream& err);
void cache_store(const std::string& dir, int l, int digits, const nlohmann::json& payload);
std::string payload_checksum(const nlohmann::json& payload);

}  // namespace reglab::cli
