#include "reglab/cli.hpp"

#include <CLI11.hpp>
#include <boost/crc.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "reglab/elliptic_oracle.hpp"
#include "reglab/error.hpp"
#include "reglab/gauss_manin.hpp"
#include "reglab/regulator.hpp"
#include "reglab/weierstrass.hpp"

namespace reglab::cli {

using nlohmann::json;

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate_compute_l(int l) {
  if (l < 5 || std::gcd(l, 6) != 1) {
    throw UnsupportedL("l = " + std::to_string(l) + " is not admissible: the standing assumption is gcd(l, 6) = 1, and l >= 5");
  }
}

void validate_digits(int digits) {
  if (digits < 10) throw std::invalid_argument("--digits must be >= 10");
}

WeierstrassFamily family_from(const RunConfig& cfg) {
  if (cfg.g2.empty() != cfg.g3.empty()) throw std::invalid_argument("--g2 and --g3 must be given together");
  if (!cfg.g2.empty()) {
    return {RationalFunction(parse_polynomial(cfg.g2)), RationalFunction(parse_polynomial(cfg.g3)),
            "g2 = " + cfg.g2 + ", g3 = " + cfg.g3};
  }
  require_admissible_l(cfg.l);
  return example_family(cfg.l);
}

// Runs `body`, mapping library errors to exit statuses.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const PrecisionNotReached& e) {
    err << "error: precision not reached: " << e.what() << "\n";
    return kPrecision;
  } catch (const UnsupportedL& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

}  // namespace

// ---------------------------------------------------------------- compute

json compute_payload(const RunConfig& cfg) {
  validate_compute_l(cfg.l);
  validate_digits(cfg.digits);
  const Precision p{cfg.digits};
  const int jobs = resolve_jobs(cfg.jobs);
  const auto pairs = eval_ij_all(cfg.l, p, jobs);
  const RegulatorResult r = regulator_from_pairs(cfg.l, pairs, p);

  json payload;
  payload["l"] = cfg.l;
  payload["h"] = r.h;
  payload["digits"] = cfg.digits;
  json is = json::array(), js = json::array(), ns = json::array();
  for (const auto& pp : pairs) {
    is.push_back(pp.i_value.to_string(cfg.digits));
    js.push_back(pp.j_value.to_string(cfg.digits));
    ns.push_back(pp.n_used);
  }
  payload["I"] = is;
  payload["J"] = js;
  payload["n_used"] = ns;
  payload["regulator_e_ind"] = r.value_e_ind.to_string(cfg.digits);
  payload["regulator_e_ff"] = r.value_e_ff.to_string(cfg.digits);
  payload["det_general"] = r.det_general.to_string(cfg.digits);
  payload["det_closed_form"] = r.det_closed_form.to_string(cfg.digits);
  payload["det_agreement_digits"] = r.det_agreement_digits;
  payload["sign_policy"] = r.sign_policy;
  payload["sqrt_factor"] = r.sqrt_factor;
  payload["normalization_note"] = r.normalization_note;

  if (cfg.oracle_check) {
    OracleOptions options;
    options.jobs = jobs;
    const Precision op{cfg.oracle_digits};
    const auto direct = direct_periods_all(cfg.l, op, options);
    Real worst(0L, p.working_bits());
    for (std::size_t k = 0; k < direct.size(); ++k) {
      const SeriesPeriods s = periods_from_pair(pairs[k], p);
      worst = max(worst, relative_difference(direct[k].delta_abs.value, s.delta_period.value));
      worst = max(worst, relative_difference(direct[k].gamma_abs.value, s.gamma_period.value));
    }
    payload["oracle_check"] = {{"max_rel_diff", worst.to_string(3)}, {"oracle_digits", cfg.oracle_digits}};
  } else {
    payload["oracle_check"] = nullptr;
  }
  return payload;
}

std::string render_payload(const json& payload, Format format) {
  std::ostringstream os;
  const int l = payload.at("l").get<int>();
  const auto& is = payload.at("I");
  const auto& js = payload.at("J");
  switch (format) {
    case Format::Json:
      os << payload.dump(2) << "\n";
      break;
    case Format::Csv:
      os << "l,j,I,J\n";
      for (std::size_t k = 0; k < is.size(); ++k) {
        os << l << "," << k + 1 << "," << is[k].get<std::string>() << "," << js[k].get<std::string>() << "\n";
      }
      break;
    case Format::Text: {
      std::size_t w = 6;
      for (const auto& v : is) w = std::max(w, v.get<std::string>().size() + 3);
      os << "l = " << l << ", h = " << payload.at("h").get<int>() << ", digits = " << payload.at("digits").get<int>()
         << "\n\n";
      os << pad("j", 4) << pad("I(j)", w) << "J(j)\n";
      for (std::size_t k = 0; k < is.size(); ++k) {
        os << pad(std::to_string(k + 1), 4) << pad(is[k].get<std::string>(), w) << js[k].get<std::string>() << "\n";
      }
      os << "\nregulator (e_ind): " << payload.at("regulator_e_ind").get<std::string>() << "\n";
      os << "sign policy:       " << payload.at("sign_policy").get<std::string>() << "\n";
      os << "det routes agree:  " << payload.at("det_agreement_digits").get<int>() << " digits\n";
      if (const auto& note = payload.at("normalization_note").get<std::string>(); !note.empty()) {
        os << "note:              " << note << "\n";
      }
      if (!payload.at("oracle_check").is_null()) {
        os << "oracle max rel diff: " << payload.at("oracle_check").at("max_rel_diff").get<std::string>() << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string payload_checksum(const json& payload) {
  const std::string text = payload.dump();
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return os.str();
}

namespace {

json cache_key(int l, int digits) {
  return {{"l", l}, {"digits", digits}, {"n0", default_truncation(digits)}, {"version", kVersion}};
}

}  // namespace

std::string cache_file_name(int l, int digits) {
  return "reglab-l" + std::to_string(l) + "-d" + std::to_string(digits) + "-n" + std::to_string(default_truncation(digits)) +
         "-v" + kVersion + ".json";
}

std::optional<json> cache_load(const std::string& dir, int l, int digits, std::ostream& err) {
  const std::filesystem::path path = std::filesystem::path(dir) / cache_file_name(l, digits);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json entry = json::parse(in);
    if (entry.at("key") != cache_key(l, digits)) {
      err << "warning: cache file " << path.string() << " has a stale key; recomputing\n";
      return std::nullopt;
    }
    const json& payload = entry.at("payload");
    if (entry.at("checksum").get<std::string>() != payload_checksum(payload)) {
      err << "warning: cache file " << path.string() << " failed its checksum; recomputing\n";
      return std::nullopt;
    }
    return payload;
  } catch (const std::exception&) {
    err << "warning: cache file " << path.string() << " is corrupted; recomputing\n";
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, int l, int digits, const json& payload) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / cache_file_name(l, digits);
  const json entry = {{"key", cache_key(l, digits)}, {"payload", payload}, {"checksum", payload_checksum(payload)}};
  // Write then rename so a reader never sees a half-written file.
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_compute_l(cfg.l);
    validate_digits(cfg.digits);
    const std::optional<std::string>& dir = cfg.cache_dir;

    std::optional<json> payload;
    if (dir) payload = cache_load(*dir, cfg.l, cfg.digits, err);
    if (payload && cfg.oracle_check && payload->at("oracle_check").is_null()) payload.reset();
    if (!payload) {
      payload = compute_payload(cfg);
      if (dir) cache_store(*dir, cfg.l, cfg.digits, *payload);
    }
    out << render_payload(*payload, cfg.format);
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------- fibers / pf

int run_fibers(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeierstrassFamily family = family_from(cfg);
    const EulerData e = euler_epsilon(family);
    if (cfg.format == Format::Json) {
      json fibers = json::array();
      for (const auto& f : e.fibers) {
        fibers.push_back({{"place", f.place.to_string()}, {"type", f.type_name()}, {"epsilon_s", f.epsilon_s}});
      }
      const json doc = {{"family", family.label},        {"fibers", fibers},
                        {"epsilon", e.epsilon},          {"additive_count", e.additive_count},
                        {"deg_h10", e.deg_h10},          {"deg_h01", e.deg_h01}};
      out << doc.dump(2) << "\n";
    } else {
      out << family.label << "\n\n" << pad("place", 28) << pad("type", 8) << "epsilon_s\n";
      for (const auto& f : e.fibers) {
        out << pad(f.place.to_string(), 28) << pad(f.type_name(), 8) << f.epsilon_s << "\n";
      }
      out << "\nepsilon = " << e.epsilon << ", additive fibers = " << e.additive_count << ", deg H10 = " << e.deg_h10
          << ", deg H01 = " << e.deg_h01 << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int run_pf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeierstrassFamily family = family_from(cfg);
    if (cfg.max_m < 0) throw std::invalid_argument("--max-m must be >= 0");
    const ConnectionMatrix c = connection_matrix(family);
    const PicardFuchsOperator pf = picard_fuchs(family);
    json locus = json::array();
    for (const auto& place : degeneracy_locus(family)) locus.push_back(place.to_string());
    json relations = json::array();
    for (int m = 0; m <= cfg.max_m; ++m) relations.push_back(pf_relation(family, m).to_string());
    if (cfg.format == Format::Json) {
      const json doc = {{"family", family.label},
                        {"A", pf.a.to_string()},
                        {"B", pf.b.to_string()},
                        {"connection",
                         {{c(0, 0).to_string(), c(0, 1).to_string()}, {c(1, 0).to_string(), c(1, 1).to_string()}}},
                        {"trace", c.trace().to_string()},
                        {"degeneracy_locus", locus},
                        {"pf_relations", relations}};
      out << doc.dump(2) << "\n";
    } else {
      out << family.label << "\n\n";
      out << "A = " << pf.a.to_string() << "\nB = " << pf.b.to_string() << "\n\n";
      out << "connection matrix (columns: nabla w_hat, nabla w_star)\n";
      for (int r = 0; r < 2; ++r) out << "  [" << c(r, 0).to_string() << ",  " << c(r, 1).to_string() << "]\n";
      out << "trace = " << c.trace().to_string() << "\n";
      out << "degeneracy locus: " << (locus.empty() ? std::string("empty") : locus.dump()) << "\n\n";
      for (int m = 0; m <= cfg.max_m; ++m) {
        out << "PF(t^" << m << " w_star) = " << relations[static_cast<std::size_t>(m)].get<std::string>() << "\n";
      }
    }
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------- oracle

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_compute_l(cfg.l);
    validate_digits(cfg.digits);
    const Precision p{cfg.digits};
    OracleOptions options;
    options.jobs = resolve_jobs(cfg.jobs);
    const auto pairs = eval_ij_all(cfg.l, p, options.jobs);
    const auto direct = direct_periods_all(cfg.l, Precision{cfg.oracle_digits}, options);
    json rows = json::array();
    for (std::size_t k = 0; k < direct.size(); ++k) {
      const SeriesPeriods s = periods_from_pair(pairs[k], p);
      rows.push_back({{"j", k + 1},
                      {"delta_series", s.delta_period.to_string(15)},
                      {"delta_oracle", direct[k].delta_abs.to_string(15)},
                      {"delta_rel_diff", relative_difference(direct[k].delta_abs.value, s.delta_period.value).to_string(3)},
                      {"gamma_series", s.gamma_period.to_string(15)},
                      {"gamma_oracle", direct[k].gamma_abs.to_string(15)},
                      {"gamma_rel_diff", relative_difference(direct[k].gamma_abs.value, s.gamma_period.value).to_string(3)}});
    }
    static constexpr const char* kCols[] = {"j",           "delta_series", "delta_oracle",  "delta_rel_diff",
                                            "gamma_series", "gamma_oracle", "gamma_rel_diff"};
    if (cfg.format == Format::Json) {
      out << json({{"l", cfg.l}, {"rows", rows}}).dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
      out << "l,j,delta_series,delta_oracle,delta_rel_diff,gamma_series,gamma_oracle,gamma_rel_diff\n";
      for (const auto& r : rows) {
        out << cfg.l;
        for (const char* col : kCols) {
          out << ",";
          if (r[col].is_string()) {
            out << r[col].get<std::string>();
          } else {
            out << r[col].dump();
          }
        }
        out << "\n";
      }
    } else {
      out << "l = " << cfg.l << ": |int_Delta| and |int_Gamma| by the series and by direct integration\n\n";
      out << pad("j", 4) << pad("Delta (series)", 20) << pad("Delta (oracle)", 20) << pad("rel diff", 11)
          << pad("Gamma (series)", 20) << pad("Gamma (oracle)", 20) << "rel diff\n";
      for (const auto& r : rows) {
        out << pad(r["j"].dump(), 4) << pad(r["delta_series"].get<std::string>(), 20) << pad(r["delta_oracle"].get<std::string>(), 20)
            << pad(r["delta_rel_diff"].get<std::string>(), 11) << pad(r["gamma_series"].get<std::string>(), 20) << pad(r["gamma_oracle"].get<std::string>(), 20)
            << r["gamma_rel_diff"].get<std::string>() << "\n";
      }
    }
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------- selfcheck

namespace {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::string expected_fiber_mismatch(int l) {
  const auto fibers = singular_fibers(example_family(l));
  const Polynomial t = Polynomial::t();
  const Polynomial roots_of_unity = Polynomial::monomial(1, l) - Polynomial(1);
  int roots_seen = 0;
  bool zero_seen = false, infinity_seen = false;
  for (const auto& f : fibers) {
    if (f.place.kind == Place::Kind::Infinity) {
      const KodairaType want = l % 3 == 2 ? KodairaType::IV : KodairaType::IVStar;
      if (f.type != want) return "fiber at infinity is " + f.type_name();
      infinity_seen = true;
    } else if (f.place.factor == t) {
      if (f.type != KodairaType::I || f.n != 3 * l) return "fiber at 0 is " + f.type_name();
      zero_seen = true;
    } else {
      if (f.type != KodairaType::I || f.n != 1) return "fiber at " + f.place.to_string() + " is " + f.type_name();
      if (!divmod(roots_of_unity, f.place.factor).second.is_zero()) {
        return "unexpected fiber at " + f.place.to_string();
      }
      roots_seen += f.place.factor.degree();
    }
  }
  if (!zero_seen || !infinity_seen || roots_seen != l) return "fiber list incomplete";
  return {};
}

}  // namespace

int run_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_digits(cfg.digits);
    const Precision p{cfg.digits};
    std::vector<Check> checks;
    const auto add = [&](std::string name, auto&& fn) {
      Check c{std::move(name), false, {}};
      try {
        c.detail = fn();
        c.ok = c.detail.empty();
      } catch (const std::exception& e) {
        c.detail = e.what();
      }
      out << (c.ok ? "PASS " : "FAIL ") << c.name << (c.ok ? "" : ": " + c.detail) << "\n" << std::flush;
      checks.push_back(std::move(c));
    };

    add("series identities a2 a3 b1 b2", [] {
      const auto a = a_coeffs_formal(4);
      const auto b = b_coeffs_formal(3);
      const AlphaPolynomial x = AlphaPolynomial::alpha();
      const AlphaPolynomial a2 = AlphaPolynomial(3) - AlphaPolynomial(27) * x;
      const AlphaPolynomial a3 = AlphaPolynomial(9) - AlphaPolynomial(make_rational(81, 2)) * x +
                                 AlphaPolynomial(make_rational(729, 2)) * x * x;
      const AlphaPolynomial b1 = AlphaPolynomial(-9) - AlphaPolynomial(15) * x;
      const AlphaPolynomial b2 = AlphaPolynomial(27) + AlphaPolynomial(make_rational(387, 2)) * x +
                                 AlphaPolynomial(make_rational(225, 2)) * x * x;
      if (!(a.coefficient(2) == a2)) return "a2 = " + a.coefficient(2).to_string();
      if (!(a.coefficient(3) == a3)) return "a3 = " + a.coefficient(3).to_string();
      if (!(b.coefficient(1) == b1)) return "b1 = " + b.coefficient(1).to_string();
      if (!(b.coefficient(2) == b2)) return "b2 = " + b.coefficient(2).to_string();
      return std::string();
    });
    add("connection trace zero", [] {
      for (int l : {1, 5, 7}) {
        if (!connection_matrix(example_family(l)).trace().is_zero()) return "l = " + std::to_string(l);
      }
      return std::string();
    });
    add("fiber list, l <= 25", [] {
      for (int l = 1; l <= 25; l += 2) {
        if (std::gcd(l, 6) != 1) continue;
        if (auto why = expected_fiber_mismatch(l); !why.empty()) return "l = " + std::to_string(l) + ": " + why;
      }
      return std::string();
    });
    add("epsilon integrality, l <= 25", [] {
      for (int l = 1; l <= 25; l += 2) {
        if (std::gcd(l, 6) != 1) continue;
        const EulerData e = euler_epsilon(example_family(l));
        if (e.epsilon != (l - 1) / 3 + 1) return "l = " + std::to_string(l) + ": epsilon = " + std::to_string(e.epsilon);
        if (hodge_and_dims(l).h20 != e.epsilon - 1) return "l = " + std::to_string(l) + ": h20 != epsilon - 1";
      }
      return std::string();
    });
    add("transformation law residual", [&] {
      const long bits = p.working_bits();
      const Real tol = Real::parse("1e-10", bits);
      const std::pair<long, int> cases[] = {{1, 80}, {2, 200}};
      for (const auto& [y, n] : cases) {
        const Real r = eisenstein_transform_residual(BigComplex(Real(0L, bits), Real(y, bits)), n, p);
        if (!(r < tol)) return "z = " + std::to_string(y) + "i: residual " + r.to_string(3);
      }
      return std::string();
    });
    add("vandermonde identity, odd l <= 25", [&] {
      for (int l = 3; l <= 25; l += 2) {
        const Real d = vandermonde_like_det(l, p);
        const Real want = pow(Real(static_cast<long>(l), p.working_bits()), static_cast<long>((l - 1) / 2));
        if (agreement_digits(d * d, want, 30) < std::min(20, p.digits)) return "l = " + std::to_string(l);
      }
      return std::string();
    });
    add("oracle cross-check, l = 5", [&] {
      OracleOptions options;
      options.jobs = resolve_jobs(cfg.jobs);
      const auto direct = direct_periods_all(5, Precision{cfg.oracle_digits}, options);
      const auto pairs = eval_ij_all(5, p, options.jobs);
      const Real tol = Real::parse("1e-6", p.working_bits());
      for (std::size_t k = 0; k < direct.size(); ++k) {
        const SeriesPeriods s = periods_from_pair(pairs[k], p);
        if (!(relative_difference(direct[k].delta_abs.value, s.delta_period.value) < tol) ||
            !(relative_difference(direct[k].gamma_abs.value, s.gamma_period.value) < tol)) {
          return "j = " + std::to_string(k + 1);
        }
      }
      return std::string();
    });
    add("cache round-trip and corruption recovery", [&] {
      const auto dir = std::filesystem::temp_directory_path() /
                       ("reglab-selfcheck-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
      RunConfig c = cfg;
      c.l = 5;
      c.oracle_check = false;
      c.cache_dir = dir.string();
      c.format = Format::Json;
      std::ostringstream first, second, third, warnings;
      const int s1 = run_compute(c, first, warnings);
      const int s2 = run_compute(c, second, warnings);
      {
        std::ofstream corrupt(dir / cache_file_name(5, c.digits), std::ios::trunc);
        corrupt << "{ not json";
      }
      const int s3 = run_compute(c, third, warnings);
      std::filesystem::remove_all(dir);
      if (s1 != 0 || s2 != 0 || s3 != 0) return std::string("nonzero exit status");
      if (first.str() != second.str() || first.str() != third.str()) return std::string("outputs differ");
      if (warnings.str().find("corrupted") == std::string::npos) return std::string("no corruption warning");
      return std::string();
    });

    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
    out << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? static_cast<int>(kOk) : static_cast<int>(kFailure);
  });
}

// ---------------------------------------------------------------- argv

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periods and regulator values of the surfaces 3y^2 + x^3 + (3x + 4t^l)^2 = 0"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format = "text";
  std::string cache_dir;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  const auto common = [&](CLI::App* sub, bool needs_l) {
    auto* opt = sub->add_option("--l", cfg.l, "exponent l of t^l");
    if (needs_l) opt->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  };

  auto* compute = app.add_subcommand("compute", "I(j), J(j) tables and the regulator value");
  common(compute, true);
  compute->add_option("--digits", cfg.digits, "significant decimal digits (>= 10)");
  compute->add_option("--cache", cache_dir, "cache directory (REGLAB_CACHE overrides)");
  compute->add_option("--oracle-digits", cfg.oracle_digits, "working digits of the elliptic-integral oracle");
  bool no_oracle = false;
  compute->add_flag("--no-oracle", no_oracle, "skip the elliptic-integral cross-check");

  auto* fibers = app.add_subcommand("fibers", "singular fibers and the epsilon bookkeeping");
  common(fibers, false);
  fibers->add_option("--g2", cfg.g2, "g2 as a polynomial in t");
  fibers->add_option("--g3", cfg.g3, "g3 as a polynomial in t");

  auto* pf = app.add_subcommand("pf", "Gauss-Manin connection and Picard-Fuchs operator");
  common(pf, false);
  pf->add_option("--g2", cfg.g2, "g2 as a polynomial in t");
  pf->add_option("--g3", cfg.g3, "g3 as a polynomial in t");
  pf->add_option("--max-m", cfg.max_m, "print PF(t^m w_star) for m = 0 .. max-m");

  auto* oracle = app.add_subcommand("oracle", "series periods next to direct elliptic integrals");
  common(oracle, true);
  oracle->add_option("--digits", cfg.digits, "digits of the series evaluation (>= 10)");
  oracle->add_option("--oracle-digits", cfg.oracle_digits, "working digits of the oracle");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the bundled consistency checks");
  selfcheck->add_option("--digits", cfg.digits, "working digits (>= 10)");
  selfcheck->add_option("--oracle-digits", cfg.oracle_digits, "working digits of the oracle");
  selfcheck->add_option("--jobs", cfg.jobs, "worker threads (0 = auto)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kValidation);
  }
  cfg.format = formats.at(format);
  cfg.oracle_check = !no_oracle;
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  if (const char* env = std::getenv("REGLAB_CACHE"); env != nullptr && *env != '\0') cfg.cache_dir = env;

  if (compute->parsed()) return run_compute(cfg, out, err);
  if (fibers->parsed()) return run_fibers(cfg, out, err);
  if (pf->parsed()) return run_pf(cfg, out, err);
  if (oracle->parsed()) return run_oracle(cfg, out, err);
  return run_selfcheck(cfg, out, err);
}

}  // namespace reglab::cli
