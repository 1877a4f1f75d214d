#include "stratcx/cli_app.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "stratcx/json_io.hpp"
#include "stratcx/verify.hpp"
#include "stratcx/version.hpp"

namespace stratcx::cli {

namespace {

using json = json_io::json;
using rankcomb::DimVector;
using rankcomb::RankVector;

json envelope(const std::string& command, json config) {
  json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["command"] = command;
  out["config"] = std::move(config);
  return out;
}

std::string ranks_text(const RankVector& r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
  os << ")";
  return os.str();
}

struct StrataRow {
  RankVector ranks;
  std::vector<Integer> homology;
  Integer stratum;
  Integer tangent;
  bool maximal;
};

std::vector<StrataRow> strata_rows(const DimVector& d) {
  const auto maxima = rankcomb::maximal_elements(d);
  std::vector<StrataRow> rows;
  for (const RankVector& r : rankcomb::enumerate_R(d)) {
    const bool is_max =
        std::find(maxima.begin(), maxima.end(), r) != maxima.end();
    rows.push_back(StrataRow{r, rankcomb::homology_from_ranks(d, r).h,
                             rankcomb::stratum_dim(d, r), rankcomb::tangent_dim(d, r), is_max});
  }
  return rows;
}

std::string write_output(const std::string& path, std::string text) {
  if (path.empty()) return text;
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write file: " + path);
  out << text;
  return "";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- strata ----------------------------------------------------------

std::string cmd_strata(const std::string& dims_text, const std::string& format) {
  const DimVector d(parse_integer_csv(dims_text));
  const auto rows = strata_rows(d);

  if (format == "json") {
    json config{{"dims", json_io::integer_array(d.entries())}, {"format", format}};
    json out = envelope("strata", std::move(config));
    json jrows = json::array();
    std::size_t maximal_count = 0;
    for (const StrataRow& row : rows) {
      json jr;
      jr["ranks"] = json_io::integer_array(row.ranks.entries());
      jr["admissible"] = true;
      jr["homology"] = json_io::integer_array(row.homology);
      jr["stratum_dim"] = to_int64(row.stratum);
      jr["tangent_dim"] = to_int64(row.tangent);
      jr["maximal"] = row.maximal;
      if (row.maximal) ++maximal_count;
      jrows.push_back(std::move(jr));
    }
    out["rows"] = std::move(jrows);
    out["maximal_count"] = maximal_count;
    return dump(out);
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "ranks,stratum_dim,tangent_dim,maximal\n";
    for (const StrataRow& row : rows) {
      os << "\"" << ranks_text(row.ranks) << "\"," << row.stratum.get_str() << ","
         << row.tangent.get_str() << "," << (row.maximal ? "true" : "false") << "\n";
    }
    return os.str();
  }
  if (format == "table") {
    std::ostringstream os;
    os << "strata of the variety of complexes, dims = " << dims_text << "\n";
    os << std::left << std::setw(16) << "ranks" << std::setw(12) << "stratum" << std::setw(12)
       << "tangent" << "maximal\n";
    for (const StrataRow& row : rows) {
      os << std::left << std::setw(16) << ranks_text(row.ranks) << std::setw(12)
         << row.stratum.get_str() << std::setw(12) << row.tangent.get_str()
         << (row.maximal ? "yes" : "") << "\n";
    }
    return os.str();
  }
  throw parse_error("unsupported format '" + format + "' for strata");
}

// ---- exact -----------------------------------------------------------

std::string cmd_exact(const std::string& dims_text, const std::string& format) {
  const DimVector d(parse_integer_csv(dims_text));
  const RankVector chi = rankcomb::exact_rank_vector(d);
  const Integer dim = rankcomb::stratum_dim(d, chi);
  Integer half_squares = 0;
  for (const Integer& di : d.entries()) half_squares += di * di;
  half_squares /= 2;

  const auto divisors = rankcomb::delta_divisors(d);
  if (format == "json") {
    json config{{"dims", json_io::integer_array(d.entries())}, {"format", format}};
    json out = envelope("exact", std::move(config));
    out["chi"] = json_io::integer_array(chi.entries());
    out["stratum_dim"] = to_int64(dim);
    out["half_sum_squares"] = to_int64(half_squares);
    json jdiv = json::array();
    for (const RankVector& v : divisors) {
      const Integer closure = rankcomb::stratum_dim(d, v);
      jdiv.push_back(json{{"ranks", json_io::integer_array(v.entries())},
                          {"closure_dim", to_int64(closure)},
                          {"codim_in_exact", to_int64(Integer(dim - closure))}});
    }
    out["divisors"] = std::move(jdiv);
    return dump(out);
  }
  if (format == "table") {
    std::ostringstream os;
    os << "exact-complex component, dims = " << dims_text << "\n";
    os << "chi = " << ranks_text(chi) << ", dimension " << dim.get_str() << " (= half sum d_i^2: "
       << half_squares.get_str() << ")\n";
    for (const RankVector& v : divisors) {
      const Integer closure = rankcomb::stratum_dim(d, v);
      os << "divisor at " << ranks_text(v) << ": closure dim " << closure.get_str() << ", codim "
         << Integer(dim - closure).get_str() << "\n";
    }
    return os.str();
  }
  throw parse_error("unsupported format '" + format + "' for exact");
}

// ---- random-complex --------------------------------------------------

std::string cmd_random_complex(const std::string& dims_text, const std::string& ranks_text_in,
                               std::uint64_t seed) {
  const DimVector d(parse_integer_csv(dims_text));
  const RankVector r(parse_integer_csv(ranks_text_in));
  const auto c = cxlin::construct_with_ranks(d, r, seed);
  json config{{"dims", json_io::integer_array(d.entries())},
              {"ranks", json_io::integer_array(r.entries())},
              {"seed", seed}};
  json out = envelope("random-complex", std::move(config));
  out["complex"] = json_io::complex_to_json(c);
  out["measured_ranks"] = json_io::integer_array(cxlin::ranks(c).entries());
  out["measured_homology"] = json_io::integer_array(cxlin::homology(c).h);
  return dump(out);
}

// ---- analyze ---------------------------------------------------------

struct AnalyzeOutcome {
  std::string text;
  bool integrable;
};

AnalyzeOutcome cmd_analyze(const std::string& form_path, int twist_opt, bool twist_given,
                           const std::string& variant_name, const std::string& format) {
  const auto w = json_io::form_from_json(json_io::load_file(form_path));
  const int e = twist_given ? twist_opt : w.twist();  // default slice: e = d
  const folan::Variant variant = folan::variant_from_string(variant_name);

  const auto t1 = folan::theorem1_check(w, e);
  json config{{"form", form_path},
              {"e", e},
              {"variant", variant_name},
              {"format", format}};
  json out = envelope("analyze", std::move(config));
  out["integrable"] = t1.integrable;
  out["theorem1"] = json{{"minus_vanishes", t1.minus_vanishes},
                         {"plus_vanishes", t1.plus_vanishes},
                         {"membership", t1.membership()}};
  if (t1.integrable) {
    const auto profile = folan::rank_profile(w, e, variant);
    const json jp = json_io::rank_profile_to_json(profile);
    for (const auto& [key, value] : jp.items()) out[key] = value;
  }

  if (format == "json") return {dump(out), t1.integrable};
  if (format == "table") {
    std::ostringstream os;
    os << "form: " << form_path << " (r=" << w.ambient() << ", d=" << w.twist() << ", e=" << e
       << ", variant " << variant_name << ")\n";
    os << "integrable: " << (t1.integrable ? "yes" : "no") << ", compositions vanish: minus "
       << (t1.minus_vanishes ? "yes" : "no") << ", plus " << (t1.plus_vanishes ? "yes" : "no")
       << "\n";
    if (t1.integrable) {
      os << "stage dims: " << out["dims"].dump() << "\n";
      os << "ranks: " << out["ranks"].dump() << ", homology: " << out["homology"].dump() << "\n";
      os << "stratum dim " << out["stratum_dim"].dump() << ", tangent dim "
         << out["tangent_dim"].dump() << ", dominated by " << out["dominating_maximal"].dump()
         << "\n";
    }
    return {os.str(), t1.integrable};
  }
  throw parse_error("unsupported format '" + format + "' for analyze");
}

// ---- basis -----------------------------------------------------------

std::string cmd_basis(int r, int k, int e, bool with_elements, const std::string& format) {
  const pforms::FormBasis& b = pforms::basis(r, k, e);
  json config{{"r", r}, {"k", k}, {"e", e}, {"format", format}};
  json out = envelope("basis", std::move(config));
  out["dim"] = b.dim();
  if (e > k && k >= 1)
    out["closed_form_dim"] = to_int64(pforms::bott_dimension(r, k, e));
  else
    out["closed_form_dim"] = nullptr;
  if (with_elements) {
    json elems = json::array();
    for (const auto& f : b.elements()) elems.push_back(json_io::form_to_json(f));
    out["elements"] = std::move(elems);
  }
  if (format == "json") return dump(out);
  if (format == "table") {
    std::ostringstream os;
    os << "dim H0(Omega^" << k << "(" << e << ")) on P^" << r << " = " << b.dim() << "\n";
    return os.str();
  }
  throw parse_error("unsupported format '" + format + "' for basis");
}

// ---- star ------------------------------------------------------------

std::string cmd_star(const std::string& a_path, const std::string& b_path) {
  const auto a = json_io::form_from_json(json_io::load_file(a_path));
  const auto b = json_io::form_from_json(json_io::load_file(b_path));
  return dump(json_io::form_to_json(star(a, b)));
}

// ---- verify ----------------------------------------------------------

struct VerifyOutcome {
  std::string text;
  bool passed;
};

VerifyOutcome cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
                         const std::string& format) {
  const verify::SuiteResult res = verify::run_suite(suite, seed, trials);
  if (format == "json") {
    json config{{"suite", suite}, {"seed", seed}, {"trials", trials}, {"format", format}};
    json out = envelope("verify", std::move(config));
    out["checks"] = res.checks;
    out["failures"] = res.failures;
    out["passed"] = res.passed();
    out["notes"] = res.notes;
    out["repros"] = res.repros;
    return {dump(out), res.passed()};
  }
  if (format == "table") {
    std::ostringstream os;
    os << "suite " << suite << ": " << (res.passed() ? "PASS" : "FAIL") << " (" << res.checks
       << " checks, " << res.failures << " failures, seed " << seed << ", trials " << trials
       << ")\n";
    for (const auto& n : res.notes) os << "  note: " << n << "\n";
    for (const auto& r : res.repros) os << "  repro: " << r.dump() << "\n";
    return {os.str(), res.passed()};
  }
  throw parse_error("unsupported format '" + format + "' for verify");
}

} // namespace

std::vector<Integer> parse_integer_csv(const std::string& text) {
  std::vector<Integer> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    try {
      out.emplace_back(cur);
    } catch (const std::invalid_argument&) {
      throw parse_error("invalid integer '" + cur + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw parse_error("empty integer list");
  return out;
}

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact toolkit for rank strata of complexes and twisted-form foliations"};
  app.require_subcommand(1);

  std::string dims_text, ranks_text_in, format = "json", out_path;
  std::string form_path, a_path, b_path, variant = "minus", suite;
  std::uint64_t seed = 0;
  int trials = 100;
  int opt_r = 3, opt_k = 1, opt_e = 2;
  int twist = 0;
  bool with_elements = false;

  auto* strata = app.add_subcommand("strata", "enumerate the admissible rank poset");
  strata->add_option("--dims", dims_text, "comma-separated dimensions d_0,...,d_n")->required();
  strata->add_option("--format", format, "json|table|csv");
  strata->add_option("--out", out_path, "write output to file");

  auto* exact = app.add_subcommand("exact", "exact-complex component and its divisors");
  exact->add_option("--dims", dims_text)->required();
  exact->add_option("--format", format, "json|table");
  exact->add_option("--out", out_path);

  auto* rc = app.add_subcommand("random-complex", "seeded witness with prescribed ranks");
  rc->add_option("--dims", dims_text)->required();
  rc->add_option("--ranks", ranks_text_in)->required();
  rc->add_option("--seed", seed);
  rc->add_option("--out", out_path);

  auto* analyze = app.add_subcommand("analyze", "integrability, compositions and rank profile");
  analyze->add_option("--form", form_path, "twisted 1-form JSON file")->required();
  auto* twist_opt = analyze->add_option("--e", twist, "first-stage twist (default: the form degree)");
  analyze->add_option("--variant", variant, "minus|plus");
  analyze->add_option("--format", format, "json|table");
  analyze->add_option("--out", out_path);

  auto* basis_cmd = app.add_subcommand("basis", "twisted-form space dimension and basis");
  basis_cmd->add_option("--r", opt_r, "ambient projective dimension")->required();
  basis_cmd->add_option("--k", opt_k, "form degree")->required();
  basis_cmd->add_option("--e", opt_e, "twist")->required();
  basis_cmd->add_flag("--elements", with_elements, "include basis elements");
  basis_cmd->add_option("--format", format, "json|table");
  basis_cmd->add_option("--out", out_path);

  auto* star_cmd = app.add_subcommand("star", "star product of two form files");
  star_cmd->add_option("--a", a_path)->required();
  star_cmd->add_option("--b", b_path)->required();
  star_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "hom|tangent|star-assoc|bott-dims|theorem1")->required();
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--format", format, "json|table");
  verify_cmd->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  CommandResult result;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    os << app.help();
    return {kExitOk, os.str(), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  }

  try {
    if (strata->parsed()) {
      result.out = write_output(out_path, cmd_strata(dims_text, format));
    } else if (exact->parsed()) {
      result.out = write_output(out_path, cmd_exact(dims_text, format));
    } else if (rc->parsed()) {
      result.out = write_output(out_path, cmd_random_complex(dims_text, ranks_text_in, seed));
    } else if (analyze->parsed()) {
      const auto r = cmd_analyze(form_path, twist, twist_opt->count() > 0, variant, format);
      result.out = write_output(out_path, r.text);
      if (!r.integrable) result.exit_code = kExitMath;
    } else if (basis_cmd->parsed()) {
      result.out = write_output(out_path, cmd_basis(opt_r, opt_k, opt_e, with_elements, format));
    } else if (star_cmd->parsed()) {
      result.out = write_output(out_path, cmd_star(a_path, b_path));
    } else if (verify_cmd->parsed()) {
      const auto r = cmd_verify(suite, seed, trials, format);
      result.out = write_output(out_path, r.text);
      if (!r.passed) result.exit_code = kExitVerifyFailed;
    }
  } catch (const parse_error& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const math_error& e) {
    return {kExitMath, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

} // namespace stratcx::cli
