#include <algorithm>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperg/catalog.hpp"
#include "hyperg/fourier.hpp"
#include "hyperg/hypergroup.hpp"
#include "hyperg/json_io.hpp"
#include "hyperg/pipeline.hpp"
#include "hyperg/representation.hpp"

namespace {

using hyperg::ConditionalExpectation;
using hyperg::GroupTable;
using hyperg::HypergroupTable;
using hyperg::Json;
using hyperg::ParseError;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// --params accepts an inline JSON object or a path to a JSON file.
Json load_params(const std::string& arg) {
  if (arg.empty()) return Json::object();
  if (arg.front() == '{') {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("--params: ") + e.what());
    }
  }
  return load_json_file(arg);
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << text;
}

struct ResolvedInstance {
  std::string label;
  GroupTable group;
  std::vector<std::string> element_names;  // empty for file-loaded groups
  ConditionalExpectation expectation;
};

struct InstanceOpts {
  std::string group = "Z4";
  std::string expectation = "id";
  std::string params;
  std::string table;  // alternative: pre-built table file (verify/cp-check/norms/reps)
  std::string out;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int samples = 256;
  std::vector<std::string> checks;
};

std::vector<int> element_list(const Json& arr, const std::vector<std::string>& names,
                              const std::string& what) {
  if (!arr.is_array()) throw ParseError(what + " must be an array");
  std::vector<int> out;
  for (const auto& entry : arr) {
    if (entry.is_number_integer()) {
      out.push_back(entry.get<int>());
    } else if (entry.is_string()) {
      const std::string name = entry.get<std::string>();
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        throw ParseError(what + ": unknown element name '" + name +
                         "' (element names are only available for catalog groups)");
      out.push_back(static_cast<int>(it - names.begin()));
    } else {
      throw ParseError(what + " entries must be indices or element names");
    }
  }
  return out;
}

ResolvedInstance resolve_instance(const InstanceOpts& o) {
  ResolvedInstance r;
  const auto catalog_names = hyperg::catalog_group_names();
  if (std::find(catalog_names.begin(), catalog_names.end(), o.group) != catalog_names.end()) {
    const auto cg = hyperg::catalog_group(o.group);
    r.group = cg.table;
    r.element_names = cg.element_names;
  } else if (std::filesystem::exists(o.group)) {
    r.group = hyperg::group_from_json(load_json_file(o.group));
  } else {
    throw ParseError("unknown group '" + o.group + "': not a catalog name or a readable file");
  }
  r.label = o.group + ":" + o.expectation;

  const Json params = load_params(o.params);
  if (o.expectation == "id") {
    r.expectation = hyperg::build_identity(r.group);
  } else if (o.expectation == "double_coset") {
    if (!params.contains("subgroup"))
      throw ParseError("double_coset needs --params {\"subgroup\": [...]}");
    r.expectation = hyperg::build_double_coset(
        r.group, element_list(params.at("subgroup"), r.element_names, "subgroup"));
  } else if (o.expectation == "conjugation") {
    r.expectation = hyperg::build_conjugation(r.group);
  } else if (o.expectation == "automorphism_orbit") {
    if (!params.contains("maps"))
      throw ParseError("automorphism_orbit needs --params {\"maps\": [[...], ...]}");
    const Json& maps = params.at("maps");
    if (!maps.is_array()) throw ParseError("maps must be an array of permutations");
    std::vector<std::vector<int>> autos;
    for (const auto& m : maps) autos.push_back(element_list(m, r.element_names, "map"));
    r.expectation = hyperg::build_automorphism_orbit(r.group, autos);
  } else if (o.expectation == "inline") {
    r.expectation = hyperg::expectation_from_json(params, r.group.order);
  } else if (std::filesystem::exists(o.expectation)) {
    r.expectation = hyperg::expectation_from_json(load_json_file(o.expectation), r.group.order);
  } else {
    throw ParseError("unknown expectation '" + o.expectation +
                     "': expected id, double_coset, conjugation, automorphism_orbit, inline, "
                     "or a readable file");
  }
  return r;
}

/// Table for the read-only subcommands: either a serialized table file or a
/// gated construction from (group, expectation).
HypergroupTable resolve_table(const InstanceOpts& o, std::string& label) {
  if (!o.table.empty()) {
    label = o.table;
    return hyperg::hypergroup_from_json(load_json_file(o.table));
  }
  const ResolvedInstance r = resolve_instance(o);
  label = r.label;
  return hyperg::construct_hypergroup(r.expectation, r.group, o.seed);
}

int run_catalog(const InstanceOpts& o) {
  Json j;
  j["groups"] = hyperg::catalog_group_names();
  j["builders"] = hyperg::catalog_builder_names();
  Json instances = Json::array();
  for (const auto& inst : hyperg::catalog_instances()) {
    Json e;
    e["name"] = inst.name;
    e["group_order"] = inst.group.table.order;
    e["quotient_size"] = inst.expectation.block_count();
    instances.push_back(std::move(e));
  }
  j["instances"] = std::move(instances);
  emit(j, o.out);
  return hyperg::kExitPass;
}

int run_validate(const InstanceOpts& o) {
  const ResolvedInstance r = resolve_instance(o);
  Json j;
  j["instance"] = r.label;
  j["seed"] = o.seed;
  Json stages = Json::array();
  std::string failed_stage;

  const auto axioms = hyperg::verify_expectation_axioms(r.expectation, r.group, o.seed);
  Json s1 = hyperg::report_to_json(axioms);
  s1["stage"] = "expectation_axioms";
  stages.push_back(std::move(s1));
  if (!axioms.all_pass()) failed_stage = "expectation_axioms";

  if (failed_stage.empty()) {
    const auto cond = hyperg::verify_hypergroup_conditions(r.expectation, r.group);
    Json s2 = hyperg::report_to_json(cond);
    s2["stage"] = "hypergroup_conditions";
    stages.push_back(std::move(s2));
    if (!cond.all_pass()) failed_stage = "hypergroup_conditions";
  }

  j["stages"] = std::move(stages);
  j["all_pass"] = failed_stage.empty();
  if (!failed_stage.empty()) j["failed_stage"] = failed_stage;
  emit(j, o.out);
  return failed_stage.empty() ? hyperg::kExitPass : hyperg::kExitPreconditionFailed;
}

int run_construct(const InstanceOpts& o) {
  const ResolvedInstance r = resolve_instance(o);
  try {
    const HypergroupTable h = hyperg::construct_hypergroup(r.expectation, r.group, o.seed);
    emit(hyperg::hypergroup_to_json(h), o.out);
    return hyperg::kExitPass;
  } catch (const hyperg::PreconditionFailed& e) {
    Json j;
    j["instance"] = r.label;
    j["failed_stage"] = e.stage;
    j["report"] = hyperg::report_to_json(e.report);
    emit(j, o.out);
    return hyperg::kExitPreconditionFailed;
  }
}

int run_verify(const InstanceOpts& o) {
  std::string label;
  const HypergroupTable h = resolve_table(o, label);
  Json j;
  j["instance"] = label;
  Json stages = Json::array();
  const auto djs = hyperg::verify_djs(h);
  Json s1 = hyperg::report_to_json(djs);
  s1["stage"] = "djs_axioms";
  stages.push_back(std::move(s1));
  const auto dual = hyperg::verify_dual_axioms(h);
  Json s2 = hyperg::report_to_json(dual);
  s2["stage"] = "dual_axioms";
  stages.push_back(std::move(s2));
  j["stages"] = std::move(stages);
  const bool ok = djs.all_pass() && dual.all_pass();
  j["all_pass"] = ok;
  emit(j, o.out);
  return ok ? hyperg::kExitPass : hyperg::kExitCheckFailed;
}

int run_cp_check(const InstanceOpts& o) {
  std::string label;
  const HypergroupTable h = resolve_table(o, label);
  const auto cert = hyperg::takesaki_cp_certificate(h, o.tolerance);
  Json j;
  j["instance"] = label;
  j["is_cp"] = cert.is_cp;
  j["matrix_dim"] = cert.matrix_dim;
  j["symmetric_exact"] = cert.symmetric_exact;
  j["min_eigenvalue"] = cert.min_eigenvalue;
  j["matrix_norm"] = cert.matrix_norm;
  j["tolerance"] = o.tolerance;
  j["seed"] = o.seed;
  emit(j, o.out);
  return cert.is_cp ? hyperg::kExitPass : hyperg::kExitCheckFailed;
}

int run_norms(const InstanceOpts& o) {
  std::string label;
  const HypergroupTable h = resolve_table(o, label);
  Json j;
  j["instance"] = label;
  j["seed"] = o.seed;
  try {
    const auto rep = hyperg::fourier_submultiplicativity_report(h, o.samples, o.seed);
    j["samples"] = rep.samples;
    j["norm_violations"] = rep.norm_violations;
    j["pd_failures"] = rep.pd_failures;
    j["worst_submult_ratio"] = rep.worst_ratio;
    j["worst_sample"] = rep.worst_sample;
    j["gns_max_ratio"] = rep.gns_max_ratio;
    j["span_dim"] = rep.span_dim;
    const bool ok = rep.norm_violations == 0 && rep.pd_failures == 0;
    j["all_pass"] = ok;
    emit(j, o.out);
    return ok ? hyperg::kExitPass : hyperg::kExitCheckFailed;
  } catch (const hyperg::FourierError& e) {
    j["all_pass"] = false;
    j["error"] = e.what();
    emit(j, o.out);
    return hyperg::kExitCheckFailed;
  }
}

Json complex_pair(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

Json operator_json(const hyperg::OperatorMatrix& m) {
  Json rows = Json::array();
  for (int t = 0; t < m.dim; ++t) {
    Json row = Json::array();
    for (int r = 0; r < m.dim; ++r) row.push_back(complex_pair(m.entries[t][r].to_complex()));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_reps(const InstanceOpts& o) {
  std::string label;
  const HypergroupTable h = resolve_table(o, label);
  Json j;
  j["instance"] = label;
  j["size"] = h.size;
  Json left = Json::array();
  for (const auto& m : hyperg::left_regular(h)) left.push_back(operator_json(m));
  j["left"] = std::move(left);
  Json right = Json::array();
  for (const auto& m : hyperg::right_regular(h)) right.push_back(operator_json(m));
  j["right"] = std::move(right);
  const bool comm = hyperg::is_commutative(h);
  j["commutative"] = comm;
  if (comm) {
    Json chars = Json::array();
    for (const auto& chi : hyperg::characters(h, o.seed)) {
      Json row = Json::array();
      for (const auto& z : chi) row.push_back(complex_pair(z));
      chars.push_back(std::move(row));
    }
    j["characters"] = std::move(chars);
  } else {
    j["characters"] = nullptr;
  }
  emit(j, o.out);
  return hyperg::kExitPass;
}

int run_report(const InstanceOpts& o) {
  const ResolvedInstance r = resolve_instance(o);
  hyperg::InstanceSpec spec;
  spec.name = r.label;
  spec.group = r.group;
  spec.element_names = r.element_names;
  spec.expectation = r.expectation;
  spec.seed = o.seed;
  spec.tolerance = o.tolerance;
  spec.samples = o.samples;
  spec.checks = o.checks;
  const auto result = hyperg::run_pipeline(spec);
  emit(result.report, o.out);
  return result.exit_code;
}

void add_instance_flags(CLI::App* cmd, InstanceOpts& o, bool with_table) {
  cmd->add_option("--group", o.group, "Catalog group name or group JSON file")
      ->capture_default_str();
  cmd->add_option("--expectation", o.expectation,
                  "Builder (id, double_coset, conjugation, automorphism_orbit), 'inline', or an "
                  "expectation JSON file")
      ->capture_default_str();
  cmd->add_option("--params", o.params, "Builder parameters: inline JSON object or a file");
  cmd->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  cmd->add_option("--out", o.out, "Write the JSON report here instead of stdout");
  if (with_table)
    cmd->add_option("--table", o.table, "Serialized hypergroup table JSON file (skips construction)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hypergroups from group quotients: construction and verification"};
  app.require_subcommand(1);

  InstanceOpts opt;
  int rc = hyperg::kExitPass;

  auto* catalog = app.add_subcommand("catalog", "List built-in groups, builders and instances");
  catalog->add_option("--out", opt.out, "Write the JSON listing here instead of stdout");
  catalog->callback([&]() { rc = run_catalog(opt); });

  auto* validate =
      app.add_subcommand("validate", "Check the expectation axioms and compatibility conditions");
  add_instance_flags(validate, opt, false);
  validate->callback([&]() { rc = run_validate(opt); });

  auto* construct = app.add_subcommand("construct", "Emit the quotient structure constants");
  add_instance_flags(construct, opt, false);
  construct->callback([&]() { rc = run_construct(opt); });

  auto* verify = app.add_subcommand("verify", "Check the hypergroup axioms and the dual axioms");
  add_instance_flags(verify, opt, true);
  verify->callback([&]() { rc = run_verify(opt); });

  auto* cp = app.add_subcommand("cp-check", "Complete-positivity certificate for the coaction");
  add_instance_flags(cp, opt, true);
  cp->add_option("--tolerance", opt.tolerance, "Spectral tolerance")->capture_default_str();
  cp->callback([&]() { rc = run_cp_check(opt); });

  auto* norms = app.add_subcommand("norms", "Dual-norm submultiplicativity sampling report");
  add_instance_flags(norms, opt, true);
  norms->add_option("--samples", opt.samples, "Number of random pairs")->capture_default_str();
  norms->callback([&]() { rc = run_norms(opt); });

  auto* reps = app.add_subcommand("reps", "Emit regular representations and characters");
  add_instance_flags(reps, opt, true);
  reps->callback([&]() { rc = run_reps(opt); });

  auto* report = app.add_subcommand("report", "Run the full verification pipeline");
  add_instance_flags(report, opt, false);
  report->add_option("--tolerance", opt.tolerance, "Spectral tolerance")->capture_default_str();
  report->add_option("--samples", opt.samples, "Number of random pairs")->capture_default_str();
  report
      ->add_option("--checks", opt.checks,
                   "Comma-separated stage names to require (default: all stages)")
      ->delimiter(',');
  report->callback([&]() { rc = run_report(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hyperg::kExitParseError;
  } catch (const hyperg::PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitPreconditionFailed;
  } catch (const hyperg::GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitPreconditionFailed;
  } catch (const hyperg::ExpectationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitPreconditionFailed;
  } catch (const hyperg::HypergroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitPreconditionFailed;
  } catch (const hyperg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitParseError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperg::kExitCheckFailed;
  }
  return rc;
}
