#include "hyperg/pipeline.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hyperg/fourier.hpp"
#include "hyperg/hypergroup.hpp"
#include "hyperg/representation.hpp"

namespace hyperg {
namespace {

Json rat_vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

Json stage_json(const std::string& name, const CheckReport& r) {
  Json j;
  j["stage"] = name;
  j["pass"] = r.all_pass();
  j["items"] = report_to_json(r)["items"];
  return j;
}

Json precondition_report(Json& rep, Json stages, const std::string& stage) {
  rep["stages"] = std::move(stages);
  rep["failed_stage"] = stage;
  rep["all_pass"] = false;
  rep["exit_code"] = kExitPreconditionFailed;
  return rep;
}

}  // namespace

std::vector<std::string> pipeline_stage_names() {
  return {"expectation_axioms", "hypergroup_conditions", "djs_axioms",
          "dual_axioms",        "haar_cross_check",      "representation",
          "cp_certificate",     "fourier_submultiplicativity"};
}

PipelineResult run_pipeline(const InstanceSpec& spec) {
  const auto known = pipeline_stage_names();
  for (const auto& c : spec.checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw ParseError("unknown check name: " + c);
  auto wanted = [&](const std::string& s) {
    return spec.checks.empty() ||
           std::find(spec.checks.begin(), spec.checks.end(), s) != spec.checks.end();
  };

  PipelineResult out;
  Json& rep = out.report;
  rep["instance"] = spec.name;
  rep["seed"] = spec.seed;
  rep["tolerance"] = spec.tolerance;
  rep["samples"] = spec.samples;
  rep["group"] = Json{{"order", spec.group.order}};
  Json stages = Json::array();

  // The two compatibility gates are preconditions for the construction and
  // always run; a failure stops the pipeline with exit code 3.
  CheckReport gate = verify_expectation_axioms(spec.expectation, spec.group, spec.seed);
  stages.push_back(stage_json("expectation_axioms", gate));
  if (!gate.all_pass()) {
    out.exit_code = kExitPreconditionFailed;
    precondition_report(rep, std::move(stages), "expectation_axioms");
    return out;
  }
  gate = verify_hypergroup_conditions(spec.expectation, spec.group);
  stages.push_back(stage_json("hypergroup_conditions", gate));
  if (!gate.all_pass()) {
    out.exit_code = kExitPreconditionFailed;
    precondition_report(rep, std::move(stages), "hypergroup_conditions");
    return out;
  }

  const HypergroupTable h = build_structure_table(spec.expectation, spec.group);
  Json quotient;
  quotient["size"] = h.size;
  quotient["identity"] = h.identity;
  quotient["involution"] = h.involution;
  quotient["blocks"] = spec.expectation.blocks.blocks;
  quotient["haar"] = rat_vec_json(h.haar);
  quotient["modular"] = rat_vec_json(h.modular);
  rep["quotient"] = std::move(quotient);

  bool failed = false;

  if (wanted("djs_axioms")) {
    CheckReport r = verify_djs(h);
    stages.push_back(stage_json("djs_axioms", r));
    failed |= !r.all_pass();
  }

  if (wanted("dual_axioms")) {
    CheckReport r = verify_dual_axioms(h);
    stages.push_back(stage_json("dual_axioms", r));
    failed |= !r.all_pass();
  }

  if (wanted("haar_cross_check")) {
    CheckReport r;
    r.subject = "haar_cross_check";
    r.seed = spec.seed;
    try {
      const MeasureVector x = haar_solve(h);
      r.add("invariance system has a unique positive solution", true, "");
      bool match = true;
      std::string note;
      for (int s = 0; s < h.size && match; ++s)
        if (!(h.haar[s] == x.coeffs[s].re * h.haar[h.identity])) {
          match = false;
          note = "at point " + std::to_string(s) + ": pushforward " + rat_str(h.haar[s]) +
                 " vs solved " + rat_str(x.coeffs[s].re * h.haar[h.identity]);
        }
      r.add("solved weights match pushforward weights", match, note);
    } catch (const HypergroupError& e) {
      r.add("invariance system has a unique positive solution", false, e.what());
    }
    stages.push_back(stage_json("haar_cross_check", r));
    failed |= !r.all_pass();
  }

  if (wanted("representation")) {
    CheckReport r;
    r.subject = "representation";
    r.seed = spec.seed;
    const auto left = left_regular(h);
    const auto right = right_regular(h);
    for (const auto& it : verify_representation(left, h).items)
      r.add("left: " + it.name, it.pass, it.note);
    for (const auto& it : verify_representation(right, h).items)
      r.add("right: " + it.name, it.pass, it.note);

    bool commute = true;
    std::string note;
    for (int s = 0; s < h.size && commute; ++s)
      for (int t = 0; t < h.size && commute; ++t)
        if (!op_equal(op_mult(left[s], right[t]), op_mult(right[t], left[s]))) {
          commute = false;
          note = "left " + std::to_string(s) + " vs right " + std::to_string(t);
        }
    r.add("left and right translations commute", commute, note);

    bool bounded = true;
    double worst = 0;
    int worst_at = 0;
    for (int s = 0; s < h.size; ++s) {
      const double n = std::max(op_norm(left[s]), op_norm(right[s]));
      if (n > worst) {
        worst = n;
        worst_at = s;
      }
      if (n > 1 + 1e-12) bounded = false;
    }
    r.add("translation operators are contractions", bounded,
          "largest norm " + std::to_string(worst) + " at point " + std::to_string(worst_at));
    stages.push_back(stage_json("representation", r));
    failed |= !r.all_pass();
  }

  if (wanted("cp_certificate")) {
    const CpCertificate cert = takesaki_cp_certificate(h, spec.tolerance);
    Json j;
    j["stage"] = "cp_certificate";
    j["pass"] = cert.is_cp;
    j["matrix_dim"] = cert.matrix_dim;
    j["symmetric_exact"] = cert.symmetric_exact;
    j["min_eigenvalue"] = cert.min_eigenvalue;
    j["matrix_norm"] = cert.matrix_norm;
    stages.push_back(std::move(j));
    failed |= !cert.is_cp;
  }

  if (wanted("fourier_submultiplicativity")) {
    Json j;
    j["stage"] = "fourier_submultiplicativity";
    try {
      const SubmultReport s = fourier_submultiplicativity_report(h, spec.samples, spec.seed);
      const bool pass = s.norm_violations == 0 && s.pd_failures == 0;
      j["pass"] = pass;
      j["samples"] = s.samples;
      j["norm_violations"] = s.norm_violations;
      j["pd_failures"] = s.pd_failures;
      j["worst_ratio"] = s.worst_ratio;
      j["worst_sample"] = s.worst_sample;
      j["gns_max_ratio"] = s.gns_max_ratio;
      j["span_dim"] = s.span_dim;
      failed |= !pass;
    } catch (const FourierError& e) {
      j["pass"] = false;
      j["error"] = e.what();
      failed = true;
    }
    stages.push_back(std::move(j));
  }

  rep["stages"] = std::move(stages);
  rep["all_pass"] = !failed;
  out.exit_code = failed ? kExitCheckFailed : kExitPass;
  rep["exit_code"] = out.exit_code;
  return out;
}

}  // namespace hyperg
