#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperg/checks.hpp"
#include "hyperg/expectation.hpp"
#include "hyperg/group.hpp"
#include "hyperg/measure.hpp"
#include "hyperg/rational.hpp"

namespace hyperg {

enum class HypergroupDefect {
  InvolutionIllDefined,
  NoPositiveSolution,
  NonUniqueSolution,
  LengthMismatch,
};

struct HypergroupError : std::runtime_error {
  HypergroupDefect defect;
  HypergroupError(HypergroupDefect d, const std::string& what)
      : std::runtime_error(what), defect(d) {}
};

/// Raised when a construction gate fails; carries the failing report.
struct PreconditionFailed : std::runtime_error {
  std::string stage;
  CheckReport report;
  PreconditionFailed(std::string stage_, CheckReport report_)
      : std::runtime_error(stage_ + " failed: " + report_.failures()),
        stage(std::move(stage_)),
        report(std::move(report_)) {}
};

/// Finite hypergroup given by exact structure constants:
/// c[s][t][r] is the mass of the point r in the product of the point
/// masses at s and t. Carries the identity point, the involution,
/// a left Haar weight vector and the modular function.
struct HypergroupTable {
  int size = 0;
  int identity = 0;
  std::vector<int> involution;
  std::vector<std::vector<RatVec>> c;  // c[s][t][r]
  RatVec haar;                         // positive left-invariant weights
  RatVec modular;                      // kappa

  const Rat& cst(int s, int t, int r) const { return c[s][t][r]; }
  int inv(int s) const { return involution[s]; }
};

/**
 * Structure constants of the quotient by block pushforward:
 * c[s][t][r] = sum over p in O_s, q in O_t with pq in O_r of w_s(p) w_t(q),
 * identity = block of the group identity, involution = block inverses,
 * haar = block sizes (pushforward of counting), modular solved from the
 * right-invariance system. No compatibility gates are run here.
 * Throws HypergroupError{InvolutionIllDefined} when some block's inverses
 * meet two different blocks.
 */
HypergroupTable build_structure_table(const ConditionalExpectation& e, const GroupTable& g);

/**
 * Gated construction: runs verify_expectation_axioms and
 * verify_hypergroup_conditions first and throws PreconditionFailed with the
 * offending report when either fails; the returned table additionally passed
 * verify_djs and verify_dual_axioms (a failure there is a bug, not an input
 * error, and raises std::logic_error).
 */
HypergroupTable construct_hypergroup(const ConditionalExpectation& e, const GroupTable& g,
                                     std::uint64_t seed = 1);

/**
 * Axioms of a discrete hypergroup on the table, all exact:
 * (H1) associativity of the convolution algebra, (H2) products of point
 * masses are probability measures, (H5) identity, (H6) involutive
 * antihomomorphism, (H7) identity lies in a product support iff the factors
 * are involution partners, plus left invariance of `haar` and the modular
 * identity for `modular`. (H3) and (H4) are continuity statements that hold
 * automatically for finite discrete carriers and are reported as such.
 */
CheckReport verify_djs(const HypergroupTable& h);

/**
 * Dual axioms for the comultiplication (Df)(s,t) = sum_r c[s][t][r] f(r),
 * checked exactly on the full indicator basis: coassociativity, positivity,
 * unitality, the counit law at the identity, compatibility with the
 * involution, and the support-intersection characterization of the
 * involution graph. The density and local-selection axioms hold
 * automatically for finite discrete carriers and are reported as such.
 */
CheckReport verify_dual_axioms(const HypergroupTable& h);

/**
 * Left Haar weights from the defining linear system
 * sum_t c[s][t][r] x(t) = x(r) for all s,r: the unique positive solution
 * normalized so x(identity) = 1, solved in exact rational arithmetic.
 * Throws HypergroupError{NoPositiveSolution | NonUniqueSolution}.
 */
MeasureVector haar_solve(const HypergroupTable& h);

/** (f*g)(s) = sum_t haar(t) f(t) sum_r c[t-check][s][r] g(r). */
CVec l1_convolve(const CVec& f, const CVec& g, const HypergroupTable& h);

/** f-star(s) = conj(f(s-check)) / kappa(s). */
CVec l1_star(const CVec& f, const HypergroupTable& h);

/** f-dagger(s) = conj(f(s-check)). */
CVec l1_dagger(const CVec& f, const HypergroupTable& h);

/** True when c[s][t] = c[t][s] for all pairs. */
bool is_commutative(const HypergroupTable& h);

}  // namespace hyperg
