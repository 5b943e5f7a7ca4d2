#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperg/checks.hpp"
#include "hyperg/group.hpp"
#include "hyperg/measure.hpp"
#include "hyperg/rational.hpp"

namespace hyperg {

enum class ExpectationDefect {
  BadPartition,
  BadWeights,
  SubgroupNotClosed,
  AutomorphismInvalid,
  HaarIncompatible,
};

struct ExpectationError : std::runtime_error {
  ExpectationDefect defect;
  ExpectationError(ExpectationDefect d, const std::string& what)
      : std::runtime_error(what), defect(d) {}
};

/// Partition of group elements into blocks, with reverse lookup.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // each block sorted ascending
  std::vector<int> block_of;             // element index -> block index

  int count() const { return static_cast<int>(blocks.size()); }
};

/// Conditional expectation onto block-constant functions:
/// (P f)(p) = sum over q in the block of p of weight(q) * f(q).
/// Weights are strictly positive exact rationals summing to 1 per block.
struct ConditionalExpectation {
  BlockSystem blocks;
  std::vector<RatVec> weights;  // aligned with blocks.blocks

  int block_count() const { return blocks.count(); }
  /** Weight of element p inside its own block. */
  const Rat& weight_of(int p) const;
};

/** Validates a partition + weight family against a group order; throws ExpectationError. */
ConditionalExpectation make_expectation(std::vector<std::vector<int>> blocks,
                                        std::vector<RatVec> weights, int group_order);

/** Singleton blocks: P = id. */
ConditionalExpectation build_identity(const GroupTable& g);

/** Double-coset blocks HpH with averaging weights; `subgroup` must be closed. */
ConditionalExpectation build_double_coset(const GroupTable& g, std::vector<int> subgroup);

/** Conjugacy-class blocks with averaging over inner automorphisms. */
ConditionalExpectation build_conjugation(const GroupTable& g);

/**
 * Orbit blocks of the automorphism group generated by the given maps
 * (each a one-line permutation of element indices). Weights are uniform
 * per orbit, which is exactly the average over the generated group.
 */
ConditionalExpectation build_automorphism_orbit(const GroupTable& g,
                                                const std::vector<std::vector<int>>& autos);

/** Applies P to a function on the group. */
CVec apply_expectation(const CVec& f, const ConditionalExpectation& e);

/** Adjoint on point masses: P*(eps_s) is the weight measure of block s. */
MeasureVector adjoint_point_measure(const ConditionalExpectation& e, const GroupTable& g,
                                    int block_index);

/**
 * Conditional-expectation axioms: idempotence and sup-norm contraction,
 * positivity, the bimodule property over block-constant functions, the
 * Schwarz inequality, and compatibility with complex conjugation.
 * Linear/bilinear identities are checked exactly on a basis; the rest on
 * seeded random complex-rational functions (64 draws, seed recorded).
 */
CheckReport verify_expectation_axioms(const ConditionalExpectation& e, const GroupTable& g,
                                      std::uint64_t seed);

/**
 * The three compatibility conditions needed for block structure constants
 * to exist: (a) the coaction tables (P x id)(Delta(P f)), (id x P)(Delta(P f))
 * and (P x P)(Delta f) agree on a full function basis, (b) P commutes with
 * inversion, (c) P preserves the counting functional. All exact.
 */
CheckReport verify_hypergroup_conditions(const ConditionalExpectation& e, const GroupTable& g);

/**
 * P as the orthogonal projection onto block-constant functions in l2 of the
 * counting measure: exact symmetry and idempotence of the matrix, exact l2
 * contraction, floating l1 contraction. Requires counting-measure
 * compatibility (throws ExpectationError{HaarIncompatible} otherwise).
 */
CheckReport verify_l2_projection(const ConditionalExpectation& e, const GroupTable& g,
                                 std::uint64_t seed);

}  // namespace hyperg
