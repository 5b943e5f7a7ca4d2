#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperg/checks.hpp"
#include "hyperg/measure.hpp"
#include "hyperg/rational.hpp"

namespace hyperg {

enum class GroupDefect { NotClosed, NotAssociative, NoIdentity, NoInverse };

struct GroupError : std::runtime_error {
  GroupDefect defect;
  GroupError(GroupDefect d, const std::string& what) : std::runtime_error(what), defect(d) {}
};

/// Finite group presented as a multiplication table over indices 0..order-1.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> mult;
  int identity = 0;
  std::vector<int> inverse;

  int mul(int p, int q) const { return mult[p][q]; }
  int inv(int p) const { return inverse[p]; }
};

/**
 * Validates closure, associativity, two-sided identity and inverses.
 * Throws GroupError naming the first violating entry, triple or element.
 */
GroupTable validate_group(const std::vector<std::vector<int>>& mult);

/** Convolution of finitely supported measures: (mu*nu)({r}) = sum over pq=r of mu({p}) nu({q}). */
MeasureVector group_convolve(const MeasureVector& mu, const MeasureVector& nu, const GroupTable& g);

/** Comultiplication table (Delta f)(p,q) = f(pq), an order x order array. */
std::vector<CVec> comult_apply(const CVec& f, const GroupTable& g);

/** Pullback along inversion: f-check(p) = f(p^{-1}). */
CVec involution_apply(const CVec& f, const GroupTable& g);

/**
 * Verifies on a full function basis that inversion satisfies the
 * comultiplication identity Delta(f-check) = flip((check x check)(Delta f)).
 */
CheckReport group_check_involution(const GroupTable& g);

}  // namespace hyperg
