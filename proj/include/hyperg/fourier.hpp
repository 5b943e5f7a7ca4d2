#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperg/hypergroup.hpp"
#include "hyperg/measure.hpp"
#include "hyperg/representation.hpp"

namespace hyperg {

enum class FourierDefect { DecompositionFailed, DecompositionMismatch };

struct FourierError : std::runtime_error {
  FourierDefect defect;
  FourierError(FourierDefect d, const std::string& what) : std::runtime_error(what), defect(d) {}
};

/** Diagonal extension: mass mu({s}) placed at (s,s) on the product carrier. */
MeasureVector delta_extend(const MeasureVector& mu);

/** Phi(mu) = sum_s mu({s}) L_s⊗L_s on the tensor square of l2(haar). */
OperatorMatrix phi_map(const MeasureVector& mu, const HypergroupTable& h);

struct CpCertificate {
  bool is_cp = false;
  bool symmetric_exact = false;  // weighted symmetry of the block matrix, checked on rationals
  double min_eigenvalue = 0;
  double matrix_norm = 0;        // largest |eigenvalue|
  int matrix_dim = 0;            // |Q|^3
};

/**
 * Complete-positivity certificate for Phi: assembles the block matrix T with
 * (i,j) block Phi(b_j-star * b_i) over the normalized point-mass basis
 * b_s = 1_s/haar(s), exactly in rational arithmetic; congruence with
 * coefficient matrices extends positivity of T to all tuples, so one
 * eigenvalue problem certifies complete positivity. is_cp requires exact
 * weighted symmetry and min eigenvalue >= -tol·‖T‖.
 */
CpCertificate takesaki_cp_certificate(const HypergroupTable& h, double tol = 1e-9);

/// One irreducible coordinate block after the basis change.
struct BlockCopy {
  int offset = 0;    // first coordinate of the slice
  int dim = 0;       // block size
  int class_id = 0;  // which isomorphism class this copy belongs to
};

struct BlockDecomposition {
  int space_dim = 0;
  int algebra_dim = 0;              // linear dimension of the generated *-algebra
  std::vector<int> class_dims;      // n_k per isomorphism class
  std::vector<int> class_mults;     // number of copies of class k
  std::vector<BlockCopy> copies;    // coordinate slices, consecutive, covering the space
  Eigen::MatrixXcd basis_change;    // unitary U; U^H (D^{1/2} A D^{-1/2}) U is block diagonal
  double off_block_residual = 0;    // largest entry outside the recorded blocks
};

/**
 * Numerical Wedderburn decomposition of the *-algebra generated by the given
 * family (which must be closed under the weighted adjoint): eigenspaces of a
 * generic Hermitian commutant element give the irreducible blocks; blocks are
 * grouped into isomorphism classes by their trace vectors. The algebra
 * dimension is computed exactly by rational span closure. Retries up to 8
 * random commutant elements; throws FourierError{DecompositionFailed} when the
 * residual or the dimension count never validates.
 */
BlockDecomposition block_decompose(const std::vector<OperatorMatrix>& generators,
                                   std::uint64_t seed = 1);

/**
 * Norm of the functional X = sum_s f(s)haar(s)L_s ↦ sum_s a(s)f(s)haar(s) on
 * the generated matrix algebra: the representing element is solved per
 * isomorphism class and the norm is the sum of the class trace norms. Equals
 * sup{ |…| : ‖X‖_op ≤ 1 }. Throws FourierError{DecompositionMismatch} when
 * the decomposition does not fit the table.
 */
double dual_norm(const CVec& a, const HypergroupTable& h, const BlockDecomposition& d);

struct SubmultReport {
  int samples = 0;
  std::uint64_t seed = 0;
  int norm_violations = 0;   // dual_norm(u·v) > dual_norm(u)·dual_norm(v) + 1e-9
  int pd_failures = 0;       // pointwise product u·v failed the kernel test
  double worst_ratio = 0;    // max dual_norm(u·v) / (dual_norm(u)·dual_norm(v))
  int worst_sample = -1;
  double gns_max_ratio = 0;  // max dual_norm(f*f-dagger) / sum_s haar(s)|f(s)|^2
  int span_dim = 0;          // exact rank of the sampled {f*f-dagger}
};

/**
 * Draws `samples` random rational pairs (f,g), forms u = f*f-dagger and
 * v = g*g-dagger, and checks that the pointwise product u·v is a
 * positive-definite function and that dual_norm is submultiplicative on it.
 * Also records the observed dual_norm(u)/‖f‖² ratio (bounded by 1) and the
 * dimension of the span of the sampled u, without asserting anything about
 * either.
 */
SubmultReport fourier_submultiplicativity_report(const HypergroupTable& h, int samples,
                                                 std::uint64_t seed);

}  // namespace hyperg
