#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperg/checks.hpp"
#include "hyperg/hypergroup.hpp"
#include "hyperg/rational.hpp"

namespace hyperg {

enum class RepresentationDefect { DimensionMismatch, NotCommutative, DegenerateSpectrum };

struct RepresentationError : std::runtime_error {
  RepresentationDefect defect;
  RepresentationError(RepresentationDefect d, const std::string& what)
      : std::runtime_error(what), defect(d) {}
};

/// Dense operator with exact complex-rational entries, acting on the weighted
/// l2 space whose inner product is <f,g> = sum_t inner_weights[t] f(t) conj(g(t)).
/// Adjoints are always taken against these weights.
struct OperatorMatrix {
  int dim = 0;
  std::vector<CVec> entries;  // entries[row][col]; (Af)(row) = sum_col entries[row][col] f(col)
  RatVec inner_weights;
};

using CxVec = std::vector<std::complex<double>>;

OperatorMatrix op_identity(RatVec weights);
OperatorMatrix op_mult(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_scale(const RatC& z, const OperatorMatrix& a);

/** Adjoint against the weighted inner product: A*[r][t] = conj(A[t][r])·w_t/w_r. */
OperatorMatrix op_weighted_adjoint(const OperatorMatrix& a);

/** Tensor product; weights multiply, index (i,j) -> i·dim(b)+j. */
OperatorMatrix op_kron(const OperatorMatrix& a, const OperatorMatrix& b);

bool op_equal(const OperatorMatrix& a, const OperatorMatrix& b);

/** Entries as a plain complex matrix. */
Eigen::MatrixXcd op_complex(const OperatorMatrix& a);

/**
 * D^{1/2} A D^{-1/2} with D = diag(inner_weights): a plain-inner-product
 * conjugate of A, so its ordinary singular values/adjoint match the weighted
 * operator norm/adjoint of A.
 */
Eigen::MatrixXcd op_weighted_similarity(const OperatorMatrix& a);

/** Operator norm on the weighted l2 space (largest singular value). */
double op_norm(const OperatorMatrix& a);

/** (L_s f)(t) = sum_r c[s-check][t][r] f(r) on l2 of the haar weights. */
std::vector<OperatorMatrix> left_regular(const HypergroupTable& h);

/** (R_s f)(t) = kappa(s)^{1/2} sum_r c[t][s][r] f(r); commutes with every L_u. */
std::vector<OperatorMatrix> right_regular(const HypergroupTable& h);

/**
 * Representation axioms for a family indexed by the points of h, all exact:
 * (i) the matrix at the identity point is the identity operator, (ii) the
 * weighted adjoint of the matrix at s is the matrix at s-check, (iii) the
 * products satisfy pi(s)pi(t) = sum_r c[s][t][r] pi(r).
 * Throws RepresentationError{DimensionMismatch} on shape mismatch.
 */
CheckReport verify_representation(const std::vector<OperatorMatrix>& pi, const HypergroupTable& h);

struct PdResult {
  bool is_pd = false;
  bool hermitian = false;
  double min_eigenvalue = 0;
  double matrix_norm = 0;
};

/**
 * Tests the kernel M[s][t] = sum_r c[s][t-check][r] phi(r) for positive
 * semidefiniteness: exact Hermitian check, then eigenvalues of the matrix
 * (of its Hermitian part when the exact check fails); is_pd means hermitian
 * and min eigenvalue >= -tol·‖M‖.
 */
PdResult positive_definite_check(const CVec& phi, const HypergroupTable& h, double tol = 1e-9);

/**
 * All characters of a commutative table: the common eigenvectors of the
 * left-translation family, normalized to 1 at the identity, multiplicative
 * within 1e-9, in a deterministic order (lexicographic by rounded values).
 * Found by diagonalizing a generic self-adjoint element of the algebra;
 * retries up to 8 random elements before raising DegenerateSpectrum.
 * Throws RepresentationError{NotCommutative} on noncommutative input.
 */
std::vector<CxVec> characters(const HypergroupTable& h, std::uint64_t seed = 1);

}  // namespace hyperg
