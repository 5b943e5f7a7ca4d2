#pragma once

// Reference computations for the tests, built independently from first
// definitions: direct enumeration over group elements, measure pushforwards,
// discrete Fourier sums and dense numerical linear algebra. Nothing here
// calls the routine it is used to check.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hyperg/expectation.hpp"
#include "hyperg/group.hpp"
#include "hyperg/hypergroup.hpp"
#include "hyperg/measure.hpp"
#include "hyperg/rational.hpp"
#include "hyperg/representation.hpp"

namespace oracle {

using hyperg::ConditionalExpectation;
using hyperg::CVec;
using hyperg::GroupTable;
using hyperg::HypergroupTable;
using hyperg::Rat;
using hyperg::RatC;
using hyperg::RatVec;

/// c[s][t][r] by direct enumeration of the defining double sum.
inline std::vector<std::vector<RatVec>> structure_constants_direct(
    const ConditionalExpectation& e, const GroupTable& g) {
  const int n = e.block_count();
  std::vector<std::vector<RatVec>> c(n, std::vector<RatVec>(n, RatVec(n, Rat(0))));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int p : e.blocks.blocks[s])
        for (int q : e.blocks.blocks[t])
          c[s][t][e.blocks.block_of[g.mul(p, q)]] += e.weight_of(p) * e.weight_of(q);
  return c;
}

/// c[s][t] row via the group side: convolve the two adjoint block measures on
/// G and push the result forward along the block map.
inline RatVec structure_row_via_group(const ConditionalExpectation& e, const GroupTable& g,
                                      int s, int t) {
  const auto mu = hyperg::adjoint_point_measure(e, g, s);
  const auto nu = hyperg::adjoint_point_measure(e, g, t);
  const auto prod = hyperg::group_convolve(mu, nu, g);
  RatVec out(e.block_count(), Rat(0));
  for (int p = 0; p < g.order; ++p) {
    const RatC& z = prod.coeffs[p];
    out[e.blocks.block_of[p]] += z.re;
  }
  return out;
}

/// Quotient convolution computed entirely on the group: lift f·m̃ and g·m̃ to
/// the weighted block measures on G, convolve there, push forward along the
/// block map, divide by m̃.
inline CVec l1_convolve_via_group(const CVec& f, const CVec& fg, const ConditionalExpectation& e,
                                  const GroupTable& g, const HypergroupTable& h) {
  const auto order = static_cast<std::size_t>(g.order);
  hyperg::MeasureVector mf{hyperg::CarrierKind::Group, order, CVec(order, RatC())};
  hyperg::MeasureVector mg{hyperg::CarrierKind::Group, order, CVec(order, RatC())};
  for (int p = 0; p < g.order; ++p) {
    const int s = e.blocks.block_of[p];
    mf.coeffs[p] = (h.haar[s] * e.weight_of(p)) * f[s];
    mg.coeffs[p] = (h.haar[s] * e.weight_of(p)) * fg[s];
  }
  const auto prod = hyperg::group_convolve(mf, mg, g);
  CVec out(h.size, RatC());
  for (int p = 0; p < g.order; ++p) out[e.blocks.block_of[p]] = out[e.blocks.block_of[p]] + prod.coeffs[p];
  for (int r = 0; r < h.size; ++r) out[r] = (Rat(1) / h.haar[r]) * out[r];
  return out;
}

/// Classical group convolution (f*g)(r) = sum_p f(p) g(p^{-1} r).
inline CVec classical_group_convolution(const CVec& f, const CVec& fg, const GroupTable& g) {
  CVec out(g.order, RatC());
  for (int r = 0; r < g.order; ++r)
    for (int p = 0; p < g.order; ++p) out[r] = out[r] + f[p] * fg[g.mul(g.inv(p), r)];
  return out;
}

/// Characters of the cyclic group of order n: chi_k(s) = exp(2 pi i k s / n).
inline std::vector<std::vector<std::complex<double>>> cyclic_characters(int n) {
  std::vector<std::vector<std::complex<double>>> chars(n);
  const double tau = 8.0 * std::atan(1.0);
  for (int k = 0; k < n; ++k) {
    chars[k].resize(n);
    for (int s = 0; s < n; ++s)
      chars[k][s] = std::polar(1.0, tau * double(k) * double(s) / double(n));
  }
  return chars;
}

/// Fourier-algebra norm on the cyclic group of order n: the l1 norm of the
/// character coefficients of a.
inline double cyclic_fourier_norm(const CVec& a, int n) {
  const auto chars = cyclic_characters(n);
  const auto ac = hyperg::cvec_complex(a);
  double total = 0;
  for (int k = 0; k < n; ++k) {
    std::complex<double> hat = 0;
    for (int s = 0; s < n; ++s) hat += ac[s] * std::conj(chars[k][s]);
    total += std::abs(hat) / double(n);
  }
  return total;
}

/**
 * Monte-Carlo supremum of |sum_s a(s) gamma(s)| over operators
 * X = sum_s gamma(s) L_s of unit operator norm: random complex coefficient
 * draws plus a polar-decomposition candidate built from the trace-duality
 * representer of the functional. A lower bound for the true dual norm that
 * is near-tight at this scale.
 */
inline double sampled_dual_norm(const CVec& a, const HypergroupTable& h, int samples,
                                std::uint64_t seed) {
  using Eigen::MatrixXcd;
  using Eigen::VectorXcd;
  const int n = h.size;
  const auto left = hyperg::left_regular(h);
  std::vector<MatrixXcd> basis(n);
  for (int s = 0; s < n; ++s) basis[s] = hyperg::op_weighted_similarity(left[s]);
  const int dim = basis[0].rows() * basis[0].cols();

  VectorXcd av(n);
  for (int s = 0; s < n; ++s) av(s) = a[s].to_complex();

  const auto norm_of = [](const MatrixXcd& m) {
    return Eigen::JacobiSVD<MatrixXcd>(m).singularValues()(0);
  };
  const auto value_of = [&](const VectorXcd& gamma) {
    MatrixXcd x = MatrixXcd::Zero(basis[0].rows(), basis[0].cols());
    for (int s = 0; s < n; ++s) x += gamma(s) * basis[s];
    const double nx = norm_of(x);
    if (nx < 1e-14) return 0.0;
    return std::abs((av.transpose() * gamma)(0)) / nx;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0;
  for (int it = 0; it < samples; ++it) {
    VectorXcd gamma(n);
    for (int s = 0; s < n; ++s) gamma(s) = std::complex<double>(gauss(rng), gauss(rng));
    best = std::max(best, value_of(gamma));
  }

  // Trace representer: B in span{L_s} with <B, X>_F = functional(X), then the
  // projection of its polar factor back onto the span.
  MatrixXcd gram(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) gram(s, t) = (basis[t].adjoint() * basis[s]).trace();
  const VectorXcd beta = gram.colPivHouseholderQr().solve(av).conjugate();
  MatrixXcd b = MatrixXcd::Zero(basis[0].rows(), basis[0].cols());
  for (int s = 0; s < n; ++s) b += beta(s) * basis[s];
  if (b.norm() > 1e-14) {
    Eigen::JacobiSVD<MatrixXcd> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const MatrixXcd polar = svd.matrixU() * svd.matrixV().adjoint();
    MatrixXcd stacked(dim, n);
    for (int s = 0; s < n; ++s)
      stacked.col(s) = Eigen::Map<const VectorXcd>(basis[s].data(), dim);
    const VectorXcd gamma = stacked.colPivHouseholderQr().solve(
        Eigen::Map<const VectorXcd>(polar.data(), dim));
    best = std::max(best, value_of(gamma));
  }
  return best;
}

}  // namespace oracle
