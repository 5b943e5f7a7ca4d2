#include "hyperg/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "hyperg/exact_linalg.hpp"

namespace hyperg {

namespace {

/// Incremental exact elimination over complex rationals. Basis rows are kept
/// mutually reduced (zero at every other row's pivot), so one reduction pass
/// decides membership.
class ComplexSpan {
 public:
  /** Absorbs v when independent of the span; returns whether it was. */
  bool insert(CVec v) {
    reduce(v);
    const int lead = leading(v);
    if (lead < 0) return false;
    const RatC scale = RatC(Rat(1)) / v[lead];
    for (auto& x : v) x = scale * x;
    for (auto& [pivot, row] : rows_) {
      if (row[lead].is_zero()) continue;
      const RatC f = row[lead];
      for (std::size_t i = 0; i < row.size(); ++i) row[i] -= f * v[i];
    }
    rows_.emplace(lead, std::move(v));
    return true;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }

 private:
  static int leading(const CVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }
  void reduce(CVec& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      const RatC f = v[pivot];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
    }
  }
  std::map<int, CVec> rows_;  // pivot column -> normalized row
};

CVec flatten(const OperatorMatrix& m) {
  CVec v;
  v.reserve(static_cast<std::size_t>(m.dim) * m.dim);
  for (const auto& row : m.entries) v.insert(v.end(), row.begin(), row.end());
  return v;
}

/**
 * Exact basis of the *-algebra generated by the family: span closure under
 * right multiplication by the generators.
 */
std::vector<OperatorMatrix> algebra_closure(const std::vector<OperatorMatrix>& generators,
                                            ComplexSpan& span) {
  std::vector<OperatorMatrix> basis;
  std::vector<std::size_t> unexplored;
  for (const auto& g : generators) {
    if (span.insert(flatten(g))) {
      basis.push_back(g);
      unexplored.push_back(basis.size() - 1);
    }
  }
  while (!unexplored.empty()) {
    const std::size_t at = unexplored.back();
    unexplored.pop_back();
    for (const auto& g : generators) {
      OperatorMatrix p = op_mult(basis[at], g);
      if (span.insert(flatten(p))) {
        basis.push_back(std::move(p));
        unexplored.push_back(basis.size() - 1);
      }
    }
  }
  return basis;
}

/**
 * Exact basis of {N : GN = NG for all generators G}, as complex rational
 * matrices; the system is realified (N = X + iY) and solved over the
 * rationals.
 */
std::vector<std::vector<CVec>> commutant_basis(const std::vector<OperatorMatrix>& generators) {
  const int n = generators[0].dim;
  const int nn = n * n;
  RatMatrix system;
  for (const auto& g : generators) {
    // (G N - N G)(i,j) = sum_k G[i][k] N[k][j] - N[i][k] G[k][j] = 0.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        RatVec real_row(2 * nn, Rat(0)), imag_row(2 * nn, Rat(0));
        for (int k = 0; k < n; ++k) {
          const RatC& a = g.entries[i][k];
          const RatC& b = g.entries[k][j];
          // coefficient of N[k][j] is +a, of N[i][k] is -b; split into X, Y parts
          real_row[k * n + j] += a.re;
          real_row[nn + k * n + j] -= a.im;
          imag_row[k * n + j] += a.im;
          imag_row[nn + k * n + j] += a.re;
          real_row[i * n + k] -= b.re;
          real_row[nn + i * n + k] += b.im;
          imag_row[i * n + k] -= b.im;
          imag_row[nn + i * n + k] -= b.re;
        }
        system.push_back(std::move(real_row));
        system.push_back(std::move(imag_row));
      }
    }
  }
  const auto kernel = exact_nullspace(std::move(system), 2 * nn);
  std::vector<std::vector<CVec>> out;
  for (const auto& z : kernel) {
    std::vector<CVec> m(n, CVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = RatC(z[i * n + j], z[nn + i * n + j]);
    out.push_back(std::move(m));
  }
  return out;
}

double cluster_trace_residual(const Eigen::MatrixXcd& conjugated,
                              const std::vector<std::pair<int, int>>& slices) {
  double residual = 0;
  for (const auto& [off, dim] : slices) {
    for (int r = 0; r < conjugated.rows(); ++r) {
      if (r >= off && r < off + dim) continue;
      for (int c = off; c < off + dim; ++c)
        residual = std::max(residual, std::abs(conjugated(r, c)));
    }
  }
  return residual;
}

void require_real(const CVec& v, const std::string& where) {
  for (const auto& z : v)
    if (!z.is_real()) throw std::invalid_argument(where + ": expected a real vector");
}

}  // namespace

MeasureVector delta_extend(const MeasureVector& mu) {
  if (mu.kind != CarrierKind::Hypergroup)
    throw CarrierMismatch("delta_extend: expected a measure on a hypergroup carrier");
  const std::size_t n = mu.carrier_size;
  MeasureVector out{CarrierKind::ProductHypergroup, n * n, CVec(n * n)};
  for (std::size_t s = 0; s < n; ++s) out.coeffs[s * n + s] = mu.coeffs[s];
  return out;
}

OperatorMatrix phi_map(const MeasureVector& mu, const HypergroupTable& h) {
  require_carrier(mu, CarrierKind::Hypergroup, static_cast<std::size_t>(h.size), "phi_map");
  const auto reps = left_regular(h);
  OperatorMatrix out = op_scale(RatC(), op_kron(reps[0], reps[0]));
  for (int s = 0; s < h.size; ++s) {
    if (mu.coeffs[s].is_zero()) continue;
    out = op_add(out, op_scale(mu.coeffs[s], op_kron(reps[s], reps[s])));
  }
  return out;
}

CpCertificate takesaki_cp_certificate(const HypergroupTable& h, double tol) {
  const int n = h.size;
  const int nn = n * n;
  const int dim = n * nn;
  CpCertificate cert;
  cert.matrix_dim = dim;

  // Nonzeros of each translation plane c[s-check][.][.], reused per point mass.
  std::vector<std::vector<std::tuple<int, int, Rat>>> plane(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int r = 0; r < n; ++r)
        if (h.c[h.involution[s]][t][r] != 0) plane[s].emplace_back(t, r, h.c[h.involution[s]][t][r]);

  std::vector<std::map<int, Rat>> rows(dim);
  CVec bi(n), bj(n);
  for (int j = 0; j < n; ++j) {
    std::fill(bj.begin(), bj.end(), RatC());
    bj[j] = RatC(Rat(1) / h.haar[j]);
    const CVec bj_star = l1_star(bj, h);
    for (int i = 0; i < n; ++i) {
      std::fill(bi.begin(), bi.end(), RatC());
      bi[i] = RatC(Rat(1) / h.haar[i]);
      const CVec u = l1_convolve(bj_star, bi, h);
      require_real(u, "takesaki_cp_certificate");
      for (int s = 0; s < n; ++s) {
        const Rat coef = u[s].re * h.haar[s];
        if (coef == 0) continue;
        for (const auto& [t, r, w] : plane[s]) {
          const Rat left = coef * w;
          for (const auto& [t2, r2, w2] : plane[s])
            rows[j * nn + t * n + t2][i * nn + r * n + r2] += left * w2;
        }
      }
    }
  }

  RatVec weight(dim);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t)
      for (int t2 = 0; t2 < n; ++t2) weight[i * nn + t * n + t2] = h.haar[t] * h.haar[t2];

  cert.symmetric_exact = true;
  for (int a = 0; a < dim && cert.symmetric_exact; ++a) {
    for (const auto& [b, v] : rows[a]) {
      const auto it = rows[b].find(a);
      const Rat mirrored = it == rows[b].end() ? Rat(0) : it->second;
      if (weight[a] * v != weight[b] * mirrored) {
        cert.symmetric_exact = false;
        break;
      }
    }
  }

  Eigen::VectorXd root(dim);
  for (int a = 0; a < dim; ++a) root(a) = std::sqrt(rat_double(weight[a]));
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (const auto& [b, v] : rows[a]) sym(a, b) = rat_double(v) * root(a) / root(b);
  if (!cert.symmetric_exact) sym = ((sym + sym.transpose()) / 2.0).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  cert.min_eigenvalue = eig.eigenvalues().minCoeff();
  cert.matrix_norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  cert.is_cp = cert.symmetric_exact && cert.min_eigenvalue >= -tol * cert.matrix_norm;
  return cert;
}

BlockDecomposition block_decompose(const std::vector<OperatorMatrix>& generators,
                                   std::uint64_t seed) {
  if (generators.empty())
    throw FourierError(FourierDefect::DecompositionFailed, "no generators given");
  const int n = generators[0].dim;
  for (const auto& g : generators)
    if (g.dim != n || g.inner_weights != generators[0].inner_weights)
      throw FourierError(FourierDefect::DecompositionFailed,
                         "generators live on different spaces");

  ComplexSpan span;
  const auto basis = algebra_closure(generators, span);
  const int algebra_dim = span.dimension();

  const auto commutant = commutant_basis(generators);

  Eigen::VectorXd root(n);
  for (int i = 0; i < n; ++i) root(i) = std::sqrt(rat_double(generators[0].inner_weights[i]));
  const auto similarity = [&root, n](const std::vector<CVec>& entries) {
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entries[i][j].to_complex() * (root(i) / root(j));
    return m;
  };

  std::vector<Eigen::MatrixXcd> gen_sim, basis_sim, comm_sim;
  for (const auto& g : generators) gen_sim.push_back(similarity(g.entries));
  for (const auto& b : basis) basis_sim.push_back(similarity(b.entries));
  for (const auto& c : commutant) comm_sim.push_back(similarity(c));

  RatRng rng(seed);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& nd : comm_sim) {
      const double alpha = rng.real(), beta = rng.real();
      k += alpha * (nd + nd.adjoint()) / 2.0;
      k += beta * std::complex<double>(0, 0.5) * (nd.adjoint() - nd);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(k);
    const Eigen::MatrixXcd u = eig.eigenvectors();
    const auto& values = eig.eigenvalues();

    std::vector<std::pair<int, int>> slices;  // (offset, dim) per eigenvalue cluster
    int start = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == n || values(i) - values(i - 1) > 1e-7) {
        slices.emplace_back(start, i - start);
        start = i;
      }
    }

    double residual = 0;
    std::vector<Eigen::MatrixXcd> conjugated;
    for (const auto& g : gen_sim) {
      conjugated.push_back(u.adjoint() * g * u);
      residual = std::max(residual, cluster_trace_residual(conjugated.back(), slices));
    }
    if (residual >= 1e-8) {
      last_failure = "off-block residual " + std::to_string(residual);
      continue;
    }

    // Group copies into isomorphism classes by their trace vectors over the
    // exact algebra basis (equal traces on a spanning set <=> equivalent).
    std::vector<std::vector<std::complex<double>>> traces(slices.size());
    for (std::size_t c = 0; c < slices.size(); ++c) {
      const auto& [off, d] = slices[c];
      for (const auto& b : basis_sim) {
        std::complex<double> tr = 0;
        for (int x = off; x < off + d; ++x) tr += (u.col(x).adjoint() * b * u.col(x))(0);
        traces[c].push_back(tr);
      }
    }
    std::vector<int> class_of(slices.size(), -1);
    std::vector<int> class_dims, class_mults;
    bool consistent = true;
    for (std::size_t c = 0; c < slices.size() && consistent; ++c) {
      for (std::size_t d = 0; d < c && class_of[c] < 0; ++d) {
        bool same = slices[d].second == slices[c].second;
        for (std::size_t b = 0; b < traces[c].size() && same; ++b)
          same = std::abs(traces[c][b] - traces[d][b]) <= 1e-6;
        if (same) class_of[c] = class_of[d];
      }
      if (class_of[c] < 0) {
        class_of[c] = static_cast<int>(class_dims.size());
        class_dims.push_back(slices[c].second);
        class_mults.push_back(0);
      }
      if (class_dims[class_of[c]] != slices[c].second) consistent = false;
      ++class_mults[class_of[c]];
    }
    int dim_check = 0;
    for (const int d : class_dims) dim_check += d * d;
    if (!consistent || dim_check != algebra_dim) {
      last_failure = "class dimensions sum to " + std::to_string(dim_check) + ", algebra has " +
                     std::to_string(algebra_dim);
      continue;
    }

    BlockDecomposition out;
    out.space_dim = n;
    out.algebra_dim = algebra_dim;
    out.class_dims = std::move(class_dims);
    out.class_mults = std::move(class_mults);
    for (std::size_t c = 0; c < slices.size(); ++c)
      out.copies.push_back(BlockCopy{slices[c].first, slices[c].second, class_of[c]});
    out.basis_change = u;
    out.off_block_residual = residual;
    return out;
  }
  throw FourierError(FourierDefect::DecompositionFailed,
                     "no generic commutant element separated the blocks after 8 attempts (" +
                         last_failure + ")");
}

double dual_norm(const CVec& a, const HypergroupTable& h, const BlockDecomposition& d) {
  if (a.size() != static_cast<std::size_t>(h.size))
    throw HypergroupError(HypergroupDefect::LengthMismatch,
                          "dual_norm: vector length does not match table");
  if (d.space_dim != h.size)
    throw FourierError(FourierDefect::DecompositionMismatch,
                       "decomposition is for a space of dimension " +
                           std::to_string(d.space_dim) + ", table has " +
                           std::to_string(h.size) + " points");
  const int n = h.size;

  std::vector<int> representative(d.class_dims.size(), -1);
  std::vector<int> col_base(d.class_dims.size(), 0);
  for (std::size_t c = 0; c < d.copies.size(); ++c)
    if (representative[d.copies[c].class_id] < 0)
      representative[d.copies[c].class_id] = static_cast<int>(c);
  int cols = 0;
  for (std::size_t k = 0; k < d.class_dims.size(); ++k) {
    col_base[k] = cols;
    cols += d.class_dims[k] * d.class_dims[k];
  }

  const auto reps = left_regular(h);
  Eigen::MatrixXcd coeffs(n, cols);
  for (int s = 0; s < n; ++s) {
    const Eigen::MatrixXcd conj_s =
        d.basis_change.adjoint() * op_weighted_similarity(reps[s]) * d.basis_change;
    // The basis change must block-diagonalize this table's own translations.
    double off_block = 0;
    for (int row = 0; row < n; ++row) {
      const auto& owner = *std::find_if(d.copies.begin(), d.copies.end(), [&](const BlockCopy& c) {
        return c.offset <= row && row < c.offset + c.dim;
      });
      for (int col = 0; col < n; ++col)
        if (col < owner.offset || col >= owner.offset + owner.dim)
          off_block = std::max(off_block, std::abs(conj_s(row, col)));
    }
    if (off_block > 1e-8 * (1 + conj_s.cwiseAbs().maxCoeff()))
      throw FourierError(FourierDefect::DecompositionMismatch,
                         "basis change does not block-diagonalize translation " +
                             std::to_string(s) + " (off-block entry " +
                             std::to_string(off_block) + ")");
    for (std::size_t k = 0; k < d.class_dims.size(); ++k) {
      const auto& copy = d.copies[representative[k]];
      const int nk = d.class_dims[k];
      // tr(B_k X_k) = sum_{u,v} B_k(u,v) X_k(v,u)
      for (int uu = 0; uu < nk; ++uu)
        for (int vv = 0; vv < nk; ++vv)
          coeffs(s, col_base[k] + uu * nk + vv) = conj_s(copy.offset + vv, copy.offset + uu);
    }
  }
  Eigen::VectorXcd rhs(n);
  for (int s = 0; s < n; ++s) rhs(s) = a[s].to_complex();

  const Eigen::VectorXcd solution = coeffs.colPivHouseholderQr().solve(rhs);
  const double rhs_scale = rhs.cwiseAbs().maxCoeff();
  const double residual = (coeffs * solution - rhs).cwiseAbs().maxCoeff();
  if (residual > 1e-8 * (1 + rhs_scale))
    throw FourierError(FourierDefect::DecompositionMismatch,
                       "functional is not representable on the decomposed algebra (residual " +
                           std::to_string(residual) + ")");

  double norm = 0;
  for (std::size_t k = 0; k < d.class_dims.size(); ++k) {
    const int nk = d.class_dims[k];
    Eigen::MatrixXcd b(nk, nk);
    for (int uu = 0; uu < nk; ++uu)
      for (int vv = 0; vv < nk; ++vv) b(uu, vv) = solution(col_base[k] + uu * nk + vv);
    norm += b.jacobiSvd().singularValues().sum();
  }
  return norm;
}

SubmultReport fourier_submultiplicativity_report(const HypergroupTable& h, int samples,
                                                 std::uint64_t seed) {
  SubmultReport report;
  report.samples = samples;
  report.seed = seed;

  const auto decomposition = block_decompose(left_regular(h), seed);
  RatRng rng(seed);
  const int n = h.size;

  RatMatrix sampled_u;
  for (int k = 0; k < samples; ++k) {
    RatVec f = rng.rational_vector(n), g = rng.rational_vector(n);
    const auto nonzero = [](const RatVec& v) {
      for (const Rat& x : v)
        if (x != 0) return true;
      return false;
    };
    while (!nonzero(f)) f = rng.rational_vector(n);
    while (!nonzero(g)) g = rng.rational_vector(n);

    const CVec fc = to_cvec(f), gc = to_cvec(g);
    const CVec u = l1_convolve(fc, l1_dagger(fc, h), h);
    const CVec v = l1_convolve(gc, l1_dagger(gc, h), h);
    CVec uv(n);
    for (int s = 0; s < n; ++s) uv[s] = u[s] * v[s];

    if (!positive_definite_check(uv, h).is_pd) ++report.pd_failures;

    const double norm_u = dual_norm(u, h, decomposition);
    const double norm_v = dual_norm(v, h, decomposition);
    const double norm_uv = dual_norm(uv, h, decomposition);
    if (norm_uv > norm_u * norm_v + 1e-9) ++report.norm_violations;
    const double ratio = norm_uv / (norm_u * norm_v);
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_sample = k;
    }

    Rat energy(0);
    for (int s = 0; s < n; ++s) energy += h.haar[s] * f[s] * f[s];
    report.gns_max_ratio = std::max(report.gns_max_ratio, norm_u / rat_double(energy));

    require_real(u, "fourier_submultiplicativity_report");
    RatVec u_rat(n);
    for (int s = 0; s < n; ++s) u_rat[s] = u[s].re;
    sampled_u.push_back(std::move(u_rat));
  }
  report.span_dim = exact_rank(std::move(sampled_u));
  return report;
}

}  // namespace hyperg
