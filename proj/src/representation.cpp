#include "hyperg/representation.hpp"

#include <algorithm>
#include <cmath>

namespace hyperg {

namespace {

void require_same_space(const OperatorMatrix& a, const OperatorMatrix& b,
                        const std::string& where) {
  if (a.dim != b.dim || a.inner_weights != b.inner_weights)
    throw RepresentationError(RepresentationDefect::DimensionMismatch,
                              where + ": operators live on different spaces");
}

OperatorMatrix op_zero(RatVec weights) {
  OperatorMatrix m;
  m.dim = static_cast<int>(weights.size());
  m.entries.assign(m.dim, CVec(m.dim));
  m.inner_weights = std::move(weights);
  return m;
}

}  // namespace

OperatorMatrix op_identity(RatVec weights) {
  OperatorMatrix m = op_zero(std::move(weights));
  for (int i = 0; i < m.dim; ++i) m.entries[i][i] = RatC(Rat(1));
  return m;
}

OperatorMatrix op_mult(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_space(a, b, "op_mult");
  OperatorMatrix m = op_zero(a.inner_weights);
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (int j = 0; j < a.dim; ++j)
        if (!b.entries[k][j].is_zero()) m.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return m;
}

OperatorMatrix op_add(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_space(a, b, "op_add");
  OperatorMatrix m = a;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) m.entries[i][j] += b.entries[i][j];
  return m;
}

OperatorMatrix op_scale(const RatC& z, const OperatorMatrix& a) {
  OperatorMatrix m = a;
  for (auto& row : m.entries)
    for (auto& x : row) x = z * x;
  return m;
}

OperatorMatrix op_weighted_adjoint(const OperatorMatrix& a) {
  OperatorMatrix m = op_zero(a.inner_weights);
  for (int r = 0; r < a.dim; ++r)
    for (int t = 0; t < a.dim; ++t) {
      const RatC v = a.entries[t][r].conj();
      const Rat f = a.inner_weights[t] / a.inner_weights[r];
      m.entries[r][t] = RatC(v.re * f, v.im * f);
    }
  return m;
}

OperatorMatrix op_kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix m;
  m.dim = a.dim * b.dim;
  m.entries.assign(m.dim, CVec(m.dim));
  m.inner_weights.resize(m.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) m.inner_weights[i * b.dim + j] =
        a.inner_weights[i] * b.inner_weights[j];
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (int j = 0; j < b.dim; ++j)
        for (int l = 0; l < b.dim; ++l)
          if (!b.entries[j][l].is_zero())
            m.entries[i * b.dim + j][k * b.dim + l] = a.entries[i][k] * b.entries[j][l];
    }
  return m;
}

bool op_equal(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.dim == b.dim && a.inner_weights == b.inner_weights && a.entries == b.entries;
}

Eigen::MatrixXcd op_complex(const OperatorMatrix& a) {
  Eigen::MatrixXcd m(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) m(i, j) = a.entries[i][j].to_complex();
  return m;
}

Eigen::MatrixXcd op_weighted_similarity(const OperatorMatrix& a) {
  Eigen::VectorXd root(a.dim);
  for (int i = 0; i < a.dim; ++i) root(i) = std::sqrt(rat_double(a.inner_weights[i]));
  Eigen::MatrixXcd m(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      m(i, j) = a.entries[i][j].to_complex() * (root(i) / root(j));
  return m;
}

double op_norm(const OperatorMatrix& a) {
  return op_weighted_similarity(a).jacobiSvd().singularValues()(0);
}

std::vector<OperatorMatrix> left_regular(const HypergroupTable& h) {
  std::vector<OperatorMatrix> out;
  out.reserve(h.size);
  for (int s = 0; s < h.size; ++s) {
    OperatorMatrix m = op_zero(h.haar);
    for (int t = 0; t < h.size; ++t)
      for (int r = 0; r < h.size; ++r) m.entries[t][r] = RatC(h.c[h.involution[s]][t][r]);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<OperatorMatrix> right_regular(const HypergroupTable& h) {
  std::vector<OperatorMatrix> out;
  out.reserve(h.size);
  for (int s = 0; s < h.size; ++s) {
    const Rat scale = rat_sqrt_exact(h.modular[s]);
    OperatorMatrix m = op_zero(h.haar);
    for (int t = 0; t < h.size; ++t)
      for (int r = 0; r < h.size; ++r) m.entries[t][r] = RatC(scale * h.c[t][s][r]);
    out.push_back(std::move(m));
  }
  return out;
}

CheckReport verify_representation(const std::vector<OperatorMatrix>& pi,
                                  const HypergroupTable& h) {
  if (pi.size() != static_cast<std::size_t>(h.size))
    throw RepresentationError(RepresentationDefect::DimensionMismatch,
                              "family has " + std::to_string(pi.size()) + " operators for " +
                                  std::to_string(h.size) + " points");
  for (const auto& m : pi) require_same_space(m, pi[0], "verify_representation");

  CheckReport report;
  report.subject = "representation axioms";
  {
    const bool pass = op_equal(pi[h.identity], op_identity(pi[0].inner_weights));
    report.add("(i) identity at the unit", pass,
               pass ? "" : "operator at the identity point is not the identity matrix");
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < h.size && pass; ++s) {
      if (!op_equal(op_weighted_adjoint(pi[s]), pi[h.involution[s]])) {
        pass = false;
        note = "adjoint of operator " + std::to_string(s) + " differs from operator " +
               std::to_string(h.involution[s]);
      }
    }
    report.add("(ii) adjoint matches involution", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < h.size && pass; ++s) {
      for (int t = 0; t < h.size && pass; ++t) {
        OperatorMatrix want = op_zero(pi[0].inner_weights);
        for (int r = 0; r < h.size; ++r)
          if (h.c[s][t][r] != 0) want = op_add(want, op_scale(RatC(h.c[s][t][r]), pi[r]));
        if (!op_equal(op_mult(pi[s], pi[t]), want)) {
          pass = false;
          note = "product rule fails at (s,t) = (" + std::to_string(s) + "," + std::to_string(t) +
                 ")";
        }
      }
    }
    report.add("(iii) multiplicativity", pass, note);
  }
  return report;
}

PdResult positive_definite_check(const CVec& phi, const HypergroupTable& h, double tol) {
  if (phi.size() != static_cast<std::size_t>(h.size))
    throw HypergroupError(HypergroupDefect::LengthMismatch,
                          "positive_definite_check: vector length does not match table");
  const int n = h.size;
  std::vector<CVec> kernel(n, CVec(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      RatC acc;
      for (int r = 0; r < n; ++r) {
        const Rat& w = h.c[s][h.involution[t]][r];
        if (w != 0 && !phi[r].is_zero()) acc += w * phi[r];
      }
      kernel[s][t] = acc;
    }

  PdResult out;
  out.hermitian = true;
  for (int s = 0; s < n && out.hermitian; ++s)
    for (int t = 0; t < n && out.hermitian; ++t)
      if (!(kernel[s][t] == kernel[t][s].conj())) out.hermitian = false;

  Eigen::MatrixXcd m(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) m(s, t) = kernel[s][t].to_complex();
  if (!out.hermitian) m = (m + m.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues().minCoeff();
  out.matrix_norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  out.is_pd = out.hermitian && out.min_eigenvalue >= -tol * out.matrix_norm;
  return out;
}

std::vector<CxVec> characters(const HypergroupTable& h, std::uint64_t seed) {
  if (!is_commutative(h))
    throw RepresentationError(RepresentationDefect::NotCommutative,
                              "characters are defined for commutative tables only");
  const int n = h.size;
  RatRng rng(seed);

  Eigen::VectorXd root(n);
  for (int t = 0; t < n; ++t) root(t) = std::sqrt(rat_double(h.haar[t]));

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Generic self-adjoint element Y = sum_s r_s A_s with A_s[t][r] = c[s][t][r]
    // (the left translations); self-adjointness needs conj(r_s) = r at s-check.
    CVec coeff(n);
    for (int s = 0; s < n; ++s) {
      const int sc = h.involution[s];
      if (s == sc) {
        coeff[s] = RatC(rng.rational());
      } else if (s < sc) {
        coeff[s] = rng.complex_rational();
        coeff[sc] = coeff[s].conj();
      }
    }
    Eigen::MatrixXcd sim = Eigen::MatrixXcd::Zero(n, n);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        for (int r = 0; r < n; ++r)
          if (h.c[s][t][r] != 0)
            sim(t, r) += coeff[s].to_complex() * rat_double(h.c[s][t][r]) * (root(t) / root(r));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sim);
    const auto& values = eig.eigenvalues();
    double gap = std::numeric_limits<double>::infinity();
    for (int k = 1; k < n; ++k) gap = std::min(gap, values(k) - values(k - 1));
    if (n > 1 && gap < 1e-7) {
      last_failure = "eigenvalue gap " + std::to_string(gap);
      continue;
    }

    std::vector<CxVec> chars;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      Eigen::VectorXcd v = eig.eigenvectors().col(k);
      for (int t = 0; t < n; ++t) v(t) /= root(t);
      if (std::abs(v(h.identity)) < 1e-9) {
        ok = false;
        last_failure = "eigenvector vanishes at the identity";
        break;
      }
      v /= v(h.identity);
      CxVec chi(n);
      for (int t = 0; t < n; ++t) chi[t] = v(t);
      chars.push_back(std::move(chi));
    }
    for (std::size_t a = 0; a < chars.size() && ok; ++a) {
      for (int s = 0; s < n && ok; ++s)
        for (int t = 0; t < n && ok; ++t) {
          std::complex<double> acc = 0;
          for (int r = 0; r < n; ++r)
            if (h.c[s][t][r] != 0) acc += rat_double(h.c[s][t][r]) * chars[a][r];
          if (std::abs(acc - chars[a][s] * chars[a][t]) > 1e-9) {
            ok = false;
            last_failure = "multiplicativity residual at character " + std::to_string(a);
          }
        }
    }
    if (!ok) continue;

    std::sort(chars.begin(), chars.end(), [](const CxVec& a, const CxVec& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        const long long ar = llround(a[i].real() * 1e6), br = llround(b[i].real() * 1e6);
        if (ar != br) return ar < br;
        const long long ai = llround(a[i].imag() * 1e6), bi = llround(b[i].imag() * 1e6);
        if (ai != bi) return ai < bi;
      }
      return false;
    });
    return chars;
  }
  throw RepresentationError(RepresentationDefect::DegenerateSpectrum,
                            "could not separate the spectrum after 8 attempts (" + last_failure +
                                ")");
}

}  // namespace hyperg
