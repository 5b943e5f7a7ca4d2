#include "hyperg/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperg {

namespace {

std::string elem(int p) { return std::to_string(p); }

CVec pointwise(const CVec& a, const CVec& b) {
  CVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

CVec indicator(const std::vector<int>& support, int n) {
  CVec f(n);
  for (int p : support) f[p] = RatC(Rat(1));
  return f;
}

CVec basis(int x, int n) {
  CVec f(n);
  f[x] = RatC(Rat(1));
  return f;
}

}  // namespace

const Rat& ConditionalExpectation::weight_of(int p) const {
  const int b = blocks.block_of[p];
  const auto& blk = blocks.blocks[b];
  const auto it = std::lower_bound(blk.begin(), blk.end(), p);
  return weights[b][static_cast<std::size_t>(it - blk.begin())];
}

ConditionalExpectation make_expectation(std::vector<std::vector<int>> blocks,
                                        std::vector<RatVec> weights, int group_order) {
  if (blocks.size() != weights.size())
    throw ExpectationError(ExpectationDefect::BadWeights,
                           "weight family has " + std::to_string(weights.size()) +
                               " rows for " + std::to_string(blocks.size()) + " blocks");
  std::vector<int> block_of(group_order, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw ExpectationError(ExpectationDefect::BadPartition, "block " + std::to_string(b) + " is empty");
    if (blocks[b].size() != weights[b].size())
      throw ExpectationError(ExpectationDefect::BadWeights,
                             "block " + std::to_string(b) + " has " +
                                 std::to_string(blocks[b].size()) + " elements but " +
                                 std::to_string(weights[b].size()) + " weights");
    std::vector<std::size_t> perm(blocks[b].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t i, std::size_t j) { return blocks[b][i] < blocks[b][j]; });
    std::vector<int> blk;
    RatVec wts;
    for (std::size_t k : perm) {
      blk.push_back(blocks[b][k]);
      wts.push_back(weights[b][k]);
    }
    Rat total(0);
    for (std::size_t k = 0; k < blk.size(); ++k) {
      const int p = blk[k];
      if (p < 0 || p >= group_order)
        throw ExpectationError(ExpectationDefect::BadPartition,
                               "element " + elem(p) + " is outside 0.." + elem(group_order - 1));
      if (block_of[p] != -1)
        throw ExpectationError(ExpectationDefect::BadPartition,
                               "element " + elem(p) + " appears in two blocks");
      block_of[p] = static_cast<int>(b);
      if (wts[k] <= 0)
        throw ExpectationError(ExpectationDefect::BadWeights,
                               "weight of element " + elem(p) + " is " + rat_str(wts[k]) +
                                   ", must be positive");
      total += wts[k];
    }
    if (total != 1)
      throw ExpectationError(ExpectationDefect::BadWeights,
                             "weights of block " + std::to_string(b) + " sum to " + rat_str(total));
    blocks[b] = std::move(blk);
    weights[b] = std::move(wts);
  }
  for (int p = 0; p < group_order; ++p)
    if (block_of[p] < 0)
      throw ExpectationError(ExpectationDefect::BadPartition,
                             "element " + elem(p) + " is not covered by any block");
  return ConditionalExpectation{BlockSystem{std::move(blocks), std::move(block_of)},
                                std::move(weights)};
}

ConditionalExpectation build_identity(const GroupTable& g) {
  std::vector<std::vector<int>> blocks;
  std::vector<RatVec> weights;
  for (int p = 0; p < g.order; ++p) {
    blocks.push_back({p});
    weights.push_back({Rat(1)});
  }
  return make_expectation(std::move(blocks), std::move(weights), g.order);
}

ConditionalExpectation build_double_coset(const GroupTable& g, std::vector<int> subgroup) {
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (subgroup.empty())
    throw ExpectationError(ExpectationDefect::SubgroupNotClosed, "empty subgroup");
  std::vector<bool> in_h(g.order, false);
  for (int h : subgroup) {
    if (h < 0 || h >= g.order)
      throw ExpectationError(ExpectationDefect::SubgroupNotClosed,
                             "element " + elem(h) + " is outside the group");
    in_h[h] = true;
  }
  if (!in_h[g.identity])
    throw ExpectationError(ExpectationDefect::SubgroupNotClosed, "subgroup misses the identity");
  for (int a : subgroup) {
    if (!in_h[g.inv(a)])
      throw ExpectationError(ExpectationDefect::SubgroupNotClosed,
                             "subgroup not closed under inverse at element " + elem(a));
    for (int b : subgroup)
      if (!in_h[g.mul(a, b)])
        throw ExpectationError(ExpectationDefect::SubgroupNotClosed,
                               "subgroup not closed under product at (" + elem(a) + "," + elem(b) + ")");
  }

  const Rat h2 = rat_of(static_cast<long>(subgroup.size()) * static_cast<long>(subgroup.size()));
  std::vector<std::vector<int>> blocks;
  std::vector<RatVec> weights;
  std::vector<bool> seen(g.order, false);
  for (int p = 0; p < g.order; ++p) {
    if (seen[p]) continue;
    std::vector<long> count(g.order, 0);
    for (int h1 : subgroup)
      for (int h2e : subgroup) ++count[g.mul(g.mul(h1, p), h2e)];
    std::vector<int> blk;
    RatVec wts;
    for (int q = 0; q < g.order; ++q) {
      if (count[q] == 0) continue;
      seen[q] = true;
      blk.push_back(q);
      wts.push_back(Rat(count[q]) / h2);
    }
    blocks.push_back(std::move(blk));
    weights.push_back(std::move(wts));
  }
  return make_expectation(std::move(blocks), std::move(weights), g.order);
}

ConditionalExpectation build_conjugation(const GroupTable& g) {
  std::vector<std::vector<int>> blocks;
  std::vector<RatVec> weights;
  std::vector<bool> seen(g.order, false);
  for (int p = 0; p < g.order; ++p) {
    if (seen[p]) continue;
    std::vector<long> count(g.order, 0);
    for (int a = 0; a < g.order; ++a) ++count[g.mul(g.mul(a, p), g.inv(a))];
    std::vector<int> blk;
    RatVec wts;
    for (int q = 0; q < g.order; ++q) {
      if (count[q] == 0) continue;
      seen[q] = true;
      blk.push_back(q);
      wts.push_back(rat_of(count[q], g.order));
    }
    blocks.push_back(std::move(blk));
    weights.push_back(std::move(wts));
  }
  return make_expectation(std::move(blocks), std::move(weights), g.order);
}

ConditionalExpectation build_automorphism_orbit(const GroupTable& g,
                                                const std::vector<std::vector<int>>& autos) {
  for (std::size_t k = 0; k < autos.size(); ++k) {
    const auto& s = autos[k];
    if (s.size() != static_cast<std::size_t>(g.order))
      throw ExpectationError(ExpectationDefect::AutomorphismInvalid,
                             "map " + std::to_string(k) + " has wrong length");
    std::vector<bool> hit(g.order, false);
    for (int v : s) {
      if (v < 0 || v >= g.order || hit[v])
        throw ExpectationError(ExpectationDefect::AutomorphismInvalid,
                               "map " + std::to_string(k) + " is not a permutation");
      hit[v] = true;
    }
    for (int p = 0; p < g.order; ++p)
      for (int q = 0; q < g.order; ++q)
        if (s[g.mul(p, q)] != g.mul(s[p], s[q]))
          throw ExpectationError(ExpectationDefect::AutomorphismInvalid,
                                 "map " + std::to_string(k) + " is not multiplicative at (" +
                                     elem(p) + "," + elem(q) + ")");
  }

  // Orbits of the generated group are the connected components under the maps.
  std::vector<int> comp(g.order, -1);
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < g.order; ++p) {
    if (comp[p] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    std::vector<int> stack{p}, orbit;
    comp[p] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      orbit.push_back(x);
      for (const auto& s : autos) {
        if (comp[s[x]] < 0) {
          comp[s[x]] = id;
          stack.push_back(s[x]);
        }
        const int pre = static_cast<int>(std::find(s.begin(), s.end(), x) - s.begin());
        if (comp[pre] < 0) {
          comp[pre] = id;
          stack.push_back(pre);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    blocks.push_back(std::move(orbit));
  }
  std::vector<RatVec> weights;
  for (const auto& blk : blocks)
    weights.emplace_back(blk.size(), rat_of(1, static_cast<long>(blk.size())));
  return make_expectation(std::move(blocks), std::move(weights), g.order);
}

CVec apply_expectation(const CVec& f, const ConditionalExpectation& e) {
  if (f.size() != e.blocks.block_of.size())
    throw CarrierMismatch("apply_expectation: function length does not match group order");
  CVec out(f.size());
  for (int b = 0; b < e.block_count(); ++b) {
    RatC avg;
    const auto& blk = e.blocks.blocks[b];
    for (std::size_t k = 0; k < blk.size(); ++k) avg += e.weights[b][k] * f[blk[k]];
    for (int p : blk) out[p] = avg;
  }
  return out;
}

MeasureVector adjoint_point_measure(const ConditionalExpectation& e, const GroupTable& g,
                                    int block_index) {
  if (block_index < 0 || block_index >= e.block_count())
    throw std::out_of_range("adjoint_point_measure: no such block");
  MeasureVector m{CarrierKind::Group, static_cast<std::size_t>(g.order), CVec(g.order)};
  const auto& blk = e.blocks.blocks[block_index];
  for (std::size_t k = 0; k < blk.size(); ++k) m.coeffs[blk[k]] = RatC(e.weights[block_index][k]);
  return m;
}

CheckReport verify_expectation_axioms(const ConditionalExpectation& e, const GroupTable& g,
                                      std::uint64_t seed) {
  const int n = g.order;
  CheckReport report;
  report.subject = "conditional expectation axioms";
  report.seed = seed;
  RatRng rng(seed);
  constexpr int kSamples = 64;

  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const CVec pf = apply_expectation(basis(x, n), e);
      if (apply_expectation(pf, e) != pf) {
        pass = false;
        note = "P(P f) != P f on basis " + elem(x);
      }
    }
    report.add("(i) idempotent", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int k = 0; k < kSamples && pass; ++k) {
      const CVec f = rng.complex_vector(n);
      const CVec pf = apply_expectation(f, e);
      Rat bound(0);
      for (const RatC& z : f) bound = std::max(bound, z.norm_sq());
      for (int p = 0; p < n && pass; ++p) {
        if (pf[p].norm_sq() > bound) {
          pass = false;
          note = "|P f| exceeds |f| at element " + elem(p) + " on draw " + std::to_string(k);
        }
      }
    }
    report.add("(i) sup-norm contractive", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int k = 0; k < kSamples && pass; ++k) {
      const CVec f = rng.complex_vector(n);
      CVec sq(n);
      for (int p = 0; p < n; ++p) sq[p] = RatC(f[p].norm_sq());
      const CVec psq = apply_expectation(sq, e);
      for (int p = 0; p < n && pass; ++p) {
        if (!psq[p].is_real() || psq[p].re < 0) {
          pass = false;
          note = "P(|f|^2) negative at element " + elem(p) + " on draw " + std::to_string(k);
        }
      }
    }
    report.add("(ii) positive", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int u = 0; u < e.block_count() && pass; ++u) {
      const CVec bu = indicator(e.blocks.blocks[u], n);
      for (int v = 0; v < e.block_count() && pass; ++v) {
        const CVec bv = indicator(e.blocks.blocks[v], n);
        for (int x = 0; x < n && pass; ++x) {
          const CVec f = basis(x, n);
          const CVec lhs = apply_expectation(pointwise(bu, pointwise(f, bv)), e);
          const CVec rhs = pointwise(bu, pointwise(apply_expectation(f, e), bv));
          if (lhs != rhs) {
            pass = false;
            note = "blocks (" + std::to_string(u) + "," + std::to_string(v) + "), basis " + elem(x);
          }
        }
      }
    }
    report.add("(iii) bimodule over block-constants", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int k = 0; k < kSamples && pass; ++k) {
      const CVec f = rng.complex_vector(n);
      const CVec pf = apply_expectation(f, e);
      CVec sq(n);
      for (int p = 0; p < n; ++p) sq[p] = RatC(f[p].norm_sq());
      const CVec psq = apply_expectation(sq, e);
      for (int p = 0; p < n && pass; ++p) {
        if (pf[p].norm_sq() > psq[p].re) {
          pass = false;
          note = "|P f|^2 > P(|f|^2) at element " + elem(p) + " on draw " + std::to_string(k);
        }
      }
    }
    report.add("(iv) schwarz inequality", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int k = 0; k < kSamples && pass; ++k) {
      const CVec f = rng.complex_vector(n);
      CVec cf(n);
      for (int p = 0; p < n; ++p) cf[p] = f[p].conj();
      const CVec lhs = apply_expectation(cf, e);
      CVec rhs = apply_expectation(f, e);
      for (int p = 0; p < n; ++p) rhs[p] = rhs[p].conj();
      if (lhs != rhs) {
        pass = false;
        note = "P(conj f) != conj(P f) on draw " + std::to_string(k);
      }
    }
    report.add("(v) conjugation equivariant", pass, note);
  }
  return report;
}

CheckReport verify_hypergroup_conditions(const ConditionalExpectation& e, const GroupTable& g) {
  const int n = g.order;
  const int nb = e.block_count();
  CheckReport report;
  report.subject = "hypergroup compatibility conditions";

  // S[u][v][x] = sum over p in block u, q in block v with pq = x of w(p) w(q).
  std::vector<std::vector<RatVec>> S(nb, std::vector<RatVec>(nb, RatVec(n, Rat(0))));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      S[e.blocks.block_of[p]][e.blocks.block_of[q]][g.mul(p, q)] += e.weight_of(p) * e.weight_of(q);

  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const CVec pf = apply_expectation(basis(x, n), e);
      const auto t1 = comult_apply(pf, g);
      std::vector<CVec> rowavg(nb, CVec(n)), colavg(nb, CVec(n));
      for (int b = 0; b < nb; ++b) {
        const auto& blk = e.blocks.blocks[b];
        for (int q = 0; q < n; ++q) {
          RatC acc;
          for (std::size_t k = 0; k < blk.size(); ++k) acc += e.weights[b][k] * t1[blk[k]][q];
          rowavg[b][q] = acc;
        }
        for (int p = 0; p < n; ++p) {
          RatC acc;
          for (std::size_t k = 0; k < blk.size(); ++k) acc += e.weights[b][k] * t1[p][blk[k]];
          colavg[b][p] = acc;
        }
      }
      for (int p = 0; p < n && pass; ++p) {
        const int bp = e.blocks.block_of[p];
        for (int q = 0; q < n && pass; ++q) {
          const int bq = e.blocks.block_of[q];
          const RatC left = rowavg[bp][q];
          const RatC mid = colavg[bq][p];
          const RatC right(S[bp][bq][x]);
          if (!(left == mid) || !(left == right)) {
            pass = false;
            note = "basis " + elem(x) + " at (p,q) = (" + elem(p) + "," + elem(q) + "): " +
                   ratc_str(left) + " / " + ratc_str(mid) + " / " + ratc_str(right);
          }
        }
      }
    }
    report.add("(a) coaction tables agree", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const CVec f = basis(x, n);
      const CVec lhs = apply_expectation(involution_apply(f, g), e);
      const CVec rhs = involution_apply(apply_expectation(f, e), g);
      if (lhs != rhs) {
        pass = false;
        note = "P(f-check) != (P f)-check on basis " + elem(x);
      }
    }
    report.add("(b) commutes with inversion", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const CVec pf = apply_expectation(basis(x, n), e);
      RatC total;
      for (const RatC& z : pf) total += z;
      if (!(total == RatC(Rat(1)))) {
        pass = false;
        note = "sum P(1_" + elem(x) + ") = " + ratc_str(total) + ", expected 1";
      }
    }
    report.add("(c) preserves counting functional", pass, note);
  }
  return report;
}

CheckReport verify_l2_projection(const ConditionalExpectation& e, const GroupTable& g,
                                 std::uint64_t seed) {
  const int n = g.order;
  for (int x = 0; x < n; ++x) {
    const CVec pf = apply_expectation(basis(x, n), e);
    RatC total;
    for (const RatC& z : pf) total += z;
    if (!(total == RatC(Rat(1))))
      throw ExpectationError(ExpectationDefect::HaarIncompatible,
                             "expectation does not preserve the counting functional (element " +
                                 elem(x) + "); it is not an orthogonal projection");
  }

  CheckReport report;
  report.subject = "l2 projection";
  report.seed = seed;
  RatRng rng(seed);
  constexpr int kSamples = 64;

  std::vector<RatVec> m(n, RatVec(n, Rat(0)));
  for (int p = 0; p < n; ++p)
    for (int q : e.blocks.blocks[e.blocks.block_of[p]]) m[p][q] = e.weight_of(q);

  {
    bool pass = true;
    std::string note;
    for (int p = 0; p < n && pass; ++p)
      for (int q = 0; q < n && pass; ++q)
        if (m[p][q] != m[q][p]) {
          pass = false;
          note = "matrix asymmetric at (" + elem(p) + "," + elem(q) + ")";
        }
    report.add("matrix symmetric", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int p = 0; p < n && pass; ++p) {
      for (int q = 0; q < n && pass; ++q) {
        Rat acc(0);
        for (int r = 0; r < n; ++r)
          if (m[p][r] != 0 && m[r][q] != 0) acc += m[p][r] * m[r][q];
        if (acc != m[p][q]) {
          pass = false;
          note = "M^2 != M at (" + elem(p) + "," + elem(q) + ")";
        }
      }
    }
    report.add("matrix idempotent", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int k = 0; k < kSamples && pass; ++k) {
      const CVec f = rng.complex_vector(n);
      const CVec pf = apply_expectation(f, e);
      Rat lhs(0), rhs(0);
      for (int p = 0; p < n; ++p) {
        lhs += pf[p].norm_sq();
        rhs += f[p].norm_sq();
      }
      if (lhs > rhs) {
        pass = false;
        note = "||P f||_2 > ||f||_2 on draw " + std::to_string(k);
      }
    }
    report.add("l2 contractive", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int k = 0; k < kSamples && pass; ++k) {
      const CVec f = rng.complex_vector(n);
      const CVec pf = apply_expectation(f, e);
      double lhs = 0, rhs = 0;
      for (int p = 0; p < n; ++p) {
        lhs += std::abs(pf[p].to_complex());
        rhs += std::abs(f[p].to_complex());
      }
      if (lhs > rhs * (1 + 1e-12) + 1e-12) {
        pass = false;
        note = "||P f||_1 > ||f||_1 on draw " + std::to_string(k);
      }
    }
    report.add("l1 contractive", pass, note);
  }
  return report;
}

}  // namespace hyperg
