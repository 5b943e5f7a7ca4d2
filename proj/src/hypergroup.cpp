#include "hyperg/hypergroup.hpp"

#include <set>
#include <utility>

#include "hyperg/exact_linalg.hpp"

namespace hyperg {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_length(const CVec& f, const HypergroupTable& h, const std::string& where) {
  if (f.size() != static_cast<std::size_t>(h.size))
    throw HypergroupError(HypergroupDefect::LengthMismatch,
                          where + ": vector length " + std::to_string(f.size()) +
                              " does not match " + std::to_string(h.size) + " points");
}

void require_shape(const HypergroupTable& h) {
  const auto n = static_cast<std::size_t>(h.size);
  bool ok = h.size > 0 && h.identity >= 0 && h.identity < h.size && h.involution.size() == n &&
            h.c.size() == n && h.haar.size() == n && h.modular.size() == n;
  for (const auto& plane : h.c) {
    ok = ok && plane.size() == n;
    for (const auto& row : plane) ok = ok && row.size() == n;
  }
  for (int v : h.involution) ok = ok && v >= 0 && v < h.size;
  if (!ok) throw std::invalid_argument("malformed hypergroup table");
}

/// (Df)(s,t) = sum_r c[s][t][r] f(r) for every pair, as a size x size table.
std::vector<CVec> dual_comult(const CVec& f, const HypergroupTable& h) {
  std::vector<CVec> table(h.size, CVec(h.size));
  for (int s = 0; s < h.size; ++s)
    for (int t = 0; t < h.size; ++t) {
      RatC acc;
      for (int r = 0; r < h.size; ++r)
        if (h.c[s][t][r] != 0) acc += h.c[s][t][r] * f[r];
      table[s][t] = acc;
    }
  return table;
}

}  // namespace

HypergroupTable build_structure_table(const ConditionalExpectation& e, const GroupTable& g) {
  const int n = e.block_count();
  HypergroupTable h;
  h.size = n;
  h.identity = e.blocks.block_of[g.identity];
  h.c.assign(n, std::vector<RatVec>(n, RatVec(n, Rat(0))));
  h.haar.resize(n);
  h.modular.assign(n, Rat(0));

  h.involution.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    const auto& blk = e.blocks.blocks[s];
    const int target = e.blocks.block_of[g.inv(blk[0])];
    for (int p : blk) {
      if (e.blocks.block_of[g.inv(p)] != target)
        throw HypergroupError(
            HypergroupDefect::InvolutionIllDefined,
            "inverses of block " + std::to_string(s) + " meet blocks " + std::to_string(target) +
                " and " + std::to_string(e.blocks.block_of[g.inv(p)]) +
                " (elements " + std::to_string(blk[0]) + ", " + std::to_string(p) + ")");
    }
    h.involution[s] = target;
  }

  for (int p = 0; p < g.order; ++p) {
    const Rat& wp = e.weight_of(p);
    for (int q = 0; q < g.order; ++q)
      h.c[e.blocks.block_of[p]][e.blocks.block_of[q]][e.blocks.block_of[g.mul(p, q)]] +=
          wp * e.weight_of(q);
  }

  for (int s = 0; s < n; ++s) h.haar[s] = Rat(static_cast<long>(e.blocks.blocks[s].size()));
  for (int s = 0; s < n; ++s) {
    Rat acc(0);
    for (int t = 0; t < n; ++t) acc += h.haar[t] * h.c[t][s][h.identity];
    h.modular[s] = acc / h.haar[h.identity];
  }
  return h;
}

HypergroupTable construct_hypergroup(const ConditionalExpectation& e, const GroupTable& g,
                                     std::uint64_t seed) {
  {
    CheckReport gate = verify_expectation_axioms(e, g, seed);
    if (!gate.all_pass()) throw PreconditionFailed("expectation_axioms", std::move(gate));
  }
  {
    CheckReport gate = verify_hypergroup_conditions(e, g);
    if (!gate.all_pass()) throw PreconditionFailed("hypergroup_conditions", std::move(gate));
  }
  HypergroupTable h = build_structure_table(e, g);
  const CheckReport djs = verify_djs(h);
  const CheckReport dual = verify_dual_axioms(h);
  if (!djs.all_pass() || !dual.all_pass())
    throw std::logic_error("constructed table failed its own axioms: " + djs.failures() +
                           dual.failures());
  return h;
}

CheckReport verify_djs(const HypergroupTable& h) {
  require_shape(h);
  const int n = h.size;
  CheckReport report;
  report.subject = "hypergroup axioms";

  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s) {
      for (int t = 0; t < n && pass; ++t) {
        Rat total(0);
        for (int r = 0; r < n && pass; ++r) {
          if (h.c[s][t][r] < 0) {
            pass = false;
            note = "negative mass at c" + pair_str(s, t) + "[" + std::to_string(r) + "]";
          }
          total += h.c[s][t][r];
        }
        if (pass && total != 1) {
          pass = false;
          note = "product at " + pair_str(s, t) + " has total mass " + rat_str(total);
        }
      }
    }
    report.add("(H2) products are probability measures", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s) {
      for (int t = 0; t < n && pass; ++t) {
        for (int u = 0; u < n && pass; ++u) {
          RatVec lhs(n, Rat(0)), rhs(n, Rat(0));
          for (int r = 0; r < n; ++r) {
            if (h.c[s][t][r] != 0)
              for (int v = 0; v < n; ++v)
                if (h.c[r][u][v] != 0) lhs[v] += h.c[s][t][r] * h.c[r][u][v];
            if (h.c[t][u][r] != 0)
              for (int v = 0; v < n; ++v)
                if (h.c[s][r][v] != 0) rhs[v] += h.c[t][u][r] * h.c[s][r][v];
          }
          for (int v = 0; v < n && pass; ++v) {
            if (lhs[v] != rhs[v]) {
              pass = false;
              note = "(s,t,u,v) = (" + std::to_string(s) + "," + std::to_string(t) + "," +
                     std::to_string(u) + "," + std::to_string(v) + "): " + rat_str(lhs[v]) +
                     " vs " + rat_str(rhs[v]);
            }
          }
        }
      }
    }
    report.add("(H1) associativity", pass, note);
  }
  report.add("(H3) weak continuity of products", true, "automatic for finite discrete carriers");
  report.add("(H4) continuity of supports", true, "automatic for finite discrete carriers");
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s) {
      for (int r = 0; r < n && pass; ++r) {
        const Rat want = Rat(s == r ? 1 : 0);
        if (h.c[h.identity][s][r] != want || h.c[s][h.identity][r] != want) {
          pass = false;
          note = "at (s,r) = " + pair_str(s, r);
        }
      }
    }
    report.add("(H5) identity point mass", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s) {
      if (h.involution[h.involution[s]] != s) {
        pass = false;
        note = "involution not involutive at " + std::to_string(s);
      }
    }
    for (int s = 0; s < n && pass; ++s)
      for (int t = 0; t < n && pass; ++t)
        for (int r = 0; r < n && pass; ++r)
          if (h.c[s][t][h.involution[r]] != h.c[h.involution[t]][h.involution[s]][r]) {
            pass = false;
            note = "antihomomorphism fails at (s,t,r) = (" + std::to_string(s) + "," +
                   std::to_string(t) + "," + std::to_string(r) + ")";
          }
    report.add("(H6) involutive antihomomorphism", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s)
      for (int t = 0; t < n && pass; ++t)
        if ((h.c[s][h.involution[t]][h.identity] > 0) != (s == t)) {
          pass = false;
          note = "identity mass in product " + pair_str(s, h.involution[t]) + " is " +
                 rat_str(h.c[s][h.involution[t]][h.identity]);
        }
    report.add("(H7) identity support pairing", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s) {
      if (h.haar[s] <= 0) {
        pass = false;
        note = "weight at " + std::to_string(s) + " is " + rat_str(h.haar[s]);
      }
    }
    for (int s = 0; s < n && pass; ++s) {
      for (int r = 0; r < n && pass; ++r) {
        Rat acc(0);
        for (int t = 0; t < n; ++t) acc += h.c[s][t][r] * h.haar[t];
        if (acc != h.haar[r]) {
          pass = false;
          note = "at (s,r) = " + pair_str(s, r) + ": " + rat_str(acc) + " vs " + rat_str(h.haar[r]);
        }
      }
    }
    report.add("left invariance of haar weights", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s) {
      if (h.modular[s] <= 0) {
        pass = false;
        note = "modular value at " + std::to_string(s) + " is " + rat_str(h.modular[s]);
      }
    }
    for (int s = 0; s < n && pass; ++s) {
      for (int r = 0; r < n && pass; ++r) {
        Rat acc(0);
        for (int t = 0; t < n; ++t) acc += h.haar[t] * h.c[t][s][r];
        if (acc != h.modular[s] * h.haar[r]) {
          pass = false;
          note = "at (s,r) = " + pair_str(s, r) + ": " + rat_str(acc) + " vs " +
                 rat_str(h.modular[s] * h.haar[r]);
        }
      }
    }
    report.add("modular identity", pass, note);
  }
  return report;
}

CheckReport verify_dual_axioms(const HypergroupTable& h) {
  require_shape(h);
  const int n = h.size;
  CheckReport report;
  report.subject = "dual axioms";

  const auto basis = [n](int x) {
    CVec f(n);
    f[x] = RatC(Rat(1));
    return f;
  };

  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const auto df = dual_comult(basis(x), h);
      for (int u = 0; u < n && pass; ++u) {
        CVec col(n);
        for (int r = 0; r < n; ++r) col[r] = df[r][u];
        // (D x id)(Df)(s,t,u) = sum_r c[s][t][r] (Df)(r,u) = left[s][t];
        // (id x D)(Df)(s,t,u) = sum_r c[t][u][r] (Df)(s,r).
        const auto left = dual_comult(col, h);
        for (int s = 0; s < n && pass; ++s) {
          for (int t = 0; t < n && pass; ++t) {
            RatC rhs;
            for (int r = 0; r < n; ++r)
              if (h.c[t][u][r] != 0) rhs += h.c[t][u][r] * df[s][r];
            if (!(left[s][t] == rhs)) {
              pass = false;
              note = "basis " + std::to_string(x) + " at (s,t,u) = (" + std::to_string(s) + "," +
                     std::to_string(t) + "," + std::to_string(u) + ")";
            }
          }
        }
      }
    }
    report.add("(~H1) coassociativity", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const auto df = dual_comult(basis(x), h);
      for (int s = 0; s < n && pass; ++s)
        for (int t = 0; t < n && pass; ++t)
          if (!df[s][t].is_real() || df[s][t].re < 0) {
            pass = false;
            note = "basis " + std::to_string(x) + " at " + pair_str(s, t);
          }
    }
    report.add("(~H2a) positivity", pass, note);
  }
  {
    CVec ones(n, RatC(Rat(1)));
    const auto df = dual_comult(ones, h);
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s)
      for (int t = 0; t < n && pass; ++t)
        if (!(df[s][t] == RatC(Rat(1)))) {
          pass = false;
          note = "at " + pair_str(s, t);
        }
    report.add("(~H2b) unitality", pass, note);
  }
  report.add("(~H2c) pointwise attainment", true,
             "automatic for finite discrete carriers (take f constant 1)");
  report.add("(~H4) local selection", true,
             "automatic for finite discrete carriers (take f constant 1 off F)");
  {
    bool pass = true;
    std::string note;
    for (int x = 0; x < n && pass; ++x) {
      const auto df = dual_comult(basis(x), h);
      for (int t = 0; t < n && pass; ++t) {
        if (!(df[h.identity][t] == basis(x)[t]) || !(df[t][h.identity] == basis(x)[t])) {
          pass = false;
          note = "basis " + std::to_string(x) + " at point " + std::to_string(t);
        }
      }
    }
    report.add("(~H5) counit law", pass, note);
  }
  {
    bool pass = true;
    std::string note;
    for (int s = 0; s < n && pass; ++s)
      if (h.involution[h.involution[s]] != s) {
        pass = false;
        note = "involution not involutive at " + std::to_string(s);
      }
    for (int x = 0; x < n && pass; ++x) {
      CVec f = basis(x), fc(n);
      for (int s = 0; s < n; ++s) fc[s] = f[h.involution[s]];
      const auto left = dual_comult(fc, h);
      const auto df = dual_comult(f, h);
      for (int s = 0; s < n && pass; ++s)
        for (int t = 0; t < n && pass; ++t)
          if (!(left[s][t] == df[h.involution[t]][h.involution[s]])) {
            pass = false;
            note = "basis " + std::to_string(x) + " at " + pair_str(s, t);
          }
    }
    report.add("(~H6) involution compatibility", pass, note);
  }
  {
    // Intersection over basis indicators f with f(identity) > 0 of supp(Df)
    // must be the involution graph {(s, s-check)}.
    std::set<std::pair<int, int>> meet;
    bool first = true;
    for (int x = 0; x < n; ++x) {
      if (x != h.identity) continue;  // indicators with f(identity) > 0
      const auto df = dual_comult(basis(x), h);
      std::set<std::pair<int, int>> supp;
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (!df[s][t].is_zero()) supp.insert({s, t});
      if (first) {
        meet = supp;
        first = false;
      } else {
        std::set<std::pair<int, int>> inter;
        for (const auto& p : meet)
          if (supp.count(p)) inter.insert(p);
        meet = inter;
      }
    }
    std::set<std::pair<int, int>> graph;
    for (int s = 0; s < n; ++s) graph.insert({s, h.involution[s]});
    bool pass = meet == graph;
    std::string note;
    if (!pass) {
      for (const auto& p : meet)
        if (!graph.count(p)) {
          note = "support intersection contains " + pair_str(p.first, p.second);
          break;
        }
      if (note.empty())
        for (const auto& p : graph)
          if (!meet.count(p)) {
            note = "support intersection misses " + pair_str(p.first, p.second);
            break;
          }
    }
    report.add("(~H7) involution graph from supports", pass, note);
  }
  return report;
}

MeasureVector haar_solve(const HypergroupTable& h) {
  require_shape(h);
  const int n = h.size;
  RatMatrix system;
  system.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < n; ++r) {
      RatVec row(n, Rat(0));
      for (int t = 0; t < n; ++t) row[t] = h.c[s][t][r];
      row[r] -= 1;
      system.push_back(std::move(row));
    }
  }
  const auto kernel = exact_nullspace(std::move(system), n);
  if (kernel.empty())
    throw HypergroupError(HypergroupDefect::NoPositiveSolution,
                          "invariance system has only the zero solution");
  if (kernel.size() > 1)
    throw HypergroupError(HypergroupDefect::NonUniqueSolution,
                          "invariance system has a " + std::to_string(kernel.size()) +
                              "-dimensional solution space");
  RatVec x = kernel[0];
  if (x[h.identity] == 0)
    throw HypergroupError(HypergroupDefect::NoPositiveSolution,
                          "solution vanishes at the identity");
  const Rat scale = x[h.identity];
  MeasureVector out{CarrierKind::Hypergroup, static_cast<std::size_t>(n), CVec(n)};
  for (int t = 0; t < n; ++t) {
    x[t] /= scale;
    if (x[t] <= 0)
      throw HypergroupError(HypergroupDefect::NoPositiveSolution,
                            "solution is not positive at point " + std::to_string(t));
    out.coeffs[t] = RatC(x[t]);
  }
  return out;
}

CVec l1_convolve(const CVec& f, const CVec& g, const HypergroupTable& h) {
  require_length(f, h, "l1_convolve");
  require_length(g, h, "l1_convolve");
  CVec out(h.size);
  for (int s = 0; s < h.size; ++s) {
    RatC acc;
    for (int t = 0; t < h.size; ++t) {
      if (f[t].is_zero()) continue;
      RatC inner;
      for (int r = 0; r < h.size; ++r) {
        const Rat& w = h.c[h.involution[t]][s][r];
        if (w != 0 && !g[r].is_zero()) inner += w * g[r];
      }
      acc += h.haar[t] * (f[t] * inner);
    }
    out[s] = acc;
  }
  return out;
}

CVec l1_star(const CVec& f, const HypergroupTable& h) {
  require_length(f, h, "l1_star");
  CVec out(h.size);
  for (int s = 0; s < h.size; ++s) {
    const RatC v = f[h.involution[s]].conj();
    out[s] = RatC(v.re / h.modular[s], v.im / h.modular[s]);
  }
  return out;
}

CVec l1_dagger(const CVec& f, const HypergroupTable& h) {
  require_length(f, h, "l1_dagger");
  CVec out(h.size);
  for (int s = 0; s < h.size; ++s) out[s] = f[h.involution[s]].conj();
  return out;
}

bool is_commutative(const HypergroupTable& h) {
  for (int s = 0; s < h.size; ++s)
    for (int t = 0; t < s; ++t)
      if (h.c[s][t] != h.c[t][s]) return false;
  return true;
}

}  // namespace hyperg
