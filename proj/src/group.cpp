#include "hyperg/group.hpp"

namespace hyperg {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

GroupTable validate_group(const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(mult.size());
  if (n == 0) throw GroupError(GroupDefect::NotClosed, "empty multiplication table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mult[i].size()) != n)
      throw GroupError(GroupDefect::NotClosed,
                       "row " + std::to_string(i) + " has length " +
                           std::to_string(mult[i].size()) + ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (mult[i][j] < 0 || mult[i][j] >= n)
        throw GroupError(GroupDefect::NotClosed,
                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                             std::to_string(mult[i][j]) + " is outside 0.." + std::to_string(n - 1));
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw GroupError(GroupDefect::NotAssociative,
                           "(a*b)*c != a*(b*c) at (a,b,c) = " + triple(a, b, c));
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mult[cand][x] == x && mult[x][cand] == x;
    if (ok) e = cand;
  }
  if (e < 0) throw GroupError(GroupDefect::NoIdentity, "no two-sided identity element");
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mult[x][y] == e && mult[y][x] == e) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] < 0)
      throw GroupError(GroupDefect::NoInverse,
                       "element " + std::to_string(x) + " has no two-sided inverse");
  }
  return GroupTable{n, mult, e, inverse};
}

MeasureVector group_convolve(const MeasureVector& mu, const MeasureVector& nu,
                             const GroupTable& g) {
  const auto size = static_cast<std::size_t>(g.order);
  require_carrier(mu, CarrierKind::Group, size, "group_convolve");
  require_carrier(nu, CarrierKind::Group, size, "group_convolve");
  MeasureVector out{CarrierKind::Group, size, CVec(size)};
  for (int p = 0; p < g.order; ++p) {
    if (mu.coeffs[p].is_zero()) continue;
    for (int q = 0; q < g.order; ++q) {
      if (nu.coeffs[q].is_zero()) continue;
      out.coeffs[g.mul(p, q)] += mu.coeffs[p] * nu.coeffs[q];
    }
  }
  return out;
}

std::vector<CVec> comult_apply(const CVec& f, const GroupTable& g) {
  if (f.size() != static_cast<std::size_t>(g.order))
    throw CarrierMismatch("comult_apply: function length does not match group order");
  std::vector<CVec> table(g.order, CVec(g.order));
  for (int p = 0; p < g.order; ++p)
    for (int q = 0; q < g.order; ++q) table[p][q] = f[g.mul(p, q)];
  return table;
}

CVec involution_apply(const CVec& f, const GroupTable& g) {
  if (f.size() != static_cast<std::size_t>(g.order))
    throw CarrierMismatch("involution_apply: function length does not match group order");
  CVec out(f.size());
  for (int p = 0; p < g.order; ++p) out[p] = f[g.inv(p)];
  return out;
}

CheckReport group_check_involution(const GroupTable& g) {
  CheckReport report;
  report.subject = "group involution identity";
  bool pass = true;
  std::string witness;
  for (int x = 0; x < g.order && pass; ++x) {
    CVec f(g.order);
    f[x] = RatC(Rat(1));
    const auto lhs = comult_apply(involution_apply(f, g), g);
    const auto delta = comult_apply(f, g);
    for (int p = 0; p < g.order && pass; ++p) {
      for (int q = 0; q < g.order && pass; ++q) {
        const RatC rhs = delta[g.inv(q)][g.inv(p)];
        if (!(lhs[p][q] == rhs)) {
          pass = false;
          witness = "basis " + std::to_string(x) + " at (p,q) = (" + std::to_string(p) + "," +
                    std::to_string(q) + ")";
        }
      }
    }
  }
  report.add("comultiplication intertwines inversion", pass, witness);
  return report;
}

}  // namespace hyperg
