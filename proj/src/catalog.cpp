#include "hyperg/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace hyperg {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // (a∘b)(x) = a(b(x))
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      out += std::to_string(x + 1);
      x = static_cast<std::size_t>(p[x]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

CatalogGroup from_perms(std::string name, const std::vector<Perm>& perms,
                        std::vector<std::string> names) {
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Perm prod = compose(perms[i], perms[j]);
      const auto it = std::find(perms.begin(), perms.end(), prod);
      assert(it != perms.end());
      mult[i][j] = static_cast<int>(it - perms.begin());
    }
  }
  return CatalogGroup{std::move(name), validate_group(mult), std::move(names)};
}

CatalogGroup cyclic(int n) {
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  }
  return CatalogGroup{"Z" + std::to_string(n), validate_group(mult), std::move(names)};
}

CatalogGroup symmetric(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> perms;
  std::vector<std::string> names;
  do {
    perms.push_back(p);
    names.push_back(cycle_name(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return from_perms("S" + std::to_string(n), perms, std::move(names));
}

CatalogGroup dihedral4() {
  const Perm r = {1, 2, 3, 0};
  const Perm s = {3, 2, 1, 0};
  const Perm r2 = compose(r, r), r3 = compose(r2, r);
  const std::vector<Perm> perms = {
      {0, 1, 2, 3}, r, r2, r3, s, compose(r, s), compose(r2, s), compose(r3, s)};
  assert(std::set<Perm>(perms.begin(), perms.end()).size() == 8);
  return from_perms("D4", perms, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

CatalogGroup quaternion8() {
  // Element 2a + (negative ? 1 : 0) for axis a in {1, i, j, k}.
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> mult(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int a = x / 2, b = y / 2;
      const int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign_mul[a][b];
      mult[x][y] = 2 * axis_mul[a][b] + (sign < 0 ? 1 : 0);
    }
  }
  return CatalogGroup{"Q8", validate_group(mult), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}};
}

}  // namespace

std::vector<std::string> catalog_group_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
  names.insert(names.end(), {"S3", "S4", "D4", "Q8"});
  return names;
}

CatalogGroup catalog_group(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'Z') {
    const int n = std::atoi(name.c_str() + 1);
    if (n >= 2 && n <= 12 && name == "Z" + std::to_string(n)) return cyclic(n);
  }
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  throw std::invalid_argument("unknown catalog group \"" + name + "\"");
}

int catalog_element_index(const CatalogGroup& g, const std::string& element_name) {
  const auto it = std::find(g.element_names.begin(), g.element_names.end(), element_name);
  if (it == g.element_names.end())
    throw std::invalid_argument("group " + g.name + " has no element named \"" + element_name +
                                "\"");
  return static_cast<int>(it - g.element_names.begin());
}

std::vector<CatalogInstance> catalog_instances() {
  std::vector<CatalogInstance> out;
  const auto add = [&out](CatalogGroup g, const std::string& builder,
                          ConditionalExpectation e) {
    std::string name = g.name + ":" + builder;
    out.push_back(CatalogInstance{std::move(name), builder, std::move(g), std::move(e)});
  };
  for (int n = 2; n <= 12; ++n) {
    CatalogGroup g = cyclic(n);
    ConditionalExpectation e = build_identity(g.table);
    add(std::move(g), "id", std::move(e));
  }
  {
    CatalogGroup g = symmetric(3);
    add(g, "id", build_identity(g.table));
    add(g, "double_coset",
        build_double_coset(g.table, {g.table.identity, catalog_element_index(g, "(12)")}));
    add(g, "conjugation", build_conjugation(g.table));
  }
  for (const char* name : {"S4", "D4", "Q8"}) {
    CatalogGroup g = catalog_group(name);
    ConditionalExpectation e = build_conjugation(g.table);
    add(std::move(g), "conjugation", std::move(e));
  }
  {
    CatalogGroup g = cyclic(5);
    ConditionalExpectation e = build_automorphism_orbit(g.table, {{0, 2, 4, 1, 3}});
    add(std::move(g), "automorphism_orbit", std::move(e));
  }
  return out;
}

std::vector<std::string> catalog_builder_names() {
  return {"id", "double_coset", "conjugation", "automorphism_orbit"};
}

}  // namespace hyperg
