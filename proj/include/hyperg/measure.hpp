#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hyperg/rational.hpp"

namespace hyperg {

enum class CarrierKind { Group, Hypergroup, ProductHypergroup };

struct CarrierMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const char* carrier_name(CarrierKind k) {
  switch (k) {
    case CarrierKind::Group: return "group";
    case CarrierKind::Hypergroup: return "hypergroup";
    case CarrierKind::ProductHypergroup: return "product-hypergroup";
  }
  return "?";
}

/// Finitely supported measure on an indexed carrier: coefficient i is the
/// mass at point i. Coefficients are exact complex rationals.
struct MeasureVector {
  CarrierKind kind = CarrierKind::Group;
  std::size_t carrier_size = 0;
  CVec coeffs;

  RatC mass() const {
    RatC m;
    for (const RatC& z : coeffs) m += z;
    return m;
  }

  bool is_real() const {
    for (const RatC& z : coeffs)
      if (!z.is_real()) return false;
    return true;
  }

  bool is_probability() const {
    if (!is_real()) return false;
    for (const RatC& z : coeffs)
      if (z.re < 0) return false;
    return mass() == RatC(Rat(1));
  }
};

inline MeasureVector point_mass(CarrierKind kind, std::size_t size, int at) {
  if (at < 0 || static_cast<std::size_t>(at) >= size)
    throw std::out_of_range("point mass outside carrier");
  MeasureVector m{kind, size, CVec(size)};
  m.coeffs[at] = RatC(Rat(1));
  return m;
}

inline MeasureVector uniform_probability(CarrierKind kind, std::size_t size,
                                         const std::vector<int>& support) {
  if (support.empty()) throw std::invalid_argument("uniform measure on empty support");
  MeasureVector m{kind, size, CVec(size)};
  const Rat w = rat_of(1, static_cast<long>(support.size()));
  for (int p : support) {
    if (p < 0 || static_cast<std::size_t>(p) >= size)
      throw std::out_of_range("support point outside carrier");
    m.coeffs[p] += RatC(w);
  }
  return m;
}

inline void require_carrier(const MeasureVector& m, CarrierKind kind, std::size_t size,
                            const std::string& where) {
  if (m.kind != kind || m.carrier_size != size || m.coeffs.size() != size)
    throw CarrierMismatch(where + ": measure lives on " + carrier_name(m.kind) + " of size " +
                          std::to_string(m.carrier_size) + ", expected " + carrier_name(kind) +
                          " of size " + std::to_string(size));
}

}  // namespace hyperg
