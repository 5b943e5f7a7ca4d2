#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperg {

/// Exact rational scalar. Structure constants, weights, Haar and modular data
/// all stay in this type; conversion to double happens only at spectral steps.
using Rat = mpq_class;

/** Builds a canonical rational num/den. Throws std::invalid_argument if den == 0. */
inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/** Parses "p", "-p" or "p/q" (base 10) into a canonical rational. */
inline Rat rat_parse(const std::string& text) {
  Rat r;
  try {
    r = Rat(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: \"" + text + "\"");
  }
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
  r.canonicalize();
  return r;
}

/** Canonical string form: "p" when the denominator is 1, else "p/q". */
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline double rat_double(const Rat& x) { return x.get_d(); }

/** Exact square root when x is a perfect square of a rational; throws otherwise. */
inline Rat rat_sqrt_exact(const Rat& x) {
  if (x < 0) throw std::domain_error("square root of a negative rational");
  const mpz_class num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    throw std::domain_error("rational " + rat_str(x) + " has no rational square root");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

/// Complex scalar with exact rational real and imaginary parts.
/// std::complex<T> is only specified for floating-point T, hence this type.
struct RatC {
  Rat re, im;

  RatC() : re(0), im(0) {}
  RatC(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  RatC(long r) : re(r), im(0) {}  // NOLINT: implicit by design

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  RatC conj() const { return RatC(re, Rat(-im)); }
  Rat norm_sq() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  RatC& operator+=(const RatC& o) { re += o.re; im += o.im; return *this; }
  RatC& operator-=(const RatC& o) { re -= o.re; im -= o.im; return *this; }
  RatC& operator*=(const RatC& o) { *this = *this * o; return *this; }

  friend RatC operator+(const RatC& a, const RatC& b) { return RatC(a.re + b.re, a.im + b.im); }
  friend RatC operator-(const RatC& a, const RatC& b) { return RatC(a.re - b.re, a.im - b.im); }
  friend RatC operator-(const RatC& a) { return RatC(Rat(-a.re), Rat(-a.im)); }
  friend RatC operator*(const RatC& a, const RatC& b) {
    return RatC(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend RatC operator*(const Rat& a, const RatC& b) { return RatC(a * b.re, a * b.im); }
  friend RatC operator/(const RatC& a, const RatC& b) {
    const Rat n = b.norm_sq();
    if (n == 0) throw std::domain_error("complex rational division by zero");
    const RatC c = a * b.conj();
    return RatC(c.re / n, c.im / n);
  }
  friend bool operator==(const RatC& a, const RatC& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const RatC& a, const RatC& b) { return !(a == b); }
};

inline std::string ratc_str(const RatC& z) {
  if (z.is_real()) return rat_str(z.re);
  return rat_str(z.re) + (z.im >= 0 ? "+" : "") + rat_str(z.im) + "i";
}

using RatVec = std::vector<Rat>;
using CVec = std::vector<RatC>;

inline CVec to_cvec(const RatVec& v) {
  CVec out;
  out.reserve(v.size());
  for (const Rat& x : v) out.emplace_back(x);
  return out;
}

inline std::vector<std::complex<double>> cvec_complex(const CVec& v) {
  std::vector<std::complex<double>> out;
  out.reserve(v.size());
  for (const RatC& z : v) out.push_back(z.to_complex());
  return out;
}

/// Deterministic stream of small random rationals. Integer draws use explicit
/// modular reduction of mt19937_64 output so the stream is identical on every
/// platform for a given seed.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  long integer(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  Rat rational(long span = 16) { return rat_of(integer(-span, span), integer(1, span)); }

  RatC complex_rational(long span = 16) {
    Rat re = rational(span);
    Rat im = rational(span);
    return RatC(std::move(re), std::move(im));
  }

  RatVec rational_vector(std::size_t n, long span = 16) {
    RatVec v(n);
    for (auto& x : v) x = rational(span);
    return v;
  }

  CVec complex_vector(std::size_t n, long span = 16) {
    CVec v(n);
    for (auto& z : v) z = complex_rational(span);
    return v;
  }

  double real(double lo = -1.0, double hi = 1.0) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hyperg
