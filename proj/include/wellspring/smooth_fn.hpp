#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wellspring::distcalc {

enum class Trig : std::uint8_t { Constant = 0, Cos = 1, Sin = 2 };

// One term  coeff * x^power * trig(wave*pi*x/L).  The wavenumber stays an
// exact integer so sin and cos at integer multiples of L evaluate exactly
// (sin(n*pi) == 0.0, cos(n*pi) == +-1.0), which is what lets boundary
// cancellations in the rewrite rules come out bitwise instead of merely small.
struct SmoothAtom {
  double coeff = 0.0;
  unsigned power = 0;
  Trig trig = Trig::Constant;
  int wave = 0;

  friend bool operator==(const SmoothAtom&, const SmoothAtom&) = default;
};

// Finite sum of atoms over a single length scale L.  The class is closed
// under addition, multiplication (product-to-sum identities), d/dx,
// antiderivative and the argument shift x -> x - L.  Atoms are kept in a
// canonical form: wave > 0 for sin/cos (negative arguments folded by parity),
// cos(0) folded to the constant atom, sorted by (power, wave, trig), exact
// duplicates merged, exactly-zero coefficients dropped.
class SmoothFn {
 public:
  SmoothFn() = default;  // the zero function

  static SmoothFn constant(double c);
  static SmoothFn monomial(double c, unsigned power);
  static SmoothFn harmonic(double c, unsigned power, Trig trig, int wave,
                           double length);

  bool is_zero() const { return atoms_.empty(); }
  bool has_harmonics() const;
  double length() const { return length_; }
  const std::vector<SmoothAtom>& atoms() const { return atoms_; }
  double max_abs_coeff() const;

  double eval(double x) const;
  double eval_derivative(double x, unsigned order) const;

  SmoothFn derivative() const;
  SmoothFn antiderivative() const;  // integration constant fixed to zero
  SmoothFn shifted_by_length() const;  // x -> f(x - L), exact by parity

  SmoothFn& operator+=(const SmoothFn& rhs);
  SmoothFn& operator-=(const SmoothFn& rhs);
  SmoothFn& operator*=(double s);
  SmoothFn& operator*=(const SmoothFn& rhs);
  SmoothFn operator-() const;

  friend SmoothFn operator+(SmoothFn a, const SmoothFn& b) { return a += b; }
  friend SmoothFn operator-(SmoothFn a, const SmoothFn& b) { return a -= b; }
  friend SmoothFn operator*(SmoothFn a, const SmoothFn& b) { return a *= b; }
  friend SmoothFn operator*(SmoothFn a, double s) { return a *= s; }
  friend SmoothFn operator*(double s, SmoothFn a) { return a *= s; }

  bool operator==(const SmoothFn& rhs) const = default;

  std::string str() const;

 private:
  void canonicalize();
  static double merged_length(const SmoothFn& a, const SmoothFn& b);

  double length_ = 1.0;
  std::vector<SmoothAtom> atoms_;
};

// Exact for the small arguments used here (products of integer prefixes).
double binomial_coefficient(unsigned n, unsigned k);

}  // namespace wellspring::distcalc
