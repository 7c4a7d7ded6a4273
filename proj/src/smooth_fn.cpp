#include "wellspring/smooth_fn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace wellspring::distcalc {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double x, unsigned p) {
  double r = 1.0;
  for (unsigned i = 0; i < p; ++i) r *= x;
  return r;
}

// sin/cos of wave*pi*u with u = x/L.  When u is an integer the value is
// produced from the parity of wave*u instead of calling libm, so wall values
// are exact.
double trig_value(Trig t, int wave, double x, double length) {
  if (t == Trig::Constant) return 1.0;
  const double u = x / length;
  const double r = std::nearbyint(u);
  if (u == r && std::abs(r) <= 1e15) {
    if (t == Trig::Sin) return 0.0;
    const bool odd = (std::llabs(static_cast<long long>(r)) % 2 != 0) &&
                     (std::abs(wave) % 2 != 0);
    return odd ? -1.0 : 1.0;
  }
  const double arg = static_cast<double>(wave) * kPi * u;
  return t == Trig::Sin ? std::sin(arg) : std::cos(arg);
}

bool atom_key_less(const SmoothAtom& a, const SmoothAtom& b) {
  return std::tuple(a.power, a.wave, static_cast<int>(a.trig)) <
         std::tuple(b.power, b.wave, static_cast<int>(b.trig));
}

bool atom_key_equal(const SmoothAtom& a, const SmoothAtom& b) {
  return a.power == b.power && a.wave == b.wave && a.trig == b.trig;
}

std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

double binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (unsigned j = 1; j <= k; ++j)
    r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return r;
}

SmoothFn SmoothFn::constant(double c) { return monomial(c, 0); }

SmoothFn SmoothFn::monomial(double c, unsigned power) {
  SmoothFn f;
  f.atoms_.push_back({c, power, Trig::Constant, 0});
  f.canonicalize();
  return f;
}

SmoothFn SmoothFn::harmonic(double c, unsigned power, Trig trig, int wave,
                            double length) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("harmonic length scale must be positive");
  SmoothFn f;
  f.length_ = length;
  f.atoms_.push_back({c, power, trig, wave});
  f.canonicalize();
  return f;
}

bool SmoothFn::has_harmonics() const {
  for (const auto& a : atoms_)
    if (a.trig != Trig::Constant) return true;
  return false;
}

double SmoothFn::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& a : atoms_) m = std::max(m, std::abs(a.coeff));
  return m;
}

void SmoothFn::canonicalize() {
  for (auto& a : atoms_) {
    if (a.trig == Trig::Constant) {
      a.wave = 0;
    } else if (a.wave == 0) {
      if (a.trig == Trig::Sin) a.coeff = 0.0;  // sin(0) == 0
      a.trig = Trig::Constant;                 // cos(0) == 1
    } else if (a.wave < 0) {
      if (a.trig == Trig::Sin) a.coeff = -a.coeff;
      a.wave = -a.wave;
    }
  }
  std::erase_if(atoms_, [](const SmoothAtom& a) { return a.coeff == 0.0; });
  std::sort(atoms_.begin(), atoms_.end(), atom_key_less);
  std::vector<SmoothAtom> merged;
  merged.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    if (!merged.empty() && atom_key_equal(merged.back(), a)) {
      merged.back().coeff += a.coeff;
      if (merged.back().coeff == 0.0) merged.pop_back();
    } else {
      merged.push_back(a);
    }
  }
  atoms_ = std::move(merged);
  if (!has_harmonics()) length_ = 1.0;  // scale is meaningless for polynomials
}

double SmoothFn::merged_length(const SmoothFn& a, const SmoothFn& b) {
  const bool ha = a.has_harmonics(), hb = b.has_harmonics();
  if (ha && hb && a.length_ != b.length_)
    throw std::invalid_argument(
        "cannot combine smooth functions with different length scales");
  return ha ? a.length_ : (hb ? b.length_ : 1.0);
}

SmoothFn& SmoothFn::operator+=(const SmoothFn& rhs) {
  length_ = merged_length(*this, rhs);
  atoms_.insert(atoms_.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  canonicalize();
  return *this;
}

SmoothFn& SmoothFn::operator-=(const SmoothFn& rhs) {
  length_ = merged_length(*this, rhs);
  for (const auto& a : rhs.atoms_)
    atoms_.push_back({-a.coeff, a.power, a.trig, a.wave});
  canonicalize();
  return *this;
}

SmoothFn& SmoothFn::operator*=(double s) {
  for (auto& a : atoms_) a.coeff *= s;
  canonicalize();
  return *this;
}

SmoothFn SmoothFn::operator-() const {
  SmoothFn f = *this;
  f *= -1.0;
  return f;
}

// Product-to-sum: products of sin/cos collapse back into single harmonics
// with wavenumbers a.wave +- b.wave, so the class stays closed.
SmoothFn& SmoothFn::operator*=(const SmoothFn& rhs) {
  const double len = merged_length(*this, rhs);
  std::vector<SmoothAtom> out;
  out.reserve(2 * atoms_.size() * rhs.atoms_.size());
  for (const auto& a : atoms_) {
    for (const auto& b : rhs.atoms_) {
      const unsigned p = a.power + b.power;
      const double c = a.coeff * b.coeff;
      if (a.trig == Trig::Constant && b.trig == Trig::Constant) {
        out.push_back({c, p, Trig::Constant, 0});
      } else if (a.trig == Trig::Constant) {
        out.push_back({c, p, b.trig, b.wave});
      } else if (b.trig == Trig::Constant) {
        out.push_back({c, p, a.trig, a.wave});
      } else {
        const int sum = a.wave + b.wave;
        const int dif = a.wave - b.wave;
        const double h = 0.5 * c;
        if (a.trig == Trig::Sin && b.trig == Trig::Sin) {
          out.push_back({h, p, Trig::Cos, dif});
          out.push_back({-h, p, Trig::Cos, sum});
        } else if (a.trig == Trig::Cos && b.trig == Trig::Cos) {
          out.push_back({h, p, Trig::Cos, dif});
          out.push_back({h, p, Trig::Cos, sum});
        } else if (a.trig == Trig::Sin && b.trig == Trig::Cos) {
          out.push_back({h, p, Trig::Sin, sum});
          out.push_back({h, p, Trig::Sin, dif});
        } else {  // cos * sin
          out.push_back({h, p, Trig::Sin, sum});
          out.push_back({-h, p, Trig::Sin, dif});
        }
      }
    }
  }
  atoms_ = std::move(out);
  length_ = len;
  canonicalize();
  return *this;
}

double SmoothFn::eval(double x) const {
  double s = 0.0;
  for (const auto& a : atoms_)
    s += a.coeff * ipow(x, a.power) * trig_value(a.trig, a.wave, x, length_);
  return s;
}

double SmoothFn::eval_derivative(double x, unsigned order) const {
  SmoothFn f = *this;
  for (unsigned i = 0; i < order; ++i) f = f.derivative();
  return f.eval(x);
}

SmoothFn SmoothFn::derivative() const {
  SmoothFn out;
  out.length_ = length_;
  for (const auto& a : atoms_) {
    if (a.power > 0)
      out.atoms_.push_back(
          {a.coeff * static_cast<double>(a.power), a.power - 1, a.trig, a.wave});
    if (a.trig == Trig::Sin) {
      const double w = static_cast<double>(a.wave) * kPi / length_;
      out.atoms_.push_back({a.coeff * w, a.power, Trig::Cos, a.wave});
    } else if (a.trig == Trig::Cos) {
      const double w = static_cast<double>(a.wave) * kPi / length_;
      out.atoms_.push_back({-(a.coeff * w), a.power, Trig::Sin, a.wave});
    }
  }
  out.canonicalize();
  return out;
}

SmoothFn SmoothFn::antiderivative() const {
  SmoothFn out;
  out.length_ = length_;
  // integral x^p sin(wx) = -x^p cos(wx)/w + (p/w) integral x^(p-1) cos(wx),
  // and symmetrically for cos; the recursion terminates at p == 0.
  auto acc = [&](auto&& self, double c, unsigned p, Trig t, int q) -> void {
    if (t == Trig::Constant) {
      out.atoms_.push_back({c / static_cast<double>(p + 1), p + 1,
                            Trig::Constant, 0});
      return;
    }
    const double w = static_cast<double>(q) * kPi / length_;
    if (t == Trig::Sin) {
      out.atoms_.push_back({-(c / w), p, Trig::Cos, q});
      if (p > 0) self(self, c * static_cast<double>(p) / w, p - 1, Trig::Cos, q);
    } else {
      out.atoms_.push_back({c / w, p, Trig::Sin, q});
      if (p > 0)
        self(self, -(c * static_cast<double>(p) / w), p - 1, Trig::Sin, q);
    }
  };
  for (const auto& a : atoms_) acc(acc, a.coeff, a.power, a.trig, a.wave);
  out.canonicalize();
  return out;
}

SmoothFn SmoothFn::shifted_by_length() const {
  SmoothFn out;
  out.length_ = length_;
  for (const auto& a : atoms_) {
    // sin(w(x-L)) = (-1)^wave sin(wx), cos likewise: parity only, no libm.
    double sgn = 1.0;
    if (a.trig != Trig::Constant && a.wave % 2 != 0) sgn = -1.0;
    for (unsigned j = 0; j <= a.power; ++j) {
      const double c = a.coeff * sgn * binomial_coefficient(a.power, j) *
                       ipow(-length_, a.power - j);
      out.atoms_.push_back({c, j, a.trig, a.wave});
    }
  }
  out.canonicalize();
  return out;
}

std::string SmoothFn::str() const {
  if (atoms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& a = atoms_[i];
    if (i) s += " + ";
    s += format_g(a.coeff);
    if (a.power == 1)
      s += "*x";
    else if (a.power > 1)
      s += "*x^" + std::to_string(a.power);
    if (a.trig == Trig::Sin)
      s += "*sin(" + std::to_string(a.wave) + "*pi*x/L)";
    else if (a.trig == Trig::Cos)
      s += "*cos(" + std::to_string(a.wave) + "*pi*x/L)";
  }
  return s;
}

}  // namespace wellspring::distcalc
