#include "wellspring/dist_expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace wellspring::distcalc {

namespace {

bool step_less(const StepFactor& a, const StepFactor& b) {
  if (a.location != b.location) return a.location < b.location;
  return static_cast<int>(a.dir) < static_cast<int>(b.dir);
}

struct StepVecLess {
  bool operator()(const std::vector<StepFactor>& a,
                  const std::vector<StepFactor>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        step_less);
  }
};

// Value of a step factor away from its jump; the caller guarantees x != loc.
double step_value(const StepFactor& s, double x) {
  if (s.dir == StepDir::Rising) return x > s.location ? 1.0 : 0.0;
  return x < s.location ? 1.0 : 0.0;
}

// H(x-a) together with H(a-x) has empty support; such terms vanish almost
// everywhere and are dropped by normalization.
bool empty_support(const std::vector<StepFactor>& steps) {
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (steps[i].location == steps[i - 1].location) return true;
  return false;
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

DistTerm::DistTerm(SmoothFn smooth, std::vector<StepFactor> steps,
                   std::optional<DeltaFactor> delta)
    : smooth_(std::move(smooth)), steps_(std::move(steps)), delta_(delta) {
  std::sort(steps_.begin(), steps_.end(), step_less);
  steps_.erase(std::unique(steps_.begin(), steps_.end()), steps_.end());
  if (delta_) {
    for (const auto& s : steps_)
      if (s.location == delta_->location)
        throw ill_defined_error(
            "delta multiplied by a step jumping at the same point",
            delta_->location);
  }
}

DistExpr DistExpr::from_terms(std::vector<DistTerm> terms) {
  DistExpr e;
  e.terms_ = std::move(terms);
  return e;
}

DistExpr DistExpr::delta(double coeff, double location, unsigned order) {
  return DistExpr(
      DistTerm(SmoothFn::constant(coeff), {}, DeltaFactor{location, order}));
}

DistExpr operator+(const DistExpr& a, const DistExpr& b) {
  std::vector<DistTerm> ts = a.terms_;
  ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
  return normalize(DistExpr::from_terms(std::move(ts)));
}

DistExpr operator-(const DistExpr& a, const DistExpr& b) {
  return a + (-b);
}

DistExpr DistExpr::operator-() const { return *this * -1.0; }

DistExpr operator*(const DistExpr& a, double s) {
  std::vector<DistTerm> ts;
  ts.reserve(a.terms_.size());
  for (const auto& t : a.terms_)
    ts.emplace_back(t.smooth() * s, t.steps(), t.delta());
  return normalize(DistExpr::from_terms(std::move(ts)));
}

DistExpr operator*(const DistExpr& a, const DistExpr& b) {
  std::vector<DistTerm> ts;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      if (ta.delta() && tb.delta())
        throw ill_defined_error("product of two delta factors",
                                ta.delta()->location);
      std::vector<StepFactor> steps = ta.steps();
      steps.insert(steps.end(), tb.steps().begin(), tb.steps().end());
      ts.emplace_back(ta.smooth() * tb.smooth(), std::move(steps),
                      ta.delta() ? ta.delta() : tb.delta());
    }
  }
  return normalize(DistExpr::from_terms(std::move(ts)));
}

DistExpr normalize(const DistExpr& e) {
  std::map<std::vector<StepFactor>, SmoothFn, StepVecLess> regular;
  std::map<std::pair<double, unsigned>, double> deltas;

  for (const DistTerm& t : e.terms()) {
    if (t.smooth().is_zero()) continue;
    if (empty_support(t.steps())) continue;
    if (!t.delta()) {
      auto it = regular.find(t.steps());
      if (it == regular.end())
        regular.emplace(t.steps(), t.smooth());
      else
        it->second += t.smooth();
      continue;
    }
    const double c = t.delta()->location;
    const unsigned k = t.delta()->order;
    // R2: colocated pairs were rejected at construction, so every step has a
    // well-defined 0/1 value at c.
    bool gated_off = false;
    for (const auto& s : t.steps())
      if (step_value(s, c) == 0.0) {
        gated_off = true;
        break;
      }
    if (gated_off) continue;
    // R1: trade smooth factors for derivatives at the delta location.
    SmoothFn g = t.smooth();
    for (unsigned j = 0; j <= k; ++j) {
      const double sign = (j % 2 != 0) ? -1.0 : 1.0;
      const double coeff = sign * binomial_coefficient(k, j) * g.eval(c);
      if (coeff != 0.0) deltas[{c, k - j}] += coeff;
      if (j < k) g = g.derivative();
    }
  }

  std::vector<DistTerm> out;
  for (auto& [steps, f] : regular)
    if (!f.is_zero()) out.emplace_back(std::move(f), steps, std::nullopt);
  for (const auto& [key, coeff] : deltas)
    if (coeff != 0.0)
      out.emplace_back(SmoothFn::constant(coeff), std::vector<StepFactor>{},
                       DeltaFactor{key.first, key.second});
  return DistExpr::from_terms(std::move(out));
}

DistExpr differentiate(const DistExpr& e) {
  const DistExpr en = normalize(e);
  std::vector<DistTerm> out;
  for (const DistTerm& t : en.terms()) {
    SmoothFn df = t.smooth().derivative();
    if (!df.is_zero()) out.emplace_back(std::move(df), t.steps(), t.delta());
    for (std::size_t i = 0; i < t.steps().size(); ++i) {
      const StepFactor& s = t.steps()[i];
      std::vector<StepFactor> rest;
      rest.reserve(t.steps().size() - 1);
      for (std::size_t j = 0; j < t.steps().size(); ++j)
        if (j != i) rest.push_back(t.steps()[j]);
      SmoothFn g = t.smooth();
      if (s.dir == StepDir::Falling) g *= -1.0;
      out.emplace_back(std::move(g), std::move(rest),
                       DeltaFactor{s.location, 0});
    }
    if (t.delta())
      out.emplace_back(t.smooth(), t.steps(),
                       DeltaFactor{t.delta()->location, t.delta()->order + 1});
  }
  return normalize(DistExpr::from_terms(std::move(out)));
}

double integrate(const DistExpr& e, double lo, double hi) {
  if (!(lo < hi))
    throw std::invalid_argument("integration bounds must satisfy lo < hi");
  const DistExpr en = normalize(e);
  double total = 0.0;
  for (const DistTerm& t : en.terms()) {
    if (t.delta()) {
      const double c = t.delta()->location;
      if (c == lo || c == hi)
        throw ill_defined_error("delta at an integration endpoint", c);
      if (lo < c && c < hi && t.delta()->order == 0) total += t.smooth().eval(c);
      // delta^(k), k >= 1, integrates to zero against the window.
      continue;
    }
    double a = lo, b = hi;
    for (const auto& s : t.steps()) {
      if (s.dir == StepDir::Rising)
        a = std::max(a, s.location);
      else
        b = std::min(b, s.location);
    }
    if (a < b) {
      const SmoothFn F = t.smooth().antiderivative();
      total += F.eval(b) - F.eval(a);
    }
  }
  return total;
}

double delta_coefficient(const DistExpr& e, double location, unsigned order) {
  const DistExpr en = normalize(e);
  for (const DistTerm& t : en.terms())
    if (t.delta() && t.delta()->location == location &&
        t.delta()->order == order)
      return t.smooth().eval(location);
  return 0.0;
}

double evaluate_regular(const DistExpr& e, double x) {
  for (const DistTerm& t : e.terms()) {
    if (t.delta() && t.delta()->location == x)
      throw ill_defined_error("evaluation at a delta location", x);
    for (const auto& s : t.steps())
      if (s.location == x)
        throw ill_defined_error("evaluation at a step jump", x);
  }
  double sum = 0.0;
  for (const DistTerm& t : e.terms()) {
    if (t.delta()) continue;
    double v = t.smooth().eval(x);
    for (const auto& s : t.steps()) v *= step_value(s, x);
    sum += v;
  }
  return sum;
}

bool equivalent(const DistExpr& a, const DistExpr& b, double tol) {
  const DistExpr na = normalize(a), nb = normalize(b);

  std::map<std::pair<double, unsigned>, double> da, db;
  std::vector<double> singular;
  auto scan = [&singular](const DistExpr& e,
                          std::map<std::pair<double, unsigned>, double>& d) {
    for (const DistTerm& t : e.terms()) {
      for (const auto& s : t.steps()) singular.push_back(s.location);
      if (t.delta()) {
        d[{t.delta()->location, t.delta()->order}] =
            t.smooth().eval(t.delta()->location);
        singular.push_back(t.delta()->location);
      }
    }
  };
  scan(na, da);
  scan(nb, db);

  for (const auto& [key, ca] : da)
    if (!close(ca, db.count(key) ? db[key] : 0.0, tol)) return false;
  for (const auto& [key, cb] : db)
    if (!da.count(key) && !close(0.0, cb, tol)) return false;

  double lo = -1.0, hi = 1.0;
  for (double s : singular) {
    lo = std::min(lo, s - 1.0);
    hi = std::max(hi, s + 1.0);
  }
  const int n = 257;
  const double span = hi - lo;
  for (int i = 0; i < n; ++i) {
    const double x = lo + span * (static_cast<double>(i) + 0.5) / n;
    bool near_singular = false;
    for (double s : singular)
      if (std::abs(x - s) <= 1e-8 * span) {
        near_singular = true;
        break;
      }
    if (near_singular) continue;
    if (!close(evaluate_regular(na, x), evaluate_regular(nb, x), tol))
      return false;
  }
  return true;
}

double max_abs_coefficient(const DistExpr& e) {
  double m = 0.0;
  for (const DistTerm& t : e.terms())
    m = std::max(m, t.smooth().max_abs_coeff());
  return m;
}

bool is_zero(const DistExpr& e, double tol) {
  return max_abs_coefficient(normalize(e)) <= tol;
}

std::string pretty(const DistExpr& e) {
  if (e.terms().empty()) return "0\n";
  std::string out;
  for (const DistTerm& t : e.terms()) {
    std::string smooth = t.smooth().str();
    if (t.smooth().atoms().size() > 1 &&
        (!t.steps().empty() || t.delta()))
      smooth = "(" + smooth + ")";
    out += smooth;
    if (!t.steps().empty()) {
      out += " * ";
      for (std::size_t i = 0; i < t.steps().size(); ++i) {
        const auto& s = t.steps()[i];
        if (i) out += "*";
        if (s.dir == StepDir::Rising) {
          if (s.location == 0.0)
            out += "H(x)";
          else if (s.location < 0.0)
            out += "H(x+" + format_g(-s.location) + ")";
          else
            out += "H(x-" + format_g(s.location) + ")";
        } else {
          if (s.location == 0.0)
            out += "H(-x)";
          else
            out += "H(" + format_g(s.location) + "-x)";
        }
      }
    }
    if (t.delta()) {
      const auto& d = *t.delta();
      out += " * d" + std::to_string(d.order);
      if (d.location < 0.0)
        out += "(x+" + format_g(-d.location) + ")";
      else
        out += "(x-" + format_g(d.location) + ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace wellspring::distcalc
