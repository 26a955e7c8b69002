#ifndef OHNO_CHECK_REPORT_HPP
#define OHNO_CHECK_REPORT_HPP

#include <chrono>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ohno/arb_float.hpp"
#include "ohno/series.hpp"
#include "ohno/word.hpp"
#include "ohno/xy_poly.hpp"

namespace ohno {

struct Residual {
  std::string coefficient_key;
  std::string value;
};

/// Outcome of one verification run. pass holds iff max_residual < tolerance for
/// numeric checks, and iff every residual is exactly 0 for exact ones.
struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool exact = false;
  std::string tolerance;
  std::string max_residual;
  bool pass = false;
  double duration_ms = 0;
  std::size_t instances = 0;
  std::vector<Residual> residuals;
};

/// 1e3 * 2^(8 - bits): the default tolerance at a given precision.
inline ArbFloat default_tolerance(Precision p) {
  return ArbFloat::pow2(8 - p.bits, p) * Rational(1000);
}

/// Collects residuals of one check and produces its report.
class ResidualSink {
 public:
  /// Numeric check.
  ResidualSink(std::string check, Precision target, ArbFloat tolerance)
      : check_(std::move(check)), target_(target), tol_(std::move(tolerance)), max_(target),
        start_(std::chrono::steady_clock::now()) {}

  /// Exact check (tolerance 0).
  ResidualSink(std::string check, Precision target = Precision{128})
      : check_(std::move(check)), target_(target), tol_(target), max_(target), exact_(true),
        start_(std::chrono::steady_clock::now()) {}

  bool exact() const { return exact_; }
  Precision target() const { return target_; }

  ResidualSink& param(const std::string& key, const std::string& value) {
    params_.emplace_back(key, value);
    return *this;
  }
  ResidualSink& param(const std::string& key, long value) { return param(key, std::to_string(value)); }

  void add(const std::string& key, const ArbFloat& diff) {
    ArbFloat a = abs(diff);
    if (max_ < a) max_ = a;
    if (!a.is_zero()) nonzero_ = true;
    residuals_.push_back({key, render(a)});
  }

  void add_exact(const std::string& key, const Rational& diff) {
    add(key, ArbFloat(abs(diff), target_));
    if (diff != 0) nonzero_ = true;
  }

  /// Residual of an exact word identity: the largest absolute coefficient of the difference.
  void add_exact(const std::string& key, const NcPoly& diff) {
    Rational m(0);
    for (const auto& [w, c] : diff.terms())
      if (abs(c) > m) m = abs(c);
    add_exact(key, m);
  }

  void count_instance(std::size_t n = 1) { instances_ += n; }

  CheckReport finish() const {
    CheckReport r;
    r.check = check_;
    r.params = params_;
    r.exact = exact_;
    r.tolerance = exact_ ? "0" : tol_.to_string(6);
    r.max_residual = render(max_);
    r.pass = exact_ ? !nonzero_ : (max_ < tol_);
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    r.instances = instances_ ? instances_ : residuals_.size();
    r.residuals = residuals_;
    return r;
  }

 private:
  std::string render(const ArbFloat& v) const {
    if (v.is_zero()) return "0";
    return v.to_string(ArbFloat::digits_for(target_));
  }

  std::string check_;
  Precision target_;
  ArbFloat tol_;
  ArbFloat max_;
  bool exact_ = false;
  bool nonzero_ = false;
  std::size_t instances_ = 0;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<Residual> residuals_;
  std::chrono::steady_clock::time_point start_;
};

/// Combines several reports into one suite report; keys are prefixed by the part name.
inline CheckReport merge_reports(const std::string& name, const std::vector<CheckReport>& parts,
                                 std::vector<std::pair<std::string, std::string>> params) {
  CheckReport r;
  r.check = name;
  r.params = std::move(params);
  r.pass = true;
  r.exact = true;
  const Precision cmp{64};
  ArbFloat worst(cmp);
  r.max_residual = "0";
  for (const auto& p : parts) {
    r.pass = r.pass && p.pass;
    r.exact = r.exact && p.exact;
    r.duration_ms += p.duration_ms;
    r.instances += p.instances;
    const ArbFloat v = ArbFloat::from_string(p.max_residual, cmp);
    if (worst < v) {
      worst = v;
      r.max_residual = p.max_residual;
    }
    for (const auto& res : p.residuals) r.residuals.push_back({p.check + ":" + res.coefficient_key, res.value});
  }
  r.tolerance = "0";
  bool have_tol = false;
  ArbFloat tight(cmp);
  for (const auto& p : parts) {
    if (p.exact) continue;
    const ArbFloat t = ArbFloat::from_string(p.tolerance, cmp);
    if (!have_tol || t < tight) {
      tight = t;
      r.tolerance = p.tolerance;
      have_tol = true;
    }
  }
  return r;
}

inline std::string monomial_key(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += std::string(kParamNames[i]) + "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string xy_key(int a, int b) { return "X^" + std::to_string(a) + " Y^" + std::to_string(b); }

/// Records every coefficient of left - right (union of supports) within the common profile.
inline void compare_series(ResidualSink& sink, const std::string& prefix, const MultiSeries<ArbFloat>& left,
                           const MultiSeries<ArbFloat>& right) {
  std::set<Exponents, ExponentOrder> keys;
  const auto prof = intersect(left.profile(), right.profile());
  for (const auto& [e, c] : left.terms()) keys.insert(e);
  for (const auto& [e, c] : right.terms()) keys.insert(e);
  for (const auto& e : keys) {
    if (!prof.admits(e)) continue;
    sink.add(prefix + monomial_key(e), left.coeff(e) - right.coeff(e));
  }
}

inline void compare_series(ResidualSink& sink, const std::string& prefix, const MultiSeries<XYPoly<ArbFloat>>& left,
                           const MultiSeries<XYPoly<ArbFloat>>& right) {
  std::set<Exponents, ExponentOrder> keys;
  const auto prof = intersect(left.profile(), right.profile());
  for (const auto& [e, c] : left.terms()) keys.insert(e);
  for (const auto& [e, c] : right.terms()) keys.insert(e);
  for (const auto& e : keys) {
    if (!prof.admits(e)) continue;
    const auto l = left.coeff(e), r = right.coeff(e);
    std::set<std::pair<int, int>> xy;
    for (const auto& [k, c] : l.terms()) xy.insert(k);
    for (const auto& [k, c] : r.terms()) xy.insert(k);
    for (const auto& [a, b] : xy)
      sink.add(prefix + monomial_key(e) + " " + xy_key(a, b), l.coeff(a, b) - r.coeff(a, b));
  }
}

/// Exact comparison of two word series, coefficientwise.
inline void compare_exact(ResidualSink& sink, const std::string& prefix, const MultiSeries<NcPoly>& left,
                          const MultiSeries<NcPoly>& right) {
  std::set<Exponents, ExponentOrder> keys;
  const auto prof = intersect(left.profile(), right.profile());
  for (const auto& [e, c] : left.terms()) keys.insert(e);
  for (const auto& [e, c] : right.terms()) keys.insert(e);
  if (keys.empty()) sink.add_exact(prefix + "1", NcPoly());
  for (const auto& e : keys) {
    if (!prof.admits(e)) continue;
    sink.add_exact(prefix + monomial_key(e), left.coeff(e) - right.coeff(e));
  }
}

}  // namespace ohno

#endif
