#ifndef APTREE_WEIGHT_HPP
#define APTREE_WEIGHT_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aptree {

enum class Trend { constant, increasing, decreasing, unknown };

/// One smooth primitive on an interval. Everything a radial weight is made of
/// normalizes to these four shapes, each with a closed-form antiderivative:
///   constant     c
///   power        c * (t - origin)^expo   (valid for t > origin)
///   rpower       c * (origin - t)^expo   (valid for t < origin)
///   exponential  c * e^(expo * t)
struct Form {
  enum class Kind { constant, power, rpower, exponential };

  Kind kind = Kind::constant;
  double coef = 1.0;
  double origin = 0.0;
  double expo = 0.0;

  static Form constant(double c) { return {Kind::constant, c, 0.0, 0.0}; }
  static Form power(double coef, double origin, double expo) {
    return {Kind::power, coef, origin, expo};
  }
  static Form rpower(double coef, double origin, double expo) {
    return {Kind::rpower, coef, origin, expo};
  }
  static Form exponential(double coef, double kappa) {
    return {Kind::exponential, coef, 0.0, kappa};
  }

  double value(double t) const;
  Trend trend() const;
  bool is_constant() const;

  /// Exact integral over [a, b] within the form's validity range.
  /// Returns +inf when the closed form diverges (integrable endpoint singularity
  /// with exponent <= -1).
  double integral(double a, double b) const;

  /// Solve integral(a, t) == target for t >= a. Requires a positive form.
  double solve_integral(double a, double target) const;

  std::string describe() const;
};

/// Result of combining several forms multiplicatively; empty when the product
/// leaves the closed-form algebra.
std::optional<Form> multiply(const Form& a, const Form& b);
std::optional<Form> pow_form(const Form& f, double q);

/// A radial weight t -> w(t) > 0 on [0, inf), stored as finitely many smooth
/// pieces plus a tail rule. Step-per-level and tabulated kinds follow the
/// right-continuous convention: the value on (n, n+1] is w_n.
class Weight {
 public:
  enum class TailKind { analytic, unit_step };
  enum class Interp { piecewise_constant, piecewise_linear };

  struct StepTailRule {
    enum class Kind { constant, geometric } kind = Kind::constant;
    double ratio = 1.0;
    static StepTailRule constant_tail() { return {Kind::constant, 1.0}; }
    static StepTailRule geometric_tail(double ratio) { return {Kind::geometric, ratio}; }
  };

  struct Piece {
    double lo = 0.0, hi = 0.0;  // value applies on (lo, hi]
    Form form;
  };

  // -- families ------------------------------------------------------------
  static Weight constant(double c);
  static Weight power(double alpha, double coef = 1.0);          // coef * t^alpha, alpha > -1
  static Weight shifted_power(double alpha, double coef = 1.0);  // coef * (1+t)^alpha
  static Weight exponential(double base, double rate, double coef = 1.0);  // coef * base^(rate t)
  static Weight truncated_reciprocal();                          // min{1, 1/t}
  static Weight step(std::vector<double> values, StepTailRule tail);
  static Weight tabulated(std::vector<std::pair<double, double>> knots, Interp interp,
                          StepTailRule tail);
  /// General declared-piece combination; each piece form must be positive on
  /// its interval, tail form positive on (start, inf).
  static Weight piecewise(std::vector<Piece> pieces, Form tail_form);

  // -- evaluation ----------------------------------------------------------
  /// w(t). Throws DomainError for t < 0. May return +inf at an isolated
  /// integrable singularity (e.g. t^alpha at t = 0 with alpha < 0).
  double value(double t) const;

  /// Declared discontinuity / non-smoothness abscissae strictly inside (a, b).
  std::vector<double> breakpoints(double a, double b) const;

  /// Smallest structural breakpoint strictly greater than t (+inf if none).
  double next_breakpoint(double t) const;

  /// The primitive form governing (lo, hi]; the interval must not straddle a
  /// breakpoint.
  Form form_on(double lo, double hi) const;

  /// Whether the tail certifies a divergent integral over [0, inf).
  bool tail_diverges() const;

  double tail_start() const { return tail_start_; }
  const std::string& description() const { return desc_; }

 private:
  Weight() = default;
  void set_description(std::string d) { desc_ = std::move(d); }
  void validate() const;

  std::vector<Piece> pieces_;    // contiguous from 0 to tail_start_
  double tail_start_ = 0.0;
  TailKind tail_kind_ = TailKind::analytic;
  Form tail_form_ = Form::constant(1.0);
  double step_first_ = 1.0;  // unit_step: value on (tail_start_+k, tail_start_+k+1]
  double step_ratio_ = 1.0;  //            is step_first_ * step_ratio_^k
  std::string desc_;
};

using WeightPtr = std::shared_ptr<const Weight>;

}  // namespace aptree

#endif
