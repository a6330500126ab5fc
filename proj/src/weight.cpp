#include "aptree/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aptree/errors.hpp"

namespace aptree {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool nearly(double a, double b, double scale = 1.0) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(scale), std::abs(a), std::abs(b)});
}
}  // namespace

// ---------------------------------------------------------------------------
// Form

double Form::value(double t) const {
  switch (kind) {
    case Kind::constant: return coef;
    case Kind::power: return coef * std::pow(std::max(t - origin, 0.0), expo);
    case Kind::rpower: return coef * std::pow(std::max(origin - t, 0.0), expo);
    case Kind::exponential: return coef * std::exp(expo * t);
  }
  return coef;
}

bool Form::is_constant() const {
  return kind == Kind::constant || ((kind == Kind::power || kind == Kind::rpower) && expo == 0.0) ||
         (kind == Kind::exponential && expo == 0.0);
}

Trend Form::trend() const {
  if (is_constant()) return Trend::constant;
  const bool up = expo > 0.0;
  switch (kind) {
    case Kind::constant: return Trend::constant;
    case Kind::power: return up ? Trend::increasing : Trend::decreasing;
    case Kind::rpower: return up ? Trend::decreasing : Trend::increasing;
    case Kind::exponential: return up ? Trend::increasing : Trend::decreasing;
  }
  return Trend::unknown;
}

double Form::integral(double a, double b) const {
  if (b <= a) return 0.0;
  switch (kind) {
    case Kind::constant:
      return coef * (b - a);
    case Kind::power: {
      const double u = a - origin, v = b - origin;
      if (u < -1e-12 * std::max(1.0, std::abs(origin))) throw DomainError("power form evaluated left of its origin");
      if (expo == -1.0) {
        if (u <= 0.0) return kInf;
        return coef * std::log(v / u);
      }
      const double e1 = expo + 1.0;
      if (u <= 0.0 && e1 <= 0.0) return kInf;
      const double fu = u <= 0.0 ? 0.0 : std::pow(u, e1);
      return coef * (std::pow(v, e1) - fu) / e1;
    }
    case Kind::rpower: {
      const double u = origin - b, v = origin - a;
      if (u < -1e-12 * std::max(1.0, std::abs(origin))) throw DomainError("rpower form evaluated right of its origin");
      if (expo == -1.0) {
        if (u <= 0.0) return kInf;
        return coef * std::log(v / u);
      }
      const double e1 = expo + 1.0;
      if (u <= 0.0 && e1 <= 0.0) return kInf;
      const double fu = u <= 0.0 ? 0.0 : std::pow(u, e1);
      return coef * (std::pow(v, e1) - fu) / e1;
    }
    case Kind::exponential: {
      if (expo == 0.0) return coef * (b - a);
      return coef * (std::exp(expo * b) - std::exp(expo * a)) / expo;
    }
  }
  return 0.0;
}

double Form::solve_integral(double a, double target) const {
  if (target <= 0.0) return a;
  switch (kind) {
    case Kind::constant:
      return a + target / coef;
    case Kind::power: {
      const double u = std::max(a - origin, 0.0);
      const double e1 = expo + 1.0;
      if (expo == -1.0) return origin + u * std::exp(target / coef);
      return origin + std::pow(std::pow(u, e1) + e1 * target / coef, 1.0 / e1);
    }
    case Kind::rpower: {
      const double v = std::max(origin - a, 0.0);
      const double e1 = expo + 1.0;
      if (expo == -1.0) return origin - v * std::exp(-target / coef);
      const double inner = std::pow(v, e1) - e1 * target / coef;
      if (inner <= 0.0) throw SolverFailureError("rpower inversion left the form's range");
      return origin - std::pow(inner, 1.0 / e1);
    }
    case Kind::exponential: {
      if (expo == 0.0) return a + target / coef;
      const double inner = std::exp(expo * a) + expo * target / coef;
      if (inner <= 0.0) throw SolverFailureError("exponential inversion left the form's range");
      return std::log(inner) / expo;
    }
  }
  return a;
}

std::string Form::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::constant: os << coef; break;
    case Kind::power:
      os << coef << "*(t";
      if (origin != 0.0) os << (origin > 0 ? "-" : "+") << std::abs(origin);
      os << ")^" << expo;
      break;
    case Kind::rpower: os << coef << "*(" << origin << "-t)^" << expo; break;
    case Kind::exponential: os << coef << "*exp(" << expo << " t)"; break;
  }
  return os.str();
}

std::optional<Form> multiply(const Form& a, const Form& b) {
  if (a.is_constant()) {
    Form r = b;
    r.coef *= a.coef;  // every constant shape stores its value in coef
    return r;
  }
  if (b.is_constant()) return multiply(b, a);
  if (a.kind != b.kind) return std::nullopt;
  switch (a.kind) {
    case Form::Kind::power:
    case Form::Kind::rpower:
      if (!nearly(a.origin, b.origin, std::max(std::abs(a.origin), 1.0))) return std::nullopt;
      return Form{a.kind, a.coef * b.coef, a.origin, a.expo + b.expo};
    case Form::Kind::exponential:
      return Form::exponential(a.coef * b.coef, a.expo + b.expo);
    default:
      return std::nullopt;
  }
}

std::optional<Form> pow_form(const Form& f, double q) {
  if (q == 1.0) return f;
  if (f.coef <= 0.0) return std::nullopt;
  if (f.is_constant()) return Form::constant(std::pow(f.coef, q));
  switch (f.kind) {
    case Form::Kind::power: return Form::power(std::pow(f.coef, q), f.origin, f.expo * q);
    case Form::Kind::rpower: return Form::rpower(std::pow(f.coef, q), f.origin, f.expo * q);
    case Form::Kind::exponential: return Form::exponential(std::pow(f.coef, q), f.expo * q);
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Weight

double Weight::value(double t) const {
  if (t < 0.0) throw DomainError("weight evaluated at t < 0");
  if (t <= tail_start_ && !pieces_.empty()) {
    // value on (lo, hi]; t = 0 belongs to the first piece
    std::size_t i = 0;
    while (i + 1 < pieces_.size() && t > pieces_[i].hi) ++i;
    return pieces_[i].form.value(t);
  }
  if (tail_kind_ == TailKind::analytic) return tail_form_.value(t);
  long long k = static_cast<long long>(std::ceil(t - tail_start_)) - 1;
  if (k < 0) k = 0;
  return step_first_ * std::pow(step_ratio_, static_cast<double>(k));
}

std::vector<double> Weight::breakpoints(double a, double b) const {
  std::vector<double> out;
  for (const auto& p : pieces_) {
    if (p.lo > a && p.lo < b) out.push_back(p.lo);
    if (p.hi > a && p.hi < b) out.push_back(p.hi);
  }
  if (tail_start_ > a && tail_start_ < b) out.push_back(tail_start_);
  if (tail_kind_ == TailKind::unit_step && step_ratio_ != 1.0) {
    double first = std::floor(std::max(a, tail_start_)) + 1.0;
    for (double n = first; n < b; n += 1.0)
      if (n > a && n > tail_start_) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return nearly(x, y, std::max(std::abs(x), 1.0)); }),
            out.end());
  return out;
}

double Weight::next_breakpoint(double t) const {
  for (const auto& p : pieces_) {
    if (p.lo > t) return p.lo;
    if (p.hi > t && p.hi <= tail_start_) return p.hi;
  }
  if (tail_start_ > t) return tail_start_;
  if (tail_kind_ == TailKind::unit_step && step_ratio_ != 1.0)
    return std::floor(std::nextafter(t, kInf)) + 1.0;
  return kInf;
}

Form Weight::form_on(double lo, double hi) const {
  const double mid = 0.5 * (lo + hi);
  if (mid <= tail_start_ && !pieces_.empty()) {
    for (const auto& p : pieces_)
      if (mid > p.lo - 1e-15 && mid <= p.hi + 1e-15) return p.form;
    return pieces_.back().form;
  }
  if (tail_kind_ == TailKind::analytic) return tail_form_;
  long long k = static_cast<long long>(std::ceil(mid - tail_start_)) - 1;
  if (k < 0) k = 0;
  return Form::constant(step_first_ * std::pow(step_ratio_, static_cast<double>(k)));
}

bool Weight::tail_diverges() const {
  if (tail_kind_ == TailKind::unit_step) return step_ratio_ >= 1.0;
  switch (tail_form_.kind) {
    case Form::Kind::constant: return tail_form_.coef > 0.0;
    case Form::Kind::power: return tail_form_.expo >= -1.0;
    case Form::Kind::rpower: return false;  // not a valid unbounded tail anyway
    case Form::Kind::exponential: return tail_form_.expo >= 0.0;
  }
  return false;
}

void Weight::validate() const {
  auto check = [](double v, double t) {
    if (!(v > 0.0)) {
      std::ostringstream os;
      os << "weight not strictly positive at t=" << t;
      throw ConstructionError(os.str());
    }
  };
  for (const auto& p : pieces_) {
    if (!(p.hi > p.lo)) throw ConstructionError("empty weight piece");
    check(p.form.value(std::nextafter(p.lo, p.hi)), p.lo);
    check(p.form.value(0.5 * (p.lo + p.hi)), 0.5 * (p.lo + p.hi));
    check(p.form.value(p.hi), p.hi);
    if (p.form.kind == Form::Kind::power && p.form.expo <= -1.0 && p.lo <= p.form.origin)
      throw ConstructionError("piece is not locally integrable (power exponent <= -1 at its origin)");
    if (p.form.kind == Form::Kind::rpower && p.form.origin <= p.hi + 1e-12 && p.form.expo < 0.0)
      throw ConstructionError("rpower piece singular inside its interval");
  }
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (!nearly(pieces_[i].lo, pieces_[i - 1].hi, std::max(1.0, pieces_[i].lo)))
      throw ConstructionError("weight pieces must be contiguous");
  if (!pieces_.empty() && !nearly(pieces_.back().hi, tail_start_, std::max(1.0, tail_start_)))
    throw ConstructionError("tail must start where pieces end");
  if (tail_kind_ == TailKind::analytic) {
    check(tail_form_.value(tail_start_ + 0.5), tail_start_ + 0.5);
    check(tail_form_.value(tail_start_ + 7.25), tail_start_ + 7.25);
    if (tail_form_.kind == Form::Kind::power && tail_form_.expo <= -1.0 &&
        tail_start_ <= tail_form_.origin)
      throw ConstructionError("tail is not locally integrable at its origin");
    if (tail_form_.kind == Form::Kind::rpower)
      throw ConstructionError("rpower cannot describe an unbounded tail");
  } else {
    if (!(step_first_ > 0.0) || !(step_ratio_ > 0.0))
      throw ConstructionError("step tail values must be positive");
  }
  // probe grid
  const double hi = std::min(tail_start_ + 10.0, 50.0) + 1.0;
  for (double t = 0.0; t < hi; t += 0.37) check(value(t), t);
}

Weight Weight::constant(double c) {
  Weight w;
  w.tail_form_ = Form::constant(c);
  std::ostringstream os;
  os << "constant " << c;
  w.set_description(os.str());
  w.validate();
  return w;
}

Weight Weight::power(double alpha, double coef) {
  if (alpha <= -1.0) throw ConstructionError("t^alpha with alpha <= -1 is not locally integrable");
  Weight w;
  w.tail_form_ = Form::power(coef, 0.0, alpha);
  std::ostringstream os;
  os << coef << "*t^" << alpha;
  w.set_description(os.str());
  w.validate();
  return w;
}

Weight Weight::shifted_power(double alpha, double coef) {
  Weight w;
  w.tail_form_ = Form::power(coef, -1.0, alpha);
  std::ostringstream os;
  os << coef << "*(1+t)^" << alpha;
  w.set_description(os.str());
  w.validate();
  return w;
}

Weight Weight::exponential(double base, double rate, double coef) {
  if (!(base > 0.0)) throw ConstructionError("exponential base must be positive");
  Weight w;
  w.tail_form_ = Form::exponential(coef, rate * std::log(base));
  std::ostringstream os;
  os << coef << "*" << base << "^(" << rate << " t)";
  w.set_description(os.str());
  w.validate();
  return w;
}

Weight Weight::truncated_reciprocal() {
  Weight w;
  w.pieces_.push_back({0.0, 1.0, Form::constant(1.0)});
  w.tail_start_ = 1.0;
  w.tail_form_ = Form::power(1.0, 0.0, -1.0);
  w.set_description("min{1, t^-1}");
  w.validate();
  return w;
}

Weight Weight::step(std::vector<double> values, StepTailRule tail) {
  if (values.empty()) throw ConstructionError("step weight needs at least one value");
  Weight w;
  for (std::size_t n = 0; n < values.size(); ++n)
    w.pieces_.push_back({static_cast<double>(n), static_cast<double>(n + 1), Form::constant(values[n])});
  w.tail_start_ = static_cast<double>(values.size());
  if (tail.kind == StepTailRule::Kind::constant) {
    w.tail_form_ = Form::constant(values.back());
  } else {
    w.tail_kind_ = TailKind::unit_step;
    w.step_first_ = values.back() * tail.ratio;
    w.step_ratio_ = tail.ratio;
  }
  std::ostringstream os;
  os << "step [";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  os << "]";
  if (tail.kind == StepTailRule::Kind::geometric) os << " geometric x" << tail.ratio;
  w.set_description(os.str());
  w.validate();
  return w;
}

Weight Weight::tabulated(std::vector<std::pair<double, double>> knots, Interp interp,
                         StepTailRule tail) {
  if (knots.size() < 2) throw ConstructionError("tabulated weight needs at least two knots");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i].first > knots[i - 1].first))
      throw ConstructionError("tabulated knots must be strictly increasing in t");
  Weight w;
  if (knots.front().first > 0.0)
    w.pieces_.push_back({0.0, knots.front().first, Form::constant(knots.front().second)});
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double t0 = knots[i].first, t1 = knots[i + 1].first;
    const double v0 = knots[i].second, v1 = knots[i + 1].second;
    Form f = Form::constant(v0);
    if (interp == Interp::piecewise_linear) {
      const double slope = (v1 - v0) / (t1 - t0);
      if (slope > 0.0)
        f = Form::power(slope, t0 - v0 / slope, 1.0);
      else if (slope < 0.0)
        f = Form::rpower(-slope, t0 + v0 / (-slope), 1.0);
      else
        f = Form::constant(v0);
    }
    w.pieces_.push_back({t0, t1, f});
  }
  const double t_last = knots.back().first;
  const double v_last = knots.back().second;
  w.tail_start_ = t_last;
  if (tail.kind == StepTailRule::Kind::constant) {
    w.tail_form_ = Form::constant(v_last);
  } else {
    const double start = std::ceil(t_last);
    if (start > t_last) {
      w.pieces_.push_back({t_last, start, Form::constant(v_last)});
      w.tail_start_ = start;
    }
    w.tail_kind_ = TailKind::unit_step;
    w.step_first_ = v_last * tail.ratio;
    w.step_ratio_ = tail.ratio;
  }
  std::ostringstream os;
  os << "tabulated(" << knots.size() << " knots, "
     << (interp == Interp::piecewise_linear ? "linear" : "constant") << ")";
  w.set_description(os.str());
  w.validate();
  return w;
}

Weight Weight::piecewise(std::vector<Piece> pieces, Form tail_form) {
  if (pieces.empty()) throw ConstructionError("piecewise weight needs explicit pieces");
  Weight w;
  w.pieces_ = std::move(pieces);
  w.tail_start_ = w.pieces_.back().hi;
  w.tail_form_ = tail_form;
  std::ostringstream os;
  os << "piecewise(" << w.pieces_.size() << " pieces; tail " << tail_form.describe() << ")";
  w.set_description(os.str());
  w.validate();
  return w;
}

}  // namespace aptree
