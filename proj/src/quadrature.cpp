#include "aptree/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "aptree/errors.hpp"

namespace aptree {

namespace {

// Gauss-Kronrod 7-15 nodes/weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk {
  double kronrod = 0.0;
  double err = 0.0;
};

Gk gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  Gk out;
  out.kronrod = resk * h;
  out.err = std::abs((resk - resg) * h);
  return out;
}

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel,
                   double abs_tol, long long budget) {
  if (b <= a) return 0.0;
  Gk whole = gk15(f, a, b);
  if (std::isnan(whole.kronrod)) throw NonConvergenceError("integrand evaluated to NaN");
  if (std::isinf(whole.kronrod)) return whole.kronrod;
  std::priority_queue<Segment> heap;
  heap.push({a, b, whole.kronrod, whole.err});
  double total = whole.kronrod, total_err = whole.err;
  long long used = 1;
  while (total_err > std::max(abs_tol, rel * std::abs(total))) {
    if (used++ > budget) throw NonConvergenceError("adaptive quadrature budget exhausted");
    Segment s = heap.top();
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    if (m <= s.a || m >= s.b) {  // interval at machine resolution; accept as is
      total_err -= s.err;
      continue;
    }
    Gk l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    if (std::isinf(l.kronrod) || std::isinf(r.kronrod)) return std::numeric_limits<double>::infinity();
    total += l.kronrod + r.kronrod - s.value;
    total_err += l.err + r.err - s.err;
    heap.push({s.a, m, l.kronrod, l.err});
    heap.push({m, s.b, r.kronrod, r.err});
  }
  return total;
}

double graded_gk(const std::function<double(double)>& f, double a, double b, bool singular_at_a,
                 double rel, double abs_tol, long long budget) {
  const double len = b - a;
  if (len <= 0.0) return 0.0;
  double sum = 0.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  double ratio_est = 0.0;
  int stable = 0;
  double hi = 1.0;  // strip fractions of len, halved toward the singular end
  const int max_strips = 400;
  for (int k = 0; k < max_strips; ++k) {
    const double lo = hi * 0.5;
    double sa, sb;
    if (singular_at_a) {
      sa = a + len * lo;
      sb = a + len * hi;
    } else {
      sa = b - len * hi;
      sb = b - len * lo;
    }
    const double c = adaptive_gk(f, sa, sb, rel, abs_tol * 0.25, budget);
    if (std::isinf(c)) throw DivergenceError("strip integral overflowed near a singular endpoint");
    sum += c;
    if (!std::isnan(prev) && prev != 0.0) {
      const double r = c / prev;
      if (std::abs(r - ratio_est) < 0.02) ++stable; else stable = 0;
      ratio_est = r;
      if (stable >= 3 && ratio_est < 0.999) {
        const double tail = c * ratio_est / (1.0 - ratio_est);
        if (tail <= std::max(abs_tol, rel * std::abs(sum + tail))) return sum + tail;
      }
      if (stable >= 6 && ratio_est >= 0.999999) {
        if (ratio_est >= 1.0) throw DivergenceError("integral diverges at an endpoint singularity");
      }
    }
    prev = c;
    if (std::abs(c) <= std::max(abs_tol * 0.5, rel * std::abs(sum)) && k >= 4) return sum;
    hi = lo;
  }
  // extrapolate whatever geometric behaviour we saw
  if (ratio_est >= 1.0) throw DivergenceError("integral diverges at an endpoint singularity");
  if (ratio_est > 0.0 && prev > 0.0) sum += prev * ratio_est / (1.0 - ratio_est);
  return sum;
}

}  // namespace aptree
