#include "knnballs/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace knnballs::geometry {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 12-point Gauss-Legendre rule on [-1,1]; nodes found by Newton iteration on
// the Legendre recurrence at static-init time.
struct GaussLegendre {
  static constexpr int order = 12;
  std::array<double, order> node{};
  std::array<double, order> weight{};

  GaussLegendre() {
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double deriv = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        deriv = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / deriv;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      node[i] = -x;
      node[n - 1 - i] = x;
      const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
      weight[i] = w;
      weight[n - 1 - i] = w;
    }
  }
};

const GaussLegendre& gl_rule() {
  static const GaussLegendre rule;
  return rule;
}

template <class F>
double gl_panel(const F& f, double a, double b) {
  const auto& rule = gl_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < GaussLegendre::order; ++i) {
    sum += rule.weight[i] * f(mid + half * rule.node[i]);
  }
  return sum * half;
}

template <class F>
double adapt_panel(const F& f, double a, double b, double whole, double abs_tol,
                   double rel_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl_panel(f, a, mid);
  const double right = gl_panel(f, mid, b);
  const double refined = left + right;
  if (depth >= 48 ||
      std::abs(refined - whole) <= std::max(abs_tol, rel_tol * std::abs(refined))) {
    return refined;
  }
  return adapt_panel(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth + 1) +
         adapt_panel(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth + 1);
}

template <class F>
double integrate_adaptive(const F& f, double a, double b, QuadTol tol) {
  if (!(b > a)) return 0.0;
  return adapt_panel(f, a, b, gl_panel(f, a, b), tol.abs, tol.rel, 0);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-14;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 400; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < eps) break;
  }
  return h;
}

// Recursive slicing of ball ∩ box. Only the effective radius changes while
// recursing, so center/lo/hi are shared.
class BallBoxSlicer {
 public:
  BallBoxSlicer(const Eigen::VectorXd& center, const Eigen::VectorXd& lo,
                const Eigen::VectorXd& hi, QuadTol tol)
      : center_(center), lo_(lo), hi_(hi), tol_(tol) {}

  double volume(int dm, double r) const {
    if (r <= 0.0) return 0.0;
    const double r2 = r * r;
    double near2 = 0.0;
    double far2 = 0.0;
    bool ball_inside = true;
    for (int a = 0; a < dm; ++a) {
      const double c = center_[a];
      if (c - lo_[a] < r || hi_[a] - c < r) ball_inside = false;
      const double out = std::max({0.0, lo_[a] - c, c - hi_[a]});
      near2 += out * out;
      const double far = std::max(std::abs(c - lo_[a]), std::abs(hi_[a] - c));
      far2 += far * far;
    }
    if (near2 >= r2) return 0.0;  // ball misses the box
    if (ball_inside) return unit_ball_volume(dm) * std::pow(r, dm);
    if (far2 <= r2) {  // box entirely inside the ball
      double box = 1.0;
      for (int a = 0; a < dm; ++a) box *= hi_[a] - lo_[a];
      return box;
    }
    if (dm == 1) {
      return std::min(hi_[0], center_[0] + r) - std::max(lo_[0], center_[0] - r);
    }
    const int axis = dm - 1;
    const double z0 = std::max(lo_[axis], center_[axis] - r);
    const double z1 = std::min(hi_[axis], center_[axis] + r);
    const auto slice = [&](double z) {
      const double dz = z - center_[axis];
      const double s2 = r2 - dz * dz;
      return volume(dm - 1, s2 > 0.0 ? std::sqrt(s2) : 0.0);
    };
    return integrate_adaptive(slice, z0, z1, tol_);
  }

 private:
  const Eigen::VectorXd& center_;
  const Eigen::VectorXd& lo_;
  const Eigen::VectorXd& hi_;
  QuadTol tol_;
};

}  // namespace

void BallUnionQuery::validate() const {
  if (dim < 1) throw std::invalid_argument("BallUnionQuery: dim must be >= 1");
  if (!(radius > 0.0)) throw std::invalid_argument("BallUnionQuery: radius must be > 0");
  if (center_distance < 0.0)
    throw std::invalid_argument("BallUnionQuery: center_distance must be >= 0");
}

void BoxVolumeQuery::validate() const {
  if (dim < 1) throw std::invalid_argument("BoxVolumeQuery: dim must be >= 1");
  if (!(radius > 0.0)) throw std::invalid_argument("BoxVolumeQuery: radius must be > 0");
  if (center.size() != dim)
    throw std::invalid_argument("BoxVolumeQuery: center size does not match dim");
}

double unit_ball_volume(int dim) {
  if (dim < 1) throw std::invalid_argument("unit_ball_volume: dim must be >= 1");
  static const std::vector<double> cache = [] {
    std::vector<double> v(33);
    for (int d = 1; d <= 32; ++d) {
      v[d] = std::exp(0.5 * d * std::log(kPi) - std::lgamma(1.0 + 0.5 * d));
    }
    return v;
  }();
  if (dim <= 32) return cache[dim];
  return std::exp(0.5 * dim * std::log(kPi) - std::lgamma(1.0 + 0.5 * dim));
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("regularized_incomplete_beta: a, b must be > 0");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("regularized_incomplete_beta: x must be in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double spherical_cap_volume(int dim, double offset) {
  if (dim < 1) throw std::invalid_argument("spherical_cap_volume: dim must be >= 1");
  if (std::abs(offset) > 1.0)
    throw std::invalid_argument("spherical_cap_volume: offset must be in [-1,1]");
  const double kappa = unit_ball_volume(dim);
  if (offset < 0.0) return kappa - spherical_cap_volume(dim, -offset);
  const double x = std::max(0.0, 1.0 - offset * offset);
  return 0.5 * kappa * regularized_incomplete_beta(0.5 * (dim + 1), 0.5, x);
}

double union_two_balls_exact(const BallUnionQuery& q) {
  q.validate();
  const double r = q.radius;
  const double t = q.center_distance;
  if (q.dim == 1) {
    // interval arithmetic: [-r, r] ∪ [t - r, t + r]
    return std::min(4.0 * r, 2.0 * r + t);
  }
  const double kappa = unit_ball_volume(q.dim);
  const double rd = std::pow(r, q.dim);
  if (t >= 2.0 * r) return 2.0 * kappa * rd;
  const double lens = 2.0 * rd * spherical_cap_volume(q.dim, t / (2.0 * r));
  return 2.0 * kappa * rd - lens;
}

double union_two_balls_cone_formula(int dim, double center_distance) {
  if (dim < 2)
    throw std::invalid_argument("union_two_balls_cone_formula: dim must be >= 2");
  if (center_distance < 0.0 || center_distance > 2.0)
    throw std::invalid_argument(
        "union_two_balls_cone_formula: center_distance must be in [0,2]");
  const double t = center_distance;
  const double kappa_d = unit_ball_volume(dim);
  const double kappa_dm1 = dim >= 2 ? unit_ball_volume(dim - 1) : 0.0;
  const double half = t / 2.0;
  const double sine = std::sqrt(std::max(0.0, 1.0 - half * half));
  return 2.0 * (kappa_d * (1.0 - std::acos(half) / kPi) +
                t * kappa_dm1 / (2.0 * dim) * std::pow(sine, dim - 1));
}

double ball_box_volume(const Eigen::VectorXd& center, double radius,
                       const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                       QuadTol tol) {
  const int dim = static_cast<int>(center.size());
  if (dim < 1) throw std::invalid_argument("ball_box_volume: dim must be >= 1");
  if (lo.size() != dim || hi.size() != dim)
    throw std::invalid_argument("ball_box_volume: box size does not match center");
  if (radius < 0.0) throw std::invalid_argument("ball_box_volume: radius must be >= 0");
  for (int a = 0; a < dim; ++a) {
    if (!(lo[a] <= hi[a]))
      throw std::invalid_argument("ball_box_volume: box must satisfy lo <= hi");
  }
  return BallBoxSlicer(center, lo, hi, tol).volume(dim, radius);
}

double ball_box_volume(const BoxVolumeQuery& q, QuadTol tol) {
  q.validate();
  const Eigen::VectorXd lo = Eigen::VectorXd::Zero(q.dim);
  const Eigen::VectorXd hi = Eigen::VectorXd::Ones(q.dim);
  return ball_box_volume(q.center, q.radius, lo, hi, tol);
}

}  // namespace knnballs::geometry
