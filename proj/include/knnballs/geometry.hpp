#pragma once

#include <Eigen/Core>

namespace knnballs::geometry {

// Union of two congruent balls B(0, radius) and B(x, radius) with
// ‖x‖ = center_distance.
struct BallUnionQuery {
  int dim = 0;
  double radius = 0.0;
  double center_distance = 0.0;

  void validate() const;
};

// Ball B(center, radius) against the unit cube [0,1]^dim.
struct BoxVolumeQuery {
  int dim = 0;
  Eigen::VectorXd center;
  double radius = 0.0;

  void validate() const;
};

// Quadrature stopping rule: successive panel refinements must agree to
// max(abs, rel * |value|).
struct QuadTol {
  double abs = 1e-13;
  double rel = 1e-10;
};

// Volume of the d-dimensional unit ball, pi^{d/2} / Gamma(1 + d/2).
double unit_ball_volume(int dim);

// I_x(a, b), evaluated by continued fraction to ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// Volume of {y in B(0,1) : y_1 >= offset}, offset in [-1, 1].
double spherical_cap_volume(int dim, double offset);

// Exact union volume via cap volumes; valid for every dim >= 1.
double union_two_balls_exact(const BallUnionQuery& q);

// Cone/sector decomposition of the union of two unit balls at center
// distance t in [0,2]. Agrees with union_two_balls_exact for dim == 2 and
// deviates for other dimensions; both routes are exposed on purpose.
double union_two_balls_cone_formula(int dim, double center_distance);

// lambda(B(center, radius) ∩ [0,1]^dim) by recursive slicing.
double ball_box_volume(const BoxVolumeQuery& q, QuadTol tol = {});

// Same against an arbitrary axis-aligned box [lo, hi].
double ball_box_volume(const Eigen::VectorXd& center, double radius,
                       const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                       QuadTol tol = {});

}  // namespace knnballs::geometry
