#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "knnballs/geometry.hpp"
#include "knnballs/types.hpp"

namespace knnballs::measures {

enum class DensityKind { Uniform, PiecewiseConstant };

// A probability density on [0,1]^dim that is bounded and bounded away from
// zero. Piecewise-constant densities live on a regular grid of
// cells_per_axis^dim cells; cell values are densities (they integrate to 1).
class DensityModel {
 public:
  static DensityModel uniform(int dim);
  // `weights` holds one nonnegative value per cell in row-major cell order
  // (axis 0 fastest); they are rescaled to integrate to 1.
  static DensityModel piecewise(int dim, int cells_per_axis, std::vector<double> weights);

  // Schema: {"dim": int, "kind": "uniform" | "piecewise", "m": int,
  //          "weights": [numbers]}. Weights are normalized on load; a warning
  // is emitted on stderr if they were off by more than 1e-6.
  static DensityModel from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  int dim() const { return dim_; }
  DensityKind kind() const { return kind_; }
  int cells_per_axis() const { return cells_per_axis_; }
  double f_minus() const { return f_minus_; }
  double f_plus() const { return f_plus_; }
  const std::vector<double>& cell_density() const { return cell_density_; }

  // Probability content mu(B(center, r)).
  double mu_ball(const Eigen::VectorXd& center, double r,
                 geometry::QuadTol tol = {}) const;

  // Smallest radius whose ball content reaches p, |mu - p| <= 1e-10.
  double inverse_radius(const Eigen::VectorXd& center, double p) const;

 private:
  DensityModel() = default;

  int dim_ = 0;
  DensityKind kind_ = DensityKind::Uniform;
  int cells_per_axis_ = 1;
  double f_minus_ = 1.0;
  double f_plus_ = 1.0;
  std::vector<double> cell_density_;  // size m^dim, row-major, axis 0 fastest
  std::vector<double> cell_cdf_;      // cumulative cell probabilities for sampling

  friend PointSampleFactoryTag;
  friend struct Sampler;
};

struct PointSample {
  int dim = 0;
  std::uint64_t seed = 0;
  RowMatrixXd points;       // n x dim, all coordinates in [0,1]
  long redraw_count = 0;    // duplicate points redrawn during sampling

  Eigen::Index n() const { return points.rows(); }
};

// n i.i.d. draws; bit-identical for identical (density, n, seed). Exact
// duplicate points are redrawn and counted.
PointSample sample_points(const DensityModel& density, long n, std::uint64_t seed);

double mu_ball(const DensityModel& density, const Eigen::VectorXd& center, double r,
               geometry::QuadTol tol = {});
double inverse_radius(const DensityModel& density, const Eigen::VectorXd& center,
                      double p);

}  // namespace knnballs::measures
