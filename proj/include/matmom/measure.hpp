#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "matmom/matrix.hpp"

namespace matmom {

/// Finitely atomic matrix probability measure. Locations are points of
/// [0,1] or angles in (-pi, pi], depending on which moment space consumes
/// the measure. Weights are PSD and must sum to the identity.
struct DiscreteMatrixMeasure {
  int p = 0;
  struct Atom {
    double location;
    PsdMatrix weight;
  };
  std::vector<Atom> atoms;

  Mat total_mass() const;
  bool normalized(double tol = 1e-12) const;
};

/// Gridded absolutely continuous part of a matrix measure, given as PSD
/// density values against a reference measure carried by the quadrature
/// weights (arcsine nu_1 on [0,1], dtheta/2pi on the circle). The weights
/// sum to the reference's total mass, so sum_i w_i * values[i] is the mass
/// of the a.c. part.
struct DensityGridMeasure {
  int p = 0;
  std::vector<double> nodes;
  std::vector<PsdMatrix> values;
  std::vector<double> quadrature_weights;
  std::optional<DiscreteMatrixMeasure> singular_mass;

  Mat total_mass() const;
  bool normalized(double tol = 1e-4) const;
  /// Rescales the density so the total mass is exactly the identity.
  DensityGridMeasure normalized_copy() const;
};

/// Gauss-Chebyshev grid on [0,1]: nodes x_i = (1+cos theta_i)/2 with the
/// arcsine reference, each node carrying weight 1/m.
std::pair<std::vector<double>, std::vector<double>> arcsine_grid(int m);

/// Uniform angular grid theta_i in (-pi, pi], weights 1/m for dtheta/2pi.
std::pair<std::vector<double>, std::vector<double>> circle_grid(int m);

/// Grid measure on [0,1] from a scalar density w(x) relative to Lebesgue,
/// embedded as w(x)/arcsine-density times the identity.
DensityGridMeasure interval_density_measure(int p, int m,
                                            const std::function<double(double)>& lebesgue_density);

/// Grid measure on the circle from a matrix density W(theta) w.r.t. dtheta/2pi.
DensityGridMeasure circle_density_measure(int p, int m,
                                          const std::function<Mat(double)>& density);

}  // namespace matmom
