#include "qosc/qmath.hpp"

#include <cmath>
#include <string>

namespace qosc {

namespace {

void require_finite_tau(double tau) {
  if (!std::isfinite(tau))
    throw std::invalid_argument("deformation parameter tau must be finite");
}

}  // namespace

DeformationParameter DeformationParameter::real_exponential(double tau) {
  require_finite_tau(tau);
  return {tau, Regime::RealExponential};
}

DeformationParameter DeformationParameter::phase(double tau) {
  require_finite_tau(tau);
  if (std::sin(tau) == 0.0)
    throw SingularDeformation("phase regime needs sin(tau) != 0, got tau = " +
                              std::to_string(tau));
  return {tau, Regime::Phase};
}

double q_number(double x, const DeformationParameter& d) {
  if (!std::isfinite(x))
    throw std::invalid_argument("q_number: x must be finite");
  require_finite_tau(d.tau);

  if (d.regime == Regime::RealExponential) {
    if (d.tau == 0.0) return x;  // analytic limit, same code path as q != 1
    return std::sinh(d.tau * x) / std::sinh(d.tau);
  }

  const double denom = std::sin(d.tau);
  if (denom == 0.0)
    throw SingularDeformation("q_number: sin(tau) = 0 in phase regime");
  return std::sin(d.tau * x) / denom;
}

}  // namespace qosc
