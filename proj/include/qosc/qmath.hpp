#pragma once

#include <stdexcept>

namespace qosc {

// The two deformation regimes: q = e^tau (real) and q = e^{i tau} (phase).
// tau is the single model knob; q itself is never stored.
enum class Regime { RealExponential, Phase };

class SingularDeformation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DeformationParameter {
  double tau = 0.0;
  Regime regime = Regime::RealExponential;

  // Factories reject non-finite tau; the phase factory additionally rejects
  // sin(tau) == 0, where the q-number denominator vanishes.
  static DeformationParameter real_exponential(double tau);
  static DeformationParameter phase(double tau);

  friend bool operator==(const DeformationParameter&,
                         const DeformationParameter&) = default;
};

// q-number [x] = (q^x - q^{-x}) / (q - q^{-1}).
//
// Evaluated as sinh(tau*x)/sinh(tau) in the real regime and
// sin(tau*x)/sin(tau) in the phase regime; the ratio of q-powers cancels
// catastrophically for small tau, the sinh/sin forms do not.
// tau = 0 (real regime) returns the classical limit x.
double q_number(double x, const DeformationParameter& d);

}  // namespace qosc
