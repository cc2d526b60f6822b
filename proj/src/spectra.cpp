#include "qosc/spectra.hpp"

#include <cmath>
#include <string>

namespace qosc {

bool branching_rule_holds(const LevelQuantumNumbers& qn) {
  return qn.n >= 0 && qn.l >= 0 && qn.l <= qn.n && (qn.n - qn.l) % 2 == 0;
}

void require_valid(const LevelQuantumNumbers& qn) {
  if (!branching_rule_holds(qn))
    throw InvalidQuantumNumbers(
        "invalid quantum numbers (n,l) = (" + std::to_string(qn.n) + "," +
        std::to_string(qn.l) + "); need l = n, n-2, ..., 1 or 0");
}

int level_capacity(int l) { return 2 * (2 * l + 1); }

double qho_energy(const LevelQuantumNumbers& qn, const DeformationParameter& d) {
  require_valid(qn);
  if (d.regime != Regime::RealExponential)
    throw std::invalid_argument(
        "qho_energy: defined for the real-exponential regime only");
  const double tau = d.tau;
  if (tau == 0.0) return static_cast<double>(qn.n);

  // q(q - q^{-1})/[2] = e^tau tanh(tau) for q = e^tau
  const double casimir = q_number(qn.l, d) * q_number(qn.l + 1, d);
  return q_number(qn.n, d) * std::exp(tau * (qn.n + 1)) -
         std::exp(tau) * std::tanh(tau) * casimir;
}

double qho_taylor_energy(const LevelQuantumNumbers& qn, double tau) {
  require_valid(qn);
  if (!std::isfinite(tau))
    throw std::invalid_argument("qho_taylor_energy: tau must be finite");
  const double n = qn.n;
  const double ll = static_cast<double>(qn.l) * (qn.l + 1);
  return n - tau * (ll - n * (n + 1)) -
         tau * tau * (ll - n * (n + 1) * (2 * n + 1) / 3.0);
}

double nilsson_energy(const LevelQuantumNumbers& qn, double mu_prime) {
  require_valid(qn);
  if (!std::isfinite(mu_prime))
    throw std::invalid_argument("nilsson_energy: mu_prime must be finite");
  const double n = qn.n;
  const double ll = static_cast<double>(qn.l) * (qn.l + 1);
  return n - mu_prime * (ll - n * (n + 3) / 2.0);
}

double classical_energy(const LevelQuantumNumbers& qn) {
  require_valid(qn);
  return static_cast<double>(qn.n);
}

double casimir_eigenvalue(int l, const DeformationParameter& d) {
  if (l < 0)
    throw std::invalid_argument("casimir_eigenvalue: l must be non-negative");
  return q_number(l, d) * q_number(l + 1, d);
}

const char* to_string(Model m) {
  switch (m) {
    case Model::QDeformed: return "qdeformed";
    case Model::Taylor: return "taylor";
    case Model::Nilsson: return "nilsson";
    case Model::Classical: return "classical";
  }
  return "?";
}

Model model_from_string(const std::string& name) {
  if (name == "qdeformed") return Model::QDeformed;
  if (name == "taylor") return Model::Taylor;
  if (name == "nilsson") return Model::Nilsson;
  if (name == "classical") return Model::Classical;
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected qdeformed|taylor|nilsson|classical)");
}

EnergyModel EnergyModel::q_deformed(double tau) {
  return {Model::QDeformed, DeformationParameter::real_exponential(tau).tau, 0.0};
}

EnergyModel EnergyModel::taylor(double tau) {
  if (!std::isfinite(tau))
    throw std::invalid_argument("taylor model: tau must be finite");
  return {Model::Taylor, tau, 0.0};
}

EnergyModel EnergyModel::nilsson(double mu_prime) {
  if (!std::isfinite(mu_prime))
    throw std::invalid_argument("nilsson model: mu_prime must be finite");
  return {Model::Nilsson, 0.0, mu_prime};
}

EnergyModel EnergyModel::classical() { return {Model::Classical, 0.0, 0.0}; }

double EnergyModel::energy(const LevelQuantumNumbers& qn) const {
  switch (kind) {
    case Model::QDeformed:
      return qho_energy(qn, DeformationParameter::real_exponential(tau));
    case Model::Taylor:
      return qho_taylor_energy(qn, tau);
    case Model::Nilsson:
      return nilsson_energy(qn, mu_prime);
    case Model::Classical:
      return classical_energy(qn);
  }
  throw std::logic_error("EnergyModel: unreachable model kind");
}

std::vector<Level> enumerate_levels(int n_max, const EnergyModel& model) {
  if (n_max < 0)
    throw std::invalid_argument("enumerate_levels: n_max must be >= 0");
  std::vector<Level> out;
  out.reserve(static_cast<std::size_t>(n_max + 2) * (n_max + 2) / 4);
  for (int n = 0; n <= n_max; ++n) {
    for (int l = n; l >= 0; l -= 2) {
      const LevelQuantumNumbers qn{n, l};
      const double energy = model.energy(qn);
      if (!std::isfinite(energy))
        throw std::domain_error("level energy overflows at n = " +
                                std::to_string(n) + " (tau too large)");
      out.push_back(Level{qn, energy, level_capacity(l)});
    }
  }
  return out;
}

}  // namespace qosc
