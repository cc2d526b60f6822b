#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qosc/qmath.hpp"

namespace qosc {

class InvalidQuantumNumbers : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (n, l) with the 3-D oscillator branching rule l = n, n-2, ..., 1 or 0.
struct LevelQuantumNumbers {
  int n = 0;  // vibrational quanta
  int l = 0;  // angular momentum

  friend bool operator==(const LevelQuantumNumbers&,
                         const LevelQuantumNumbers&) = default;
};

bool branching_rule_holds(const LevelQuantumNumbers& qn);
void require_valid(const LevelQuantumNumbers& qn);

// Electron capacity of a level with angular momentum l: 2(2l+1).
int level_capacity(int l);

// A single-particle level. Energies are in units of hbar*omega_0 throughout.
struct Level {
  LevelQuantumNumbers qn;
  double energy = 0.0;
  int capacity = 0;

  friend bool operator==(const Level&, const Level&) = default;
};

// E_q(n,l) = [n] q^{n+1} - q(q-q^{-1})/[2] [l][l+1], real regime only.
// The l(l+1)-like term is subtracted with a positive coefficient for tau > 0,
// flattening the spectrum within a shell as l grows. tau = 0 gives E = n.
double qho_energy(const LevelQuantumNumbers& qn, const DeformationParameter& d);

// Expansion of qho_energy through order tau^2:
//   n - tau(l(l+1) - n(n+1)) - tau^2(l(l+1) - n(n+1)(2n+1)/3).
double qho_taylor_energy(const LevelQuantumNumbers& qn, double tau);

// Modified-oscillator eigenvalues n - mu'(l(l+1) - n(n+3)/2).
double nilsson_energy(const LevelQuantumNumbers& qn, double mu_prime);

// Undeformed isotropic oscillator: E = n.
double classical_energy(const LevelQuantumNumbers& qn);

// Second-order so_q(3) Casimir eigenvalue [l][l+1].
double casimir_eigenvalue(int l, const DeformationParameter& d);

enum class Model { QDeformed, Taylor, Nilsson, Classical };

const char* to_string(Model m);
Model model_from_string(const std::string& name);

// A model choice plus its parameter: tau drives QDeformed and Taylor,
// mu_prime drives Nilsson, Classical takes none.
struct EnergyModel {
  Model kind = Model::Classical;
  double tau = 0.0;
  double mu_prime = 0.0;

  static EnergyModel q_deformed(double tau);
  static EnergyModel taylor(double tau);
  static EnergyModel nilsson(double mu_prime);
  static EnergyModel classical();

  double energy(const LevelQuantumNumbers& qn) const;

  friend bool operator==(const EnergyModel&, const EnergyModel&) = default;
};

// All levels with 0 <= n <= n_max and l = n, n-2, ..., 1 or 0.
// Ordering is unspecified; sorting is the shells module's job.
std::vector<Level> enumerate_levels(int n_max, const EnergyModel& model);

}  // namespace qosc
