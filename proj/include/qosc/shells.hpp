#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qosc/spectra.hpp"

namespace qosc {

class InvalidThreshold : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Energy-sorted level scheme with shells separated by gaps >= delta.
//
// A cumulative electron total followed by a gap >= delta is a magic number,
// provided it does not exceed the validity cutoff max_electrons.
struct ShellScheme {
  EnergyModel model;
  double delta = 0.0;
  std::int64_t max_electrons = 0;
  int n_max = 0;  // enumeration depth actually used

  std::vector<Level> levels;             // sorted by (energy, n, l)
  std::vector<std::int64_t> cumulative;  // running totals, parallel to levels
  std::vector<double> gaps;              // gaps[i] = E[i+1]-E[i]; one fewer than levels
  std::vector<int> shell_index;          // parallel to levels; a gap >= delta starts a new shell
  std::vector<std::int64_t> magic_numbers;

  friend bool operator==(const ShellScheme&, const ShellScheme&) = default;
};

// Smallest n_max such that (a) the levels with n <= n_max hold at least
// target_electrons and (b) every level of the (n_max+1) shell lies strictly
// above the level at which the target is reached, so reordering cannot push
// an excluded level below the cutoff. Throws std::runtime_error if no depth
// up to n = 512 satisfies both (spectra with an accumulation point, tau < 0).
int required_nmax(std::int64_t target_electrons, const EnergyModel& model);

ShellScheme build_scheme(const EnergyModel& model, double delta,
                         std::int64_t max_electrons);

// Same, with the enumeration depth forced instead of derived.
ShellScheme build_scheme_at_depth(const EnergyModel& model, int n_max,
                                  double delta, std::int64_t max_electrons);

// (cumulative total, following gap) in energy order, one entry per level
// except the last. Exposes near-threshold "secondary" closures that the
// magic list drops.
std::vector<std::pair<std::int64_t, double>> gap_table(const ShellScheme& scheme);

}  // namespace qosc
