#include "qosc/shells.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qosc {

namespace {

// Total electron capacity of all shells through n_max: (N+1)(N+2)(N+3)/3.
std::int64_t capacity_through(int n_max) {
  const std::int64_t N = n_max;
  return (N + 1) * (N + 2) * (N + 3) / 3;
}

// (energy, n, l) lexicographic; the tie-break gives deterministic output
// order and never affects magic numbers (a tie is a zero gap).
void sort_levels(std::vector<Level>& levels) {
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.qn.n != b.qn.n) return a.qn.n < b.qn.n;
    return a.qn.l < b.qn.l;
  });
}

double lowest_energy_in_shell(int n, const EnergyModel& model) {
  double lo = std::numeric_limits<double>::infinity();
  for (int l = n; l >= 0; l -= 2)
    lo = std::min(lo, model.energy(LevelQuantumNumbers{n, l}));
  return lo;
}

}  // namespace

int required_nmax(std::int64_t target_electrons, const EnergyModel& model) {
  if (target_electrons < 2)
    throw std::invalid_argument("required_nmax: target_electrons must be >= 2");

  constexpr int kDepthLimit = 512;
  for (int n_max = 0; n_max <= kDepthLimit; ++n_max) {
    if (capacity_through(n_max) < target_electrons) continue;

    auto levels = enumerate_levels(n_max, model);
    sort_levels(levels);
    double target_energy = 0.0;
    std::int64_t cum = 0;
    for (const Level& level : levels) {
      cum += level.capacity;
      if (cum >= target_electrons) {
        target_energy = level.energy;
        break;
      }
    }
    if (lowest_energy_in_shell(n_max + 1, model) > target_energy) return n_max;
  }
  throw std::runtime_error(
      "required_nmax: no self-consistent depth up to n = " +
      std::to_string(kDepthLimit) +
      " (spectrum has an accumulation point below the target?)");
}

ShellScheme build_scheme(const EnergyModel& model, double delta,
                         std::int64_t max_electrons) {
  // Two shells past the self-consistent depth, so gaps displayed near the
  // cutoff are not truncation artifacts. Magic numbers below the cutoff are
  // unaffected: the extra shells lie strictly above the target level.
  const int n_max = required_nmax(max_electrons, model) + 2;
  return build_scheme_at_depth(model, n_max, delta, max_electrons);
}

ShellScheme build_scheme_at_depth(const EnergyModel& model, int n_max,
                                  double delta, std::int64_t max_electrons) {
  if (!(delta > 0.0))
    throw InvalidThreshold("gap threshold delta must be positive");
  if (max_electrons < 2)
    throw std::invalid_argument("max_electrons must be >= 2");

  ShellScheme s;
  s.model = model;
  s.delta = delta;
  s.max_electrons = max_electrons;
  s.n_max = n_max;
  s.levels = enumerate_levels(n_max, model);
  sort_levels(s.levels);

  s.cumulative.reserve(s.levels.size());
  std::int64_t cum = 0;
  for (const Level& level : s.levels) {
    cum += level.capacity;
    s.cumulative.push_back(cum);
  }

  if (!s.levels.empty()) s.gaps.reserve(s.levels.size() - 1);
  for (std::size_t i = 0; i + 1 < s.levels.size(); ++i)
    s.gaps.push_back(s.levels[i + 1].energy - s.levels[i].energy);

  s.shell_index.reserve(s.levels.size());
  int shell = 0;
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    s.shell_index.push_back(shell);
    if (i < s.gaps.size() && s.gaps[i] >= delta) ++shell;
  }

  for (std::size_t i = 0; i < s.gaps.size(); ++i) {
    if (s.gaps[i] >= delta && s.cumulative[i] <= max_electrons)
      s.magic_numbers.push_back(s.cumulative[i]);
  }
  return s;
}

std::vector<std::pair<std::int64_t, double>> gap_table(const ShellScheme& scheme) {
  std::vector<std::pair<std::int64_t, double>> out;
  out.reserve(scheme.gaps.size());
  for (std::size_t i = 0; i < scheme.gaps.size(); ++i)
    out.emplace_back(scheme.cumulative[i], scheme.gaps[i]);
  return out;
}

}  // namespace qosc
