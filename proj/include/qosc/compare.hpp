#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qosc/datasets.hpp"
#include "qosc/spectra.hpp"

namespace qosc {

// Prediction scored against one observed set, both restricted to [2, cutoff].
struct ComparisonReport {
  std::vector<std::int64_t> matched;
  std::vector<std::int64_t> missed;    // observed but not predicted
  std::vector<std::int64_t> spurious;  // predicted but not observed
  std::int64_t cutoff = 0;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

ComparisonReport compare_sets(std::span<const std::int64_t> predicted,
                              const MagicDataset& dataset, std::int64_t cutoff);

// Family-level view: observed is the union of ObservedMain/ObservedSecondary
// rows of the family, spurious predictions are checked against NotObserved
// rows where the family has them. Experiments report magics, not exhaustive
// non-magics, so when not_observed_known is false the spurious list is
// judged against incomplete data.
struct FamilyComparison {
  std::string family;
  std::string species;
  ComparisonReport report;
  std::vector<std::int64_t> contradicted;  // spurious hits on NotObserved numbers
  bool not_observed_known = false;

  friend bool operator==(const FamilyComparison&, const FamilyComparison&) = default;
};

std::vector<FamilyComparison> compare_families(
    std::span<const std::int64_t> predicted, std::span<const MagicDataset> sets,
    std::int64_t cutoff, const std::string& family_filter = {});

struct SweepPoint {
  double tau = 0.0;  // interpreted as mu' when the swept model is Nilsson
  double delta = 0.0;
  std::vector<std::int64_t> magic_numbers;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepResult {
  Model model = Model::QDeformed;
  std::int64_t cutoff = 0;
  std::vector<SweepPoint> grid;  // tau-major order, exact duplicates dropped

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// One shell scheme per (tau, delta) grid point. Each point depends only on
// its own parameters.
SweepResult sweep(std::span<const double> tau_values,
                  std::span<const double> delta_values, Model kind,
                  std::int64_t cutoff);

}  // namespace qosc
