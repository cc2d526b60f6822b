#include "qosc/compare.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qosc/shells.hpp"

namespace qosc {

namespace {

// sorted, deduplicated, restricted to [2, cutoff]
std::vector<std::int64_t> windowed(std::span<const std::int64_t> values,
                                   std::int64_t cutoff) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (std::int64_t v : values)
    if (v >= 2 && v <= cutoff) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ComparisonReport partition(const std::vector<std::int64_t>& predicted,
                           const std::vector<std::int64_t>& observed,
                           std::int64_t cutoff) {
  ComparisonReport r;
  r.cutoff = cutoff;
  std::set_intersection(predicted.begin(), predicted.end(), observed.begin(),
                        observed.end(), std::back_inserter(r.matched));
  std::set_difference(observed.begin(), observed.end(), predicted.begin(),
                      predicted.end(), std::back_inserter(r.missed));
  std::set_difference(predicted.begin(), predicted.end(), observed.begin(),
                      observed.end(), std::back_inserter(r.spurious));
  return r;
}

}  // namespace

ComparisonReport compare_sets(std::span<const std::int64_t> predicted,
                              const MagicDataset& dataset,
                              std::int64_t cutoff) {
  if (cutoff < 2) throw std::invalid_argument("compare_sets: cutoff must be >= 2");
  return partition(windowed(predicted, cutoff), windowed(dataset.numbers, cutoff),
                   cutoff);
}

std::vector<FamilyComparison> compare_families(
    std::span<const std::int64_t> predicted, std::span<const MagicDataset> sets,
    std::int64_t cutoff, const std::string& family_filter) {
  if (cutoff < 2)
    throw std::invalid_argument("compare_families: cutoff must be >= 2");

  struct Group {
    std::set<std::string> species;
    std::vector<std::int64_t> observed;
    std::vector<std::int64_t> not_observed;
    bool has_not_observed = false;
  };
  std::map<std::string, Group> groups;  // keyed by family, deterministic order
  for (const MagicDataset& ds : sets) {
    if (!family_filter.empty() && ds.family != family_filter) continue;
    Group& g = groups[ds.family];
    g.species.insert(ds.species);
    if (ds.kind == DatasetKind::ObservedMain ||
        ds.kind == DatasetKind::ObservedSecondary)
      g.observed.insert(g.observed.end(), ds.numbers.begin(), ds.numbers.end());
    if (ds.kind == DatasetKind::NotObserved) {
      g.has_not_observed = true;
      g.not_observed.insert(g.not_observed.end(), ds.numbers.begin(),
                            ds.numbers.end());
    }
  }

  const auto pred = windowed(predicted, cutoff);
  std::vector<FamilyComparison> out;
  out.reserve(groups.size());
  for (auto& [family, g] : groups) {
    FamilyComparison fc;
    fc.family = family;
    for (const std::string& sp : g.species)
      fc.species += (fc.species.empty() ? "" : "+") + sp;
    fc.report = partition(pred, windowed(g.observed, cutoff), cutoff);
    fc.not_observed_known = g.has_not_observed;
    const auto rejected = windowed(g.not_observed, cutoff);
    std::set_intersection(fc.report.spurious.begin(), fc.report.spurious.end(),
                          rejected.begin(), rejected.end(),
                          std::back_inserter(fc.contradicted));
    out.push_back(std::move(fc));
  }
  return out;
}

SweepResult sweep(std::span<const double> tau_values,
                  std::span<const double> delta_values, Model kind,
                  std::int64_t cutoff) {
  SweepResult result;
  result.model = kind;
  result.cutoff = cutoff;

  std::vector<std::pair<double, double>> seen;
  for (double tau : tau_values) {
    for (double delta : delta_values) {
      const auto point = std::make_pair(tau, delta);
      if (std::find(seen.begin(), seen.end(), point) != seen.end()) continue;
      seen.push_back(point);

      EnergyModel model;
      switch (kind) {
        case Model::QDeformed: model = EnergyModel::q_deformed(tau); break;
        case Model::Taylor: model = EnergyModel::taylor(tau); break;
        case Model::Nilsson: model = EnergyModel::nilsson(tau); break;
        case Model::Classical: model = EnergyModel::classical(); break;
      }
      SweepPoint sp;
      sp.tau = tau;
      sp.delta = delta;
      sp.magic_numbers = build_scheme(model, delta, cutoff).magic_numbers;
      result.grid.push_back(std::move(sp));
    }
  }
  return result;
}

}  // namespace qosc
