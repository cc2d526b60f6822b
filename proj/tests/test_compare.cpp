#include "doctest.h"

#include <chrono>

#include "qosc/compare.hpp"
#include "qosc/shells.hpp"

using namespace qosc;

namespace {

MagicDataset observed(std::vector<std::int64_t> numbers) {
  return {"alkali", "Na", DatasetKind::ObservedMain, std::move(numbers), "test"};
}

std::vector<std::int64_t> predicted_magic(double tau, double delta,
                                          std::int64_t cutoff) {
  return build_scheme(EnergyModel::q_deformed(tau), delta, cutoff).magic_numbers;
}

}  // namespace

TEST_CASE("identical sets match completely") {
  const std::vector<std::int64_t> p{2, 8, 20, 40};
  const auto r = compare_sets(p, observed({2, 8, 20, 40}), 200);
  CHECK(r.matched == p);
  CHECK(r.missed.empty());
  CHECK(r.spurious.empty());
}

TEST_CASE("classical oscillator vs alkali data: agreement stops at 40") {
  const auto classical =
      build_scheme(EnergyModel::classical(), 0.5, 200).magic_numbers;
  const auto r =
      compare_sets(classical, observed({2, 8, 20, 40, 58, 92, 138}), 200);
  CHECK(r.matched == std::vector<std::int64_t>{2, 8, 20, 40});
  CHECK(r.missed == std::vector<std::int64_t>{58, 92, 138});
  CHECK(r.spurious == std::vector<std::int64_t>{70, 112, 168});
}

TEST_CASE("deformed oscillator vs alkali bundle: no misses, avoids the unobserved") {
  const auto p = predicted_magic(0.038, 0.39, 1500);
  const auto fams = compare_families(p, bundled_datasets(), 200, "alkali");
  REQUIRE(fams.size() == 1);
  const auto& alkali = fams[0];
  CHECK(alkali.report.missed.empty());
  CHECK(alkali.not_observed_known);
  CHECK(alkali.contradicted.empty());  // spurious avoids 68, 70, 106, 112, 156
  CHECK(alkali.report.matched ==
        std::vector<std::int64_t>{2, 8, 20, 40, 58, 92, 138});
}

TEST_CASE("nested cutoffs: the smaller report is the larger one filtered") {
  const auto p = predicted_magic(0.038, 0.39, 1500);
  const auto ds = observed({2, 8, 20, 40, 58, 92, 138});
  const auto small = compare_sets(p, ds, 100);
  const auto large = compare_sets(p, ds, 200);
  const auto filtered = [](std::vector<std::int64_t> v, std::int64_t cut) {
    std::erase_if(v, [cut](std::int64_t x) { return x > cut; });
    return v;
  };
  CHECK(small.matched == filtered(large.matched, 100));
  CHECK(small.missed == filtered(large.missed, 100));
  CHECK(small.spurious == filtered(large.spurious, 100));
}

TEST_CASE("comparison is pure: re-running gives the same report") {
  const auto p = predicted_magic(0.020, 0.20, 1500);
  const auto ds = observed({2, 8, 20, 40});
  CHECK(compare_sets(p, ds, 1500) == compare_sets(p, ds, 1500));
  CHECK_THROWS_AS(compare_sets(p, ds, 1), std::invalid_argument);
}

TEST_CASE("family view flags missing NotObserved data") {
  const auto p = predicted_magic(0.038, 0.26, 1500);
  const auto fams = compare_families(p, bundled_datasets(), 200);
  REQUIRE(fams.size() == 3);  // IIB, alkali, group-III (alphabetical)
  for (const auto& fc : fams) {
    if (fc.family == "IIB") CHECK_FALSE(fc.not_observed_known);
    if (fc.family == "alkali") CHECK(fc.not_observed_known);
    if (fc.family == "group-III") CHECK(fc.not_observed_known);
  }
}

TEST_CASE("sweep: singleton grid reproduces build_scheme") {
  const double tau = 0.038, delta = 0.39;
  const auto r = sweep({&tau, 1}, {&delta, 1}, Model::QDeformed, 1500);
  REQUIRE(r.grid.size() == 1);
  CHECK(r.grid[0].magic_numbers == predicted_magic(tau, delta, 1500));
}

TEST_CASE("sweep: empty tau list gives an empty grid") {
  const double delta = 0.39;
  CHECK(sweep({}, {&delta, 1}, Model::QDeformed, 1500).grid.empty());
}

TEST_CASE("sweep over the published tau values at delta = 0.39") {
  const std::vector<double> taus{0.020, 0.038, 0.050};
  const std::vector<double> deltas{0.39};
  const auto start = std::chrono::steady_clock::now();
  const auto r = sweep(taus, deltas, Model::QDeformed, 1500);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  REQUIRE(r.grid.size() == 3);

  // grid points depend only on their own parameters
  for (const auto& p : r.grid)
    CHECK(p.magic_numbers == predicted_magic(p.tau, p.delta, 1500));

  // small magics are tau-insensitive apart from 34, whose following gap
  // E(3,1)-E(3,3) ~ 10*tau crosses the 0.39 threshold between 0.020 and 0.038
  const auto below_40 = [](const std::vector<std::int64_t>& m) {
    std::vector<std::int64_t> out;
    for (auto x : m)
      if (x <= 40) out.push_back(x);
    return out;
  };
  CHECK(below_40(r.grid[0].magic_numbers) ==
        std::vector<std::int64_t>{2, 8, 20, 40});
  CHECK(below_40(r.grid[1].magic_numbers) ==
        std::vector<std::int64_t>{2, 8, 20, 34, 40});
  CHECK(below_40(r.grid[2].magic_numbers) ==
        std::vector<std::int64_t>{2, 8, 20, 34, 40});

  CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 10);
}

TEST_CASE("sweep drops duplicate grid points and keeps tau-major order") {
  const std::vector<double> taus{0.038, 0.038, 0.020};
  const std::vector<double> deltas{0.39, 0.39};
  const auto r = sweep(taus, deltas, Model::QDeformed, 1500);
  REQUIRE(r.grid.size() == 2);
  CHECK(r.grid[0].tau == 0.038);
  CHECK(r.grid[1].tau == 0.020);
}

TEST_CASE("sweep propagates scheme errors") {
  const double tau = 0.038;
  const double bad_delta = -1.0;
  CHECK_THROWS_AS(sweep({&tau, 1}, {&bad_delta, 1}, Model::QDeformed, 1500),
                  InvalidThreshold);
}
