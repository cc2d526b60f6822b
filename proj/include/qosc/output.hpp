#pragma once

#include <string>
#include <vector>

#include "qosc/compare.hpp"
#include "qosc/shells.hpp"

namespace qosc {

enum class OutputFormat { Table, Csv, Json };

OutputFormat output_format_from_string(const std::string& name);

// A rendered result. Numeric fields are printed to 6 decimal places in
// every format; rendering the same data twice yields identical bytes.
struct OutputRecord {
  OutputFormat format = OutputFormat::Table;
  std::string payload;
};

OutputRecord format_spectrum(const std::vector<Level>& sorted_levels,
                             const EnergyModel& model, int n_max,
                             OutputFormat format);
OutputRecord format_scheme(const ShellScheme& scheme, OutputFormat format);
OutputRecord format_comparisons(const std::vector<FamilyComparison>& families,
                                const EnergyModel& model, double delta,
                                const std::string& source, OutputFormat format);
OutputRecord format_sweep(const SweepResult& result, OutputFormat format);
OutputRecord format_plotdata(const ShellScheme& scheme, OutputFormat format);

}  // namespace qosc
