#include "qosc/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qosc {

namespace {

using json = nlohmann::ordered_json;

// fixed 6-decimal rendering shared by every format; -0 normalized
std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double round6(double v) {
  if (v == 0.0) return 0.0;
  return std::round(v * 1e6) / 1e6;
}

std::string join(std::span<const std::int64_t> values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// "model=... tau=..." fragment; only the parameter the model uses
std::string model_params(const EnergyModel& m) {
  std::string out = std::string("model=") + to_string(m.kind);
  if (m.kind == Model::QDeformed || m.kind == Model::Taylor)
    out += " tau=" + fmt6(m.tau);
  if (m.kind == Model::Nilsson) out += " mu_prime=" + fmt6(m.mu_prime);
  return out;
}

void json_model_params(json& j, const EnergyModel& m) {
  j["model"] = to_string(m.kind);
  if (m.kind == Model::QDeformed || m.kind == Model::Taylor)
    j["tau"] = round6(m.tau);
  if (m.kind == Model::Nilsson) j["mu_prime"] = round6(m.mu_prime);
}

bool is_magic_row(const ShellScheme& s, std::size_t i) {
  return i < s.gaps.size() && s.gaps[i] >= s.delta &&
         s.cumulative[i] <= s.max_electrons;
}

OutputRecord record(OutputFormat f, std::string payload) {
  return OutputRecord{f, std::move(payload)};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected table|csv|json)");
}

OutputRecord format_spectrum(const std::vector<Level>& sorted_levels,
                             const EnergyModel& model, int n_max,
                             OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j;
    j["command"] = "spectrum";
    json_model_params(j, model);
    j["nmax"] = n_max;
    j["levels"] = json::array();
    for (const Level& lv : sorted_levels)
      j["levels"].push_back({{"n", lv.qn.n},
                             {"l", lv.qn.l},
                             {"energy", round6(lv.energy)},
                             {"capacity", lv.capacity}});
    return record(format, dump(j));
  }

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "n,l,energy,capacity\n";
    for (const Level& lv : sorted_levels)
      os << lv.qn.n << "," << lv.qn.l << "," << fmt6(lv.energy) << ","
         << lv.capacity << "\n";
  } else {
    os << "# command=spectrum " << model_params(model) << " nmax=" << n_max
       << "\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%4s %4s %14s %9s\n", "n", "l", "energy",
                  "capacity");
    os << buf;
    for (const Level& lv : sorted_levels) {
      std::snprintf(buf, sizeof buf, "%4d %4d %14s %9d\n", lv.qn.n, lv.qn.l,
                    fmt6(lv.energy).c_str(), lv.capacity);
      os << buf;
    }
  }
  return record(format, os.str());
}

OutputRecord format_scheme(const ShellScheme& s, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j;
    j["command"] = "magic";
    json_model_params(j, s.model);
    j["delta"] = round6(s.delta);
    j["max_electrons"] = s.max_electrons;
    j["nmax"] = s.n_max;
    j["magic_numbers"] = s.magic_numbers;
    j["levels"] = json::array();
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const Level& lv = s.levels[i];
      json row = {{"n", lv.qn.n},
                  {"l", lv.qn.l},
                  {"energy", round6(lv.energy)},
                  {"capacity", lv.capacity},
                  {"cumulative", s.cumulative[i]},
                  {"gap_after", nullptr},
                  {"shell", s.shell_index[i]},
                  {"is_magic", is_magic_row(s, i)}};
      if (i < s.gaps.size()) row["gap_after"] = round6(s.gaps[i]);
      j["levels"].push_back(std::move(row));
    }
    return record(format, dump(j));
  }

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "n,l,energy,capacity,cumulative,gap_after,shell,is_magic\n";
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const Level& lv = s.levels[i];
      os << lv.qn.n << "," << lv.qn.l << "," << fmt6(lv.energy) << ","
         << lv.capacity << "," << s.cumulative[i] << ","
         << (i < s.gaps.size() ? fmt6(s.gaps[i]) : std::string{}) << ","
         << s.shell_index[i] << "," << (is_magic_row(s, i) ? 1 : 0) << "\n";
    }
  } else {
    os << "# command=magic " << model_params(s.model) << " delta=" << fmt6(s.delta)
       << " max_electrons=" << s.max_electrons << " nmax=" << s.n_max << "\n";
    os << "magic numbers: " << join(s.magic_numbers) << "\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%4s %4s %14s %9s %11s %12s %6s %6s\n", "n",
                  "l", "energy", "capacity", "cumulative", "gap_after", "shell",
                  "magic");
    os << buf;
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const Level& lv = s.levels[i];
      std::snprintf(buf, sizeof buf, "%4d %4d %14s %9d %11lld %12s %6d %6s\n",
                    lv.qn.n, lv.qn.l, fmt6(lv.energy).c_str(), lv.capacity,
                    static_cast<long long>(s.cumulative[i]),
                    i < s.gaps.size() ? fmt6(s.gaps[i]).c_str() : "-",
                    s.shell_index[i], is_magic_row(s, i) ? "*" : "");
      os << buf;
    }
  }
  return record(format, os.str());
}

OutputRecord format_comparisons(const std::vector<FamilyComparison>& families,
                                const EnergyModel& model, double delta,
                                const std::string& source, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j;
    j["command"] = "compare";
    json_model_params(j, model);
    j["delta"] = round6(delta);
    j["source"] = source;
    j["families"] = json::array();
    for (const FamilyComparison& fc : families)
      j["families"].push_back({{"family", fc.family},
                               {"species", fc.species},
                               {"cutoff", fc.report.cutoff},
                               {"matched", fc.report.matched},
                               {"missed", fc.report.missed},
                               {"spurious", fc.report.spurious},
                               {"contradicted", fc.contradicted},
                               {"not_observed_known", fc.not_observed_known}});
    return record(format, dump(j));
  }

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "family,species,category,number\n";
    for (const FamilyComparison& fc : families) {
      auto rows = [&](const char* category, std::span<const std::int64_t> v) {
        for (std::int64_t x : v)
          os << fc.family << "," << fc.species << "," << category << "," << x
             << "\n";
      };
      rows("matched", fc.report.matched);
      rows("missed", fc.report.missed);
      rows("spurious", fc.report.spurious);
      rows("contradicted", fc.contradicted);
    }
  } else {
    os << "# command=compare " << model_params(model) << " delta=" << fmt6(delta)
       << " source=" << source << "\n";
    for (const FamilyComparison& fc : families) {
      os << "family=" << fc.family << " species=" << fc.species
         << " cutoff=" << fc.report.cutoff << "\n";
      auto line = [&](const char* label, std::span<const std::int64_t> v,
                      const char* note = "") {
        os << "  " << label << ": " << (v.empty() ? "-" : join(v)) << note
           << "\n";
      };
      line("matched     ", fc.report.matched);
      line("missed      ", fc.report.missed);
      line("spurious    ", fc.report.spurious,
           fc.not_observed_known ? "" : "  (observed data incomplete)");
      line("contradicted", fc.contradicted);
    }
  }
  return record(format, os.str());
}

OutputRecord format_sweep(const SweepResult& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j;
    j["command"] = "sweep";
    j["model"] = to_string(r.model);
    j["cutoff"] = r.cutoff;
    j["grid"] = json::array();
    for (const SweepPoint& p : r.grid)
      j["grid"].push_back({{"tau", round6(p.tau)},
                           {"delta", round6(p.delta)},
                           {"magic_numbers", p.magic_numbers}});
    return record(format, dump(j));
  }

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "tau,delta,magic_numbers\n";
    for (const SweepPoint& p : r.grid)
      os << fmt6(p.tau) << "," << fmt6(p.delta) << "," << join(p.magic_numbers)
         << "\n";
  } else {
    os << "# command=sweep model=" << to_string(r.model)
       << " cutoff=" << r.cutoff << "\n";
    for (const SweepPoint& p : r.grid)
      os << "tau=" << fmt6(p.tau) << " delta=" << fmt6(p.delta) << ": "
         << join(p.magic_numbers) << "\n";
  }
  return record(format, os.str());
}

OutputRecord format_plotdata(const ShellScheme& s, OutputFormat format) {
  // level-diagram rows: a horizontal segment per level from x0 to x1 at
  // height energy; is_magic marks shell-closing segments
  if (format == OutputFormat::Json) {
    json j;
    j["command"] = "plotdata";
    json_model_params(j, s.model);
    j["delta"] = round6(s.delta);
    j["max_electrons"] = s.max_electrons;
    j["levels"] = json::array();
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const Level& lv = s.levels[i];
      json row = {{"x0", s.cumulative[i] - lv.capacity},
                  {"x1", s.cumulative[i]},
                  {"n", lv.qn.n},
                  {"l", lv.qn.l},
                  {"energy", round6(lv.energy)},
                  {"shell", s.shell_index[i]},
                  {"gap_after", nullptr},
                  {"is_magic", is_magic_row(s, i)}};
      if (i < s.gaps.size()) row["gap_after"] = round6(s.gaps[i]);
      j["levels"].push_back(std::move(row));
    }
    return record(format, dump(j));
  }

  std::ostringstream os;
  const char* header = "x0,x1,n,l,energy,shell,gap_after,is_magic\n";
  if (format == OutputFormat::Csv) {
    os << header;
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const Level& lv = s.levels[i];
      os << (s.cumulative[i] - lv.capacity) << "," << s.cumulative[i] << ","
         << lv.qn.n << "," << lv.qn.l << "," << fmt6(lv.energy) << ","
         << s.shell_index[i] << ","
         << (i < s.gaps.size() ? fmt6(s.gaps[i]) : std::string{}) << ","
         << (is_magic_row(s, i) ? 1 : 0) << "\n";
    }
  } else {
    os << "# command=plotdata " << model_params(s.model)
       << " delta=" << fmt6(s.delta) << " max_electrons=" << s.max_electrons
       << "\n";
    os << header;
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const Level& lv = s.levels[i];
      os << (s.cumulative[i] - lv.capacity) << "," << s.cumulative[i] << ","
         << lv.qn.n << "," << lv.qn.l << "," << fmt6(lv.energy) << ","
         << s.shell_index[i] << ","
         << (i < s.gaps.size() ? fmt6(s.gaps[i]) : std::string{"-"}) << ","
         << (is_magic_row(s, i) ? 1 : 0) << "\n";
    }
  }
  return record(format, os.str());
}

}  // namespace qosc
