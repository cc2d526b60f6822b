#include "qosc/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace qosc {

const char* to_string(DatasetKind k) {
  switch (k) {
    case DatasetKind::ObservedMain: return "ObservedMain";
    case DatasetKind::ObservedSecondary: return "ObservedSecondary";
    case DatasetKind::NotObserved: return "NotObserved";
    case DatasetKind::ReferenceModel: return "ReferenceModel";
  }
  return "?";
}

DatasetKind dataset_kind_from_string(const std::string& name) {
  if (name == "ObservedMain") return DatasetKind::ObservedMain;
  if (name == "ObservedSecondary") return DatasetKind::ObservedSecondary;
  if (name == "NotObserved") return DatasetKind::NotObserved;
  if (name == "ReferenceModel") return DatasetKind::ReferenceModel;
  throw std::invalid_argument("unknown dataset kind '" + name + "'");
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

constexpr const char* kHeader = "family,species,kind,numbers,provenance";

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_numbers(const std::string& field, int line) {
  std::vector<std::int64_t> out;
  std::istringstream tokens(field);
  std::string tok;
  while (tokens >> tok) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(line, "bad integer '" + tok + "' in numbers field");
    out.push_back(value);
  }
  return out;
}

void validate_one(const MagicDataset& ds, const std::string& where) {
  if (ds.numbers.empty())
    throw ValidationError(where + ": numbers field is empty");
  std::int64_t prev = 1;
  for (std::int64_t v : ds.numbers) {
    if (v < 2)
      throw ValidationError(where + ": magic number " + std::to_string(v) +
                            " is below 2");
    if (v <= prev)
      throw ValidationError(where + ": numbers not strictly increasing at " +
                            std::to_string(v));
    prev = v;
  }
}

}  // namespace

void validate_datasets(std::span<const MagicDataset> sets) {
  std::map<std::pair<std::string, std::string>, std::vector<std::int64_t>>
      observed_main, not_observed;
  for (const MagicDataset& ds : sets) {
    validate_one(ds, ds.family + "/" + ds.species);
    auto key = std::make_pair(ds.family, ds.species);
    if (ds.kind == DatasetKind::ObservedMain)
      observed_main[key].insert(observed_main[key].end(), ds.numbers.begin(),
                                ds.numbers.end());
    if (ds.kind == DatasetKind::NotObserved)
      not_observed[key].insert(not_observed[key].end(), ds.numbers.begin(),
                               ds.numbers.end());
  }
  for (auto& [key, main] : observed_main) {
    auto it = not_observed.find(key);
    if (it == not_observed.end()) continue;
    std::sort(main.begin(), main.end());
    std::sort(it->second.begin(), it->second.end());
    std::vector<std::int64_t> overlap;
    std::set_intersection(main.begin(), main.end(), it->second.begin(),
                          it->second.end(), std::back_inserter(overlap));
    if (!overlap.empty())
      throw ValidationError(key.first + "/" + key.second +
                            ": ObservedMain and NotObserved overlap at " +
                            std::to_string(overlap.front()));
  }
}

std::vector<MagicDataset> load_datasets(std::istream& in) {
  std::vector<MagicDataset> out;
  std::string raw;
  int line_no = 0;
  bool header_seen = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!header_seen) {
      if (line != kHeader)
        throw ParseError(line_no, std::string("expected header '") + kHeader + "'");
      header_seen = true;
      continue;
    }

    // first four fields are comma-delimited; provenance runs to end of line
    std::size_t pos = 0;
    std::string fields[4];
    for (auto& field : fields) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos)
        throw ParseError(line_no, "expected 5 comma-separated fields");
      field = strip(line.substr(pos, comma - pos));
      pos = comma + 1;
    }

    MagicDataset ds;
    ds.family = fields[0];
    ds.species = fields[1];
    try {
      ds.kind = dataset_kind_from_string(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    ds.numbers = parse_numbers(fields[3], line_no);
    ds.provenance = strip(line.substr(pos));
    if (ds.family.empty()) throw ParseError(line_no, "family field is empty");

    try {
      validate_one(ds, ds.family + "/" + ds.species);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(std::move(ds));
  }

  if (!header_seen)
    throw ParseError(line_no, "missing header row");
  validate_datasets(out);
  return out;
}

std::vector<MagicDataset> load_datasets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);
  return load_datasets(in);
}

void save_datasets(std::ostream& out, std::span<const MagicDataset> sets) {
  out << kHeader << "\n";
  for (const MagicDataset& ds : sets) {
    out << ds.family << "," << ds.species << "," << to_string(ds.kind) << ",";
    for (std::size_t i = 0; i < ds.numbers.size(); ++i)
      out << (i ? " " : "") << ds.numbers[i];
    out << "," << ds.provenance << "\n";
  }
}

std::vector<MagicDataset> bundled_datasets() {
  // Only numbers stated in the survey's own text. The complete experimental
  // tables are in the cited companion articles.
  const std::string alkali_src =
      "sec. 4.3; full tables in Chem. Phys. Lett. 302 (1999) 392";
  const std::string iib_src =
      "sec. 4.5; electron counts (two valence electrons per atom)";
  const std::string iii_src =
      "sec. 4.6; small-number region distorted by the ionic lattice";
  return {
      {"alkali", "Na/Li", DatasetKind::ObservedMain,
       {2, 8, 20, 40, 58, 92, 138}, alkali_src},
      {"alkali", "Na/Li", DatasetKind::NotObserved,
       {68, 70, 106, 112, 156}, alkali_src},
      {"IIB", "Zn/Cd", DatasetKind::ObservedMain,
       {70, 106, 108, 112}, iib_src},
      {"group-III", "Al/In", DatasetKind::ObservedMain, {164, 198}, iii_src},
      {"group-III", "Al/In", DatasetKind::NotObserved,
       {398, 890, 1074}, iii_src},
  };
}

}  // namespace qosc
