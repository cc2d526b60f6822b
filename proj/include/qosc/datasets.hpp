#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qosc {

enum class DatasetKind { ObservedMain, ObservedSecondary, NotObserved, ReferenceModel };

const char* to_string(DatasetKind k);
DatasetKind dataset_kind_from_string(const std::string& name);

// One named set of magic numbers for a cluster family, with provenance.
struct MagicDataset {
  std::string family;   // e.g. "alkali"
  std::string species;  // e.g. "Na/Li"
  DatasetKind kind = DatasetKind::ObservedMain;
  std::vector<std::int64_t> numbers;  // strictly increasing, all >= 2
  std::string provenance;

  friend bool operator==(const MagicDataset&, const MagicDataset&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV, UTF-8, header row `family,species,kind,numbers,provenance`.
// `numbers` is a space-separated integer list; `#` starts a comment line;
// the provenance field runs to end of line, so it may contain commas.
std::vector<MagicDataset> load_datasets(std::istream& in);
std::vector<MagicDataset> load_datasets_file(const std::string& path);
void save_datasets(std::ostream& out, std::span<const MagicDataset> sets);

// Per-set invariants plus disjointness of ObservedMain and NotObserved
// numbers for the same (family, species).
void validate_datasets(std::span<const MagicDataset> sets);

// Built-in sets: every number quoted in the source survey's prose for
// alkali, IIB (Zn/Cd) and group-III (Al/In) clusters, nothing more (the
// full experimental tables live in the literature cited per entry).
std::vector<MagicDataset> bundled_datasets();

}  // namespace qosc
