#include "doctest.h"

#include <sstream>

#include "qosc/datasets.hpp"

using namespace qosc;

namespace {

const char* kHeader = "family,species,kind,numbers,provenance\n";

std::vector<MagicDataset> parse(const std::string& body) {
  std::istringstream in(std::string(kHeader) + body);
  return load_datasets(in);
}

}  // namespace

TEST_CASE("a well-formed row parses into a dataset") {
  const auto sets =
      parse("alkali,Na,ObservedMain,2 8 20 40 58 92 138,survey sec. 4.3\n");
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].family == "alkali");
  CHECK(sets[0].species == "Na");
  CHECK(sets[0].kind == DatasetKind::ObservedMain);
  CHECK(sets[0].numbers == std::vector<std::int64_t>{2, 8, 20, 40, 58, 92, 138});
  CHECK(sets[0].provenance == "survey sec. 4.3");
}

TEST_CASE("comments, blank lines and embedded provenance commas") {
  const auto sets = parse(
      "# transcribed by hand\n"
      "\n"
      "alkali,Na,NotObserved,68 70 106 112 156,CPL 302 (1999) 392, Table 4\n");
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].numbers.size() == 5);
  CHECK(sets[0].provenance == "CPL 302 (1999) 392, Table 4");
}

TEST_CASE("parse errors carry the line number") {
  // line 2 is the first data row
  CHECK_THROWS_WITH_AS(parse("alkali,Na,ObservedMain,2 8\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse("alkali,Na,Observed,2 8,x\n"), ParseError);  // bad kind
  CHECK_THROWS_AS(parse("alkali,Na,ObservedMain,2 eight,x\n"), ParseError);
  try {
    parse("ok,Na,ObservedMain,2 8,x\nalkali,Na,Observed,2,x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("missing or wrong header is a parse error") {
  std::istringstream empty("");
  CHECK_THROWS_AS(load_datasets(empty), ParseError);
  std::istringstream wrong("family;species;kind;numbers;provenance\n");
  CHECK_THROWS_AS(load_datasets(wrong), ParseError);
}

TEST_CASE("validation: empty, non-increasing or sub-2 numbers") {
  CHECK_THROWS_AS(parse("alkali,Na,ObservedMain,,x\n"), ValidationError);
  CHECK_THROWS_AS(parse("alkali,Na,ObservedMain,2 8 8,x\n"), ValidationError);
  CHECK_THROWS_AS(parse("alkali,Na,ObservedMain,8 2,x\n"), ValidationError);
  CHECK_THROWS_AS(parse("alkali,Na,ObservedMain,1 2,x\n"), ValidationError);
}

TEST_CASE("validation: ObservedMain and NotObserved must be disjoint per species") {
  CHECK_THROWS_AS(parse("alkali,Na,ObservedMain,2 8 20,x\n"
                        "alkali,Na,NotObserved,20 68,x\n"),
                  ValidationError);
  // different species may overlap freely
  CHECK_NOTHROW(parse("alkali,Na,ObservedMain,2 8 20,x\n"
                      "alkali,K,NotObserved,20 68,x\n"));
}

TEST_CASE("round-trip: save then load reproduces the datasets") {
  const auto bundled = bundled_datasets();
  std::ostringstream out;
  save_datasets(out, bundled);
  std::istringstream in(out.str());
  CHECK(load_datasets(in) == bundled);
}

TEST_CASE("bundled sets: contents recoverable from the survey prose") {
  const auto sets = bundled_datasets();
  REQUIRE(sets.size() == 5);
  CHECK_NOTHROW(validate_datasets(sets));

  const auto find = [&](const std::string& family, DatasetKind kind) {
    for (const auto& ds : sets)
      if (ds.family == family && ds.kind == kind) return ds;
    FAIL("missing bundled dataset ", family);
    return sets[0];
  };

  CHECK(find("alkali", DatasetKind::ObservedMain).numbers ==
        std::vector<std::int64_t>{2, 8, 20, 40, 58, 92, 138});
  CHECK(find("alkali", DatasetKind::NotObserved).numbers ==
        std::vector<std::int64_t>{68, 70, 106, 112, 156});
  CHECK(find("IIB", DatasetKind::ObservedMain).numbers ==
        std::vector<std::int64_t>{70, 106, 108, 112});
  CHECK(find("group-III", DatasetKind::ObservedMain).numbers ==
        std::vector<std::int64_t>{164, 198});
  CHECK(find("group-III", DatasetKind::NotObserved).numbers ==
        std::vector<std::int64_t>{398, 890, 1074});

  for (const auto& ds : sets)
    CHECK(ds.provenance.find("sec. 4.") != std::string::npos);
}

TEST_CASE("missing dataset file raises an I/O error with the path") {
  CHECK_THROWS_WITH_AS(load_datasets_file("/no/such/file.csv"),
                       doctest::Contains("/no/such/file.csv"), IoError);
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {DatasetKind::ObservedMain, DatasetKind::ObservedSecondary,
                    DatasetKind::NotObserved, DatasetKind::ReferenceModel})
    CHECK(dataset_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(dataset_kind_from_string("Observed"), std::invalid_argument);
}
