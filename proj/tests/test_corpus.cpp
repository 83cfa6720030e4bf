#include <algorithm>

#include "doctest.h"
#include "twistvol/corpus.hpp"
#include "twistvol/errors.hpp"

using namespace twistvol;

TEST_CASE("bundled corpus") {
  const auto entries = load_corpus(TWISTVOL_CORPUS_DIR);
  CHECK(entries.size() >= 14);
  const auto results = run_corpus(entries);
  REQUIRE(results.size() == entries.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    INFO(results[i].name);
    CHECK(results[i].name == entries[i].name);
    CHECK(results[i].passed());
  }
  const auto three = std::find_if(entries.begin(), entries.end(), [](const CorpusEntry& e) {
    return e.name == "three twist regions";
  });
  REQUIRE(three != entries.end());
  CHECK(three->twist_count == 3);
}

TEST_CASE("a wrong expectation is reported by name") {
  auto e = parse_corpus_entry(R"({"name": "figure-eight", "pd": "X[8,3,1,4] X[4,7,5,8] X[2,6,3,5] X[6,2,7,1]",
    "twist_count": 3, "regions": [2, 2], "prime": true, "twist_reduced": true, "gate": false})");
  const auto r = check_corpus_entry(e);
  CHECK_FALSE(r.passed());
  CHECK(r.name == "figure-eight");
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].find("twist_count") != std::string::npos);

  e.twist_count = 2;
  e.volume = 20.0;
  const auto high = check_corpus_entry(e);
  REQUIRE(high.mismatches.size() == 1);
  CHECK(high.mismatches[0].find("upper bound") != std::string::npos);

  e.pd = "X[1,2,3]";
  CHECK_FALSE(check_corpus_entry(e).passed());
}

TEST_CASE("corpus errors") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus"), Error);
  CHECK_THROWS_AS(parse_corpus_entry("{\"name\": 3}"), ParseError);
}
