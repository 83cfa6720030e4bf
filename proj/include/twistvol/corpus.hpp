#pragma once

// Reference diagrams with their expected twist-region data, stored one per
// JSON file:
//
//   {"name": "...", "pd": "X[...] ...", "twist_count": 2, "regions": [2, 2],
//    "prime": true, "twist_reduced": true, "gate": false, "volume": 2.02988}
//
// "regions" is compared as a multiset. "prime" and "twist_reduced" are null
// for split diagrams and diagrams without crossings. "gate" is the outcome at
// the default threshold. "volume", when present, must lie between the bounds that apply.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace twistvol {

struct CorpusEntry {
  std::string name;
  std::string pd;
  std::size_t twist_count = 0;
  std::vector<std::size_t> regions;
  std::optional<bool> prime;
  std::optional<bool> twist_reduced;
  bool gate = false;
  std::optional<double> volume;
  std::filesystem::path source;
};

CorpusEntry parse_corpus_entry(const std::string& json_text);
// Reads every *.json file in the directory, sorted by file name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct CorpusResult {
  std::string name;
  std::vector<std::string> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

CorpusResult check_corpus_entry(const CorpusEntry& e);
// Entries are checked concurrently; results come back in entry order.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries);

}  // namespace twistvol
