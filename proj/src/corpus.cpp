#include "twistvol/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "json.hpp"
#include "twistvol/bounds.hpp"
#include "twistvol/diagram.hpp"
#include "twistvol/errors.hpp"
#include "twistvol/twist_analysis.hpp"

namespace twistvol {

using nlohmann::json;

namespace {

std::optional<bool> optional_flag(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<bool>();
}

std::string describe(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "null"; }

std::string describe(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

}  // namespace

CorpusEntry parse_corpus_entry(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  try {
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    e.pd = j.at("pd").get<std::string>();
    e.twist_count = j.at("twist_count").get<std::size_t>();
    e.regions = j.at("regions").get<std::vector<std::size_t>>();
    e.prime = optional_flag(j, "prime");
    e.twist_reduced = optional_flag(j, "twist_reduced");
    e.gate = j.at("gate").get<bool>();
    if (j.contains("volume") && !j.at("volume").is_null()) e.volume = j.at("volume").get<double>();
    return e;
  } catch (const json::exception& ex) {
    throw ParseError(ex.what(), 1, 1);
  }
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir))
    if (item.is_regular_file() && item.path().extension() == ".json") files.push_back(item.path());
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
      CorpusEntry e = parse_corpus_entry(text.str());
      e.source = path;
      entries.push_back(std::move(e));
    } catch (const ParseError& err) {
      throw ParseError(path.filename().string() + ": " + err.what(), err.line(), err.column());
    }
  }
  return entries;
}

CorpusResult check_corpus_entry(const CorpusEntry& e) {
  CorpusResult r{e.name, {}};
  std::optional<PlanarDiagram> parsed;
  try {
    parsed = parse_pd(e.pd);
  } catch (const Error& err) {
    r.mismatches.push_back(std::string("PD code rejected: ") + err.what());
    return r;
  }
  const PlanarDiagram& d = *parsed;

  const auto regions = twist_regions(d);
  if (regions.size() != e.twist_count)
    r.mismatches.push_back("twist_count: expected " + std::to_string(e.twist_count) + ", got " +
                           std::to_string(regions.size()));
  std::vector<std::size_t> got;
  for (const TwistRegion& t : regions) got.push_back(t.crossing_count());
  std::vector<std::size_t> want = e.regions;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) r.mismatches.push_back("regions: expected " + describe(want) + ", got " + describe(got));

  std::optional<bool> prime, reduced;
  if (d.crossing_count() > 0 && d.is_connected()) {
    prime = is_prime(d).prime;
    reduced = is_twist_reduced(d).twist_reduced;
  }
  if (prime != e.prime)
    r.mismatches.push_back("prime: expected " + describe(e.prime) + ", got " + describe(prime));
  if (reduced != e.twist_reduced)
    r.mismatches.push_back("twist_reduced: expected " + describe(e.twist_reduced) + ", got " + describe(reduced));

  const bool passed = gate(d, crossing_threshold()).passed();
  if (passed != e.gate)
    r.mismatches.push_back(std::string("gate: expected ") + (e.gate ? "pass" : "fail") + ", got " +
                           (passed ? "pass" : "fail"));

  if (e.volume) {
    const VolumeBoundReport b = volume_bounds(d);
    if (b.upper && *e.volume > *b.upper)
      r.mismatches.push_back("volume " + std::to_string(*e.volume) + " exceeds the upper bound " +
                             std::to_string(*b.upper));
    if (b.lower && *e.volume < *b.lower)
      r.mismatches.push_back("volume " + std::to_string(*e.volume) + " is below the lower bound " +
                             std::to_string(*b.lower));
  }
  return r;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries) {
  std::vector<std::future<CorpusResult>> jobs;
  jobs.reserve(entries.size());
  for (const CorpusEntry& e : entries)
    jobs.push_back(std::async(std::launch::async, [&e] { return check_corpus_entry(e); }));
  std::vector<CorpusResult> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace twistvol
