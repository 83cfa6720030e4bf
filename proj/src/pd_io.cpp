#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "twistvol/diagram.hpp"

namespace twistvol {

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  PlanarDiagram run() {
    while (true) {
      skip_blank();
      if (at_end()) break;
      if (at_line_start_ && starts_with("name:")) {
        read_name();
        continue;
      }
      const char c = peek();
      if (c == 'X') {
        advance();
        auto labels = read_label_list();
        if (labels.size() != 4) fail_at(token_line_, token_column_, "X[...] needs 4 labels, got " + std::to_string(labels.size()));
        crossings_.push_back(PdCrossing{{labels[0], labels[1], labels[2], labels[3]}});
      } else if (c == 'O') {
        advance();
        auto labels = read_label_list();
        if (labels.size() != 1) fail_at(token_line_, token_column_, "O[...] needs 1 label, got " + std::to_string(labels.size()));
        loops_.push_back(labels[0]);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return PlanarDiagram::from_pd(name_, std::move(crossings_), std::move(loops_));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      at_line_start_ = true;
    } else {
      ++column_;
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) at_line_start_ = false;
    }
    ++pos_;
  }

  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void skip_inline_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
  }

  void read_name() {
    for (int i = 0; i < 5; ++i) advance();
    std::string value;
    while (!at_end() && peek() != '\n' && peek() != '#') {
      value += peek();
      advance();
    }
    const auto first = value.find_first_not_of(" \t\r");
    const auto last = value.find_last_not_of(" \t\r");
    name_ = first == std::string::npos ? std::string{} : value.substr(first, last - first + 1);
  }

  std::vector<EdgeLabel> read_label_list() {
    token_line_ = line_;
    token_column_ = column_ - 1;
    if (at_end() || peek() != '[') fail("expected '['");
    advance();
    std::vector<EdgeLabel> labels;
    while (true) {
      skip_inline_space();
      labels.push_back(read_label());
      skip_inline_space();
      if (at_end()) fail("unterminated label list");
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ']') {
        advance();
        break;
      }
      fail(std::string("expected ',' or ']' but found '") + peek() + "'");
    }
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '#')
      fail("expected whitespace after ']'");
    return labels;
  }

  EdgeLabel read_label() {
    const std::size_t line = line_;
    const std::size_t column = column_;
    std::string digits;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      digits += peek();
      advance();
    }
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty() || digits == "-" || digits == "+") fail_at(line, column, "expected an integer label");
    long value = 0;
    try {
      value = std::stol(digits);
    } catch (const std::exception&) {
      fail_at(line, column, "label out of range: " + digits);
    }
    if (value <= 0 || value > std::numeric_limits<EdgeLabel>::max())
      fail_at(line, column, "labels must be positive integers, got " + digits);
    return static_cast<EdgeLabel>(value);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }
  [[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& what) const {
    throw ParseError(what, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool at_line_start_ = true;
  std::size_t token_line_ = 1;
  std::size_t token_column_ = 1;

  std::string name_;
  std::vector<PdCrossing> crossings_;
  std::vector<EdgeLabel> loops_;
};

std::pair<std::size_t, std::size_t> line_column_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

PlanarDiagram parse_pd(std::string_view text) { return PdScanner(text).run(); }

std::string to_pd_text(const PlanarDiagram& d) {
  std::ostringstream out;
  if (!d.name().empty()) out << "name: " << d.name() << '\n';
  bool first = true;
  for (const PdCrossing& c : d.crossings()) {
    out << (first ? "" : " ") << "X[" << c.labels[0] << ',' << c.labels[1] << ',' << c.labels[2] << ','
        << c.labels[3] << ']';
    first = false;
  }
  for (EdgeLabel k : d.loops()) {
    out << (first ? "" : " ") << "O[" << k << ']';
    first = false;
  }
  out << '\n';
  return out.str();
}

PlanarDiagram parse_pd_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, column);
  }
  if (!j.is_object()) throw ParseError("expected a JSON object", 1, 1);

  std::string name;
  std::vector<PdCrossing> crossings;
  std::vector<EdgeLabel> loops;
  try {
    if (j.contains("name")) name = j.at("name").get<std::string>();
    if (j.contains("crossings")) {
      for (const auto& row : j.at("crossings")) {
        if (!row.is_array() || row.size() != 4) throw ParseError("each crossing must be an array of 4 labels", 1, 1);
        PdCrossing c;
        for (std::size_t i = 0; i < 4; ++i) c.labels[i] = row.at(i).get<EdgeLabel>();
        crossings.push_back(c);
      }
    }
    if (j.contains("loops")) loops = j.at("loops").get<std::vector<EdgeLabel>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
  for (const auto& c : crossings)
    for (EdgeLabel l : c.labels)
      if (l <= 0) throw ParseError("labels must be positive integers", 1, 1);
  return PlanarDiagram::from_pd(std::move(name), std::move(crossings), std::move(loops));
}

std::string to_pd_json(const PlanarDiagram& d) {
  nlohmann::json j;
  j["name"] = d.name();
  j["crossings"] = nlohmann::json::array();
  for (const PdCrossing& c : d.crossings()) j["crossings"].push_back(c.labels);
  j["loops"] = std::vector<EdgeLabel>(d.loops().begin(), d.loops().end());
  return j.dump();
}

PlanarDiagram load_diagram(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    buffer << in.rdbuf();
  }
  const std::string text = buffer.str();
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  // Standard input may hold either form.
  if (path == "-") {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_pd_json(text);
  }
  return json ? parse_pd_json(text) : parse_pd(text);
}

}  // namespace twistvol
