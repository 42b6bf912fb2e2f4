#include "arrtop/io.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arrtop/errors.hpp"
#include "json.hpp"

namespace arrtop {

using nlohmann::json;

ArrangementInput ArrangementInput::from_arrangement(Arrangement arr) {
  ArrangementInput in;
  in.label = arr.label();
  in.tier = InputTier::Realized;
  in.lattice = build_lattice(arr);
  in.arrangement = std::move(arr);
  return in;
}

ArrangementInput ArrangementInput::from_incidence(std::string label, int n, std::vector<std::vector<int>> flats) {
  ArrangementInput in;
  in.label = std::move(label);
  in.tier = InputTier::Incidence;
  in.lattice = lattice_from_incidence(n, std::move(flats));
  return in;
}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(const std::string& source, std::string_view text, std::size_t offset, const std::string& msg) {
  const Position p = position_of(text, offset);
  throw ValidationError(source + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + msg);
}

/// Byte offsets of the scalar tokens inside the JSON array stored under `key`
/// at the top level, grouped by inner array. Used only to locate diagnostics.
std::vector<std::vector<std::size_t>> nested_token_offsets(std::string_view text, std::string_view key) {
  std::vector<std::vector<std::size_t>> out;
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t i = text.find(quoted);
  if (i == std::string_view::npos) return out;
  i = text.find('[', i + quoted.size());
  if (i == std::string_view::npos) return out;
  int depth = 0;
  bool in_token = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      if (depth == 2) out.back().push_back(i);
      for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\') ++i;
      in_token = false;
      continue;
    }
    if (c == '[') {
      ++depth;
      if (depth == 2) out.emplace_back();
      in_token = false;
    } else if (c == ']') {
      if (--depth == 0) break;
      in_token = false;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      in_token = false;
    } else if (depth == 1 && c == '{') {
      in_token = false;
    } else if (!in_token && depth == 2) {
      out.back().push_back(i);
      in_token = true;
    }
  }
  return out;
}

std::int64_t json_integer(const json& v, std::string_view text, const std::string& source, std::string_view key,
                          std::size_t outer, std::size_t inner) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  const auto offsets = nested_token_offsets(text, key);
  std::size_t offset = 0;
  if (outer < offsets.size() && inner < offsets[outer].size()) offset = offsets[outer][inner];
  fail_at(source, text, offset,
          "expected an integer at " + std::string(key) + "[" + std::to_string(outer) + "][" + std::to_string(inner) +
              "], found " + v.dump());
}

ArrangementInput parse_json(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_at(source, text, e.byte > 0 ? e.byte - 1 : 0, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail_at(source, text, 0, "top-level JSON value must be an object");
  std::string label = std::filesystem::path(source).stem().string();
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail_at(source, text, text.find("\"label\""), "label must be a string");
    label = doc["label"].get<std::string>();
  }
  const std::string tier = doc.value("tier", std::string("realized"));
  if (tier == "incidence") {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      fail_at(source, text, text.find("\"n\""), "incidence input requires an integer field n");
    const auto n = doc["n"].get<std::int64_t>();
    if (n < 1 || n > 4096) fail_at(source, text, text.find("\"n\""), "n out of range");
    std::vector<std::vector<int>> flats;
    if (doc.contains("flats")) {
      if (!doc["flats"].is_array()) fail_at(source, text, text.find("\"flats\""), "flats must be an array");
      for (std::size_t f = 0; f < doc["flats"].size(); ++f) {
        const auto& entry = doc["flats"][f];
        if (!entry.is_array()) fail_at(source, text, text.find("\"flats\""), "each flat must be an array of line indices");
        std::vector<int> lines;
        for (std::size_t j = 0; j < entry.size(); ++j)
          lines.push_back(static_cast<int>(json_integer(entry[j], text, source, "flats", f, j)));
        flats.push_back(std::move(lines));
      }
    }
    return ArrangementInput::from_incidence(label, static_cast<int>(n), std::move(flats));
  }
  if (tier != "realized") fail_at(source, text, text.find("\"tier\""), "unknown tier '" + tier + "'");
  if (!doc.contains("lines") || !doc["lines"].is_array())
    fail_at(source, text, 0, "realized input requires a \"lines\" array");
  std::vector<ProjLine> lines;
  const auto& arr = doc["lines"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_array() || arr[i].size() != 3) {
      const auto offsets = nested_token_offsets(text, "lines");
      const std::size_t off = i < offsets.size() && !offsets[i].empty() ? offsets[i][0] : text.find("\"lines\"");
      fail_at(source, text, off, "lines[" + std::to_string(i) + "] must be an array of three integers");
    }
    std::array<std::int64_t, 3> c{};
    for (std::size_t j = 0; j < 3; ++j) c[j] = json_integer(arr[i][j], text, source, "lines", i, j);
    try {
      lines.push_back(ProjLine::make(c[0], c[1], c[2]));
    } catch (const ValidationError& e) {
      const auto offsets = nested_token_offsets(text, "lines");
      fail_at(source, text, i < offsets.size() && !offsets[i].empty() ? offsets[i][0] : 0,
              "lines[" + std::to_string(i) + "]: " + e.what());
    }
  }
  try {
    return ArrangementInput::from_arrangement(Arrangement(label, std::move(lines)));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

ArrangementInput parse_text(std::string_view text, const std::string& source) {
  std::string label = std::filesystem::path(source).stem().string();
  std::vector<ProjLine> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view row = text.substr(start, end - start);
    ++line_no;
    std::string_view body = row;
    if (const auto hash = row.find('#'); hash != std::string_view::npos) {
      std::string_view comment = row.substr(hash + 1);
      while (!comment.empty() && std::isspace(static_cast<unsigned char>(comment.front()))) comment.remove_prefix(1);
      if (comment.starts_with("label:")) {
        comment.remove_prefix(6);
        std::string l(comment);
        l.erase(0, l.find_first_not_of(" \t"));
        l.erase(l.find_last_not_of(" \t\r") + 1);
        if (!l.empty()) label = l;
      }
      body = row.substr(0, hash);
    }
    std::vector<std::pair<std::int64_t, std::size_t>> values;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
      const std::string_view tok = body.substr(i, j - i);
      std::int64_t v = 0;
      const char* first = tok.data();
      if (!tok.empty() && tok.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size())
        throw ValidationError(source + ":" + std::to_string(line_no) + ":" + std::to_string(i + 1) +
                              ": expected an integer, found '" + std::string(tok) + "'");
      values.emplace_back(v, i + 1);
      i = j;
    }
    if (!values.empty()) {
      if (values.size() != 3)
        throw ValidationError(source + ":" + std::to_string(line_no) + ":" + std::to_string(values.front().second) +
                              ": expected three integers per line, found " + std::to_string(values.size()));
      try {
        lines.push_back(ProjLine::make(values[0].first, values[1].first, values[2].first));
      } catch (const ValidationError& e) {
        throw ValidationError(source + ":" + std::to_string(line_no) + ":" + std::to_string(values.front().second) +
                              ": " + e.what());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  try {
    return ArrangementInput::from_arrangement(Arrangement(label, std::move(lines)));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

}  // namespace

ArrangementInput parse_arrangement(std::string_view text, const std::string& source) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') return parse_json(text, source);
  return parse_text(text, source);
}

ArrangementInput load_arrangement(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str(), path);
}

std::string arrangement_to_json(const Arrangement& arr) {
  json lines = json::array();
  for (const auto& l : arr.lines()) lines.push_back({l.coeffs[0], l.coeffs[1], l.coeffs[2]});
  json doc = {{"label", arr.label()}, {"lines", lines}};
  return doc.dump(2) + "\n";
}

}  // namespace arrtop
