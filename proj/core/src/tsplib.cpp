#include "swarmtsp/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "swarmtsp/error.hpp"

namespace swarmtsp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on '\n'; a trailing '\r' is removed by trim().
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

std::optional<long long> to_integer(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

struct KeywordLine {
  std::string key;  // upper-cased
  std::string_view value;
};

// "KEY: value", "KEY : value", "KEY value", or bare "KEY".
KeywordLine split_keyword(std::string_view line) {
  std::size_t end = 0;
  while (end < line.size() && line[end] != ':' && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
  KeywordLine out{upper(line.substr(0, end)), {}};
  std::string_view rest = trim(line.substr(end));
  if (!rest.empty() && rest.front() == ':') rest = trim(rest.substr(1));
  out.value = rest;
  return out;
}

void append_number(std::string& out, double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

ParsedInstance parse_tsplib(std::string_view text, std::string source_name) {
  ParseDiagnostics diagnostics{source_name, {}};
  const auto lines = split_lines(text);

  std::string name;
  std::optional<std::size_t> dimension;
  bool have_weight_type = false;
  std::size_t coord_section_line = 0;
  std::vector<std::optional<std::pair<double, double>>> coords;
  std::size_t coord_count = 0;
  bool in_coords = false;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    const std::string_view line = trim(lines[idx]);
    if (line.empty()) continue;

    if (in_coords) {
      const auto fields = split_ws(line);
      if (to_integer(fields.front())) {
        if (fields.size() != 3) {
          throw StructuralError(source_name, lineno, "NODE_COORD_SECTION entries must be 'id x y'");
        }
        const auto id = *to_integer(fields[0]);
        const auto x = to_double(fields[1]);
        const auto y = to_double(fields[2]);
        if (!x || !y) throw ValidationError(source_name, lineno, "non-numeric coordinate");
        if (!std::isfinite(*x) || !std::isfinite(*y)) {
          throw ValidationError(source_name, lineno, "non-finite coordinate");
        }
        if (id < 1 || static_cast<std::size_t>(id) > *dimension) {
          throw ValidationError(source_name, lineno,
                                "node id " + std::to_string(id) + " outside 1.." + std::to_string(*dimension));
        }
        auto& slot = coords[static_cast<std::size_t>(id - 1)];
        if (slot) throw ValidationError(source_name, lineno, "duplicate node id " + std::to_string(id));
        slot = std::make_pair(*x, *y);
        ++coord_count;
        continue;
      }
      in_coords = false;  // next keyword or section
    }

    const KeywordLine kw = split_keyword(line);
    if (kw.key == "EOF") break;
    if (kw.key == "NAME") {
      name = std::string(kw.value);
    } else if (kw.key == "COMMENT") {
      // informational
    } else if (kw.key == "TYPE") {
      if (upper(kw.value) != "TSP") {
        throw UnsupportedFeatureError(source_name, lineno, "TYPE '" + std::string(kw.value) + "' is not supported (only TSP)");
      }
    } else if (kw.key == "DIMENSION") {
      const auto n = to_integer(kw.value);
      if (!n || *n < 1) throw ValidationError(source_name, lineno, "DIMENSION must be a positive integer");
      dimension = static_cast<std::size_t>(*n);
    } else if (kw.key == "EDGE_WEIGHT_TYPE") {
      if (upper(kw.value) != "EUC_2D") {
        throw UnsupportedFeatureError(source_name, lineno,
                                      "EDGE_WEIGHT_TYPE '" + std::string(kw.value) + "' is not supported (only EUC_2D)");
      }
      have_weight_type = true;
    } else if (kw.key == "EDGE_WEIGHT_SECTION" || kw.key == "EDGE_WEIGHT_FORMAT") {
      throw UnsupportedFeatureError(source_name, lineno, kw.key + " is not supported");
    } else if (kw.key == "NODE_COORD_SECTION") {
      if (coord_section_line != 0) throw StructuralError(source_name, lineno, "repeated NODE_COORD_SECTION");
      if (!dimension) throw StructuralError(source_name, lineno, "DIMENSION must precede NODE_COORD_SECTION");
      coord_section_line = lineno;
      coords.assign(*dimension, std::nullopt);
      in_coords = true;
    } else {
      diagnostics.warnings.push_back({lineno, "ignored unrecognised line '" + std::string(line) + "'"});
    }
  }

  const std::size_t last_line = std::max<std::size_t>(lines.size(), 1);
  if (!dimension) throw StructuralError(source_name, last_line, "missing DIMENSION");
  if (coord_section_line == 0) throw StructuralError(source_name, last_line, "missing NODE_COORD_SECTION");
  if (coord_count != *dimension) {
    throw StructuralError(source_name, coord_section_line,
                          "NODE_COORD_SECTION has " + std::to_string(coord_count) + " entries but DIMENSION is " +
                              std::to_string(*dimension));
  }
  if (!have_weight_type) {
    diagnostics.warnings.push_back({coord_section_line, "EDGE_WEIGHT_TYPE missing; assuming EUC_2D"});
  }

  std::vector<City> cities;
  cities.reserve(*dimension);
  for (std::size_t i = 0; i < coords.size(); ++i) cities.push_back({i, coords[i]->first, coords[i]->second});
  if (name.empty()) name = source_name;
  return {Instance(std::move(name), std::move(cities), Metric::kEuclideanRounded), std::move(diagnostics)};
}

ParsedInstance parse_coords_csv(std::string_view text, std::string source_name) {
  ParseDiagnostics diagnostics{source_name, {}};
  std::vector<std::pair<double, double>> points;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    const std::string_view line = trim(lines[idx]);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw StructuralError(source_name, lineno, "expected exactly two fields 'x,y'");
    }
    const auto x = to_double(trim(line.substr(0, comma)));
    const auto y = to_double(trim(line.substr(comma + 1)));
    if (!x || !y) throw ValidationError(source_name, lineno, "non-numeric field");
    if (!std::isfinite(*x) || !std::isfinite(*y)) throw ValidationError(source_name, lineno, "non-finite coordinate");
    points.emplace_back(*x, *y);
  }
  if (points.empty()) throw StructuralError(source_name, 0, "no coordinate rows (empty instance)");
  return {Instance::from_points(source_name, points, Metric::kEuclideanExact), std::move(diagnostics)};
}

Tour parse_tsplib_tour(std::string_view text, std::size_t n, std::string source_name) {
  const auto lines = split_lines(text);
  bool in_section = false;
  std::vector<std::size_t> order;
  std::size_t section_line = 0;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    const std::string_view line = trim(lines[idx]);
    if (line.empty()) continue;
    if (!in_section) {
      const KeywordLine kw = split_keyword(line);
      if (kw.key == "TOUR_SECTION") {
        in_section = true;
        section_line = lineno;
      } else if (kw.key == "DIMENSION") {
        const auto dim = to_integer(kw.value);
        if (!dim || static_cast<std::size_t>(*dim) != n) {
          throw ValidationError(source_name, lineno, "tour DIMENSION does not match instance size " + std::to_string(n));
        }
      } else if (kw.key == "EOF") {
        break;
      }
      continue;
    }
    bool done = false;
    for (const auto token : split_ws(line)) {
      if (upper(token) == "EOF") {
        done = true;
        break;
      }
      const auto id = to_integer(token);
      if (!id) throw ValidationError(source_name, lineno, "non-integer tour entry '" + std::string(token) + "'");
      if (*id == -1) {
        done = true;
        break;
      }
      if (*id < 1 || static_cast<std::size_t>(*id) > n) {
        throw ValidationError(source_name, lineno, "tour entry " + std::to_string(*id) + " out of range");
      }
      order.push_back(static_cast<std::size_t>(*id - 1));
    }
    if (done) break;
  }
  if (!in_section) throw StructuralError(source_name, std::max<std::size_t>(lines.size(), 1), "missing TOUR_SECTION");
  if (order.size() != n || !is_permutation_of_indices(order)) {
    throw ValidationError(source_name, section_line, "TOUR_SECTION is not a permutation of 1.." + std::to_string(n));
  }
  return Tour(std::move(order));
}

std::string write_coords_csv(const Instance& instance) {
  std::string out = "# " + instance.name() + "\n";
  for (const City& c : instance.cities()) {
    append_number(out, c.x);
    out += ',';
    append_number(out, c.y);
    out += '\n';
  }
  return out;
}

std::string write_tsplib(const Instance& instance) {
  std::string out;
  out += "NAME: " + instance.name() + "\n";
  out += "TYPE: TSP\n";
  out += "DIMENSION: " + std::to_string(instance.size()) + "\n";
  out += "EDGE_WEIGHT_TYPE: EUC_2D\n";
  out += "NODE_COORD_SECTION\n";
  for (const City& c : instance.cities()) {
    out += std::to_string(c.id + 1);
    out += ' ';
    append_number(out, c.x);
    out += ' ';
    append_number(out, c.y);
    out += '\n';
  }
  out += "EOF\n";
  return out;
}

Instance builtin_instance() {
  return Instance::from_points("builtin5", {{0, 0}, {1, 3}, {4, 3}, {6, 1}, {3, 0}}, Metric::kEuclideanExact);
}

std::string write_builtin_instance() { return write_coords_csv(builtin_instance()); }

ParsedInstance load_instance_file(const std::filesystem::path& path) {
  const std::string source = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(source, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const std::string ext = upper(path.extension().string());
  if (ext == ".TSP") return parse_tsplib(text, source);
  if (ext == ".CSV") return parse_coords_csv(text, source);
  if (text.find("NODE_COORD_SECTION") != std::string::npos || text.find("DIMENSION") != std::string::npos) {
    return parse_tsplib(text, source);
  }
  return parse_coords_csv(text, source);
}

}  // namespace swarmtsp
