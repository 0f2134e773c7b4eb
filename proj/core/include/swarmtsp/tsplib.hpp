#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "swarmtsp/instance.hpp"

namespace swarmtsp {

struct ParseWarning {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct ParseDiagnostics {
  std::string source_name;
  std::vector<ParseWarning> warnings;
};

struct ParsedInstance {
  Instance instance;
  ParseDiagnostics diagnostics;
};

/// Parses the TSPLIB subset: NAME, TYPE (TSP only), COMMENT, DIMENSION,
/// EDGE_WEIGHT_TYPE (EUC_2D only), NODE_COORD_SECTION, EOF.
///
/// Node ids in the file are 1-based and become 0-based city ids. Keyword lines
/// accept "KEY: value", "KEY : value" and "KEY value". Unknown keywords are
/// recorded as warnings. Throws StructuralError, UnsupportedFeatureError, or
/// ValidationError (all ParseError) with the offending line.
ParsedInstance parse_tsplib(std::string_view text, std::string source_name = "tsplib");

/// One "x,y" row per city; blank lines and lines starting with '#' are skipped.
/// Row order defines ids; the metric is Euclidean (exact).
ParsedInstance parse_coords_csv(std::string_view text, std::string source_name = "csv");

/// Reads a TSPLIB TOUR file (TOUR_SECTION, 1-based ids, terminated by -1 or EOF)
/// for an instance of `n` cities.
Tour parse_tsplib_tour(std::string_view text, std::size_t n, std::string source_name = "tour");

/// CSV encoding of an instance: "# name" then one "x,y" row per city, with
/// shortest round-trip decimal formatting.
std::string write_coords_csv(const Instance& instance);

/// TSPLIB encoding with EDGE_WEIGHT_TYPE EUC_2D.
std::string write_tsplib(const Instance& instance);

/// The bundled 5-city demo instance: (0,0) (1,3) (4,3) (6,1) (3,0), exact Euclidean.
Instance builtin_instance();

/// `builtin_instance()` as CSV; byte-stable.
std::string write_builtin_instance();

/// Reads a file and dispatches on extension (.tsp -> TSPLIB, .csv -> CSV);
/// other extensions are sniffed for TSPLIB keywords. I/O failures throw
/// ParseError with line 0.
ParsedInstance load_instance_file(const std::filesystem::path& path);

}  // namespace swarmtsp
