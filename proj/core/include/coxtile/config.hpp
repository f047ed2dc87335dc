#pragma once

#include <cstdint>
#include <string>

namespace coxtile {

// Runtime limits and geometry defaults.  Values can be loaded from a simple
// key=value file; the COXTILE_CONFIG environment variable names a default
// file.  Later sources override earlier ones; command-line flags override
// everything.
struct Config {
  uint64_t group_cap = 1000000;    // largest group order materialized by BFS
  uint64_t word_cap = 10000000;    // largest reduced-word set materialized
  double min_steepness = 1.0471975511965976;  // pi/3, type-D strict edge angle
  double svg_scale = 60.0;         // pixels per unit edge length

  // Applies one key=value assignment; unknown keys and malformed values
  // raise ParseError.
  void apply(const std::string& key, const std::string& value);

  // Reads a key=value file ('#' comments and blank lines allowed).
  void apply_file(const std::string& path);

  // Defaults, then the file named by COXTILE_CONFIG if the variable is set.
  static Config from_environment();
};

}  // namespace coxtile
