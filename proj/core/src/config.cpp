#include "coxtile/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "coxtile/errors.hpp"

namespace coxtile {
namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: bad integer for " + key + ": '" + value + "'");
  }
}

double parse_f64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: bad number for " + key + ": '" + value + "'");
  }
}

}  // namespace

void Config::apply(const std::string& key, const std::string& value) {
  if (key == "group_cap") {
    group_cap = parse_u64(key, value);
  } else if (key == "word_cap") {
    word_cap = parse_u64(key, value);
  } else if (key == "min_steepness") {
    min_steepness = parse_f64(key, value);
  } else if (key == "svg_scale") {
    svg_scale = parse_f64(key, value);
    if (svg_scale <= 0) throw ParseError("config: svg_scale must be positive");
  } else {
    throw ParseError("config: unknown key '" + key + "'");
  }
}

void Config::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot read '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config: " + path + ":" + std::to_string(lineno) +
                       ": expected key=value");
    apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

Config Config::from_environment() {
  Config cfg;
  if (const char* path = std::getenv("COXTILE_CONFIG"); path && *path)
    cfg.apply_file(path);
  return cfg;
}

}  // namespace coxtile
