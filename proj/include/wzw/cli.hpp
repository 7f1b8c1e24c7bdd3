#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wzw/lie.hpp"

namespace wzw::cli {

/// Everything a run depends on; identical configurations (same seed
/// included) produce byte-identical output.
struct RunConfig {
  std::string algebra = "sl2";
  long level = 1;
  int depth = 3;
  int max_mode = 3;
  std::vector<lie::Weight> labels;
  std::vector<Rational> points;
  long genus = 0;
  std::string format = "json";  // json | table
  std::uint64_t seed = 1;
};

/// Weight lists are comma separated; multi-coordinate weights group with
/// colons (e.g. "1:0,0:1" for sl3). Points accept "p/q".
std::vector<lie::Weight> parse_labels(const std::string& s, std::size_t rank);
lie::Weight parse_weight(const std::string& s, std::size_t rank);
std::vector<Rational> parse_points(const std::string& s);

/// Exit code 0: success; 1: a requested verification found a nonzero
/// residual (the offending identity is printed); 2: argument errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzw::cli
