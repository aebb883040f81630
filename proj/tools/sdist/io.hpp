#pragma once

#include <sdist/point_set.hpp>
#include <sdist/polynomial.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdist::cli {

/// Bad command-line input: unreadable file, malformed file content, bad
/// option value. The message names the file position or option.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// Point files: one point per line, rational coordinates separated by
// whitespace, '#' starts a comment, blank lines are skipped.
PointSet parse_point_set(std::string_view text, const std::string& source = "<input>");

// Ideal files: one polynomial per line in the polynomial grammar, '#'
// comments, blank lines skipped. With arity == 0 the arity is the largest
// variable index used (at least 1).
struct IdealFile {
  std::size_t arity = 0;
  std::vector<Polynomial> generators;
};

IdealFile parse_ideal(std::string_view text, std::size_t arity = 0,
                      const std::string& source = "<input>");

}  // namespace sdist::cli
