#pragma once

#include <iosfwd>
#include <string>

#include "rasch/response_matrix.hpp"

namespace rasch {

// On-disk encodings of a response matrix.
//
//   csv:            header row of item identifiers, then one row per user
//                   with cells in {0, 1, NA}.  UTF-8, comma separated.
//   dense-sentinel: no header; integer cells in {0, 1, -99999} where the
//                   sentinel marks a missing response.
enum class FileFormat {
  csv,
  dense_sentinel,
};

inline constexpr int kMissingSentinel = -99999;

// Parses "csv" or "dense-sentinel"; throws ContractError otherwise.
FileFormat parse_format_name(const std::string& name);
std::string format_name(FileFormat format);

ResponseMatrix load_responses(std::istream& in, FileFormat format);
ResponseMatrix load_responses_file(const std::string& path, FileFormat format);

// Writes the canonical form; loading it back reproduces the bytes exactly.
void save_responses(const ResponseMatrix& x, std::ostream& out, FileFormat format);
void save_responses_file(const ResponseMatrix& x, const std::string& path, FileFormat format);

}  // namespace rasch
