#include "rasch/response_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "rasch/errors.hpp"

namespace rasch {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Response parse_csv_cell(const std::string& field, std::size_t line_no) {
  if (field == "0") return Response::negative;
  if (field == "1") return Response::positive;
  if (field == "NA") return Response::missing;
  throw ParseError("cell value '" + field + "' is not one of 0, 1, NA", line_no);
}

Response parse_sentinel_cell(const std::string& field, std::size_t line_no) {
  if (field == "0") return Response::negative;
  if (field == "1") return Response::positive;
  if (field == std::to_string(kMissingSentinel)) return Response::missing;
  throw ParseError("cell value '" + field + "' is not one of 0, 1, " +
                       std::to_string(kMissingSentinel),
                   line_no);
}

// Reads all data lines, dropping one trailing empty line if present.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(strip_cr(std::move(line)));
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

FileFormat parse_format_name(const std::string& name) {
  if (name == "csv") return FileFormat::csv;
  if (name == "dense-sentinel") return FileFormat::dense_sentinel;
  throw ContractError("unknown format '" + name + "'; expected csv or dense-sentinel");
}

std::string format_name(FileFormat format) {
  return format == FileFormat::csv ? "csv" : "dense-sentinel";
}

ResponseMatrix load_responses(std::istream& in, FileFormat format) {
  const std::vector<std::string> lines = read_lines(in);
  const bool has_header = format == FileFormat::csv;

  if (lines.size() < (has_header ? 2u : 1u))
    throw ParseError("file has no response rows", lines.size() + 1);

  std::vector<std::string> item_ids;
  std::size_t first_data_line = 0;
  if (has_header) {
    item_ids = split_fields(lines[0]);
    for (std::size_t i = 0; i < item_ids.size(); ++i)
      if (item_ids[i].empty()) throw ParseError("empty item identifier in header", 1);
    first_data_line = 1;
  } else {
    item_ids = default_item_ids(split_fields(lines[0]).size());
  }

  const std::size_t n_items = item_ids.size();
  if (n_items < 2) throw ParseError("need at least 2 item columns", 1);
  const std::size_t n_users = lines.size() - first_data_line;
  if (n_users < 1) throw ParseError("need at least 1 user row", lines.size());

  ResponseMatrix x(n_users, n_items, std::move(item_ids));
  for (std::size_t u = 0; u < n_users; ++u) {
    const std::size_t line_no = first_data_line + u + 1;  // 1-based file line
    const std::vector<std::string> fields = split_fields(lines[first_data_line + u]);
    if (fields.size() != n_items)
      throw ParseError("row has " + std::to_string(fields.size()) + " values, expected " +
                           std::to_string(n_items),
                       line_no);
    for (std::size_t i = 0; i < n_items; ++i) {
      x.set(u, i,
            format == FileFormat::csv ? parse_csv_cell(fields[i], line_no)
                                      : parse_sentinel_cell(fields[i], line_no));
    }
  }
  return x;
}

ResponseMatrix load_responses_file(const std::string& path, FileFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open '" + path + "' for reading");
  return load_responses(in, format);
}

void save_responses(const ResponseMatrix& x, std::ostream& out, FileFormat format) {
  if (format == FileFormat::csv) {
    for (std::size_t i = 0; i < x.n_items(); ++i) {
      if (i > 0) out << ',';
      out << x.item_ids()[i];
    }
    out << '\n';
  }
  for (std::size_t u = 0; u < x.n_users(); ++u) {
    for (std::size_t i = 0; i < x.n_items(); ++i) {
      if (i > 0) out << ',';
      switch (x.at(u, i)) {
        case Response::negative: out << '0'; break;
        case Response::positive: out << '1'; break;
        case Response::missing:
          if (format == FileFormat::csv)
            out << "NA";
          else
            out << kMissingSentinel;
          break;
      }
    }
    out << '\n';
  }
}

void save_responses_file(const ResponseMatrix& x, const std::string& path, FileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot open '" + path + "' for writing");
  save_responses(x, out, format);
}

}  // namespace rasch
