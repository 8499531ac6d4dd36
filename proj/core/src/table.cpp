#include "riemstats/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "riemstats/errors.hpp"
#include "riemstats/json_writer.hpp"

namespace riemstats {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

bool parse_number(const std::string& cell, double& out) {
  const std::string t = trim(cell);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// Splits one CSV record; double quotes wrap fields, "" escapes a quote.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string quote_if_needed(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void check_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw input_error(std::string("duplicate ") + axis + " label: " + label);
    }
  }
}

}  // namespace

DataTable make_table(Eigen::MatrixXd values,
                     std::vector<std::string> row_labels,
                     std::vector<std::string> col_labels) {
  const Eigen::Index n = values.rows();
  const Eigen::Index p = values.cols();
  if (n < 3) throw input_error("fewer than 3 rows");
  if (p < 1) throw input_error("table needs at least one column");
  if (static_cast<Eigen::Index>(row_labels.size()) != n ||
      static_cast<Eigen::Index>(col_labels.size()) != p) {
    throw input_error("label counts do not match the value matrix");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      if (!std::isfinite(values(i, j))) {
        throw input_error("non-finite value at row " + std::to_string(i) +
                          ", column " + std::to_string(j));
      }
    }
  }
  check_unique(row_labels, "row");
  check_unique(col_labels, "column");
  return DataTable{std::move(values), std::move(row_labels),
                   std::move(col_labels)};
}

DataTable load_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && records.empty()) continue;  // leading blank lines
    if (line.empty()) continue;
    records.push_back(split_csv_line(line));
  }
  if (records.empty()) throw input_error("empty CSV input");
  if (records.size() < 4) throw input_error("fewer than 3 rows");

  const auto& header = records.front();
  double probe;
  const bool has_row_labels = !parse_number(records[1].front(), probe);

  const std::size_t first_data_col = has_row_labels ? 1 : 0;
  if (header.size() <= first_data_col) {
    throw input_error("header has no data columns");
  }
  const std::size_t p = header.size() - first_data_col;
  const std::size_t n = records.size() - 1;

  std::vector<std::string> col_labels(header.begin() + first_data_col,
                                      header.end());
  std::vector<std::string> row_labels;
  Eigen::MatrixXd values(static_cast<Eigen::Index>(n),
                         static_cast<Eigen::Index>(p));

  for (std::size_t r = 0; r < n; ++r) {
    const auto& record = records[r + 1];
    if (record.size() != p + first_data_col) {
      throw input_error("row " + std::to_string(r + 1) + " has " +
                        std::to_string(record.size()) + " fields, expected " +
                        std::to_string(p + first_data_col));
    }
    row_labels.push_back(has_row_labels ? record[0]
                                        : "r" + std::to_string(r + 1));
    for (std::size_t c = 0; c < p; ++c) {
      double v;
      if (!parse_number(record[c + first_data_col], v)) {
        throw input_error("non-numeric cell \"" + record[c + first_data_col] +
                          "\" at row " + std::to_string(r + 1) + ", column " +
                          col_labels[c]);
      }
      values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return make_table(std::move(values), std::move(row_labels),
                    std::move(col_labels));
}

DataTable load_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  return load_csv(in);
}

void emit_csv(const DataTable& table, std::ostream& out) {
  // Header keeps an empty corner cell above the row-label column.
  for (const auto& label : table.col_labels) {
    out << ',' << quote_if_needed(label);
  }
  out << '\n';
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    out << quote_if_needed(table.row_labels[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < table.cols(); ++j) {
      out << ',' << format_double(table.values(i, j));
    }
    out << '\n';
  }
}

std::string emit_csv(const DataTable& table) {
  std::ostringstream out;
  emit_csv(table, out);
  return out.str();
}

DataTable standardize(const DataTable& table, StandardizeMode mode) {
  if (mode == StandardizeMode::none) return table;

  const Eigen::Index n = table.rows();
  Eigen::MatrixXd values = table.values;
  for (Eigen::Index j = 0; j < table.cols(); ++j) {
    const auto col = table.values.col(j);
    if (col.maxCoeff() == col.minCoeff()) {
      throw degenerate_variance_error(
          "zscore requires nonzero spread, but column \"" +
          table.col_labels[static_cast<std::size_t>(j)] + "\" is constant");
    }
    const double mean = col.sum() / static_cast<double>(n);
    const double var =
        (col.array() - mean).square().sum() / static_cast<double>(n);
    const double sd = std::sqrt(var);
    values.col(j) = (col.array() - mean) / sd;
  }
  return DataTable{std::move(values), table.row_labels, table.col_labels};
}

}  // namespace riemstats
