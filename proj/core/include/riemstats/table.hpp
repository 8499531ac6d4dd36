#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "riemstats/config.hpp"

namespace riemstats {

/// An n x p table of finite reals with unique row and column labels.
/// Immutable by convention once built; safe to share across readers.
struct DataTable {
  Eigen::MatrixXd values;               // n x p
  std::vector<std::string> row_labels;  // size n
  std::vector<std::string> col_labels;  // size p

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

/// Builds a table and enforces its invariants: n >= 3, p >= 1, all entries
/// finite, labels unique within each axis. Throws input_error.
DataTable make_table(Eigen::MatrixXd values,
                     std::vector<std::string> row_labels,
                     std::vector<std::string> col_labels);

/// Parses UTF-8 CSV ('.' decimal separator, ',' delimiter, header row
/// required). If the first cell of the first data row is non-numeric the
/// first column is taken as row labels; otherwise labels r1..rn are
/// generated. Throws input_error on non-numeric data cells, duplicate
/// labels, or fewer than 3 rows.
DataTable load_csv(std::istream& in);
DataTable load_csv_file(const std::string& path);

/// Writes header plus one line per row, values with enough digits to
/// round-trip exactly. load_csv(emit_csv(t)) == t for valid tables.
void emit_csv(const DataTable& table, std::ostream& out);
std::string emit_csv(const DataTable& table);

/// none: identity. zscore: each column rescaled to mean 0 and population
/// standard deviation 1. A constant column under zscore throws
/// degenerate_variance_error.
DataTable standardize(const DataTable& table, StandardizeMode mode);

}  // namespace riemstats
