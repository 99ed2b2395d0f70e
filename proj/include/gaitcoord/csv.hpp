// gaitcoord CSV table I/O with canonical numeric formatting
#pragma once

#include "gaitcoord/error.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <string>
#include <vector>

namespace gaitcoord::csv {

/// Canonical decimal rendering: 9 significant digits (%.9g), "nan" for NaN.
/// The same value always renders to the same bytes.
std::string format_double(double v);

/// Parse one numeric cell. Empty cells and "nan" parse to NaN; anything else
/// unparsable throws InputError.
double parse_double(const std::string& cell, const std::string& context);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Leading '#' lines verbatim (without the '#'), preserved on write.
    std::vector<std::string> comments;

    Eigen::Index row_count() const { return static_cast<Eigen::Index>(rows.size()); }
    int column_index(const std::string& name) const;
    /// Column index; throws InputError when missing.
    int require_column(const std::string& name) const;
    double numeric(Eigen::Index row, int col) const;
};

Table read_table(const std::filesystem::path& path);

/// Write atomically (temp file + rename).
void write_table(const std::filesystem::path& path, const Table& table);

/// Convenience: build rows from a column-major numeric matrix with canonical
/// formatting (matrix column c supplies table column c).
Table make_numeric_table(const std::vector<std::string>& header,
                         const Eigen::MatrixXd& columns);

} // namespace gaitcoord::csv
