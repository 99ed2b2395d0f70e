#include "gaitcoord/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaitcoord::csv {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

double parse_double(const std::string& cell, const std::string& context) {
    if (cell.empty() || cell == "nan" || cell == "NaN" || cell == "NAN")
        return std::nan("");
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw InputError("malformed numeric cell '" + cell + "' (" + context + ")");
    return v;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? std::string()
                                               : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

} // namespace

int Table::column_index(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

int Table::require_column(const std::string& name) const {
    const int idx = column_index(name);
    if (idx < 0) throw InputError("missing required column '" + name + "'");
    return idx;
}

double Table::numeric(Eigen::Index row, int col) const {
    const auto& cells = rows[static_cast<size_t>(row)];
    if (col < 0 || static_cast<size_t>(col) >= cells.size())
        throw InputError("row " + std::to_string(row) + " lacks column " +
                         std::to_string(col));
    return parse_double(cells[static_cast<size_t>(col)],
                        header[static_cast<size_t>(col)] + " row " +
                            std::to_string(row));
}

Table read_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    Table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.comments.push_back(line.substr(1));
            continue;
        }
        if (!have_header) {
            table.header = split_line(line);
            have_header = true;
            continue;
        }
        auto cells = split_line(line);
        if (cells.size() != table.header.size())
            throw InputError("'" + path.string() + "': row " +
                             std::to_string(table.rows.size()) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(table.header.size()));
        table.rows.push_back(std::move(cells));
    }
    if (!have_header) throw InputError("'" + path.string() + "': empty file");
    return table;
}

void write_table(const std::filesystem::path& path, const Table& table) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp.string() + "'");
        for (const auto& c : table.comments) out << '#' << c << '\n';
        for (size_t i = 0; i < table.header.size(); ++i)
            out << table.header[i] << (i + 1 < table.header.size() ? "," : "");
        out << '\n';
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << row[i] << (i + 1 < row.size() ? "," : "");
            out << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

Table make_numeric_table(const std::vector<std::string>& header,
                         const Eigen::MatrixXd& columns) {
    if (static_cast<Eigen::Index>(header.size()) != columns.cols())
        throw InputError("make_numeric_table: header/column count mismatch");
    Table table;
    table.header = header;
    table.rows.reserve(static_cast<size_t>(columns.rows()));
    for (Eigen::Index r = 0; r < columns.rows(); ++r) {
        std::vector<std::string> row(header.size());
        for (Eigen::Index c = 0; c < columns.cols(); ++c)
            row[static_cast<size_t>(c)] = format_double(columns(r, c));
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace gaitcoord::csv
