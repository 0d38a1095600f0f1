#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bandgap/config.hpp"

namespace bandgap {

// Rectangular table of finite numbers with a fixed column schema.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);  // checks width and finiteness
};

// CSV: header row, %.12e values, comma separator, LF endings.
void write_csv(const ResultTable& table, std::ostream& os);

// gnuplot-style: `# col1 col2 ...` header, whitespace-separated %.12e.
void write_plotdata(const ResultTable& table, std::ostream& os);

std::string render(const ResultTable& table, OutputFormat format);

// Writes to path (binary mode); IoError on failure.
void emit(const ResultTable& table, const std::string& path,
          OutputFormat format);

}  // namespace bandgap
