#include "vmlk/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace vmlk {
namespace {

std::vector<std::vector<double>> read_rows(std::istream& is, const std::string& expected_header,
                                           std::size_t columns) {
  std::string line;
  if (!std::getline(is, line)) throw Error("field csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header) throw Error("field csv: expected header '" + expected_header + "', got '" + line + "'");

  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw Error("field csv: malformed number on line " + std::to_string(lineno));
      }
    }
    if (row.size() != columns) throw Error("field csv: wrong column count on line " + std::to_string(lineno));
    rows.push_back(std::move(row));
  }
  return rows;
}

TorusGrid grid_from_rows(std::size_t n) {
  const int m = static_cast<int>(std::lround(std::cbrt(static_cast<double>(n))));
  if (m < 1 || static_cast<std::size_t>(m) * m * m != n)
    throw Error("field csv: row count " + std::to_string(n) + " is not a cube");
  return TorusGrid(m);
}

void check_positions(const TorusGrid& g, const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Vec3 x = g.position(i);
    for (int a = 0; a < 3; ++a)
      if (std::abs(rows[i][a] - x[a]) > 1e-12)
        throw Error("field csv: node coordinates out of row-major order at row " + std::to_string(i + 1));
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "' for reading");
  return is;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const ScalarField& s) {
  os << "x1,x2,x3,value\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    const Vec3 x = s.grid.position(i);
    os << format_double(x[0]) << ',' << format_double(x[1]) << ',' << format_double(x[2]) << ','
       << format_double(s.values[i]) << '\n';
  }
}

void write_csv(std::ostream& os, const VecField& v) {
  os << "x1,x2,x3,v1,v2,v3\n";
  for (std::size_t i = 0; i < v.grid.size(); ++i) {
    const Vec3 x = v.grid.position(i);
    os << format_double(x[0]) << ',' << format_double(x[1]) << ',' << format_double(x[2]);
    for (int a = 0; a < 3; ++a) os << ',' << format_double(v.components[a][i]);
    os << '\n';
  }
}

void write_csv(const std::string& path, const ScalarField& s) {
  auto os = open_out(path);
  write_csv(os, s);
}

void write_csv(const std::string& path, const VecField& v) {
  auto os = open_out(path);
  write_csv(os, v);
}

ScalarField read_scalar_csv(std::istream& is) {
  const auto rows = read_rows(is, "x1,x2,x3,value", 4);
  ScalarField s(grid_from_rows(rows.size()));
  check_positions(s.grid, rows);
  for (std::size_t i = 0; i < rows.size(); ++i) s.values[i] = rows[i][3];
  return s;
}

VecField read_vec_csv(std::istream& is) {
  const auto rows = read_rows(is, "x1,x2,x3,v1,v2,v3", 6);
  VecField v(grid_from_rows(rows.size()));
  check_positions(v.grid, rows);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int a = 0; a < 3; ++a) v.components[a][i] = rows[i][3 + a];
  return v;
}

ScalarField read_scalar_csv(const std::string& path) {
  auto is = open_in(path);
  return read_scalar_csv(is);
}

VecField read_vec_csv(const std::string& path) {
  auto is = open_in(path);
  return read_vec_csv(is);
}

}  // namespace vmlk
