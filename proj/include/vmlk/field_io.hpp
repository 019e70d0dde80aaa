#pragma once

#include <iosfwd>
#include <string>

#include "vmlk/grid.hpp"

namespace vmlk {

// Torus fields as CSV: header `x1,x2,x3,value` (ScalarField) or
// `x1,x2,x3,v1,v2,v3` (VecField), one row per node in row-major order,
// every number printed with 17 significant digits.

void write_csv(std::ostream& os, const ScalarField& s);
void write_csv(std::ostream& os, const VecField& v);
void write_csv(const std::string& path, const ScalarField& s);
void write_csv(const std::string& path, const VecField& v);

/// The grid size is recovered from the row count, which must be a cube.
ScalarField read_scalar_csv(std::istream& is);
VecField read_vec_csv(std::istream& is);
ScalarField read_scalar_csv(const std::string& path);
VecField read_vec_csv(const std::string& path);

/// printf("%.17g") formatting shared by all text outputs.
std::string format_double(double x);

}  // namespace vmlk
