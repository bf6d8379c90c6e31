#pragma once

#include <istream>
#include <string>
#include <vector>

#include "morsespec/complex.hpp"

namespace morsespec {

/// One maximal simplex per line as whitespace-separated integer vertex
/// labels. Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<long long>> read_simplices(std::istream& in, const std::string& source);
CellComplex read_simplicial_file(const std::string& path);

/// Vertex values. Torus grids take ny rows of nx comma-separated values; any
/// complex also accepts one value per line in vertex order.
std::vector<double> read_field(std::istream& in, const std::string& source,
                               const CellComplex& complex);
std::vector<double> read_field_file(const std::string& path, const CellComplex& complex);

/// "torus:NX:NY" or "file:PATH".
CellComplex load_complex(const std::string& spec);

/// "expr:NAME" for a named expression field, anything else is a path.
std::vector<double> load_field(const std::string& spec, const CellComplex& complex);

}  // namespace morsespec
