#include "morsespec/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "morsespec/error.hpp"
#include "morsespec/fields.hpp"

namespace morsespec {

namespace {

bool skip_line(const std::string& line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return in;
}

double parse_value(const std::string& token, const std::string& source, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError(source, line, "not a number: '" + token + "'");
  }
  while (used < token.size() && (token[used] == ' ' || token[used] == '\t' || token[used] == '\r'))
    ++used;
  if (used != token.size()) throw ParseError(source, line, "not a number: '" + token + "'");
  if (!std::isfinite(v)) throw ParseError(source, line, "non-finite value");
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw Error(ErrorKind::Parse, "bad " + what + ": '" + s + "'");
  return v;
}

}  // namespace

std::vector<std::vector<long long>> read_simplices(std::istream& in, const std::string& source) {
  std::vector<std::vector<long long>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    std::vector<long long> simplex;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size())
        throw ParseError(source, lineno, "bad vertex label '" + tok + "'");
      simplex.push_back(v);
    }
    out.push_back(std::move(simplex));
  }
  return out;
}

CellComplex read_simplicial_file(const std::string& path) {
  auto in = open(path);
  return build_from_simplicial(read_simplices(in, path));
}

std::vector<double> read_field(std::istream& in, const std::string& source,
                               const CellComplex& complex) {
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  int rows = 0;
  bool csv = false;
  const auto* torus = std::get_if<TorusGrid>(&complex.descriptor());
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    if (line.find(',') != std::string::npos) {
      if (!torus) throw ParseError(source, lineno, "CSV rows are only accepted for torus grids");
      csv = true;
      std::istringstream ls(line);
      std::string tok;
      int cols = 0;
      while (std::getline(ls, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        values.push_back(parse_value(b == std::string::npos ? "" : tok.substr(b), source, lineno));
        ++cols;
      }
      if (cols != torus->nx)
        throw ParseError(source, lineno,
                         "expected " + std::to_string(torus->nx) + " columns, got " + std::to_string(cols));
      ++rows;
    } else {
      if (csv) throw ParseError(source, lineno, "mixed CSV and single-value lines");
      const auto b = line.find_first_not_of(" \t");
      values.push_back(parse_value(line.substr(b), source, lineno));
    }
  }
  if (csv && rows != torus->ny)
    throw ParseError(source, lineno,
                     "expected " + std::to_string(torus->ny) + " rows, got " + std::to_string(rows));
  if (values.size() != complex.vertex_count())
    throw Error(ErrorKind::ArityMismatch, source + ": expected " +
                                              std::to_string(complex.vertex_count()) +
                                              " values, got " + std::to_string(values.size()));
  return values;
}

std::vector<double> read_field_file(const std::string& path, const CellComplex& complex) {
  auto in = open(path);
  return read_field(in, path, complex);
}

CellComplex load_complex(const std::string& spec) {
  if (spec.rfind("torus:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected torus:NX:NY");
    return build_torus_grid(parse_int(rest.substr(0, colon), "torus width"),
                            parse_int(rest.substr(colon + 1), "torus height"));
  }
  if (spec.rfind("file:", 0) == 0) return read_simplicial_file(spec.substr(5));
  throw Error(ErrorKind::Parse, "complex must be torus:NX:NY or file:PATH, got '" + spec + "'");
}

std::vector<double> load_field(const std::string& spec, const CellComplex& complex) {
  if (spec.rfind("expr:", 0) == 0) return named_values(complex, spec.substr(5));
  return read_field_file(spec, complex);
}

}  // namespace morsespec
