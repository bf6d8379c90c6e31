#include "morsespec/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "morsespec/error.hpp"

namespace morsespec {

namespace {

double periodic_bump(double x, double y, double cx, double cy, double nx, double ny, double width) {
  const double dx = std::sin(std::numbers::pi * (x - cx) / nx) * nx / std::numbers::pi;
  const double dy = std::sin(std::numbers::pi * (y - cy) / ny) * ny / std::numbers::pi;
  return std::exp(-(dx * dx + dy * dy) / (2.0 * width * width));
}

template <class F>
std::vector<double> sample(const CellComplex& complex, F f) {
  std::vector<double> out(complex.vertex_count());
  if (const auto* t = std::get_if<TorusGrid>(&complex.descriptor())) {
    for (int j = 0; j < t->ny; ++j)
      for (int i = 0; i < t->nx; ++i) out[j * t->nx + i] = f(i, j, t->nx, t->ny);
  } else {
    const int n = static_cast<int>(out.size());
    for (int v = 0; v < n; ++v) out[v] = f(v, 0, n, 1);
  }
  return out;
}

double parse_number(const std::string& s, const std::string& expr) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !std::isfinite(v))
    throw Error(ErrorKind::Parse, "bad number in field expression: " + expr);
  return v;
}

}  // namespace

std::vector<double> bump_values(const CellComplex& complex) {
  if (complex.is_torus())
    return sample(complex, [](int i, int j, int nx, int ny) {
      return periodic_bump(i, j, nx * 0.5 + 0.31, ny * 0.5 + 0.17, nx, ny, 0.2 * std::min(nx, ny) + 0.5) +
             1e-3 * std::sin(1.7 * i + 2.9 * j);
    });
  return sample(complex, [](int v, int, int n, int) {
    return std::cos(2.0 * std::numbers::pi * (v + 0.37) / n) + 1e-3 * v;
  });
}

std::vector<double> twobump_values(const CellComplex& complex) {
  if (complex.is_torus())
    return sample(complex, [](int i, int j, int nx, int ny) {
      const double w = 0.12 * std::min(nx, ny) + 0.5;
      return periodic_bump(i, j, nx * 0.25 + 0.23, ny * 0.3 + 0.11, nx, ny, w) +
             0.6 * periodic_bump(i, j, nx * 0.75 + 0.41, ny * 0.7 + 0.29, nx, ny, w) +
             1e-3 * std::sin(1.3 * i + 3.1 * j);
    });
  return sample(complex, [](int v, int, int n, int) {
    return std::cos(4.0 * std::numbers::pi * (v + 0.37) / n) + 0.3 * std::sin(2.0 * std::numbers::pi * v / n) +
           1e-3 * v;
  });
}

std::vector<double> random_values(const CellComplex& complex, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out(complex.vertex_count());
  for (double& v : out) v = u(rng);
  return out;
}

std::vector<double> translate_values(const CellComplex& complex, const std::vector<double>& values,
                                     int di, int dj) {
  const auto* t = std::get_if<TorusGrid>(&complex.descriptor());
  if (!t) throw Error(ErrorKind::Domain, "translation needs a torus grid");
  if (values.size() != complex.vertex_count())
    throw Error(ErrorKind::ArityMismatch, "value count does not match the grid");
  std::vector<double> out(values.size());
  for (int j = 0; j < t->ny; ++j)
    for (int i = 0; i < t->nx; ++i) {
      const int si = ((i - di) % t->nx + t->nx) % t->nx;
      const int sj = ((j - dj) % t->ny + t->ny) % t->ny;
      out[j * t->nx + i] = values[sj * t->nx + si];
    }
  return out;
}

std::vector<double> named_values(const CellComplex& complex, const std::string& expr) {
  std::string head = expr;
  double shift = 0.0;
  // A trailing +C / -C shift; skip the sign of an exponent or of the argument.
  for (std::size_t i = expr.size(); i-- > 1;) {
    if ((expr[i] == '+' || expr[i] == '-') && expr[i - 1] != 'e' && expr[i - 1] != 'E' &&
        expr[i - 1] != ':') {
      head = expr.substr(0, i);
      shift = parse_number(expr.substr(i), expr);
      break;
    }
  }
  std::vector<double> out;
  if (head == "bump") {
    out = bump_values(complex);
  } else if (head == "twobump") {
    out = twobump_values(complex);
  } else if (head.rfind("random:", 0) == 0) {
    const std::string s = head.substr(7);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Parse, "bad seed in field expression: " + expr);
    out = random_values(complex, std::stoull(s));
  } else if (head.rfind("constant:", 0) == 0) {
    out.assign(complex.vertex_count(), parse_number(head.substr(9), expr));
  } else {
    throw Error(ErrorKind::Parse, "unknown field expression: " + expr);
  }
  for (double& v : out) v += shift;
  return out;
}

}  // namespace morsespec
