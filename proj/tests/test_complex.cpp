#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "morsespec/complex.hpp"
#include "morsespec/error.hpp"
#include "morsespec/fields.hpp"
#include "morsespec/io.hpp"
#include "support.hpp"

using namespace morsespec;

TEST_CASE("torus grid cell counts") {
  auto t = build_torus_grid(2, 2);
  CHECK(t.count(0) == 4);
  CHECK(t.count(1) == 8);
  CHECK(t.count(2) == 4);
  CHECK(t.euler_characteristic() == 0);

  t = build_torus_grid(3, 3);
  CHECK(t.count(0) + t.count(1) + t.count(2) == 36);
  CHECK(t.euler_characteristic() == 0);

  t = build_torus_grid(4, 3);
  CHECK(t.count(0) == 12);
  CHECK(t.count(1) == 24);
  CHECK(t.count(2) == 12);
  CHECK(t.has_even_incidence());
  CHECK(t.is_torus());
}

TEST_CASE("torus grid rejects small sides") {
  CHECK_THROWS_AS(build_torus_grid(1, 5), Error);
  try {
    build_torus_grid(5, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooSmall);
  }
}

TEST_CASE("simplicial builder") {
  CHECK(support::tetrahedron_boundary().euler_characteristic() == 2);
  CHECK(support::cycle_graph(4).euler_characteristic() == 0);
  const auto tri = build_from_simplicial({{0, 1, 2}});
  CHECK(tri.euler_characteristic() == 1);
  CHECK(tri.size() == 7);
  CHECK(support::projective_plane().euler_characteristic() == 1);

  // Arbitrary labels are compacted.
  const auto far = build_from_simplicial({{10, 500}, {500, -3}});
  CHECK(far.vertex_count() == 3);
  CHECK(far.count(1) == 2);

  CHECK_THROWS_AS(build_from_simplicial({}), Error);
  try {
    build_from_simplicial({{0, 1, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedSimplex);
  }
}

TEST_CASE("builders satisfy even incidence") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    CHECK(support::random_simplicial(rng).has_even_incidence());
    CHECK(support::random_torus(rng).has_even_incidence());
  }
}

TEST_CASE("constructor validates faces") {
  std::vector<Cell> bad{{0, 0, {}}, {1, 0, {}}, {2, 2, {0, 1}}};
  CHECK_THROWS_AS(CellComplex(bad, Simplicial{}), Error);
  std::vector<Cell> dup{{0, 0, {}}, {1, 1, {0, 0}}};
  CHECK_THROWS_AS(CellComplex(dup, Simplicial{}), Error);
}

TEST_CASE("lower-star extension") {
  const auto c = support::cycle_graph(4);
  const ScalarField f(c, {0, 1, 2, 1});
  // Edges in id order: {0,1}, {0,3}, {1,2}, {2,3}.
  std::vector<double> edge_values;
  for (CellId e : c.cells_of_dim(1)) edge_values.push_back(f.value(e));
  CHECK(edge_values == std::vector<double>{1, 1, 2, 2});
  // Going round the cycle: {0,1}, {1,2}, {2,3}, {3,0}.
  const auto e = c.cells_of_dim(1);
  CHECK(std::vector<double>{f.value(e[0]), f.value(e[2]), f.value(e[3]), f.value(e[1])} ==
        std::vector<double>{1, 2, 2, 1});

  const auto t = build_torus_grid(3, 3);
  const ScalarField zero(t, std::vector<double>(9, 0.0));
  for (CellId a = 0; a < static_cast<CellId>(t.size()); ++a) CHECK(zero.value(a) == 0.0);
  for (CellId a = 0; a + 1 < static_cast<CellId>(t.size()); ++a)
    if (t.dim(a) == t.dim(a + 1)) CHECK(zero.precedes(a, a + 1));
}

TEST_CASE("total order is strict and face monotone") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto c = support::random_complex(rng);
    for (TieBreak tb : {TieBreak::Ascending, TieBreak::Descending}) {
      const ScalarField f(c, support::tied_values(c, rng), tb);
      for (CellId a = 0; a < static_cast<CellId>(c.size()); ++a) {
        for (CellId v : c.vertices(a)) CHECK(f.value(a) >= f.vertex_values()[v]);
        for (CellId b : c.faces(a)) CHECK(f.precedes(b, a));
      }
      for (CellId a = 0; a + 1 < static_cast<CellId>(c.size()); ++a)
        CHECK(f.key(a) != f.key(a + 1));
    }
  }
}

TEST_CASE("field validation") {
  const auto c = support::cycle_graph(4);
  CHECK_THROWS_AS(ScalarField(c, {0, 1, 2}), Error);
  try {
    ScalarField(c, {0, 1, NAN, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinite);
  }
}

TEST_CASE("c0 distance") {
  const auto t = build_torus_grid(4, 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = support::uniform_values(t, rng);
    const auto b = support::uniform_values(t, rng);
    const auto c = support::uniform_values(t, rng);
    const ScalarField fa(t, a), fb(t, b), fc(t, c);
    double brute = 0.0;
    for (int v = 0; v < 16; ++v) brute = std::max(brute, std::fabs(a[v] - b[v]));
    CHECK(c0_distance(fa, fb) == brute);
    CHECK(c0_distance(fa, fb) == c0_distance(fb, fa));
    CHECK(c0_distance(fa, fc) <= c0_distance(fa, fb) + c0_distance(fb, fc));
    CHECK(c0_distance(fa, fa) == 0.0);
    CHECK(c0_distance(fa, fb) > 0.0);
  }
  const auto base = support::uniform_values(t, rng);
  std::vector<double> ints(16), ints_shift(16);
  for (int v = 0; v < 16; ++v) {
    ints[v] = v;
    ints_shift[v] = v - 3.0;
  }
  CHECK(c0_distance(ScalarField(t, ints), ScalarField(t, ints_shift)) == 3.0);

  const auto other = build_torus_grid(4, 5);
  CHECK_THROWS_AS(c0_distance(ScalarField(t, base), ScalarField(other, std::vector<double>(20, 0.0))),
                  Error);
}

TEST_CASE("named fields") {
  const auto t = build_torus_grid(6, 5);
  for (const char* name : {"bump", "twobump"}) {
    auto v = named_values(t, name);
    REQUIRE(v.size() == 30);
    std::sort(v.begin(), v.end());
    CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
  }
  CHECK(named_values(t, "random:4") == named_values(t, "random:4"));
  CHECK(named_values(t, "random:4") != named_values(t, "random:5"));
  const auto shifted = named_values(t, "random:4+2.5");
  const auto plain = named_values(t, "random:4");
  for (std::size_t i = 0; i < plain.size(); ++i) CHECK(shifted[i] == plain[i] + 2.5);
  CHECK(named_values(t, "constant:-1.5") == std::vector<double>(30, -1.5));
  CHECK_THROWS_AS(named_values(t, "wiggle"), Error);
  CHECK_THROWS_AS(named_values(t, "random:x"), Error);

  const auto moved = translate_values(t, plain, 1, 2);
  CHECK(moved[2 * 6 + 1] == plain[0]);
  CHECK(translate_values(t, moved, -1, -2) == plain);
}

TEST_CASE("simplex and field readers") {
  std::istringstream s("# tetrahedron boundary\n0 1 2\n0 1 3\n\n0 2 3\n1 2 3\n");
  const auto c = build_from_simplicial(read_simplices(s, "tet"));
  CHECK(c.euler_characteristic() == 2);

  std::istringstream bad("0 1\n1 x\n");
  try {
    read_simplices(bad, "bad");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream values("0.5\n1\n-2\n3e-1\n");
  CHECK(read_field(values, "f", c) == std::vector<double>{0.5, 1, -2, 0.3});

  const auto t = build_torus_grid(3, 2);
  std::istringstream grid("1,2,3\n4, 5, 6\n");
  CHECK(read_field(grid, "g", t) == std::vector<double>{1, 2, 3, 4, 5, 6});
  std::istringstream short_row("1,2,3\n4,5\n");
  try {
    read_field(short_row, "g", t);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream nan_line("1\n2\nnan\n4\n");
  CHECK_THROWS_AS(read_field(nan_line, "f", c), ParseError);
  std::istringstream few("1\n2\n");
  CHECK_THROWS_AS(read_field(few, "f", c), Error);

  CHECK(load_complex("torus:5:4").count(2) == 20);
  CHECK_THROWS_AS(load_complex("torus:5"), Error);
  CHECK_THROWS_AS(load_complex("sphere"), Error);
}
