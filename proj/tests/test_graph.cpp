#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "gfrust/graph.hpp"
#include "gfrust/sym_matrix.hpp"

using namespace gfrust;

namespace {

std::vector<GraphSpec> catalog() {
  std::vector<GraphSpec> specs;
  for (int n = 3; n <= 10; ++n) specs.push_back(GraphSpec::ring(n));
  for (int n = 3; n <= 8; ++n) specs.push_back(GraphSpec::complete(n));
  specs.push_back(GraphSpec::torus(3, 2));
  specs.push_back(GraphSpec::torus(4, 2));
  specs.push_back(GraphSpec::torus(3, 3));
  specs.push_back(GraphSpec::honeycomb_torus(3));
  specs.push_back(GraphSpec::honeycomb_torus(4));
  specs.push_back(GraphSpec::triangular_torus(3));
  specs.push_back(GraphSpec::triangular_torus(4));
  for (PlatonicSolid s :
       {PlatonicSolid::Tetrahedron, PlatonicSolid::Cube, PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron, PlatonicSolid::Icosahedron})
    specs.push_back(GraphSpec::platonic(s));
  return specs;
}

}  // namespace

TEST_CASE("catalog graphs satisfy the structural invariants") {
  for (const GraphSpec& spec : catalog()) {
    const Graph g = build_graph(spec);
    INFO(g.name);
    CHECK(g.n >= 3);
    CHECK(2 * g.edges.size() == static_cast<std::size_t>(g.n) * g.degree);
    // the designated pair (0, 1) is always an edge
    CHECK(g.edges.front() == std::pair<int, int>(0, 1));
    std::vector<int> deg(g.n, 0);
    for (auto [a, b] : g.edges) {
      CHECK(a < b);
      ++deg[a];
      ++deg[b];
    }
    for (int d : deg) CHECK(d == g.degree);
  }
}

TEST_CASE("catalog graphs pass the symmetry check") {
  for (const GraphSpec& spec : catalog()) {
    const Graph g = build_graph(spec);
    INFO(g.name);
    const SymmetryCheck chk = check_symmetric_graph(g);
    CHECK(chk.ok);
    // order is reported when the closure is small, zero otherwise
    if (chk.group_order > 0)
      CHECK(chk.group_order >= static_cast<std::size_t>(g.n));
  }
}

TEST_CASE("platonic vertex and edge counts") {
  struct Row {
    PlatonicSolid s;
    int n, degree, edges;
  };
  const Row rows[] = {{PlatonicSolid::Tetrahedron, 4, 3, 6},
                      {PlatonicSolid::Cube, 8, 3, 12},
                      {PlatonicSolid::Octahedron, 6, 4, 12},
                      {PlatonicSolid::Dodecahedron, 20, 3, 30},
                      {PlatonicSolid::Icosahedron, 12, 5, 30}};
  for (const Row& r : rows) {
    const Graph g = build_graph(GraphSpec::platonic(r.s));
    CHECK(g.n == r.n);
    CHECK(g.degree == r.degree);
    CHECK(g.edges.size() == static_cast<std::size_t>(r.edges));
  }
}

TEST_CASE("adjacency spectra of the platonic solids") {
  // largest eigenvalue is the degree; smallest is -degree iff bipartite
  auto spectrum = [](PlatonicSolid s) {
    const Graph g = build_graph(GraphSpec::platonic(s));
    return sym_eig(adjacency(g)).values;
  };
  const auto tet = spectrum(PlatonicSolid::Tetrahedron);
  CHECK(tet.front() == Catch::Approx(3.0).margin(1e-10));
  CHECK(tet.back() == Catch::Approx(-1.0).margin(1e-10));
  const auto cube = spectrum(PlatonicSolid::Cube);
  CHECK(cube.front() == Catch::Approx(3.0).margin(1e-10));
  CHECK(cube.back() == Catch::Approx(-3.0).margin(1e-10));  // bipartite
  const auto oct = spectrum(PlatonicSolid::Octahedron);
  CHECK(oct.front() == Catch::Approx(4.0).margin(1e-10));
  CHECK(oct.back() == Catch::Approx(-2.0).margin(1e-10));
  const auto ico = spectrum(PlatonicSolid::Icosahedron);
  CHECK(ico.front() == Catch::Approx(5.0).margin(1e-10));
  CHECK(ico.back() == Catch::Approx(-std::sqrt(5.0)).margin(1e-10));
}

TEST_CASE("generators preserve adjacency") {
  for (const GraphSpec& spec : catalog()) {
    const Graph g = build_graph(spec);
    INFO(g.name);
    for (const Perm& p : g.generators) CHECK(commutes_with_adjacency(g, p));
  }
}

TEST_CASE("a path graph is rejected as non-symmetric") {
  Graph g;
  g.n = 3;
  g.edges = {{0, 1}, {1, 2}};
  g.degree = 0;  // non-uniform; caught by the checker
  Perm mirror = {2, 1, 0};
  g.generators = {mirror};
  g.name = "path(3)";
  const SymmetryCheck chk = check_symmetric_graph(g);
  CHECK_FALSE(chk.ok);
}

TEST_CASE("complete bipartite K_2,2 equals ring(4)") {
  const Graph r4 = build_graph(GraphSpec::ring(4));
  CHECK(r4.edges.size() == 4);
  CHECK(r4.degree == 2);
}

TEST_CASE("graph import round-trips a square") {
  std::istringstream in(
      "n 4\n"
      "e 0 1\n"
      "e 1 2\n"
      "e 2 3\n"
      "e 0 3\n"
      "g 1 2 3 0\n"
      "g 1 0 3 2\n");
  const Graph g = parse_graph(in);
  CHECK(g.n == 4);
  CHECK(g.degree == 2);
  CHECK(g.edges.size() == 4);
  REQUIRE(g.generators.size() == 2);
  const SymmetryCheck chk = check_symmetric_graph(g);
  CHECK(chk.ok);
}

TEST_CASE("graph import rejects malformed input") {
  std::istringstream bad_vertex("n 4\ne 0 7\n");
  CHECK_THROWS_AS(parse_graph(bad_vertex), Error);
  std::istringstream no_header("e 0 1\n");
  CHECK_THROWS_AS(parse_graph(no_header), Error);
  // a non-permutation generator parses but fails the symmetry check
  std::istringstream bad_perm("n 3\ne 0 1\ne 1 2\ne 0 2\ng 0 0 1\n");
  const Graph g = parse_graph(bad_perm);
  CHECK_FALSE(check_symmetric_graph(g).ok);
}

TEST_CASE("honeycomb and triangular sizes") {
  const Graph h = build_graph(GraphSpec::honeycomb_torus(3));
  CHECK(h.n == 18);
  CHECK(h.degree == 3);
  const Graph t = build_graph(GraphSpec::triangular_torus(4));
  CHECK(t.n == 16);
  CHECK(t.degree == 6);
}

TEST_CASE("degenerate sizes are rejected") {
  CHECK_THROWS_AS(build_graph(GraphSpec::ring(2)), Error);
  CHECK_THROWS_AS(build_graph(GraphSpec::complete(1)), Error);
  CHECK_THROWS_AS(build_graph(GraphSpec::torus(2, 2)), Error);
}
