#ifndef GFRUST_GRAPH_HPP
#define GFRUST_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gfrust/sym_matrix.hpp"

namespace gfrust {

using Perm = std::vector<int>;

/// Undirected graph with uniform degree and stored symmetry generators.
/// Catalog constructors guarantee vertex/edge transitivity; user-supplied
/// graphs must pass check_symmetric_graph.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted pairs (a < b)
  int degree = 0;
  std::vector<Perm> generators;
  std::string name;
};

enum class GraphFamily { Ring, Torus, Complete, HoneycombTorus, TriangularTorus, Platonic };

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

struct GraphSpec {
  GraphFamily family = GraphFamily::Ring;
  int n = 0;        // ring/complete vertex count, torus sites per axis
  int dim = 1;      // torus dimension
  int cells = 0;    // honeycomb/triangular linear size L
  PlatonicSolid solid = PlatonicSolid::Tetrahedron;

  static GraphSpec ring(int n) { return {GraphFamily::Ring, n, 1, 0, {}}; }
  static GraphSpec torus(int n, int d) { return {GraphFamily::Torus, n, d, 0, {}}; }
  static GraphSpec complete(int n) { return {GraphFamily::Complete, n, 1, 0, {}}; }
  static GraphSpec honeycomb_torus(int l) {
    return {GraphFamily::HoneycombTorus, 0, 1, l, {}};
  }
  static GraphSpec triangular_torus(int l) {
    return {GraphFamily::TriangularTorus, 0, 1, l, {}};
  }
  static GraphSpec platonic(PlatonicSolid s) {
    return {GraphFamily::Platonic, 0, 1, 0, s};
  }
};

inline const char* platonic_name(PlatonicSolid s) {
  switch (s) {
    case PlatonicSolid::Tetrahedron: return "tetrahedron";
    case PlatonicSolid::Cube: return "cube";
    case PlatonicSolid::Octahedron: return "octahedron";
    case PlatonicSolid::Dodecahedron: return "dodecahedron";
    case PlatonicSolid::Icosahedron: return "icosahedron";
  }
  return "?";
}

namespace detail {

inline void add_edge(std::vector<std::pair<int, int>>& edges, int a, int b) {
  if (a == b) throw Error("graph: self-loop rejected");
  edges.emplace_back(std::min(a, b), std::max(a, b));
}

inline void finalize_edges(std::vector<std::pair<int, int>>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

inline Graph make_ring(int n) {
  if (n < 3) throw Error("ring: N >= 3 required");
  Graph g;
  g.n = n;
  g.degree = 2;
  g.name = "ring(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i) add_edge(g.edges, i, (i + 1) % n);
  finalize_edges(g.edges);
  Perm rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  g.generators = {rot, refl};
  return g;
}

inline Graph make_complete(int n) {
  if (n < 3) throw Error("complete: N >= 3 required");
  Graph g;
  g.n = n;
  g.degree = n - 1;
  g.name = "complete(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add_edge(g.edges, i, j);
  finalize_edges(g.edges);
  // adjacent transpositions generate the full symmetric group
  for (int i = 0; i + 1 < n; ++i) {
    Perm t(n);
    for (int j = 0; j < n; ++j) t[j] = j;
    std::swap(t[i], t[i + 1]);
    g.generators.push_back(t);
  }
  return g;
}

inline Graph make_torus(int n, int d) {
  if (n < 3) throw Error("torus: N >= 3 required");
  if (d < 1) throw Error("torus: d >= 1 required");
  long total = 1;
  for (int a = 0; a < d; ++a) total *= n;
  if (total > 1'000'000) throw Error("torus: too many sites");
  Graph g;
  g.n = static_cast<int>(total);
  g.degree = 2 * d;
  g.name = "torus(" + std::to_string(n) + "," + std::to_string(d) + ")";

  std::vector<long> stride(d, 1);
  for (int a = 1; a < d; ++a) stride[a] = stride[a - 1] * n;
  auto coords = [&](long idx) {
    std::vector<int> c(d);
    for (int a = 0; a < d; ++a) c[a] = static_cast<int>(idx / stride[a]) % n;
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    long idx = 0;
    for (int a = 0; a < d; ++a) idx += ((c[a] % n + n) % n) * stride[a];
    return idx;
  };

  for (long v = 0; v < total; ++v) {
    std::vector<int> c = coords(v);
    for (int a = 0; a < d; ++a) {
      std::vector<int> c2 = c;
      c2[a] += 1;
      add_edge(g.edges, static_cast<int>(v), static_cast<int>(index(c2)));
    }
  }
  finalize_edges(g.edges);

  for (int a = 0; a < d; ++a) {
    Perm shift(g.n), refl(g.n);
    for (long v = 0; v < total; ++v) {
      std::vector<int> c = coords(v);
      std::vector<int> cs = c, cr = c;
      cs[a] += 1;
      cr[a] = -cr[a];
      shift[v] = static_cast<int>(index(cs));
      refl[v] = static_cast<int>(index(cr));
    }
    g.generators.push_back(shift);
    g.generators.push_back(refl);
  }
  for (int a = 0; a + 1 < d; ++a) {
    Perm swap_axes(g.n);
    for (long v = 0; v < total; ++v) {
      std::vector<int> c = coords(v);
      std::swap(c[a], c[a + 1]);
      swap_axes[v] = static_cast<int>(index(c));
    }
    g.generators.push_back(swap_axes);
  }
  return g;
}

// Two-site unit cells: A(x,y) -> 2(x + L y), B(x,y) -> 2(x + L y) + 1.
// A(x,y) bonds to B(x,y), B(x-1,y), B(x,y-1).
inline Graph make_honeycomb(int l) {
  if (l < 3) throw Error("honeycomb_torus: L >= 3 required");
  Graph g;
  g.n = 2 * l * l;
  g.degree = 3;
  g.name = "honeycomb(" + std::to_string(l) + ")";
  auto A = [l](int x, int y) {
    return 2 * (((x % l + l) % l) + l * ((y % l + l) % l));
  };
  auto B = [A](int x, int y) { return A(x, y) + 1; };
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < l; ++y) {
      add_edge(g.edges, A(x, y), B(x, y));
      add_edge(g.edges, A(x, y), B(x - 1, y));
      add_edge(g.edges, A(x, y), B(x, y - 1));
    }
  finalize_edges(g.edges);
  Perm tx(g.n), ty(g.n), inv(g.n), c3(g.n);
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < l; ++y) {
      tx[A(x, y)] = A(x + 1, y);
      tx[B(x, y)] = B(x + 1, y);
      ty[A(x, y)] = A(x, y + 1);
      ty[B(x, y)] = B(x, y + 1);
      inv[A(x, y)] = B(-x, -y);          // inversion through the (0,0) bond center
      inv[B(x, y)] = A(-x, -y);
      c3[A(x, y)] = A(-x - y, x);        // 120-degree rotation about A(0,0)
      c3[B(x, y)] = B(-x - y - 1, x);
    }
  g.generators = {tx, ty, inv, c3};
  return g;
}

// Six-neighbor triangular lattice on an L x L torus; neighbor offsets
// +-(1,0), +-(0,1), +-(1,1).
inline Graph make_triangular(int l) {
  if (l < 3) throw Error("triangular_torus: L >= 3 required");
  Graph g;
  g.n = l * l;
  g.degree = 6;
  g.name = "triangular(" + std::to_string(l) + ")";
  auto V = [l](int x, int y) {
    return ((x % l + l) % l) + l * ((y % l + l) % l);
  };
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < l; ++y) {
      add_edge(g.edges, V(x, y), V(x + 1, y));
      add_edge(g.edges, V(x, y), V(x, y + 1));
      add_edge(g.edges, V(x, y), V(x + 1, y + 1));
    }
  finalize_edges(g.edges);
  Perm tx(g.n), ty(g.n), c6(g.n), refl(g.n);
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < l; ++y) {
      tx[V(x, y)] = V(x + 1, y);
      ty[V(x, y)] = V(x, y + 1);
      c6[V(x, y)] = V(x - y, x);  // 60-degree rotation about the origin
      refl[V(x, y)] = V(y, x);
    }
  g.generators = {tx, ty, c6, refl};
  return g;
}

struct PlatonicData {
  int n;
  int degree;
  std::vector<std::pair<int, int>> edges;
  std::vector<Perm> generators;
};

inline const PlatonicData& platonic_data(PlatonicSolid s) {
  // Adjacency lists and rotation-group generators are canonical embedded
  // data; vertex 0 and 1 are always adjacent (the designated edge).
  static const PlatonicData tet{
      4, 3,
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{1, 2, 0, 3}, {0, 2, 3, 1}, {1, 0, 3, 2}}};
  static const PlatonicData cube{
      8, 3,
      {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
       {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},
      // vertices are bit triples (x, y, z), index x + 2y + 4z
      {{2, 0, 3, 1, 6, 4, 7, 5},   // quarter turn about z
       {0, 4, 1, 5, 2, 6, 3, 7},   // third turn about the main diagonal
       {1, 0, 5, 4, 3, 2, 7, 6}}}; // half turn swapping the 0-1 edge
  static const PlatonicData oct{
      6, 4,
      {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
       {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}},
      // vertices +x, +y, +z, -x, -y, -z
      {{1, 3, 2, 4, 0, 5}, {1, 2, 0, 4, 5, 3}}};
  static const PlatonicData ico{
      12, 5,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {1, 6},
       {1, 10}, {2, 3}, {2, 6}, {2, 7}, {3, 4}, {3, 7}, {3, 8}, {4, 5},
       {4, 8}, {4, 9}, {5, 9}, {5, 10}, {6, 7}, {6, 10}, {6, 11}, {7, 8},
       {7, 11}, {8, 9}, {8, 11}, {9, 10}, {9, 11}, {10, 11}},
      {{0, 2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 11},   // fifth turn about the 0-11 axis
       {2, 1, 0, 3, 7, 6, 5, 4, 8, 11, 10, 9},
       {1, 0, 2, 6, 10, 5, 3, 7, 11, 9, 4, 8}}}; // swaps the 0-1 edge
  static const PlatonicData dod{
      20, 3,
      {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
       {3, 8}, {4, 9}, {5, 10}, {5, 14}, {6, 10}, {6, 11}, {7, 11}, {7, 12},
       {8, 12}, {8, 13}, {9, 13}, {9, 14}, {10, 15}, {11, 16}, {12, 17},
       {13, 18}, {14, 19}, {15, 16}, {15, 19}, {16, 17}, {17, 18}, {18, 19}},
      {{1, 2, 3, 4, 0, 6, 7, 8, 9, 5, 11, 12, 13, 14, 10, 16, 17, 18, 19, 15},
       {1, 0, 4, 3, 2, 6, 5, 9, 8, 7, 10, 14, 13, 12, 11, 15, 19, 18, 17, 16},
       {5, 0, 1, 6, 10, 14, 4, 2, 11, 15, 9, 3, 7, 16, 19, 13, 8, 12, 17, 18}}};
  switch (s) {
    case PlatonicSolid::Tetrahedron: return tet;
    case PlatonicSolid::Cube: return cube;
    case PlatonicSolid::Octahedron: return oct;
    case PlatonicSolid::Icosahedron: return ico;
    case PlatonicSolid::Dodecahedron: return dod;
  }
  throw Error("unknown platonic solid");
}

inline Graph make_platonic(PlatonicSolid s) {
  const PlatonicData& d = platonic_data(s);
  Graph g;
  g.n = d.n;
  g.degree = d.degree;
  g.edges = d.edges;
  g.generators = d.generators;
  g.name = platonic_name(s);
  return g;
}

}  // namespace detail

inline Graph build_graph(const GraphSpec& spec) {
  Graph g;
  switch (spec.family) {
    case GraphFamily::Ring: g = detail::make_ring(spec.n); break;
    case GraphFamily::Torus: g = detail::make_torus(spec.n, spec.dim); break;
    case GraphFamily::Complete: g = detail::make_complete(spec.n); break;
    case GraphFamily::HoneycombTorus: g = detail::make_honeycomb(spec.cells); break;
    case GraphFamily::TriangularTorus: g = detail::make_triangular(spec.cells); break;
    case GraphFamily::Platonic: g = detail::make_platonic(spec.solid); break;
  }
  // catalog invariants, checked on integers
  std::vector<int> deg(g.n, 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != g.degree) throw Error(g.name + ": non-uniform degree");
  if (2 * static_cast<int>(g.edges.size()) != g.n * g.degree)
    throw Error(g.name + ": edge count mismatch");
  return g;
}

inline SymMatrix adjacency(const Graph& g) {
  SymMatrix a(g.n);
  for (auto [i, j] : g.edges) a.set(i, j, 1.0);
  return a;
}

/// Generators must commute with the adjacency; exact integer check.
inline bool commutes_with_adjacency(const Graph& g, const Perm& p) {
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  for (auto [a, b] : g.edges) {
    const int ia = p[a], ib = p[b];
    if (!edges.count({std::min(ia, ib), std::max(ia, ib)})) return false;
  }
  return true;
}

struct SymmetryCheck {
  bool ok = false;
  std::string reason;
  std::size_t group_order = 0;
};

/// Vertex transitivity, edge transitivity, and a swap element for the
/// designated edge (taken as the first edge). Group closure by
/// breadth-first multiplication of the stored generators.
inline SymmetryCheck check_symmetric_graph(const Graph& g,
                                           std::size_t cap = 1'000'000) {
  SymmetryCheck r;
  if (g.generators.empty()) {
    r.reason = "no generators stored";
    return r;
  }
  for (const Perm& p : g.generators) {
    if (static_cast<int>(p.size()) != g.n) {
      r.reason = "generator degree mismatch";
      return r;
    }
    std::vector<char> seen(g.n, 0);
    for (int v : p) {
      if (v < 0 || v >= g.n || seen[v]) {
        r.reason = "generator is not a permutation";
        return r;
      }
      seen[v] = 1;
    }
    if (!commutes_with_adjacency(g, p)) {
      r.reason = "generator does not commute with adjacency";
      return r;
    }
  }
  if (g.edges.empty()) {
    r.reason = "graph has no edges";
    return r;
  }

  // Orbit certificates: transitivity and the swap element are decided on
  // orbits (at most n^2 states), never on the full group, so factorial
  // groups such as complete-graph automorphisms stay tractable.
  const auto [k, l] = g.edges.front();
  {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{k};
    seen[k] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Perm& p : g.generators)
        if (!seen[p[v]]) {
          seen[p[v]] = 1;
          ++count;
          stack.push_back(p[v]);
        }
    }
    if (count != g.n) {
      r.reason = "vertex orbits split";
      return r;
    }
  }
  {
    auto norm = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    std::set<std::pair<int, int>> seen{norm(k, l)};
    std::vector<std::pair<int, int>> stack{{k, l}};
    while (!stack.empty()) {
      const auto [a, b] = stack.back();
      stack.pop_back();
      for (const Perm& p : g.generators)
        if (seen.insert(norm(p[a], p[b])).second) stack.push_back({p[a], p[b]});
    }
    if (seen.size() != g.edges.size()) {
      r.reason = "edge orbits split";
      return r;
    }
  }
  {
    // ordered-pair reachability: some word in the generators maps (k,l) to (l,k)
    std::set<std::pair<int, int>> seen{{k, l}};
    std::vector<std::pair<int, int>> stack{{k, l}};
    bool swap_found = false;
    while (!stack.empty() && !swap_found) {
      const auto [a, b] = stack.back();
      stack.pop_back();
      for (const Perm& p : g.generators)
        if (seen.insert({p[a], p[b]}).second) {
          if (p[a] == l && p[b] == k) swap_found = true;
          stack.push_back({p[a], p[b]});
        }
    }
    if (!swap_found) {
      r.reason = "no element swaps the designated edge";
      return r;
    }
  }

  // group order is reported when the closure stays small; a closure past the
  // cap does not fail the check because the orbit certificates above already
  // decided it
  const std::size_t order_cap = std::min<std::size_t>(cap, 5000);
  Perm id(g.n);
  for (int i = 0; i < g.n; ++i) id[i] = i;
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  bool overflow = false;
  while (!frontier.empty() && !overflow) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& p : g.generators) {
        Perm c(g.n);
        for (int i = 0; i < g.n; ++i) c[i] = p[e[i]];
        if (elems.insert(c).second) {
          if (elems.size() > order_cap) {
            overflow = true;
            break;
          }
          next.push_back(std::move(c));
        }
      }
      if (overflow) break;
    }
    frontier = std::move(next);
  }
  r.group_order = overflow ? 0 : elems.size();
  r.ok = true;
  return r;
}

/// Text import: lines `n <N>`, `e <k> <l>` (0-based), `g <N images>`.
/// The caller is expected to run check_symmetric_graph before use.
inline Graph parse_graph(std::istream& in) {
  Graph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "n") {
      if (!(ss >> g.n) || g.n < 2)
        throw Error("graph import line " + std::to_string(lineno) + ": bad vertex count");
    } else if (tag == "e") {
      int a, b;
      if (!(ss >> a >> b) || a < 0 || b < 0 || a >= g.n || b >= g.n)
        throw Error("graph import line " + std::to_string(lineno) + ": bad edge");
      detail::add_edge(g.edges, a, b);
    } else if (tag == "g") {
      Perm p;
      int v;
      while (ss >> v) p.push_back(v);
      if (static_cast<int>(p.size()) != g.n)
        throw Error("graph import line " + std::to_string(lineno) +
                    ": permutation needs " + std::to_string(g.n) + " images");
      g.generators.push_back(std::move(p));
    } else {
      throw Error("graph import line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (g.n == 0) throw Error("graph import: missing 'n' line");
  detail::finalize_edges(g.edges);
  std::vector<int> deg(g.n, 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  g.degree = g.n > 0 && !g.edges.empty() ? deg[g.edges.front().first] : 0;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != g.degree) throw Error("graph import: non-uniform degree");
  g.name = "custom(" + std::to_string(g.n) + ")";
  return g;
}

}  // namespace gfrust

#endif  // GFRUST_GRAPH_HPP
