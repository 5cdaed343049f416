#ifndef GFRUST_VERIFY_HPP
#define GFRUST_VERIFY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "gfrust/entanglement.hpp"
#include "gfrust/frustration.hpp"
#include "gfrust/graph.hpp"
#include "gfrust/oracle.hpp"

namespace gfrust {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  double residual = 0.0;
};

inline Check make_check(std::string name, double value, double expected,
                        double tolerance) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.expected = expected;
  c.tolerance = tolerance;
  c.residual = std::abs(value - expected);
  c.pass = c.residual <= tolerance;
  return c;
}

/// Platonic-solid and infinite-lattice table reproduction.
inline std::vector<Check> verify_tables(long resolution = 64) {
  std::vector<Check> checks;
  struct Row {
    PlatonicSolid solid;
    double e0;
    double emax_units;  // 1e-2 ebits
  };
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
  const Row platonic[] = {
      {PlatonicSolid::Tetrahedron, 1.0 / s2, 19.74},
      {PlatonicSolid::Cube, 1.0 / s2, 19.74},
      {PlatonicSolid::Dodecahedron, (12.0 + 5.0 * s2 + 2.0 * s5) / 30.0, 11.12},
      {PlatonicSolid::Octahedron, (3.0 + s3) / 6.0, 10.75},
      {PlatonicSolid::Icosahedron, 1.0 / s5 + 1.0 / std::sqrt(6.0), 5.37},
  };
  for (const Row& row : platonic) {
    const FrustrationResult r = emax_for_graph(GraphSpec::platonic(row.solid));
    checks.push_back(make_check(std::string(platonic_name(row.solid)) + ".E0",
                                r.e0, row.e0, 1e-10));
    checks.push_back(make_check(std::string(platonic_name(row.solid)) + ".Emax",
                                100.0 * r.emax_ebits, row.emax_units, 0.005));
  }
  struct LatRow {
    LatticeKind kind;
    double emax_units;
  };
  const LatRow lattice[] = {
      {LatticeKind::Honeycomb, 10.61},
      {LatticeKind::Square, 6.31},
      {LatticeKind::Triangular, 2.69},
      {LatticeKind::Cubic, 2.62},
  };
  for (const LatRow& row : lattice) {
    const double e0 = infinite_lattice_energy(row.kind, resolution);
    checks.push_back(make_check(std::string(lattice_name(row.kind)) + ".Emax",
                                100.0 * eof_from_delta(e0), row.emax_units, 0.01));
  }
  return checks;
}

/// Brute-force minimization against the trace-norm ground energy, plus the
/// Y = 0 optimality probe. A deliberately mutated H- (sign error) must be
/// caught, which callers use as a self-test of the oracle's power.
inline std::vector<Check> verify_oracle(bool inject_fault = false,
                                        int iterations = 4000, int restarts = 4) {
  std::vector<Check> checks;
  const GraphSpec specs[] = {GraphSpec::ring(3), GraphSpec::ring(4),
                             GraphSpec::complete(4)};
  for (const GraphSpec& spec : specs) {
    const Graph g = build_graph(spec);
    HamiltonianPair hp = build_pair_edges(g);
    if (inject_fault) hp.h_minus = hp.h_plus;  // sign error on the A term
    const double e0 = ground_energy(hp);
    const BruteForceResult bf =
        bruteforce_min_delta(build_pair_edges(g), iterations, restarts);
    checks.push_back(make_check(g.name + ".oracle", bf.delta_hat, e0, 1e-5));
    const YProbeReport yp = probe_y_nonzero(build_pair_edges(g), bf.x_hat, 100);
    Check yc;
    yc.name = g.name + ".y-probe";
    yc.value = yp.min_gap;
    yc.expected = 0.0;
    yc.tolerance = 1e-10;
    yc.residual = std::max(0.0, -yp.min_gap);
    yc.pass = yp.min_gap >= -1e-10;
    checks.push_back(yc);
  }
  return checks;
}

/// Rotation-angle optimality of the two-mode EPR operator over
/// translation-only ring groups.
inline std::vector<Check> verify_appendix(int n_min = 3, int n_max = 8) {
  std::vector<Check> checks;
  for (int n = n_min; n <= n_max; ++n) {
    const ThetaScanReport rep = appendix_theta_scan(n);
    double worst_dev = 0.0;
    for (double theta : rep.argmin_theta)
      worst_dev = std::max(worst_dev, std::abs(std::remainder(theta, std::numbers::pi)));
    Check argmin;
    argmin.name = "ring(" + std::to_string(n) + ").theta-argmin";
    argmin.value = worst_dev;
    argmin.expected = 0.0;
    argmin.tolerance = 1e-9;
    argmin.residual = worst_dev;
    argmin.pass = worst_dev <= 1e-9;
    checks.push_back(argmin);
    checks.push_back(make_check("ring(" + std::to_string(n) + ").theta0-match",
                                rep.theta0_residual, 0.0, 1e-10));
    Check pos;
    pos.name = "ring(" + std::to_string(n) + ").lambda-positivity";
    pos.value = rep.min_positivity;
    pos.expected = 0.0;
    pos.tolerance = 1e-10;
    pos.residual = std::max(0.0, -rep.min_positivity);
    pos.pass = rep.min_positivity >= -1e-10;
    checks.push_back(pos);
    checks.push_back(make_check("ring(" + std::to_string(n) + ").s1-flat",
                                rep.s1_theta_spread, 0.0, 1e-12));
  }
  return checks;
}

}  // namespace gfrust

#endif  // GFRUST_VERIFY_HPP
