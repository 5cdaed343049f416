// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "gfrust/gfrust.hpp"

using namespace gfrust;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %2d  %-34s %s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void criterion_1_platonic() {
  const auto t0 = std::chrono::steady_clock::now();
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
  struct Row {
    PlatonicSolid s;
    double e0, emax;
  };
  const Row rows[] = {
      {PlatonicSolid::Tetrahedron, 1.0 / s2, 19.74},
      {PlatonicSolid::Cube, 1.0 / s2, 19.74},
      {PlatonicSolid::Octahedron, (3.0 + s3) / 6.0, 10.75},
      {PlatonicSolid::Icosahedron, 1.0 / s5 + 1.0 / std::sqrt(6.0), 5.37},
      {PlatonicSolid::Dodecahedron, (12.0 + 5.0 * s2 + 2.0 * s5) / 30.0, 11.12},
  };
  double worst_e0 = 0.0, worst_emax = 0.0;
  for (const Row& row : rows) {
    const FrustrationResult r = emax_for_graph(GraphSpec::platonic(row.s));
    worst_e0 = std::max(worst_e0, std::abs(r.e0 - row.e0));
    worst_emax = std::max(worst_emax, std::abs(100.0 * r.emax_ebits - row.emax));
  }
  const double elapsed = seconds_since(t0);
  report(1, "platonic closed forms", worst_e0 <= 1e-10 && worst_emax <= 0.005 && elapsed < 1.0,
         "E0 dev " + fmt(worst_e0) + ", Emax dev " + fmt(worst_emax) + "e-2, " +
             fmt(elapsed) + " s");
}

void criterion_2_lattices() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Row {
    LatticeKind k;
    double emax;
  };
  const Row rows[] = {{LatticeKind::Honeycomb, 10.61},
                      {LatticeKind::Square, 6.31},
                      {LatticeKind::Triangular, 2.69},
                      {LatticeKind::Cubic, 2.62}};
  double worst = 0.0;
  for (const Row& row : rows) {
    const double e0 = infinite_lattice_energy(row.k);
    worst = std::max(worst, std::abs(100.0 * eof_from_delta(e0) - row.emax));
  }
  const double elapsed = seconds_since(t0);
  report(2, "infinite-lattice integration", worst <= 0.01 && elapsed < 30.0,
         "Emax dev " + fmt(worst) + "e-2, " + fmt(elapsed) + " s");
}

void criterion_3_ring_forms() {
  double worst = 0.0;
  bool parity_ok = true;
  for (int n = 3; n <= 200; ++n) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
      sum += std::abs(std::sin(2.0 * std::numbers::pi * k / n));
    sum /= n;
    worst = std::max(worst,
                     std::abs(closed_form_energy(ClosedFormFamily::Ring, n) - sum));
  }
  for (int n = 3; n <= 199; n += 2)
    parity_ok = parity_ok && closed_form_energy(ClosedFormFamily::Ring, n) >
                                 closed_form_energy(ClosedFormFamily::Ring, n + 1);
  report(3, "ring closed form vs spectrum sum", worst <= 1e-12 && parity_ok,
         "dev " + fmt(worst) + ", parity " + (parity_ok ? "ok" : "violated"));
}

void criterion_4_ring_limit() {
  const double emax =
      eof_from_delta(closed_form_energy(ClosedFormFamily::Ring, 200));
  report(4, "large-ring limit", std::abs(emax - 0.2981) <= 0.002,
         "Emax(200) = " + fmt(emax));
}

void criterion_5_meanfield() {
  double worst = 0.0;
  for (int n = 3; n <= 64; ++n) {
    const Graph g = build_graph(GraphSpec::complete(n));
    worst = std::max(worst, std::abs(ground_energy(build_pair_edges(g)) -
                                     std::sqrt((n - 2.0) / n)));
  }
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int n = 50; n <= 5000; ++n) {
    const double emax =
        eof_from_delta(closed_form_energy(ClosedFormFamily::MeanField, n));
    const double product = emax * n * n / std::log2(double(n));
    lo = std::min(lo, product);
    hi = std::max(hi, product);
  }
  report(5, "mean-field decay law", worst <= 1e-10 && hi <= 3.0 * lo,
         "E0 dev " + fmt(worst) + ", product range [" + fmt(lo) + ", " + fmt(hi) + "]");
}

void criterion_6_routes() {
  std::vector<GraphSpec> specs;
  for (int n = 3; n <= 64; ++n) specs.push_back(GraphSpec::ring(n));
  for (int n = 3; n <= 64; ++n) specs.push_back(GraphSpec::complete(n));
  for (int n : {3, 4, 5, 6, 7, 8}) specs.push_back(GraphSpec::torus(n, 2));
  for (int n : {3, 4}) specs.push_back(GraphSpec::torus(n, 3));
  for (int l : {3, 4, 5}) specs.push_back(GraphSpec::honeycomb_torus(l));
  for (int l : {3, 4, 5, 6, 7, 8}) specs.push_back(GraphSpec::triangular_torus(l));
  for (PlatonicSolid s :
       {PlatonicSolid::Tetrahedron, PlatonicSolid::Cube, PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron, PlatonicSolid::Icosahedron})
    specs.push_back(GraphSpec::platonic(s));
  double worst = 0.0;
  std::string worst_name = "-";
  for (const GraphSpec& spec : specs) {
    const Graph g = build_graph(spec);
    const HamiltonianPair hp = build_pair_edges(g);
    const double tn = ground_energy(hp);
    double dev = std::abs(tn - ground_energy_spectral(hp));
    dev = std::max(dev, std::abs(tn - ground_energy_adjacency(g)));
    switch (spec.family) {
      case GraphFamily::Ring:
        dev = std::max(dev, std::abs(tn - closed_form_energy(ClosedFormFamily::Ring, spec.n)));
        break;
      case GraphFamily::Torus:
        dev = std::max(dev, std::abs(tn - closed_form_energy(ClosedFormFamily::Torus,
                                                             spec.n, spec.dim)));
        break;
      case GraphFamily::Complete:
        dev = std::max(dev, std::abs(tn - closed_form_energy(ClosedFormFamily::MeanField,
                                                             spec.n)));
        break;
      default:
        break;
    }
    if (dev > worst) {
      worst = dev;
      worst_name = g.name;
    }
  }
  report(6, "route equivalence (N <= 64)", worst <= 1e-10,
         "worst dev " + fmt(worst) + " on " + worst_name);
}

void criterion_7_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<GraphSpec> specs;
  for (int n = 3; n <= 6; ++n) specs.push_back(GraphSpec::ring(n));
  for (int n = 3; n <= 6; ++n) specs.push_back(GraphSpec::complete(n));
  specs.push_back(GraphSpec::platonic(PlatonicSolid::Octahedron));
  double worst = 0.0, worst_gap = 0.0;
  for (const GraphSpec& spec : specs) {
    const Graph g = build_graph(spec);
    const HamiltonianPair hp = build_pair_edges(g);
    const BruteForceResult bf = bruteforce_min_delta(hp);
    worst = std::max(worst, std::abs(bf.delta_hat - ground_energy(hp)));
    const YProbeReport yp = probe_y_nonzero(hp, bf.x_hat, 100);
    worst_gap = std::min(worst_gap, yp.min_gap);
  }
  const double elapsed = seconds_since(t0);
  report(7, "brute-force oracle", worst <= 1e-5 && worst_gap >= -1e-10 && elapsed < 300.0,
         "dev " + fmt(worst) + ", min Y-gap " + fmt(worst_gap) + ", " + fmt(elapsed) + " s");
}

void criterion_8_ground_cm() {
  std::vector<GraphSpec> specs;
  for (int n = 3; n <= 8; ++n) specs.push_back(GraphSpec::ring(n));
  for (PlatonicSolid s :
       {PlatonicSolid::Tetrahedron, PlatonicSolid::Cube, PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron, PlatonicSolid::Icosahedron})
    specs.push_back(GraphSpec::platonic(s));
  bool monotone = true, physical = true;
  double worst_extrap = 0.0;
  for (const GraphSpec& spec : specs) {
    const Graph g = build_graph(spec);
    const HamiltonianPair hp = build_pair_edges(g);
    const double e0 = ground_energy(hp);
    std::vector<double> deltas, roots;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      const CovarianceMatrix cm = ground_cm(hp, eps);
      physical = physical && validate_cm(cm).ok;
      deltas.push_back(epr_uncertainty_global(cm, hp.h_plus, hp.h_minus));
      roots.push_back(std::sqrt(eps));
    }
    for (std::size_t i = 1; i < deltas.size(); ++i)
      monotone = monotone && deltas[i] < deltas[i - 1];
    const std::size_t m = deltas.size();
    const double extrap =
        (deltas[m - 1] * roots[m - 2] - deltas[m - 2] * roots[m - 1]) /
        (roots[m - 2] - roots[m - 1]);
    worst_extrap = std::max(worst_extrap, std::abs(extrap - e0));
  }
  report(8, "ground-CM regularization limit",
         monotone && physical && worst_extrap <= 1e-4,
         std::string("monotone ") + (monotone ? "ok" : "violated") + ", physical " +
             (physical ? "ok" : "violated") + ", extrapolation dev " + fmt(worst_extrap));
}

void criterion_9_appendix() {
  bool argmin_ok = true;
  double worst_pos = 0.0, worst_match = 0.0;
  for (int n = 3; n <= 12; ++n) {
    const ThetaScanReport rep = appendix_theta_scan(n);
    for (double theta : rep.argmin_theta)
      argmin_ok = argmin_ok &&
                  std::abs(std::remainder(theta, std::numbers::pi)) <= 1e-9;
    worst_pos = std::min(worst_pos, rep.min_positivity);
    worst_match = std::max(worst_match, rep.theta0_residual);
  }
  report(9, "rotation-angle optimality scan",
         argmin_ok && worst_pos >= -1e-10 && worst_match <= 1e-10,
         std::string("argmin ") + (argmin_ok ? "ok" : "off-axis") + ", min minor " +
             fmt(worst_pos) + ", slice dev " + fmt(worst_match));
}

void criterion_10_group_vs_edges() {
  std::vector<GraphSpec> specs;
  for (int n = 3; n <= 8; ++n) specs.push_back(GraphSpec::ring(n));
  for (int n = 3; n <= 6; ++n) specs.push_back(GraphSpec::complete(n));
  specs.push_back(GraphSpec::platonic(PlatonicSolid::Tetrahedron));
  specs.push_back(GraphSpec::platonic(PlatonicSolid::Cube));
  specs.push_back(GraphSpec::platonic(PlatonicSolid::Octahedron));
  double worst = 0.0;
  for (const GraphSpec& spec : specs) {
    const Graph g = build_graph(spec);
    const HamiltonianPair he = build_pair_edges(g);
    const PermGroup grp = graph_symmetry_group(g);
    const HamiltonianPair hg =
        build_pair_group(grp, g.edges.front().first, g.edges.front().second);
    worst = std::max(worst,
                     (he.h_plus.full() - hg.h_plus.full()).frobenius_norm());
    worst = std::max(worst,
                     (he.h_minus.full() - hg.h_minus.full()).frobenius_norm());
  }
  report(10, "group twirl vs edge average", worst <= 1e-12,
         "worst dev " + fmt(worst));
}

}  // namespace

int main() {
  criterion_1_platonic();
  criterion_2_lattices();
  criterion_3_ring_forms();
  criterion_4_ring_limit();
  criterion_5_meanfield();
  criterion_6_routes();
  criterion_7_oracle();
  criterion_8_ground_cm();
  criterion_9_appendix();
  criterion_10_group_vs_edges();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
