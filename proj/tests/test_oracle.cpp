#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "gfrust/frustration.hpp"
#include "gfrust/graph.hpp"
#include "gfrust/oracle.hpp"
#include "gfrust/verify.hpp"

using namespace gfrust;

TEST_CASE("brute-force minimization matches the trace-norm energy") {
  for (const GraphSpec& spec : {GraphSpec::ring(3), GraphSpec::complete(4)}) {
    const Graph g = build_graph(spec);
    INFO(g.name);
    const HamiltonianPair hp = build_pair_edges(g);
    const BruteForceResult bf = bruteforce_min_delta(hp, 3000, 2);
    CHECK(bf.converged);
    CHECK(bf.delta_hat == Catch::Approx(ground_energy(hp)).margin(1e-5));
    CHECK(bf.delta_analytic == Catch::Approx(ground_energy(hp)).margin(1e-4));
  }
}

TEST_CASE("the oracle is deterministic for a fixed seed") {
  const Graph g = build_graph(GraphSpec::ring(3));
  const HamiltonianPair hp = build_pair_edges(g);
  const BruteForceResult a = bruteforce_min_delta(hp, 500, 2, 99);
  const BruteForceResult b = bruteforce_min_delta(hp, 500, 2, 99);
  CHECK(a.delta_hat == b.delta_hat);
}

TEST_CASE("the oracle refuses large systems") {
  const Graph g = build_graph(GraphSpec::ring(9));
  CHECK_THROWS_AS(bruteforce_min_delta(build_pair_edges(g), 10, 1), Error);
}

TEST_CASE("Y probes never lower the objective at the optimum") {
  const Graph g = build_graph(GraphSpec::ring(4));
  const HamiltonianPair hp = build_pair_edges(g);
  const BruteForceResult bf = bruteforce_min_delta(hp, 3000, 2);
  const YProbeReport rep = probe_y_nonzero(hp, bf.x_hat, 50);
  CHECK(rep.trials == 50);
  CHECK(rep.min_gap >= -1e-10);
  CHECK(rep.max_gap > 0.0);
}

TEST_CASE("an injected sign error is caught by the oracle suite") {
  const std::vector<Check> checks = verify_oracle(true, 800, 1);
  bool any_fail = false;
  for (const Check& c : checks) any_fail = any_fail || !c.pass;
  CHECK(any_fail);
}

TEST_CASE("a clean build passes the oracle suite") {
  for (const Check& c : verify_oracle(false, 3000, 2)) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("rotation-angle scan: theta = 0 is optimal for each scale") {
  for (int n : {3, 4, 5}) {
    const ThetaScanReport rep = appendix_theta_scan(n);
    INFO("ring " << n);
    for (double theta : rep.argmin_theta)
      CHECK(std::abs(std::remainder(theta, std::numbers::pi)) < 1e-9);
    CHECK(rep.min_positivity >= -1e-10);
    CHECK(rep.theta0_residual < 1e-10);
    CHECK(rep.s1_theta_spread < 1e-12);
  }
}

TEST_CASE("the theta = 0 slice is flat in s and equals twice the ground energy") {
  // the pair objective counts both members of the EPR pair
  for (int n : {3, 5}) {
    const ThetaScanReport rep = appendix_theta_scan(n);
    const Graph g = build_graph(GraphSpec::ring(n));
    const double e0 = ground_energy(build_pair_edges(g));
    for (std::size_t si = 0; si < rep.s_values.size(); ++si)
      CHECK(rep.objective[si][0] == Catch::Approx(2.0 * e0).margin(1e-10));
  }
}
