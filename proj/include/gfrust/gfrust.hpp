#ifndef GFRUST_GFRUST_HPP
#define GFRUST_GFRUST_HPP

// Maximal two-mode entanglement of formation for Gaussian states invariant
// under symmetric-graph permutation groups: Hamiltonian-pair construction,
// ground-state energy and covariance matrix, EoF evaluation, and
// independent brute-force verification.

#include "gfrust/sym_matrix.hpp"
#include "gfrust/symplectic.hpp"
#include "gfrust/graph.hpp"
#include "gfrust/perm_group.hpp"
#include "gfrust/entanglement.hpp"
#include "gfrust/frustration.hpp"
#include "gfrust/oracle.hpp"
#include "gfrust/verify.hpp"

#endif  // GFRUST_GFRUST_HPP
