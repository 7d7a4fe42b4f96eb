#pragma once

#include <cstdint>

#include "ohg/contributors.hpp"
#include "ohg/matrices.hpp"

namespace ohg {

// Scalar contributor sums and the census counts they ride on, gathered in
// one enumeration pass.
struct ContributorSums {
    std::int64_t perm_laplacian = 0;   // sum of (-1)^(oc+nc) over all contributors
    std::int64_t det_laplacian = 0;    // sum of (-1)^pc over all contributors
    std::int64_t perm_adjacency = 0;   // sum of (-1)^nc over backstep-free contributors
    std::int64_t det_adjacency = 0;    // sum of (-1)^(ec+nc) over backstep-free contributors
    std::uint64_t contributor_count = 0;
    std::uint64_t backstep_free_count = 0;
};

ContributorSums contributor_sums(const OrientedHypergraph& g, const Limits& limits = {});

std::int64_t perm_L(const OrientedHypergraph& g, const Limits& limits = {});
std::int64_t det_L(const OrientedHypergraph& g, const Limits& limits = {});
std::int64_t perm_A(const OrientedHypergraph& g, const Limits& limits = {});
std::int64_t det_A(const OrientedHypergraph& g, const Limits& limits = {});

// Coefficient of x^k = signed count over the deduplicated hat sets:
// for A over exactly-k sets with signs (-1)^(oc+nc) / (-1)^pc, for L over
// at-least-k sets with signs (-1)^(nc+bs) / (-1)^(ec+nc+bs), bs being the
// sub-contributor's remaining backsteps.
IntPolynomial charpoly_perm_A(const OrientedHypergraph& g, const Limits& limits = {});
IntPolynomial charpoly_det_A(const OrientedHypergraph& g, const Limits& limits = {});
IntPolynomial charpoly_perm_L(const OrientedHypergraph& g, const Limits& limits = {});
IntPolynomial charpoly_det_L(const OrientedHypergraph& g, const Limits& limits = {});

// Cross-check route that never builds the hat sets: one pass over the
// contributors, weighting each deletion choice by the reciprocal of its
// collapse multiplicity (the product of deg(v) over deleted vertices).
// Agrees with the hat-set polynomials exactly; kept separate so the two
// code paths stay independent.
IntPolynomial charpoly_perm_A_weighted(const OrientedHypergraph& g, const Limits& limits = {});
IntPolynomial charpoly_det_A_weighted(const OrientedHypergraph& g, const Limits& limits = {});
IntPolynomial charpoly_perm_L_weighted(const OrientedHypergraph& g, const Limits& limits = {});
IntPolynomial charpoly_det_L_weighted(const OrientedHypergraph& g, const Limits& limits = {});

} // namespace ohg
