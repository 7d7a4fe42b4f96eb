#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ohg/coefficients.hpp"
#include "ohg/matrices.hpp"

namespace ohg {

// Contributor-count bounds on perm(L) and det(L) with attainment flags.
struct BoundsReport {
    std::uint64_t contributor_count = 0;
    std::int64_t perm_laplacian = 0;
    std::int64_t det_laplacian = 0;
    bool bounds_hold = false;        // both values inside (-|C|, |C|]
    bool lower_strict_ok = false;    // neither value equals -|C|
    bool upper_perm_attained = false;
    bool upper_det_attained = false;
    bool bouquet = false;
    bool det_sharpness_consistent = false; // bouquet <=> det upper bound attained
    std::string notes;
};

// Requires no isolated vertices and no 0-edges.
BoundsReport bounds_report(const OrientedHypergraph& g, const Limits& limits = {});

// True iff every edge has all incidences at a single vertex with constant
// sign, so the only adjacencies are negative loops.
bool is_bouquet_family(const OrientedHypergraph& g);

enum class SweepObjective { perm_L, det_L, perm_A, det_A };

const char* objective_name(SweepObjective o);
SweepObjective objective_from_name(const std::string& name);

struct OrientationSweepResult {
    SweepObjective objective;
    int incidence_count = 0;
    std::uint64_t contributor_count = 0;       // orientation-independent
    std::vector<std::int64_t> values;          // indexed by sign bitmask
    std::int64_t max_value = 0;
    std::vector<std::uint32_t> argmax;         // ascending bitmasks
};

// Evaluate the objective for every orientation of the underlying structure;
// bit i set means sigma = -1 on incidence i. Guarded by
// limits.max_sweep_incidences.
OrientationSweepResult orientation_sweep(const OrientedHypergraph& g, SweepObjective objective,
                                         const Limits& limits = {});

OrientedHypergraph with_orientation_mask(const OrientedHypergraph& g, std::uint32_t mask);

// For a signed graph: compare perm(A) (exact linear algebra) with the
// backstep-free contributor count. A balanced input that fails the
// comparison is an internal bug; unbalanced inputs just report it.
bool balanced_perm_A_check(const OrientedHypergraph& g, const Limits& limits = {});

// Basic-figure characteristic polynomial of a plain graph: coefficient of
// x^k sums (-1)^p(U) * 2^c(U) over basic figures U leaving k vertices
// uncovered. Parallel edges are supported; a parallel pair forms a 2-cycle.
IntPolynomial sachs_coefficients(const OrientedHypergraph& g);

// Encode a graph on vertex_count vertices: each pair becomes a 2-edge with
// signs (+1, -1), so every adjacency sign is +1.
OrientedHypergraph plain_graph(int vertex_count,
                               const std::vector<std::pair<int, int>>& edges);

} // namespace ohg
