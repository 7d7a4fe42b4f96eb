#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

// A contributor assigns every vertex v a (tail, head) pair of incidence ids:
// the tail sits at v, the head lies on the tail's edge, and head == tail is
// a backstep. The induced head-vertex map must permute V.
struct Contributor {
    std::vector<std::pair<int, int>> choice; // indexed by vertex

    int tail(int v) const { return choice[v].first; }
    int head(int v) const { return choice[v].second; }
    bool is_backstep(int v) const { return choice[v].first == choice[v].second; }
};

// A contributor restricted to a vertex subset; vertices outside it are
// isolated and marked with the (-1,-1) sentinel. Equality is equality of
// the assignment vector, which is what hat-set deduplication works on.
struct SubContributor {
    static constexpr std::pair<int, int> isolated{-1, -1};

    std::vector<std::pair<int, int>> choice;

    bool is_isolated(int v) const { return choice[v] == isolated; }
    std::vector<int> isolated_vertices() const;

    auto operator<=>(const SubContributor&) const = default;
};

struct Circle {
    int length;       // number of adjacencies = number of vertices on it
    int sign;         // product of adjacency signs
    bool degenerate2; // 2-circle traversing one adjacency both ways
};

struct ContributorStats {
    int backsteps = 0;
    std::vector<Circle> circles;
    int even_circles = 0;
    int odd_circles = 0;
    int positive_circles = 0;
    int negative_circles = 0;
    // Cycles of the head map (fixed points included), each starting at its
    // smallest vertex, ordered by that vertex.
    std::vector<std::vector<int>> permutation;
};

// Visit contributors in canonical order: per-vertex backtracking in vertex
// order over (tail, head) pairs in id order. Throws IsolatedVertex when a
// vertex carries no incidence, ResourceGuard past limits.max_enumeration.
void for_each_contributor(const OrientedHypergraph& g,
                          const std::function<void(const Contributor&)>& visit,
                          const Limits& limits = {});

std::vector<Contributor> enumerate_contributors(const OrientedHypergraph& g,
                                                const Limits& limits = {});

// Backstep / circle decomposition with parity and sign tallies. Throws
// InvalidContributor when the assignment is not a contributor of g.
ContributorStats contributor_stats(const OrientedHypergraph& g, const Contributor& c);

// Stats of the restriction; backsteps counts the remaining ones only.
ContributorStats sub_contributor_stats(const OrientedHypergraph& g, const SubContributor& s);

// Classes keyed by the exact head-map permutation (as an image vector).
std::map<std::vector<int>, std::vector<Contributor>>
group_by_permutomorphism(const OrientedHypergraph& g, const std::vector<Contributor>& contributors);

// Deduplicated sub-contributors from contributors with exactly k backsteps,
// all k of them deleted. Sorted by assignment vector.
std::vector<SubContributor> enumerate_hat_eq(const OrientedHypergraph& g, int k,
                                             const Limits& limits = {});

// Deduplicated sub-contributors from contributors with at least k backsteps,
// one element per choice of k backsteps to delete; the remaining backsteps
// stay in place. k = 0 reproduces the contributors themselves.
std::vector<SubContributor> enumerate_hat_geq(const OrientedHypergraph& g, int k,
                                              const Limits& limits = {});

SubContributor to_sub_contributor(const Contributor& c);

} // namespace ohg
