#include "ohg/walks.hpp"

#include "ohg/checked.hpp"

namespace ohg {

int walk_end_vertex(const OrientedHypergraph& g, const WeakWalk& w) {
    if (w.incidences.empty()) return w.start_vertex;
    return g.incidence(w.incidences.back()).vertex;
}

int walk_sign(const OrientedHypergraph& g, const WeakWalk& w) {
    int sign = (w.length() % 2 == 0) ? +1 : -1;
    for (int i : w.incidences) sign *= g.incidence(i).sign;
    return sign;
}

namespace {

template <typename Visit>
void walk_dfs(const OrientedHypergraph& g, int at, int target, int steps_left, WeakWalk& scratch,
              std::uint64_t& budget, const Visit& visit) {
    if (steps_left == 0) {
        // every explored walk costs budget, matching the target or not
        if (budget == 0) throw ResourceGuard("weak walk enumeration exceeded cap");
        --budget;
        if (at == target) visit(scratch);
        return;
    }
    for (int i : g.incidences_at(at)) {
        int e = g.incidence(i).edge;
        for (int j : g.incidences_on(e)) {
            scratch.incidences.push_back(i);
            scratch.incidences.push_back(j);
            walk_dfs(g, g.incidence(j).vertex, target, steps_left - 1, scratch, budget, visit);
            scratch.incidences.pop_back();
            scratch.incidences.pop_back();
        }
    }
}

void check_walk_args(const OrientedHypergraph& g, int v, int w, int k, const Limits& limits) {
    if (v < 0 || v >= g.vertex_count() || w < 0 || w >= g.vertex_count())
        throw UnknownElement("vertex index out of range");
    if (k < 0) throw PreconditionViolated("walk length must be non-negative");
    if (k > limits.max_walk_length) throw ResourceGuard("walk length exceeds cap");
}

} // namespace

std::vector<WeakWalk> enumerate_weak_walks(const OrientedHypergraph& g, int v, int w, int k,
                                           const Limits& limits) {
    check_walk_args(g, v, w, k, limits);
    std::vector<WeakWalk> out;
    WeakWalk scratch{v, {}};
    std::uint64_t budget = limits.max_enumeration;
    walk_dfs(g, v, w, k, scratch, budget, [&](const WeakWalk& walk) { out.push_back(walk); });
    return out;
}

std::int64_t signed_walk_count(const OrientedHypergraph& g, int v, int w, int k,
                               const Limits& limits) {
    check_walk_args(g, v, w, k, limits);
    std::int64_t total = 0;
    WeakWalk scratch{v, {}};
    std::uint64_t budget = limits.max_enumeration;
    walk_dfs(g, v, w, k, scratch, budget,
             [&](const WeakWalk& walk) { total = checked_add(total, walk_sign(g, walk)); });
    return total;
}

} // namespace ohg
