#include "ohg/coefficients.hpp"

#include <set>

#include "ohg/checked.hpp"

namespace ohg {

namespace {

int parity_sign(int exponent) { return exponent % 2 == 0 ? +1 : -1; }

struct QuickStats {
    int backsteps = 0;
    int even_circles = 0;
    int odd_circles = 0;
    int positive_circles = 0;
    int negative_circles = 0;
};

QuickStats quick_stats(const OrientedHypergraph& g,
                       const std::vector<std::pair<int, int>>& choice) {
    QuickStats s;
    const int n = static_cast<int>(choice.size());
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start] || choice[start] == SubContributor::isolated) continue;
        int length = 0;
        int sign = 1;
        int v = start;
        do {
            seen[v] = true;
            ++length;
            const Incidence& tail = g.incidence(choice[v].first);
            const Incidence& head = g.incidence(choice[v].second);
            sign *= -tail.sign * head.sign;
            v = head.vertex;
        } while (v != start);
        if (length == 1 && choice[start].first == choice[start].second) {
            ++s.backsteps;
            continue;
        }
        (length % 2 == 0 ? s.even_circles : s.odd_circles) += 1;
        (sign > 0 ? s.positive_circles : s.negative_circles) += 1;
    }
    return s;
}

} // namespace

ContributorSums contributor_sums(const OrientedHypergraph& g, const Limits& limits) {
    ContributorSums sums;
    for_each_contributor(
        g,
        [&](const Contributor& c) {
            QuickStats s = quick_stats(g, c.choice);
            ++sums.contributor_count;
            sums.perm_laplacian = checked_add(
                sums.perm_laplacian, parity_sign(s.odd_circles + s.negative_circles));
            sums.det_laplacian = checked_add(sums.det_laplacian, parity_sign(s.positive_circles));
            if (s.backsteps == 0) {
                ++sums.backstep_free_count;
                sums.perm_adjacency =
                    checked_add(sums.perm_adjacency, parity_sign(s.negative_circles));
                sums.det_adjacency = checked_add(
                    sums.det_adjacency, parity_sign(s.even_circles + s.negative_circles));
            }
        },
        limits);
    return sums;
}

std::int64_t perm_L(const OrientedHypergraph& g, const Limits& limits) {
    return contributor_sums(g, limits).perm_laplacian;
}

std::int64_t det_L(const OrientedHypergraph& g, const Limits& limits) {
    return contributor_sums(g, limits).det_laplacian;
}

std::int64_t perm_A(const OrientedHypergraph& g, const Limits& limits) {
    return contributor_sums(g, limits).perm_adjacency;
}

std::int64_t det_A(const OrientedHypergraph& g, const Limits& limits) {
    return contributor_sums(g, limits).det_adjacency;
}

namespace {

enum class Kind { perm, det };
enum class Target { adjacency, laplacian };

int hat_sign(Kind kind, Target target, const QuickStats& s) {
    switch (target) {
    case Target::adjacency:
        return kind == Kind::perm ? parity_sign(s.odd_circles + s.negative_circles)
                                  : parity_sign(s.positive_circles);
    case Target::laplacian:
        return kind == Kind::perm ? parity_sign(s.negative_circles + s.backsteps)
                                  : parity_sign(s.even_circles + s.negative_circles + s.backsteps);
    }
    return 0;
}

// One enumeration pass building every per-k deduplicated hat set.
std::vector<std::set<SubContributor>> hat_sets(const OrientedHypergraph& g, Target target,
                                               const Limits& limits) {
    const int n = g.vertex_count();
    std::vector<std::set<SubContributor>> sets(n + 1);
    std::uint64_t stored = 0;
    for_each_contributor(
        g,
        [&](const Contributor& c) {
            std::vector<int> backsteps;
            for (int v = 0; v < n; ++v)
                if (c.is_backstep(v)) backsteps.push_back(v);
            const int m = static_cast<int>(backsteps.size());

            if (target == Target::adjacency) {
                SubContributor sub{c.choice};
                for (int v : backsteps) sub.choice[v] = SubContributor::isolated;
                if (sets[m].insert(std::move(sub)).second) ++stored;
            } else {
                // all subsets of the backsteps; popcount = number deleted
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                    SubContributor sub{c.choice};
                    int k = 0;
                    for (int t = 0; t < m; ++t)
                        if (mask >> t & 1) {
                            sub.choice[backsteps[t]] = SubContributor::isolated;
                            ++k;
                        }
                    if (sets[k].insert(std::move(sub)).second) ++stored;
                }
            }
            if (stored > limits.max_enumeration)
                throw ResourceGuard("hat-set enumeration exceeded cap");
        },
        limits);
    return sets;
}

IntPolynomial hat_set_polynomial(const OrientedHypergraph& g, Kind kind, Target target,
                                 const Limits& limits) {
    auto sets = hat_sets(g, target, limits);
    std::vector<std::int64_t> coeffs(g.vertex_count() + 1, 0);
    for (int k = 0; k <= g.vertex_count(); ++k)
        for (const SubContributor& sub : sets[k])
            coeffs[k] = checked_add(coeffs[k], hat_sign(kind, target, quick_stats(g, sub.choice)));
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial weighted_polynomial(const OrientedHypergraph& g, Kind kind, Target target,
                                  const Limits& limits) {
    const int n = g.vertex_count();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_contributor(
        g,
        [&](const Contributor& c) {
            QuickStats s = quick_stats(g, c.choice);
            const int m = s.backsteps;
            if (target == Target::adjacency) {
                // The only deletion choice removes all m backsteps; it
                // collapses with deg(v) siblings per deleted vertex.
                Rational weight(1);
                for (int v = 0; v < n; ++v)
                    if (c.is_backstep(v)) weight = weight / Rational(g.degree(v));
                QuickStats deleted = s;
                deleted.backsteps = 0;
                coeffs[m] += weight * Rational(hat_sign(kind, target, deleted));
            } else {
                // elementary symmetric sums of 1/deg(v) over the backstep
                // vertices: e[k] collects every k-subset's collapse weight
                std::vector<Rational> e(m + 1, Rational(0));
                e[0] = Rational(1);
                int filled = 0;
                for (int v = 0; v < n; ++v) {
                    if (!c.is_backstep(v)) continue;
                    ++filled;
                    for (int k = filled; k >= 1; --k)
                        e[k] += e[k - 1] / Rational(g.degree(v));
                }
                for (int k = 0; k <= m; ++k) {
                    QuickStats remaining = s;
                    remaining.backsteps = m - k;
                    coeffs[k] += e[k] * Rational(hat_sign(kind, target, remaining));
                }
            }
        },
        limits);
    std::vector<std::int64_t> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (!coeffs[k].is_integer())
            throw InternalNonIntegral("weighted coefficient did not come out integral");
        out[k] = coeffs[k].num();
    }
    return IntPolynomial(std::move(out));
}

} // namespace

IntPolynomial charpoly_perm_A(const OrientedHypergraph& g, const Limits& limits) {
    return hat_set_polynomial(g, Kind::perm, Target::adjacency, limits);
}

IntPolynomial charpoly_det_A(const OrientedHypergraph& g, const Limits& limits) {
    return hat_set_polynomial(g, Kind::det, Target::adjacency, limits);
}

IntPolynomial charpoly_perm_L(const OrientedHypergraph& g, const Limits& limits) {
    return hat_set_polynomial(g, Kind::perm, Target::laplacian, limits);
}

IntPolynomial charpoly_det_L(const OrientedHypergraph& g, const Limits& limits) {
    return hat_set_polynomial(g, Kind::det, Target::laplacian, limits);
}

IntPolynomial charpoly_perm_A_weighted(const OrientedHypergraph& g, const Limits& limits) {
    return weighted_polynomial(g, Kind::perm, Target::adjacency, limits);
}

IntPolynomial charpoly_det_A_weighted(const OrientedHypergraph& g, const Limits& limits) {
    return weighted_polynomial(g, Kind::det, Target::adjacency, limits);
}

IntPolynomial charpoly_perm_L_weighted(const OrientedHypergraph& g, const Limits& limits) {
    return weighted_polynomial(g, Kind::perm, Target::laplacian, limits);
}

IntPolynomial charpoly_det_L_weighted(const OrientedHypergraph& g, const Limits& limits) {
    return weighted_polynomial(g, Kind::det, Target::laplacian, limits);
}

} // namespace ohg
