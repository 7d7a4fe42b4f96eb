#include "ohg/matrices.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "ohg/checked.hpp"
#include "ohg/walks.hpp"

namespace ohg {

IntMatrix::IntMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      data_(row_labels_.size() * col_labels_.size(), 0) {}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(col_labels_, row_labels_);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols() != o.rows()) throw PreconditionViolated("matrix product dimension mismatch");
    IntMatrix p(row_labels_, o.col_labels_);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < o.cols(); ++c) {
            std::int64_t sum = 0;
            for (int k = 0; k < cols(); ++k)
                sum = checked_add(sum, checked_mul(at(r, k), o.at(k, c)));
            p.at(r, c) = sum;
        }
    return p;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols())
        throw PreconditionViolated("matrix difference dimension mismatch");
    IntMatrix d(row_labels_, col_labels_);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) d.at(r, c) = checked_sub(at(r, c), o.at(r, c));
    return d;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix n(row_labels_, col_labels_);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) n.at(r, c) = checked_neg(at(r, c));
    return n;
}

IntMatrix IntMatrix::identity(std::vector<std::string> labels) {
    IntMatrix m(labels, labels);
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = 1;
    return m;
}

std::int64_t IntPolynomial::eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

std::string IntPolynomial::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(coeffs_[i]);
    }
    out += "]";
    return out;
}

namespace {

std::vector<std::string> vertex_labels(const OrientedHypergraph& g) {
    std::vector<std::string> labels;
    labels.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.vertex_name(v));
    return labels;
}

} // namespace

IntMatrix incidence_matrix(const OrientedHypergraph& g) {
    std::vector<std::string> edge_labels;
    edge_labels.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) edge_labels.push_back(g.edge_name(e));
    IntMatrix h(vertex_labels(g), std::move(edge_labels));
    for (const Incidence& inc : g.incidences())
        h.at(inc.vertex, inc.edge) = checked_add(h.at(inc.vertex, inc.edge), inc.sign);
    return h;
}

IntMatrix adjacency_matrix(const OrientedHypergraph& g) {
    auto labels = vertex_labels(g);
    IntMatrix a(labels, labels);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const DirectedAdjacency& adj : g.adjacencies(v))
            a.at(v, adj.head_vertex) =
                checked_add(a.at(v, adj.head_vertex), g.adjacency_sign(adj));
    return a;
}

IntMatrix degree_matrix(const OrientedHypergraph& g) {
    auto labels = vertex_labels(g);
    IntMatrix d(labels, labels);
    for (int v = 0; v < g.vertex_count(); ++v) d.at(v, v) = g.degree(v);
    return d;
}

IntMatrix laplacian(const OrientedHypergraph& g) {
    IntMatrix l = degree_matrix(g) - adjacency_matrix(g);
    IntMatrix h = incidence_matrix(g);
    if (!(l == h * h.transposed()))
        throw InternalError("L != H * H^T; adjacency/degree conventions are broken");
    return l;
}

IntMatrix weak_walk_matrix(const OrientedHypergraph& g, int k, const Limits& limits) {
    if (k < 0) throw PreconditionViolated("walk length must be non-negative");
    if (k > limits.max_walk_length) throw ResourceGuard("walk length exceeds cap");
    auto labels = vertex_labels(g);
    IntMatrix w(labels, labels);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u = 0; u < g.vertex_count(); ++u)
            w.at(v, u) = signed_walk_count(g, v, u, k, limits);

    IntMatrix power = IntMatrix::identity(labels);
    IntMatrix neg_l = laplacian(g).negated();
    for (int step = 0; step < k; ++step) power = power * neg_l;
    if (!(w == power))
        throw InternalError("weak walk counts disagree with (-L)^k");
    return w;
}

std::int64_t det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw NotSquare("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    pivot_row = r;
                    break;
                }
            if (pivot_row < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = checked_sub(checked_mul(a.at(i, j), a.at(k, k)),
                                         checked_mul(a.at(i, k), a.at(k, j))) /
                             prev; // division is exact in Bareiss elimination
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return checked_mul(sign, a.at(n - 1, n - 1));
}

std::int64_t perm_exact(const IntMatrix& m, int max_permanent_cols) {
    if (!m.is_square()) throw NotSquare("permanent of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    if (n > max_permanent_cols) throw ResourceGuard("permanent size exceeds cap");

    // Ryser with Gray-code subset updates:
    // perm(A) = (-1)^n * sum over column subsets S of (-1)^|S| prod_i r_i(S).
    std::vector<std::int64_t> row_sum(n, 0);
    std::int64_t total = 0;
    std::uint64_t prev_mask = 0;
    for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << n); ++counter) {
        std::uint64_t mask = counter ^ (counter >> 1);
        std::uint64_t changed = mask ^ prev_mask;
        int col = std::countr_zero(changed);
        bool added = (mask & changed) != 0;
        for (int i = 0; i < n; ++i)
            row_sum[i] = added ? checked_add(row_sum[i], m.at(i, col))
                               : checked_sub(row_sum[i], m.at(i, col));
        prev_mask = mask;

        std::int64_t prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod = checked_mul(prod, row_sum[i]);
        int popcount = std::popcount(mask);
        total = (popcount % 2 == 0) ? checked_sub(total, prod) : checked_add(total, prod);
    }
    if (n % 2 == 0) total = checked_neg(total);
    return total;
}

namespace {

IntPolynomial interpolate_charpoly(const IntMatrix& m,
                                   const std::function<std::int64_t(const IntMatrix&)>& value) {
    if (!m.is_square()) throw NotSquare("characteristic polynomial of a non-square matrix");
    const int n = m.rows();

    // Values of the polynomial at x = 0..n.
    std::vector<std::int64_t> ys;
    ys.reserve(n + 1);
    for (int x = 0; x <= n; ++x) {
        IntMatrix shifted = m.negated();
        for (int d = 0; d < n; ++d) shifted.at(d, d) = checked_add(shifted.at(d, d), x);
        ys.push_back(value(shifted));
    }

    // Newton divided differences on nodes 0..n, then expansion to monomials.
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(level); // nodes are consecutive integers

    std::vector<Rational> coeffs(n + 1, Rational(0));
    std::vector<Rational> basis{Rational(1)}; // prod_{t<j} (x - t)
    for (int j = 0; j <= n; ++j) {
        for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += dd[j] * basis[t];
        if (j < n) {
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= Rational(j) * basis[t];
            }
            basis = std::move(next);
        }
    }

    std::vector<std::int64_t> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (!coeffs[k].is_integer())
            throw InternalNonIntegral("interpolated coefficient is not an integer");
        out[k] = coeffs[k].num();
    }
    if (out[n] != 1) throw InternalError("characteristic polynomial is not monic");
    return IntPolynomial(std::move(out));
}

} // namespace

IntPolynomial charpoly_det_oracle(const IntMatrix& m) {
    return interpolate_charpoly(m, [](const IntMatrix& shifted) { return det_exact(shifted); });
}

IntPolynomial charpoly_perm_oracle(const IntMatrix& m, int max_permanent_cols) {
    return interpolate_charpoly(m, [max_permanent_cols](const IntMatrix& shifted) {
        return perm_exact(shifted, max_permanent_cols);
    });
}

} // namespace ohg
