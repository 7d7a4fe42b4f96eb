#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

// Dense exact-integer matrix with row/column labels in hypergraph order.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    int rows() const { return static_cast<int>(row_labels_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    bool is_square() const { return rows() == cols(); }

    std::int64_t& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols() + c]; }
    std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols() + c]; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix negated() const;

    // entrywise equality; labels are presentation metadata
    bool operator==(const IntMatrix& o) const {
        return rows() == o.rows() && cols() == o.cols() && data_ == o.data_;
    }

    static IntMatrix identity(std::vector<std::string> labels);

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<std::int64_t> data_;
};

// Exact-integer polynomial, coefficients ascending by degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {}

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
    }
    std::int64_t eval(std::int64_t x) const;

    bool operator==(const IntPolynomial& o) const = default;

    // Ascending render, e.g. "[-4, 9, -6, 1]".
    std::string to_string() const;

private:
    std::vector<std::int64_t> coeffs_;
};

// V x E, entry (v,e) = sum of sigma(i) over incidences with image (v,e).
IntMatrix incidence_matrix(const OrientedHypergraph& g);

// V x V, entry (v,w) = sum of adjacency signs over directed adjacencies
// v -> w; both directions of a loop land on the diagonal.
IntMatrix adjacency_matrix(const OrientedHypergraph& g);

IntMatrix degree_matrix(const OrientedHypergraph& g);

// L = D - A, checked against H * H^T entrywise (throws InternalError on
// mismatch, which would mean an implementation bug).
IntMatrix laplacian(const OrientedHypergraph& g);

// Entry (v,w) = signed_walk_count(g,v,w,k) by direct enumeration, checked
// against (-L)^k.
IntMatrix weak_walk_matrix(const OrientedHypergraph& g, int k, const Limits& limits = {});

// Fraction-free (Bareiss) elimination determinant.
std::int64_t det_exact(const IntMatrix& m);

// Inclusion-exclusion (Ryser) permanent; guarded by n <= max_permanent_cols.
std::int64_t perm_exact(const IntMatrix& m, int max_permanent_cols = 20);

// det(xI - M) / perm(xI - M) by evaluation at x = 0..n and exact rational
// interpolation. Coefficients must come back integral and monic.
IntPolynomial charpoly_det_oracle(const IntMatrix& m);
IntPolynomial charpoly_perm_oracle(const IntMatrix& m, int max_permanent_cols = 20);

} // namespace ohg
