#pragma once

#include <map>
#include <vector>

#include "fp.hpp"

namespace rjp {

/// Dense row-major matrix over an exact field, just enough linear algebra
/// for kernels, ranks and small solves. Pivoting follows column order so
/// results are deterministic.
template <ScalarField K>
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<K> a;

    Matrix() = default;
    Matrix(size_t r, size_t c, const FieldCfg& cfg) : rows(r), cols(c), a(r * c, K::from_long(0, cfg)) {}

    K& at(size_t i, size_t j) { return a[i * cols + j]; }
    const K& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Row echelon form in place; returns pivot columns. Deterministic: scans
/// columns left to right, takes the first nonzero row.
template <ScalarField K>
std::vector<size_t> echelonize(Matrix<K>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t pr = r;
        while (pr < m.rows && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.a[r * m.cols + j], m.a[pr * m.cols + j]);
        K piv = m.at(r, c).inv();
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * piv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <ScalarField K>
size_t rank(Matrix<K> m) {
    return echelonize(m).size();
}

/// Echelonized basis of the right null space {v : M v = 0}. Free variables
/// are set to 1 in column order.
template <ScalarField K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, const FieldCfg& cfg) {
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    K zero = K::from_long(0, cfg), one = K::from_long(1, cfg);
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols, zero);
        v[f] = one;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incremental sparse echelon structure over K, used for subspace spans in
/// big truncated components. Rows are kept reduced against existing pivots;
/// pivot = smallest index with nonzero entry.
template <ScalarField K>
class SparseEchelon {
public:
    using Row = std::map<size_t, K>;

private:
    std::map<size_t, Row> pivot_rows_; // pivot index -> normalized row

public:
    size_t dim() const { return pivot_rows_.size(); }
    const std::map<size_t, Row>& rows() const { return pivot_rows_; }

    /// Reduce v against the current basis; returns the residue.
    Row reduce(Row v) const {
        while (!v.empty()) {
            auto lead = v.begin();
            auto it = pivot_rows_.find(lead->first);
            if (it == pivot_rows_.end()) break;
            K f = lead->second;
            for (auto& [j, c] : it->second) {
                auto vt = v.find(j);
                if (vt == v.end()) {
                    K nc = -(f * c);
                    if (!nc.is_zero()) v.emplace(j, nc);
                } else {
                    vt->second -= f * c;
                    if (vt->second.is_zero()) v.erase(vt);
                }
            }
        }
        return v;
    }

    /// Insert v into the span; returns true if it was independent.
    bool insert(Row v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        auto lead = v.begin();
        K inv = lead->second.inv();
        Row norm;
        for (auto& [j, c] : v) norm.emplace(j, c * inv);
        pivot_rows_.emplace(lead->first, std::move(norm));
        return true;
    }

    bool contains(Row v) const { return reduce(std::move(v)).empty(); }
};

} // namespace rjp
