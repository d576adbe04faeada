#pragma once

#include <map>
#include <vector>

#include "blobtilt/cyclotomic_field.hpp"
#include "blobtilt/sparse.hpp"

namespace blobtilt {

namespace detail {

// Row normalization after each elimination round.  The general fallback
// rescales the pivot coefficient to one; the cyclotomic specialization
// clears denominators and removes integer content instead, keeping the
// coefficients small on the 4^n-dimensional problems.
template <class F>
struct RowNormalizer {
    static void normalize(SparseVector<F>& v, typename SparseVector<F>::Index pivot) {
        v = v.scaled(v.coeff(pivot)->inverse());
    }
};

template <>
struct RowNormalizer<FieldElement> {
    static void normalize(SparseVector<FieldElement>& v, std::uint32_t) {
        Int num_gcd = 0;
        Int den_lcm = 1;
        for (const auto& [idx, c] : v.entries()) {
            for (const Rat& r : c.coeffs()) {
                if (r == 0) continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                        r.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        r.get_den().get_mpz_t());
            }
        }
        Rat factor(den_lcm, num_gcd);
        factor.canonicalize();
        if (factor == 1) return;
        const FieldPtr& field = v.entries().begin()->second.field();
        v = v.scaled(FieldElement(field, factor));
    }
};

}  // namespace detail

/**
 * EliminationBasis<F>: incremental exact Gauss-Jordan over a field F.
 *
 * Invariants: every stored pivot row is zero at every other row's pivot
 * column, so reduction is a single pass; rows are renormalized after each
 * elimination round (see RowNormalizer).  Pivot choice prefers the column
 * with minimal fill across stored rows, ties broken by lex-least index.
 */
template <class F>
class EliminationBasis {
public:
    using Index = typename SparseVector<F>::Index;

    explicit EliminationBasis(Index dim) : dim_(dim) {}

    Index dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<Index, SparseVector<F>>& pivot_rows() const { return rows_; }

    SparseVector<F> reduce(SparseVector<F> v) const {
        for (const auto& [p, row] : rows_) {
            const F* c = v.coeff(p);
            if (c) v.axpy(-(*c * row.coeff(p)->inverse()), row);
        }
        return v;
    }

    bool contains(const SparseVector<F>& v) const { return reduce(v).is_zero(); }

    // Returns true if v enlarged the span.
    bool insert(SparseVector<F> v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;

        Index pivot = v.min_index();
        int best_fill = -1;
        for (const auto& [idx, c] : v.entries()) {
            auto it = fill_.find(idx);
            int f = it == fill_.end() ? 0 : it->second;
            if (best_fill < 0 || f < best_fill) {
                best_fill = f;
                pivot = idx;
            }
        }

        detail::RowNormalizer<F>::normalize(v, pivot);
        const F pivot_inv = v.coeff(pivot)->inverse();
        // clear the new pivot column from the stored rows
        for (auto& [p, row] : rows_) {
            const F* c = row.coeff(pivot);
            if (!c) continue;
            F factor = *c * pivot_inv;
            for (const auto& [idx, val] : row.entries()) bump(idx, -1);
            row.axpy(-factor, v);
            detail::RowNormalizer<F>::normalize(row, p);
            for (const auto& [idx, val] : row.entries()) bump(idx, +1);
        }
        for (const auto& [idx, val] : v.entries()) bump(idx, +1);
        rows_.emplace(pivot, std::move(v));
        return true;
    }

private:
    void bump(Index idx, int d) {
        auto [it, inserted] = fill_.try_emplace(idx, 0);
        it->second += d;
        if (it->second == 0) fill_.erase(it);
    }

    Index dim_;
    std::map<Index, SparseVector<F>> rows_;  // pivot column -> row
    std::map<Index, int> fill_;              // column -> occurrences in rows
};

template <class F>
int rank_of(const std::vector<SparseVector<F>>& vs) {
    if (vs.empty()) return 0;
    EliminationBasis<F> basis(vs.front().dim());
    for (const auto& v : vs) basis.insert(v);
    return basis.rank();
}

template <class F>
bool in_span(const SparseVector<F>& v, const std::vector<SparseVector<F>>& vs) {
    EliminationBasis<F> basis(v.dim());
    for (const auto& w : vs) basis.insert(w);
    return basis.contains(v);
}

/**
 * Dimension of the algebra of d x d matrices commuting with every listed
 * operator, by exact solution of the homogeneous system X A = A X.
 * With no operators this is the full matrix algebra, dimension d^2.
 */
template <class F>
int commutant_dim(std::uint32_t d, const std::vector<SparseOperator<F>>& ops) {
    EliminationBasis<F> basis(d * d);
    for (const auto& op : ops) {
        if (op.dim() != d)
            throw std::invalid_argument("commutant_dim: dimension mismatch");
        SparseOperator<F> opT = op.transpose();
        // unknown X[i][k] has index i*d + k; equation per matrix position (i,j)
        for (std::uint32_t i = 0; i < d; ++i) {
            for (std::uint32_t j = 0; j < d; ++j) {
                SparseVector<F> row(d * d);
                for (const auto& [k, a] : op.column_entries(j))
                    row.add_term(i * d + k, a);  // (X A)_{ij} term X[i][k] A[k][j]
                for (const auto& [k, a] : opT.column_entries(i))
                    row.add_term(k * d + j, -a);  // (A X)_{ij} term A[i][k] X[k][j]
                if (!row.is_zero()) basis.insert(std::move(row));
            }
        }
    }
    return static_cast<int>(d * d) - basis.rank();
}

}  // namespace blobtilt
