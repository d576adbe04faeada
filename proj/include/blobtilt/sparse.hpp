#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace blobtilt {

/**
 * SparseVector<T>: exact sparse vector indexed by word ranks.  Stored
 * entries are never zero.
 */
template <class T>
class SparseVector {
public:
    using Index = std::uint32_t;

    explicit SparseVector(Index dim) : dim_(dim) {}

    static SparseVector unit(Index dim, Index idx, T coeff) {
        SparseVector v(dim);
        v.add_term(idx, coeff);
        return v;
    }

    Index dim() const { return dim_; }
    const std::map<Index, T>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Index min_index() const {
        if (entries_.empty())
            throw std::domain_error("SparseVector: min_index of zero vector");
        return entries_.begin()->first;
    }

    // nullptr when the coefficient is zero
    const T* coeff(Index idx) const {
        auto it = entries_.find(idx);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void add_term(Index idx, const T& c) {
        if (idx >= dim_) throw std::out_of_range("SparseVector: index out of range");
        if (c.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    // *this += c * w
    void axpy(const T& c, const SparseVector& w) {
        check_dim(w);
        if (c.is_zero()) return;
        for (const auto& [idx, v] : w.entries_) add_term(idx, c * v);
    }

    SparseVector operator+(const SparseVector& o) const {
        check_dim(o);
        SparseVector out(*this);
        for (const auto& [idx, v] : o.entries_) out.add_term(idx, v);
        return out;
    }
    SparseVector operator-(const SparseVector& o) const {
        check_dim(o);
        SparseVector out(*this);
        for (const auto& [idx, v] : o.entries_) out.add_term(idx, -v);
        return out;
    }
    SparseVector scaled(const T& c) const {
        SparseVector out(dim_);
        if (c.is_zero()) return out;
        for (const auto& [idx, v] : entries_) out.add_term(idx, c * v);
        return out;
    }

    bool operator==(const SparseVector& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }
    bool operator!=(const SparseVector& o) const { return !(*this == o); }

private:
    void check_dim(const SparseVector& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("SparseVector: dimension mismatch");
    }

    Index dim_;
    std::map<Index, T> entries_;
};

/**
 * SparseOperator<T>: column-indexed exact sparse matrix; column j is the
 * image of basis vector j.
 */
template <class T>
class SparseOperator {
public:
    using Index = std::uint32_t;

    explicit SparseOperator(Index dim) : dim_(dim), cols_(dim) {}

    static SparseOperator identity(Index dim, const T& one) {
        SparseOperator op(dim);
        for (Index j = 0; j < dim; ++j) op.cols_[j].emplace(j, one);
        return op;
    }

    Index dim() const { return dim_; }
    const std::map<Index, T>& column_entries(Index j) const { return cols_[j]; }

    SparseVector<T> column(Index j) const {
        SparseVector<T> v(dim_);
        for (const auto& [i, c] : cols_[j]) v.add_term(i, c);
        return v;
    }

    void add_entry(Index row, Index col, const T& c) {
        if (row >= dim_ || col >= dim_)
            throw std::out_of_range("SparseOperator: index out of range");
        if (c.is_zero()) return;
        auto [it, inserted] = cols_[col].try_emplace(row, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) cols_[col].erase(it);
        }
    }

    SparseVector<T> apply(const SparseVector<T>& v) const {
        if (v.dim() != dim_)
            throw std::invalid_argument("SparseOperator: dimension mismatch");
        SparseVector<T> out(dim_);
        for (const auto& [j, c] : v.entries())
            for (const auto& [i, a] : cols_[j]) out.add_term(i, a * c);
        return out;
    }

    // operator composition: (A*B)(v) = A(B(v))
    SparseOperator operator*(const SparseOperator& o) const {
        check_dim(o);
        SparseOperator out(dim_);
        for (Index j = 0; j < dim_; ++j)
            for (const auto& [k, b] : o.cols_[j])
                for (const auto& [i, a] : cols_[k]) out.add_entry(i, j, a * b);
        return out;
    }

    SparseOperator operator+(const SparseOperator& o) const {
        check_dim(o);
        SparseOperator out(*this);
        for (Index j = 0; j < dim_; ++j)
            for (const auto& [i, c] : o.cols_[j]) out.add_entry(i, j, c);
        return out;
    }
    SparseOperator operator-(const SparseOperator& o) const {
        check_dim(o);
        SparseOperator out(*this);
        for (Index j = 0; j < dim_; ++j)
            for (const auto& [i, c] : o.cols_[j]) out.add_entry(i, j, -c);
        return out;
    }
    SparseOperator scaled(const T& c) const {
        SparseOperator out(dim_);
        if (c.is_zero()) return out;
        for (Index j = 0; j < dim_; ++j)
            for (const auto& [i, v] : cols_[j]) out.cols_[j].emplace(i, c * v);
        return out;
    }

    SparseOperator transpose() const {
        SparseOperator out(dim_);
        for (Index j = 0; j < dim_; ++j)
            for (const auto& [i, c] : cols_[j]) out.cols_[i].emplace(j, c);
        return out;
    }

    bool is_zero() const {
        for (const auto& col : cols_)
            if (!col.empty()) return false;
        return true;
    }

    bool operator==(const SparseOperator& o) const {
        return dim_ == o.dim_ && cols_ == o.cols_;
    }
    bool operator!=(const SparseOperator& o) const { return !(*this == o); }

private:
    void check_dim(const SparseOperator& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("SparseOperator: dimension mismatch");
    }

    Index dim_;
    std::vector<std::map<Index, T>> cols_;
};

}  // namespace blobtilt
