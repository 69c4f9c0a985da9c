#pragma once

#include "l2b/error.hpp"
#include "l2b/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

using Index = std::vector<std::size_t>;

inline std::string index_string(std::span<const std::size_t> idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

/// Multilinear array over Rational storing only nonzero entries. Equality is
/// structural because zero entries are never kept.
class SparseTensor {
  public:
    SparseTensor() = default;
    explicit SparseTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

    std::size_t rank() const { return dims_.size(); }
    const std::vector<std::size_t> &dims() const { return dims_; }
    std::size_t dim(std::size_t axis) const { return dims_.at(axis); }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    const std::map<Index, Rational> &entries() const { return entries_; }

    Rational get(const Index &idx) const {
        check_index(idx);
        auto it = entries_.find(idx);
        return it == entries_.end() ? Rational() : it->second;
    }
    Rational get(std::initializer_list<std::size_t> idx) const { return get(Index(idx)); }

    void set(const Index &idx, const Rational &v) {
        check_index(idx);
        if (v.is_zero())
            entries_.erase(idx);
        else
            entries_[idx] = v;
    }
    void set(std::initializer_list<std::size_t> idx, const Rational &v) { set(Index(idx), v); }

    void add(const Index &idx, const Rational &v) {
        if (v.is_zero())
            return;
        check_index(idx);
        auto [it, inserted] = entries_.try_emplace(idx, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero())
                entries_.erase(it);
        }
    }

    SparseTensor &operator+=(const SparseTensor &o) {
        check_same(o);
        for (const auto &[k, v] : o.entries_)
            add(k, v);
        return *this;
    }
    SparseTensor &operator-=(const SparseTensor &o) {
        check_same(o);
        for (const auto &[k, v] : o.entries_)
            add(k, -v);
        return *this;
    }
    SparseTensor &operator*=(const Rational &s) {
        if (s.is_zero()) {
            entries_.clear();
            return *this;
        }
        for (auto &[k, v] : entries_)
            v *= s;
        return *this;
    }
    friend SparseTensor operator+(SparseTensor a, const SparseTensor &b) { return a += b; }
    friend SparseTensor operator-(SparseTensor a, const SparseTensor &b) { return a -= b; }
    friend SparseTensor operator*(const Rational &s, SparseTensor a) { return a *= s; }

    friend bool operator==(const SparseTensor &a, const SparseTensor &b) {
        return a.dims_ == b.dims_ && a.entries_ == b.entries_;
    }

    /// Reorders axes: axis k of the result is axis perm[k] of *this.
    SparseTensor permute_axes(const std::vector<std::size_t> &perm) const {
        if (perm.size() != rank())
            throw Error(ErrorKind::malformed_permutation, "axis permutation has wrong length");
        std::vector<bool> seen(rank(), false);
        for (std::size_t p : perm) {
            if (p >= rank() || seen[p])
                throw Error(ErrorKind::malformed_permutation, "axis permutation is not a bijection");
            seen[p] = true;
        }
        std::vector<std::size_t> nd(rank());
        for (std::size_t k = 0; k < rank(); ++k)
            nd[k] = dims_.at(perm[k]);
        SparseTensor out(nd);
        Index ni(rank());
        for (const auto &[idx, v] : entries_) {
            for (std::size_t k = 0; k < rank(); ++k)
                ni[k] = idx[perm[k]];
            out.entries_.emplace(ni, v);
        }
        return out;
    }

  private:
    void check_index(const Index &idx) const {
        if (idx.size() != dims_.size())
            throw Error(ErrorKind::range, "index " + index_string(idx) + " has wrong rank for tensor of rank " +
                                              std::to_string(dims_.size()));
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] >= dims_[k])
                throw Error(ErrorKind::range, "index " + index_string(idx) + " out of bounds on axis " +
                                                  std::to_string(k));
    }
    void check_same(const SparseTensor &o) const {
        if (dims_ != o.dims_)
            throw Error(ErrorKind::dimension_mismatch, "tensor shapes differ");
    }

    std::vector<std::size_t> dims_;
    std::map<Index, Rational> entries_;
};

/// Dense row-major copy of a tensor, used inside hot verification loops.
class DenseTensor {
  public:
    DenseTensor() = default;
    explicit DenseTensor(const SparseTensor &t) : dims_(t.dims()), strides_(t.rank()) {
        std::size_t total = 1;
        for (std::size_t k = t.rank(); k-- > 0;) {
            strides_[k] = total;
            total *= dims_[k];
        }
        data_.resize(total);
        for (const auto &[idx, v] : t.entries())
            data_[offset(idx)] = v;
    }

    const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * strides_[0] + j]; }
    const Rational &operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[i * strides_[0] + j * strides_[1] + k];
    }
    const Rational &operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return data_[i * strides_[0] + j * strides_[1] + k * strides_[2] + l];
    }

  private:
    std::size_t offset(const Index &idx) const {
        std::size_t o = 0;
        for (std::size_t k = 0; k < idx.size(); ++k)
            o += idx[k] * strides_[k];
        return o;
    }

    std::vector<std::size_t> dims_, strides_;
    std::vector<Rational> data_;
};

using AxisPair = std::pair<std::size_t, std::size_t>;

/// Contracts axis `first` of t1 against axis `second` of t2 for each pair.
/// Result axes: the free axes of t1 in order, then the free axes of t2.
inline SparseTensor contract(const SparseTensor &t1, const SparseTensor &t2, const std::vector<AxisPair> &pairs) {
    std::vector<bool> used1(t1.rank(), false), used2(t2.rank(), false);
    for (const auto &[a, b] : pairs) {
        if (a >= t1.rank() || b >= t2.rank())
            throw Error(ErrorKind::dimension_mismatch,
                        "contraction axes (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        if (used1[a] || used2[b])
            throw Error(ErrorKind::dimension_mismatch,
                        "contraction axes (" + std::to_string(a) + "," + std::to_string(b) + ") used twice");
        if (t1.dim(a) != t2.dim(b))
            throw Error(ErrorKind::dimension_mismatch,
                        "contraction axes (" + std::to_string(a) + "," + std::to_string(b) + ") have dimensions " +
                            std::to_string(t1.dim(a)) + " and " + std::to_string(t2.dim(b)));
        used1[a] = used2[b] = true;
    }
    std::vector<std::size_t> free1, free2, dims;
    for (std::size_t k = 0; k < t1.rank(); ++k)
        if (!used1[k]) {
            free1.push_back(k);
            dims.push_back(t1.dim(k));
        }
    for (std::size_t k = 0; k < t2.rank(); ++k)
        if (!used2[k]) {
            free2.push_back(k);
            dims.push_back(t2.dim(k));
        }
    SparseTensor out(dims);

    // bucket t2 by its contracted coordinates
    std::map<Index, std::vector<std::pair<const Index *, const Rational *>>> buckets;
    for (const auto &[idx, v] : t2.entries()) {
        Index key;
        for (const auto &p : pairs)
            key.push_back(idx[p.second]);
        buckets[key].emplace_back(&idx, &v);
    }
    Index key, res(dims.size());
    for (const auto &[idx1, v1] : t1.entries()) {
        key.clear();
        for (const auto &p : pairs)
            key.push_back(idx1[p.first]);
        auto it = buckets.find(key);
        if (it == buckets.end())
            continue;
        for (std::size_t k = 0; k < free1.size(); ++k)
            res[k] = idx1[free1[k]];
        for (const auto &[idx2, v2] : it->second) {
            for (std::size_t k = 0; k < free2.size(); ++k)
                res[free1.size() + k] = (*idx2)[free2[k]];
            out.add(res, v1 * *v2);
        }
    }
    return out;
}

namespace detail {

inline int permutation_parity_sign(const std::vector<std::size_t> &p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

} // namespace detail

/// Full antisymmetrization over the listed axes with 1/k! normalization.
inline SparseTensor alternate(const SparseTensor &t, const std::vector<std::size_t> &axes) {
    for (std::size_t a : axes) {
        if (a >= t.rank())
            throw Error(ErrorKind::dimension_mismatch, "alternation axis " + std::to_string(a) + " out of range");
        if (t.dim(a) != t.dim(axes.front()))
            throw Error(ErrorKind::dimension_mismatch, "alternation axes " + std::to_string(axes.front()) + " and " +
                                                           std::to_string(a) + " have different dimensions");
    }
    {
        auto sorted = axes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::dimension_mismatch, "alternation axis listed twice");
    }
    const std::size_t k = axes.size();
    if (k < 2)
        return t;
    long fact = 1;
    for (std::size_t i = 2; i <= k; ++i)
        fact *= static_cast<long>(i);
    const Rational norm(1, fact);

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    SparseTensor out(t.dims());
    do {
        Rational s = norm * Rational(detail::permutation_parity_sign(perm));
        for (const auto &[idx, v] : t.entries()) {
            Index ni = idx;
            for (std::size_t p = 0; p < k; ++p)
                ni[axes[p]] = idx[axes[perm[p]]];
            out.add(ni, s * v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Sign for reordering homogeneous elements x_0..x_{n-1} of the given degrees
/// into the order x_{perm[0]}, x_{perm[1]}, ...; each transposition of
/// elements of degrees p, q contributes (-1)^{pq}.
inline int koszul_sign(const std::vector<int> &degrees, const std::vector<std::size_t> &permutation) {
    const std::size_t n = degrees.size();
    if (permutation.size() != n)
        throw Error(ErrorKind::malformed_permutation, "permutation length " + std::to_string(permutation.size()) +
                                                          " differs from " + std::to_string(n) + " degrees");
    std::vector<bool> seen(n, false);
    for (std::size_t p : permutation) {
        if (p >= n || seen[p])
            throw Error(ErrorKind::malformed_permutation, "not a bijection of 0.." + std::to_string(n - 1));
        seen[p] = true;
    }
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (permutation[i] > permutation[j] && (degrees[permutation[i]] * degrees[permutation[j]]) % 2 != 0)
                sign = -sign;
    return sign;
}

} // namespace l2b
