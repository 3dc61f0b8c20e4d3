#pragma once

#include "qboson/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qboson {

// Sparse exact matrix over a ring scalar. Zero entries are never stored.
template <class R>
class SparseMat {
public:
    SparseMat() : rows_(0), cols_(0) {}
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMat: negative dimension");
    }
    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.a_.emplace(std::make_pair(i, i), R(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_zero() const { return a_.empty(); }
    std::size_t nonzeros() const { return a_.size(); }
    const std::map<std::pair<int, int>, R>& entries() const { return a_; }

    void set(int r, int c, const R& v) {
        check_index(r, c);
        if (v.is_zero())
            a_.erase({r, c});
        else
            a_[{r, c}] = v;
    }
    void add_at(int r, int c, const R& v) {
        check_index(r, c);
        auto it = a_.find({r, c});
        if (it == a_.end()) {
            if (!v.is_zero()) a_.emplace(std::make_pair(r, c), v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) a_.erase(it);
        }
    }
    R at(int r, int c) const {
        check_index(r, c);
        auto it = a_.find({r, c});
        return it == a_.end() ? R(0) : it->second;
    }

    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        a.check_same_shape(b);
        SparseMat out(a);
        for (const auto& [rc, v] : b.a_) out.add_at(rc.first, rc.second, v);
        return out;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        a.check_same_shape(b);
        SparseMat out(a);
        for (const auto& [rc, v] : b.a_) out.add_at(rc.first, rc.second, -v);
        return out;
    }
    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMat: inner dimension mismatch");
        SparseMat out(a.rows_, b.cols_);
        for (const auto& [rc, va] : a.a_) {
            const auto [i, k] = rc;
            auto lo = b.a_.lower_bound({k, 0});
            auto hi = b.a_.lower_bound({k + 1, 0});
            for (auto it = lo; it != hi; ++it) out.add_at(i, it->first.second, va * it->second);
        }
        return out;
    }
    SparseMat scaled(const R& s) const {
        SparseMat out(rows_, cols_);
        if (s.is_zero()) return out;
        for (const auto& [rc, v] : a_) {
            R w = v * s;
            if (!w.is_zero()) out.a_.emplace(rc, std::move(w));
        }
        return out;
    }
    SparseMat transposed() const {
        SparseMat out(cols_, rows_);
        for (const auto& [rc, v] : a_) out.a_.emplace(std::make_pair(rc.second, rc.first), v);
        return out;
    }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

    std::vector<R> apply(const std::vector<R>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("SparseMat: vector length mismatch");
        std::vector<R> y(rows_, R(0));
        for (const auto& [rc, v] : a_) {
            if (!x[rc.second].is_zero()) y[rc.first] = y[rc.first] + v * x[rc.second];
        }
        return y;
    }

    SparseMat block(int r0, int nrows, int c0, int ncols) const {
        SparseMat out(nrows, ncols);
        for (const auto& [rc, v] : a_) {
            int r = rc.first - r0, c = rc.second - c0;
            if (r >= 0 && r < nrows && c >= 0 && c < ncols) out.a_.emplace(std::make_pair(r, c), v);
        }
        return out;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("SparseMat: index out of range");
    }
    void check_same_shape(const SparseMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("SparseMat: shape mismatch");
    }
    int rows_, cols_;
    std::map<std::pair<int, int>, R> a_;
};

// First row-major position where a and b differ, restricted to columns in
// [col_begin, col_end). Returns (row, col, a_value, b_value).
template <class R>
std::optional<std::tuple<int, int, R, R>> first_mismatch(const SparseMat<R>& a,
                                                         const SparseMat<R>& b, int col_begin,
                                                         int col_end) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return std::make_tuple(-1, -1, R(0), R(0));
    std::optional<std::tuple<int, int, R, R>> best;
    auto consider = [&](int r, int c) {
        if (c < col_begin || c >= col_end) return;
        if (best && (std::get<0>(*best) < r ||
                     (std::get<0>(*best) == r && std::get<1>(*best) <= c)))
            return;
        R va = a.at(r, c), vb = b.at(r, c);
        if (va != vb) best = std::make_tuple(r, c, va, vb);
    };
    for (const auto& [rc, v] : a.entries()) consider(rc.first, rc.second);
    for (const auto& [rc, v] : b.entries()) consider(rc.first, rc.second);
    return best;
}

// Exact determinant by Gaussian elimination over the rationals.
inline Rational det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det: not square");
    Rational result(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        Rational inv = m[col][col].inverse();
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

}  // namespace qboson
