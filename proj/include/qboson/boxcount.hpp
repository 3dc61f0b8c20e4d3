#pragma once

#include "qboson/partition.hpp"
#include "qboson/poly.hpp"
#include "qboson/rational.hpp"
#include "qboson/symfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace qboson {

// An a x b x c box: a rows, b columns, entries bounded by c.
struct BoxSpec {
    int rows, cols, height;

    BoxSpec(int a, int b, int c) : rows(a), cols(b), height(c) {
        if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("BoxSpec: sides must be positive");
    }
};

// Plane partition: array weakly decreasing along rows and columns.
class PlanePartition {
public:
    explicit PlanePartition(std::vector<std::vector<int>> entries) : e_(std::move(entries)) {
        if (e_.empty() || e_[0].empty())
            throw std::invalid_argument("PlanePartition: empty array");
        const std::size_t cols = e_[0].size();
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i].size() != cols) throw std::invalid_argument("PlanePartition: ragged array");
            for (std::size_t j = 0; j < cols; ++j) {
                if (e_[i][j] < 0) throw std::invalid_argument("PlanePartition: negative entry");
                if (j > 0 && e_[i][j] > e_[i][j - 1])
                    throw std::invalid_argument("PlanePartition: rows must weakly decrease");
                if (i > 0 && e_[i][j] > e_[i - 1][j])
                    throw std::invalid_argument("PlanePartition: columns must weakly decrease");
            }
        }
    }

    int rows() const { return static_cast<int>(e_.size()); }
    int cols() const { return static_cast<int>(e_[0].size()); }
    int entry(int i, int j) const { return e_[i][j]; }
    int volume() const {
        int v = 0;
        for (const auto& row : e_)
            for (int x : row) v += x;
        return v;
    }

private:
    std::vector<std::vector<int>> e_;
};

// The a+b-1 diagonal slices, read from the bottom-left diagonal to the
// top-right one. Each slice is weakly decreasing along its diagonal and the
// sequence interlaces: it grows by horizontal strips up to the main diagonal
// and shrinks by horizontal strips after it.
inline std::vector<Partition> diagonal_slices(const PlanePartition& pp) {
    std::vector<Partition> out;
    for (int k = -(pp.rows() - 1); k <= pp.cols() - 1; ++k) {
        std::vector<int> vals;
        for (int i = 0; i < pp.rows(); ++i) {
            int j = i + k;
            if (j < 0 || j >= pp.cols()) continue;
            if (pp.entry(i, j) > 0) vals.push_back(pp.entry(i, j));
        }
        out.push_back(Partition(std::move(vals)));
    }
    return out;
}

namespace detail {

// Maximal slice length at position p = 1..a+b-1 of the diagonal walk.
inline int slice_length_cap(const BoxSpec& box, int p) {
    return std::min(std::min(p, box.rows + box.cols - p), std::min(box.rows, box.cols));
}

}  // namespace detail

// Volume generating polynomial by the transfer dynamic program over diagonal
// slices: states are partitions with at most c columns, transitions add a
// horizontal strip while walking up to the main diagonal and remove one while
// walking down, each slice weighted by q^{|slice|}.
inline Poly genfun_box_transfer(const BoxSpec& box) {
    using State = std::map<Partition, Poly, PartitionOrder>;
    State cur;
    cur.emplace(Partition(), Poly(1));
    const int steps = box.rows + box.cols;  // positions 1..a+b-1, then back to empty
    for (int p = 1; p <= steps; ++p) {
        State next;
        const bool growing = p <= box.rows;
        const int cap = (p == steps) ? 0 : detail::slice_length_cap(box, p);
        for (const auto& [mu, w] : cur) {
            std::vector<Partition> targets;
            if (growing) {
                for (int k = 0; k + mu.weight() <= cap * box.height; ++k)
                    for (const auto& lam : strips_above(mu, k, box.height))
                        if (lam.length() <= cap) targets.push_back(lam);
            } else {
                for (const auto& lam : strips_below(mu))
                    if (lam.length() <= cap) targets.push_back(lam);
            }
            for (const auto& lam : targets) {
                Poly weight = w * Poly::monomial(lam.weight(), Rational(1));
                auto it = next.find(lam);
                if (it == next.end())
                    next.emplace(lam, weight);
                else
                    it->second += weight;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(Partition());
    return it == cur.end() ? Poly() : it->second;
}

inline Rational count_box_transfer(const BoxSpec& box) {
    return genfun_box_transfer(box).eval(Rational(1));
}

// Exhaustive enumeration over monotone arrays: the independent oracle.
inline Poly genfun_box_bruteforce(const BoxSpec& box) {
    if (box.rows * box.cols * box.height > 30)
        throw std::length_error("genfun_box_bruteforce: box too large to enumerate");
    std::vector<std::vector<int>> arr(box.rows, std::vector<int>(box.cols, 0));
    std::vector<Rational> genfun(box.rows * box.cols * box.height + 1, Rational(0));
    auto rec = [&](auto&& self, int i, int j, int vol) -> void {
        if (i == box.rows) {
            genfun[vol] += Rational(1);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == box.cols) {
            ni = i + 1;
            nj = 0;
        }
        int hi = box.height;
        if (j > 0) hi = std::min(hi, arr[i][j - 1]);
        if (i > 0) hi = std::min(hi, arr[i - 1][j]);
        for (int v = 0; v <= hi; ++v) {
            arr[i][j] = v;
            self(self, ni, nj, vol + v);
        }
    };
    rec(rec, 0, 0, 0);
    return Poly(std::move(genfun));
}

inline Rational count_box_bruteforce(const BoxSpec& box) {
    return genfun_box_bruteforce(box).eval(Rational(1));
}

// Third route: the rectangular Schur polynomial s_{(c^a)} at a+b unit
// arguments counts the boxed plane partitions.
inline Rational count_box_schur(const BoxSpec& box) {
    std::vector<int> parts(box.rows, box.height);
    std::vector<Rational> ones(box.rows + box.cols, Rational(1));
    return schur_eval(Partition(std::move(parts)), ones);
}

}  // namespace qboson
