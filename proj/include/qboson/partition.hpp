#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qboson {

// Young diagram: weakly decreasing sequence of positive integers.
// The empty partition is the empty diagram.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && p_[i] > p_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int length() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }
    int weight() const {
        int w = 0;
        for (int x : p_) w += x;
        return w;
    }
    // i is 0-based; parts beyond the length read as 0.
    int part(int i) const { return (i >= 0 && i < length()) ? p_[i] : 0; }
    const std::vector<int>& parts() const { return p_; }

    // Length of column i (1-based): number of parts >= i.
    int column_length(int i) const {
        int c = 0;
        while (c < length() && p_[c] >= i) ++c;
        return c;
    }
    // Number of rows of length exactly i >= 1.
    int multiplicity(int i) const {
        int m = 0;
        for (int x : p_) m += (x == i);
        return m;
    }

    Partition conjugate() const {
        std::vector<int> q;
        for (int i = 1; i <= part(0); ++i) q.push_back(column_length(i));
        Partition out;
        out.p_ = std::move(q);
        return out;
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.p_[i] > p_[i]) return false;
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < length(); ++i) {
            if (i) out += ",";
            out += std::to_string(p_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> p_;
};

// Canonical enumeration order used everywhere: by weight, then by
// lexicographically larger part sequence first (so (2) precedes (1,1)).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts() > b.parts();
    }
};

// Occupation numbers (n_0, ..., n_M) of an (M+1)-site state.
struct OccupationVector {
    std::vector<int> counts;

    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> c) : counts(std::move(c)) {
        if (counts.empty()) throw std::invalid_argument("OccupationVector: needs at least one site");
        for (int n : counts)
            if (n < 0) throw std::invalid_argument("OccupationVector: negative occupation");
    }
    OccupationVector(std::initializer_list<int> c) : OccupationVector(std::vector<int>(c)) {}

    int sites() const { return static_cast<int>(counts.size()) - 1; }  // M
    int total() const {
        int s = 0;
        for (int n : counts) s += n;
        return s;
    }
    friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
        return a.counts == b.counts;
    }
    friend bool operator<(const OccupationVector& a, const OccupationVector& b) {
        return a.counts < b.counts;
    }
};

// lambda = 1^{n_1} 2^{n_2} ... M^{n_M}; n_0 is ignored.
inline Partition partition_from_occupations(const OccupationVector& occ) {
    std::vector<int> parts;
    for (int j = occ.sites(); j >= 1; --j)
        for (int r = 0; r < occ.counts[j]; ++r) parts.push_back(j);
    return Partition(std::move(parts));
}

// Inverse of partition_from_occupations with n_0 = N - l(lambda).
inline OccupationVector occupations_from_partition(const Partition& lambda, int M, int N) {
    if (lambda.part(0) > M)
        throw std::domain_error("occupations_from_partition: a part exceeds the site count");
    if (lambda.length() > N)
        throw std::domain_error("occupations_from_partition: more rows than particles");
    std::vector<int> counts(M + 1, 0);
    counts[0] = N - lambda.length();
    for (int j = 1; j <= M; ++j) counts[j] = lambda.multiplicity(j);
    return OccupationVector(std::move(counts));
}

// lambda/mu is a horizontal strip: mu inside lambda with at most one cell per
// column, equivalently the interlacing lambda_i >= mu_i >= lambda_{i+1}.
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (mu.part(i) < lambda.part(i + 1)) return false;
    return true;
}

namespace detail {
// All lambda >= mu with lambda/mu a horizontal strip, parts <= max_part, and
// (when size_filter >= 0) exactly size_filter added cells. Rows are chosen
// between the interlacing bounds mu_{i-1} >= lambda_i >= mu_i.
inline void enumerate_strips_above(const Partition& mu, int max_part, int size_filter,
                                   std::vector<Partition>& out) {
    const int l = mu.length();
    std::vector<int> row(l + 1, 0);
    auto rec = [&](auto&& self, int i, int added) -> void {
        if (size_filter >= 0 && added > size_filter) return;
        if (i == l + 1) {
            if (size_filter >= 0 && added != size_filter) return;
            std::vector<int> parts;
            for (int j = 0; j <= l; ++j)
                if (row[j] > 0) parts.push_back(row[j]);
            out.push_back(Partition(std::move(parts)));
            return;
        }
        int lo = mu.part(i);
        int hi = (i == 0) ? max_part : std::min(mu.part(i - 1), max_part);
        for (int v = lo; v <= hi; ++v) {
            row[i] = v;
            self(self, i + 1, added + v - lo);
        }
        row[i] = lo;
    };
    rec(rec, 0, 0);
}
}  // namespace detail

// Horizontal k-strips over mu inside the column bound M, in canonical order.
inline std::vector<Partition> strips_above(const Partition& mu, int k, int M) {
    if (k < 0) throw std::domain_error("strips_above: negative strip size");
    if (mu.part(0) > M) throw std::domain_error("strips_above: mu exceeds the column bound");
    std::vector<Partition> out;
    detail::enumerate_strips_above(mu, M, k, out);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

// All mu <= lambda with lambda/mu a horizontal strip, in canonical order.
inline std::vector<Partition> strips_below(const Partition& lambda) {
    std::vector<Partition> out;
    const int l = lambda.length();
    std::vector<int> row(l, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) {
            std::vector<int> parts;
            for (int j = 0; j < l; ++j)
                if (row[j] > 0) parts.push_back(row[j]);
            out.push_back(Partition(std::move(parts)));
            return;
        }
        for (int v = lambda.part(i + 1); v <= lambda.part(i); ++v) {
            row[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

// All partitions with at most N rows and parts at most M, canonical order.
// There are binomial(N + M, M) of them.
inline std::vector<Partition> partitions_in_box(int N, int M) {
    if (N < 0 || M < 0) throw std::domain_error("partitions_in_box: negative bounds");
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rows_left, int max_part) -> void {
        out.push_back(Partition(parts));
        if (rows_left == 0) return;
        for (int v = max_part; v >= 1; --v) {
            parts.push_back(v);
            self(self, rows_left - 1, v);
            parts.pop_back();
        }
    };
    rec(rec, N, M);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

// All partitions of weight d with parts at most M, canonical order.
inline std::vector<Partition> partitions_of_weight(int d, int M) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int v = std::min(rem, max_part); v >= 1; --v) {
            parts.push_back(v);
            self(self, rem - v, v);
            parts.pop_back();
        }
    };
    if (d >= 0) rec(rec, d, M);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

// q-integer [n] = 1 + t + ... + t^{n-1}; [n] = n at t = 1 by construction.
template <class R>
R q_int(int n, const R& t) {
    R acc(0), p(1);
    for (int i = 0; i < n; ++i) {
        acc = acc + p;
        p = p * t;
    }
    return acc;
}

// [n]! = [1][2]...[n].
template <class R>
R q_factorial(int n, const R& t) {
    R acc(1);
    for (int i = 1; i <= n; ++i) acc = acc * q_int(i, t);
    return acc;
}

// phi_n(t) = (1-t)(1-t^2)...(1-t^n).
template <class R>
R phi_n(int n, const R& t) {
    R acc(1), p(t);
    for (int i = 1; i <= n; ++i) {
        acc = acc * (R(1) - p);
        p = p * t;
    }
    return acc;
}

// v_n(t) = prod_{i=1}^n (1 + t + ... + t^{i-1}).
template <class R>
R v_n(int n, const R& t) {
    R acc(1);
    for (int i = 1; i <= n; ++i) acc = acc * q_int(i, t);
    return acc;
}

// b_lambda(t) = prod_{i>=1} phi_{n_i(lambda)}(t).
template <class R>
R b_lambda(const Partition& lambda, const R& t) {
    R acc(1);
    for (int i = 1; i <= lambda.part(0); ++i) acc = acc * phi_n(lambda.multiplicity(i), t);
    return acc;
}

// v_lambda(t) over i >= 0 for a fixed number of variables: the zero part
// enters with multiplicity num_vars - l(lambda).
template <class R>
R v_lambda(const Partition& lambda, int num_vars, const R& t) {
    if (num_vars < lambda.length())
        throw std::domain_error("v_lambda: fewer variables than rows");
    R acc = v_n(num_vars - lambda.length(), t);
    for (int i = 1; i <= lambda.part(0); ++i) acc = acc * v_n(lambda.multiplicity(i), t);
    return acc;
}

// phi_{lambda/mu}(t) = prod over columns i where the strip has a cell in
// column i but none in column i+1, of (1 - t^{n_i(lambda)}).
template <class R>
R phi_strip(const Partition& lambda, const Partition& mu, const R& t) {
    if (!is_horizontal_strip(lambda, mu))
        throw std::domain_error("phi_strip: not a horizontal strip");
    R acc(1);
    for (int i = 1; i <= lambda.part(0); ++i) {
        int theta_i = lambda.column_length(i) - mu.column_length(i);
        int theta_next = lambda.column_length(i + 1) - mu.column_length(i + 1);
        if (theta_i == 1 && theta_next == 0) {
            R p(1), tt(t);
            for (int j = 0; j < lambda.multiplicity(i); ++j) p = p * tt;
            acc = acc * (R(1) - p);
        }
    }
    return acc;
}

}  // namespace qboson
