#pragma once

#include "qboson/matrix.hpp"
#include "qboson/partition.hpp"
#include "qboson/poly.hpp"
#include "qboson/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qboson {

enum class Basis { schur, hl_P };

inline std::string basis_name(Basis b) { return b == Basis::schur ? "schur" : "hl_P"; }

// Finite linear combination of basis symmetric functions with exact scalar
// coefficients. The deformation parameter travels with the value: zero for
// the Schur basis, a rational value or the indeterminate for hl_P.
template <class R>
struct SymFunc {
    Basis basis = Basis::schur;
    R t = R(0);
    std::map<Partition, R, PartitionOrder> terms;

    SymFunc() = default;
    SymFunc(Basis b, const R& t_) : basis(b), t(t_) {}

    static SymFunc unit(Basis b, const R& t_) {
        SymFunc f(b, t_);
        f.terms.emplace(Partition(), R(1));
        return f;
    }
    static SymFunc single(Basis b, const R& t_, const Partition& lam, const R& c = R(1)) {
        SymFunc f(b, t_);
        if (!c.is_zero()) f.terms.emplace(lam, c);
        return f;
    }

    bool is_zero() const { return terms.empty(); }
    R coeff(const Partition& lam) const {
        auto it = terms.find(lam);
        return it == terms.end() ? R(0) : it->second;
    }
    void add_term(const Partition& lam, const R& c) {
        auto it = terms.find(lam);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(lam, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    SymFunc scaled(const R& s) const {
        SymFunc out(basis, t);
        if (s.is_zero()) return out;
        for (const auto& [lam, c] : terms) out.add_term(lam, c * s);
        return out;
    }
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        if (a.basis != b.basis || a.t != b.t)
            throw std::invalid_argument("SymFunc: mixed bases");
        SymFunc out(a);
        for (const auto& [lam, c] : b.terms) out.add_term(lam, c);
        return out;
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis == b.basis && a.t == b.t && a.terms == b.terms;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }
};

// Pieri multiplication by h_k in the column-truncated algebra: each s_mu maps
// to the sum of s_lambda over horizontal k-strips with at most M columns.
template <class R>
SymFunc<R> mul_h(const SymFunc<R>& f, int k, int M) {
    if (f.basis != Basis::schur) throw std::invalid_argument("mul_h: expects the schur basis");
    SymFunc<R> out(Basis::schur, f.t);
    for (const auto& [mu, c] : f.terms)
        for (const auto& lam : strips_above(mu, k, M)) out.add_term(lam, c);
    return out;
}

// The generating family: component k is the coefficient of z^k in H_M(z)f,
// i.e. mul_h(f, k, M), for k = 0..M.
template <class R>
std::vector<SymFunc<R>> mul_H(const SymFunc<R>& f, int M) {
    std::vector<SymFunc<R>> out;
    out.reserve(M + 1);
    for (int k = 0; k <= M; ++k) out.push_back(mul_h(f, k, M));
    return out;
}

// Hall-Littlewood Pieri multiplication by q_r, column-truncated: each P_mu
// maps to sum over horizontal r-strips of phi_{lambda/mu}(t) P_lambda.
template <class R>
SymFunc<R> mul_q(const SymFunc<R>& f, int r, const R& t, int M) {
    if (f.basis != Basis::hl_P) throw std::invalid_argument("mul_q: expects the hl_P basis");
    if (!(f.t == t)) throw std::invalid_argument("mul_q: parameter mismatch");
    SymFunc<R> out(Basis::hl_P, t);
    for (const auto& [mu, c] : f.terms)
        for (const auto& lam : strips_above(mu, r, M))
            out.add_term(lam, c * phi_strip(lam, mu, t));
    return out;
}

// Degree-d slice of the column-truncated algebra: ordered basis of partitions
// of weight d with at most M columns.
struct GradedSector {
    int column_bound = 0;
    int degree = 0;
    std::vector<Partition> basis;
    std::map<Partition, int, PartitionOrder> index;

    static GradedSector make(int M, int d) {
        GradedSector s;
        s.column_bound = M;
        s.degree = d;
        s.basis = partitions_of_weight(d, M);
        for (int i = 0; i < static_cast<int>(s.basis.size()); ++i) s.index.emplace(s.basis[i], i);
        return s;
    }
    int dim() const { return static_cast<int>(basis.size()); }
};

// Matrix of multiplication by h_k from sector (M, d) to sector (M, d + k).
template <class R>
SparseMat<R> mul_h_matrix(const GradedSector& dom, int k) {
    GradedSector cod = GradedSector::make(dom.column_bound, dom.degree + k);
    SparseMat<R> m(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j)
        for (const auto& lam : strips_above(dom.basis[j], k, dom.column_bound))
            m.add_at(cod.index.at(lam), j, R(1));
    return m;
}

// Matrix of multiplication by q_r with parameter t, same sector convention.
template <class R>
SparseMat<R> mul_q_matrix(const GradedSector& dom, int r, const R& t) {
    GradedSector cod = GradedSector::make(dom.column_bound, dom.degree + r);
    SparseMat<R> m(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j)
        for (const auto& lam : strips_above(dom.basis[j], r, dom.column_bound))
            m.add_at(cod.index.at(lam), j, phi_strip(lam, dom.basis[j], t));
    return m;
}

// Gram matrix of the Hall-Littlewood scalar product on a sector: diagonal
// with entries 1/b_lambda(t). The identity at t = 0 (orthonormal Schur basis).
inline SparseMat<Rational> gram_matrix(const GradedSector& s, const Rational& t) {
    SparseMat<Rational> g(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        Rational b = b_lambda(s.basis[i], t);
        if (b.is_zero())
            throw std::domain_error("gram_matrix: b_lambda vanishes at t = " + t.str());
        g.set(i, i, b.inverse());
    }
    return g;
}

// Adjoint of op: (M, d) -> (M, d + n) with respect to the Gram pairing:
// G_d^{-1} op^T G_{d+n}.
inline SparseMat<Rational> adjoint_op(const SparseMat<Rational>& op, const GradedSector& dom,
                                      const GradedSector& cod, const Rational& t) {
    if (op.rows() != cod.dim() || op.cols() != dom.dim())
        throw std::invalid_argument("adjoint_op: sector dimensions do not match the matrix");
    SparseMat<Rational> out(dom.dim(), cod.dim());
    for (const auto& [rc, v] : op.entries()) {
        const auto [i, j] = rc;  // op entry: cod index i, dom index j
        Rational b_dom = b_lambda(dom.basis[j], t);
        Rational b_cod = b_lambda(cod.basis[i], t);
        if (b_cod.is_zero())
            throw std::domain_error("adjoint_op: b_lambda vanishes at t = " + t.str());
        out.add_at(j, i, b_dom * v / b_cod);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact evaluation at finitely many rational points.

// h_0(x), ..., h_kmax(x) by multiplying geometric series, in place.
inline std::vector<Rational> h_values(const std::vector<Rational>& x, int kmax) {
    std::vector<Rational> h(kmax + 1, Rational(0));
    h[0] = Rational(1);
    for (const Rational& xi : x)
        for (int k = 1; k <= kmax; ++k) h[k] += xi * h[k - 1];
    return h;
}

// Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
// Zero when the diagram has more rows than there are variables.
inline Rational schur_eval(const Partition& lam, const std::vector<Rational>& x) {
    const int l = lam.length();
    if (l == 0) return Rational(1);
    if (l > static_cast<int>(x.size())) return Rational(0);
    const int kmax = lam.part(0) + l;
    auto h = h_values(x, kmax);
    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l, Rational(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int k = lam.part(i) - i + j;
            if (k >= 0) m[i][j] = h[k];
        }
    return det(std::move(m));
}

namespace detail {

// The symmetric-group sum defining P_lambda, valid only at pairwise distinct
// points.
inline Rational hl_eval_distinct(const Partition& lam, const std::vector<Rational>& x,
                                 const Rational& t) {
    const int n = static_cast<int>(x.size());
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    Rational sum(0);
    do {
        Rational num(1), den(1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                num *= x[w[i]] - t * x[w[j]];
                den *= x[w[i]] - x[w[j]];
            }
        Rational mono(1);
        for (int i = 0; i < lam.length(); ++i) mono *= x[w[i]].pow(lam.part(i));
        sum += mono * num / den;
    } while (std::next_permutation(w.begin(), w.end()));
    return sum / v_lambda(lam, n, t);
}

inline Rational lagrange_at(const std::vector<Rational>& nodes, const std::vector<Rational>& vals,
                            const Rational& at) {
    Rational out(0);
    const int n = static_cast<int>(nodes.size());
    for (int i = 0; i < n; ++i) {
        Rational term = vals[i];
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            term *= (at - nodes[k]) / (nodes[i] - nodes[k]);
        }
        out += term;
    }
    return out;
}

}  // namespace detail

// Hall-Littlewood polynomial P_lambda(x; t) at rational points. Coincident
// coordinates are removable singularities of the symmetric-group sum; they
// are resolved by interpolating one coordinate through distinct integer
// nodes (degree in a single variable is at most lambda_1) and specializing.
inline Rational hl_eval(const Partition& lam, const std::vector<Rational>& x, const Rational& t) {
    const int n = static_cast<int>(x.size());
    if (lam.length() > n) return Rational(0);
    if (lam.empty()) return Rational(1);
    if (n > 8) throw std::domain_error("hl_eval: limited to 8 variables");
    int dup = -1;
    for (int i = 0; i < n && dup < 0; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x[i] == x[j]) {
                dup = j;
                break;
            }
    if (dup < 0) return detail::hl_eval_distinct(lam, x, t);

    std::vector<Rational> nodes, vals;
    std::vector<Rational> y(x);
    for (long s = 1; static_cast<int>(nodes.size()) < lam.part(0) + 1; ++s) {
        Rational node(s);
        bool clash = false;
        for (int i = 0; i < n; ++i)
            if (i != dup && x[i] == node) clash = true;
        if (clash) continue;
        y[dup] = node;
        nodes.push_back(node);
        vals.push_back(hl_eval(lam, y, t));
    }
    return detail::lagrange_at(nodes, vals, x[dup]);
}

// q_r(x; t): degree-r coefficient of prod_i (1 - t x_i z) / (1 - x_i z).
inline Rational q_eval(int r, const std::vector<Rational>& x, const Rational& t) {
    if (r < 0) throw std::domain_error("q_eval: negative index");
    if (r == 0) return Rational(1);
    std::vector<Rational> num(r + 1, Rational(0)), den(r + 1, Rational(0));
    num[0] = den[0] = Rational(1);
    for (const Rational& xi : x) {
        for (int k = r; k >= 1; --k) {
            num[k] -= t * xi * num[k - 1];
            den[k] -= xi * den[k - 1];
        }
    }
    std::vector<Rational> q(r + 1, Rational(0));
    for (int k = 0; k <= r; ++k) {
        q[k] = num[k];
        for (int j = 1; j <= k; ++j) q[k] -= den[j] * q[k - j];
    }
    return q[r];
}

// Q_lambda(x; t) = b_lambda(t) P_lambda(x; t).
inline Rational hl_Q_eval(const Partition& lam, const std::vector<Rational>& x, const Rational& t) {
    return b_lambda(lam, t) * hl_eval(lam, x, t);
}

// ---------------------------------------------------------------------------
// Degree window of the column-truncated algebra, for operator identities that
// mix degrees. Basis: all partitions with at most M columns and weight at
// most max_degree, canonical order (grouped by weight).
struct ColumnWindow {
    int column_bound = 0;
    int max_degree = 0;
    std::vector<Partition> basis;
    std::map<Partition, int, PartitionOrder> index;
    std::vector<int> offset;  // offset[d] .. offset[d+1] = indices of degree d

    static ColumnWindow make(int M, int D) {
        ColumnWindow w;
        w.column_bound = M;
        w.max_degree = D;
        w.offset.push_back(0);
        for (int d = 0; d <= D; ++d) {
            for (auto& lam : partitions_of_weight(d, M)) w.basis.push_back(std::move(lam));
            w.offset.push_back(static_cast<int>(w.basis.size()));
        }
        for (int i = 0; i < static_cast<int>(w.basis.size()); ++i) w.index.emplace(w.basis[i], i);
        return w;
    }
    int dim() const { return static_cast<int>(basis.size()); }
    // Index range of the degrees 0..d inclusive.
    int degrees_upto(int d) const { return offset[std::min(d, max_degree) + 1]; }
};

// Multiplication by h_k on the window; images beyond max_degree are dropped
// (they drop whole homogeneous columns, so retained columns stay exact).
inline SparseMat<Rational> h_window_matrix(const ColumnWindow& w, int k) {
    SparseMat<Rational> m(w.dim(), w.dim());
    for (int j = 0; j < w.dim(); ++j) {
        const Partition& mu = w.basis[j];
        if (mu.weight() + k > w.max_degree) continue;
        for (const auto& lam : strips_above(mu, k, w.column_bound))
            m.add_at(w.index.at(lam), j, Rational(1));
    }
    return m;
}

// Adjoint of multiplication by h_k in the orthonormal Schur basis.
inline SparseMat<Rational> hperp_window_matrix(const ColumnWindow& w, int k) {
    return h_window_matrix(w, k).transposed();
}

}  // namespace qboson
