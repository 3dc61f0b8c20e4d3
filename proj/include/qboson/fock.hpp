#pragma once

#include "qboson/matrix.hpp"
#include "qboson/partition.hpp"
#include "qboson/poly.hpp"
#include "qboson/rational.hpp"
#include "qboson/symfunc.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qboson {

enum class Model { phase, qboson };

inline std::string model_name(Model m) { return m == Model::phase ? "phase" : "qboson"; }

// Finite window of the multi-site Fock space: all occupation states on sites
// 0..M with total particle number at most max_total. Within each total-N
// sector the basis is ordered by the canonical partition order, so the state
// at sector position j corresponds to partitions_in_box(N, M)[j].
class FockSpace {
public:
    FockSpace(int sites, int max_total) : sites_(sites), max_total_(max_total) {
        if (sites < 1) throw std::invalid_argument("FockSpace: needs at least one site");
        if (max_total < 0) throw std::invalid_argument("FockSpace: negative particle bound");
        offsets_.push_back(0);
        for (int N = 0; N <= max_total; ++N) {
            for (const auto& lam : partitions_in_box(N, sites_))
                basis_.push_back(occupations_from_partition(lam, sites_, N));
            offsets_.push_back(static_cast<int>(basis_.size()));
        }
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) index_.emplace(basis_[i], i);
    }

    int sites() const { return sites_; }
    int max_total() const { return max_total_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int sector_begin(int N) const { return offsets_.at(N); }
    int sector_end(int N) const { return offsets_.at(N + 1); }
    int sector_dim(int N) const { return sector_end(N) - sector_begin(N); }
    const OccupationVector& state(int i) const { return basis_.at(i); }
    int index_of(const OccupationVector& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw std::out_of_range("FockSpace: state outside the window");
        return it->second;
    }
    bool contains(const OccupationVector& s) const { return index_.count(s) > 0; }

private:
    int sites_, max_total_;
    std::vector<OccupationVector> basis_;
    std::vector<int> offsets_;
    std::map<OccupationVector, int> index_;
};

// ---------------------------------------------------------------------------
// Site operators on the window. States pushed above the window are dropped;
// callers must leave enough headroom above the sectors they assert on.

template <class R>
SparseMat<R> creation_op(const FockSpace& f, Model model, int site, const R& t) {
    if (site < 0 || site > f.sites()) throw std::out_of_range("creation_op: bad site");
    SparseMat<R> m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j) {
        OccupationVector s = f.state(j);
        if (s.total() + 1 > f.max_total()) continue;
        int n = s.counts[site];
        // phase and q-boson site 0 create with coefficient 1; q-boson bulk
        // sites create with coefficient [n+1].
        R c = (model == Model::qboson && site >= 1) ? q_int(n + 1, t) : R(1);
        s.counts[site] += 1;
        m.add_at(f.index_of(s), j, c);
    }
    return m;
}

template <class R>
SparseMat<R> annihilation_op(const FockSpace& f, Model model, int site, const R& t) {
    if (site < 0 || site > f.sites()) throw std::out_of_range("annihilation_op: bad site");
    SparseMat<R> m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j) {
        OccupationVector s = f.state(j);
        int n = s.counts[site];
        if (n == 0) continue;
        // q-boson site 0 annihilates with coefficient [n]; elsewhere 1.
        R c = (model == Model::qboson && site == 0) ? q_int(n, t) : R(1);
        s.counts[site] -= 1;
        m.add_at(f.index_of(s), j, c);
    }
    return m;
}

template <class R>
SparseMat<R> number_op(const FockSpace& f, int site) {
    SparseMat<R> m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j) m.set(j, j, R(f.state(j).counts[site]));
    return m;
}

template <class R>
SparseMat<R> total_number_op(const FockSpace& f) {
    SparseMat<R> m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j) m.set(j, j, R(f.state(j).total()));
    return m;
}

// Projection onto states with the given site empty.
template <class R>
SparseMat<R> site_vacuum_projector(const FockSpace& f, int site) {
    SparseMat<R> m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j)
        if (f.state(j).counts[site] == 0) m.set(j, j, R(1));
    return m;
}

template <class R>
struct SiteOps {
    SparseMat<R> creation, annihilation, number;
};

template <class R>
SiteOps<R> site_ops(const FockSpace& f, Model model, int site, const R& t) {
    return {creation_op(f, model, site, t), annihilation_op(f, model, site, t),
            number_op<R>(f, site)};
}

// Squared norm of a basis state: site 0 carries the creation-normalized
// realization (norm [n]!), sites >= 1 the annihilation-normalized one
// (norm 1/[n]!). Note the product-of-sites value is [n_0]!/prod_j [n_j]!,
// which disagrees with the closed form [n_0]/prod_j [n_j]! for n_0 >= 3;
// the site-wise product is the one under which B and B-dagger are adjoint.
inline Rational fock_norm_squared(Model model, const Rational& t, const OccupationVector& s) {
    if (t == Rational(1)) throw std::domain_error("fock_norm_squared: t must differ from 1");
    if (model == Model::phase) return Rational(1);
    Rational out = q_factorial(s.counts[0], t);
    for (int site = 1; site < static_cast<int>(s.counts.size()); ++site)
        out = out / q_factorial(s.counts[site], t);
    return out;
}

// ---------------------------------------------------------------------------
// Operator-valued Laurent polynomials in the spectral parameter.

template <class R>
struct OpSeries {
    std::map<int, SparseMat<R>> terms;  // exponent -> nonzero matrix

    static OpSeries single(int k, SparseMat<R> m) {
        OpSeries s;
        if (!m.is_zero()) s.terms.emplace(k, std::move(m));
        return s;
    }
    void add_term(int k, const SparseMat<R>& m) {
        if (m.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, m);
        } else {
            it->second = it->second + m;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend OpSeries operator+(const OpSeries& a, const OpSeries& b) {
        OpSeries out(a);
        for (const auto& [k, m] : b.terms) out.add_term(k, m);
        return out;
    }
    // Composition: (a * b) applies b first.
    friend OpSeries operator*(const OpSeries& a, const OpSeries& b) {
        OpSeries out;
        for (const auto& [ka, ma] : a.terms)
            for (const auto& [kb, mb] : b.terms) out.add_term(ka + kb, ma * mb);
        return out;
    }
    friend bool operator==(const OpSeries& a, const OpSeries& b) { return a.terms == b.terms; }

    SparseMat<R> coeff(int k, int dim) const {
        auto it = terms.find(k);
        return it == terms.end() ? SparseMat<R>(dim, dim) : it->second;
    }
    SparseMat<R> eval(const Rational& u0) const {
        SparseMat<R> out;
        bool first = true;
        for (const auto& [k, m] : terms) {
            SparseMat<R> term = m.scaled(R(u0.pow(k)));
            if (first) {
                out = std::move(term);
                first = false;
            } else {
                out = out + term;
            }
        }
        return out;
    }
    OpSeries substitute_inverse() const {  // u -> u^{-1}
        OpSeries out;
        for (const auto& [k, m] : terms) out.terms.emplace(-k, m);
        return out;
    }
    OpSeries transposed_coeffs() const {
        OpSeries out;
        for (const auto& [k, m] : terms) out.terms.emplace(k, m.transposed());
        return out;
    }
    int min_exponent() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_exponent() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

// 2x2 operator-valued Laurent matrix [[A, B], [C, D]]: the L-matrices and the
// monodromy matrix live here.
template <class R>
struct LaurentOpMatrix {
    OpSeries<R> A, B, C, D;

    const OpSeries<R>& entry(int i, int j) const {
        if (i == 0) return j == 0 ? A : B;
        return j == 0 ? C : D;
    }
    friend LaurentOpMatrix operator*(const LaurentOpMatrix& l, const LaurentOpMatrix& r) {
        return {l.A * r.A + l.B * r.C, l.A * r.B + l.B * r.D, l.C * r.A + l.D * r.C,
                l.C * r.B + l.D * r.D};
    }
    std::array<std::array<SparseMat<R>, 2>, 2> eval(const Rational& u0) const {
        return {{{A.eval(u0), B.eval(u0)}, {C.eval(u0), D.eval(u0)}}};
    }
};

// Site L-matrix. The perturb flag replaces the u^{-1} diagonal by u^{-2}; it
// exists as a negative control for the verification suite.
template <class R>
LaurentOpMatrix<R> l_matrix(const FockSpace& f, Model model, int site, const R& t,
                            bool perturb = false) {
    SparseMat<R> id = SparseMat<R>::identity(f.dim());
    LaurentOpMatrix<R> L;
    L.A = OpSeries<R>::single(perturb ? -2 : -1, id);
    L.D = OpSeries<R>::single(1, id);
    SparseMat<R> up = creation_op(f, model, site, t);
    SparseMat<R> down = annihilation_op(f, model, site, t);
    if (model == Model::qboson) {
        R dress = R(1) - t;
        if (site == 0)
            down = down.scaled(dress);
        else
            up = up.scaled(dress);
    }
    L.B = OpSeries<R>::single(0, std::move(up));
    L.C = OpSeries<R>::single(0, std::move(down));
    return L;
}

// Monodromy matrix T(u) = L_M(u) L_{M-1}(u) ... L_0(u).
template <class R>
LaurentOpMatrix<R> monodromy(const FockSpace& f, Model model, const R& t, bool perturb = false) {
    LaurentOpMatrix<R> T = l_matrix(f, model, 0, t, perturb);
    for (int site = 1; site <= f.sites(); ++site) T = l_matrix(f, model, site, t, perturb) * T;
    return T;
}

// ---------------------------------------------------------------------------
// R-matrix. Basis order of the auxiliary pair: 11, 12, 21, 22.

// Entries multiplied through by u^2 - v^2. For the q-boson model this is the
// q-rescaled matrix (entries polynomial in t = q^2); the phase matrix is its
// t = 0 specialization.
template <class R>
std::array<std::array<R, 4>, 4> r_matrix_cleared(const Rational& u, const Rational& v, const R& t) {
    if (u.pow(2) == v.pow(2)) throw std::domain_error("r_matrix: u^2 = v^2 is singular");
    R F = R(u.pow(2)) - t * R(v.pow(2));
    R G = R(u * v) * (R(1) - t);
    R E = R(u.pow(2) - v.pow(2));
    std::array<std::array<R, 4>, 4> out{};
    for (auto& row : out) row.fill(R(0));
    out[0][0] = F;
    out[1][1] = G;
    out[1][2] = E;
    out[2][1] = t * E;
    out[2][2] = G;
    out[3][3] = F;
    return out;
}

inline Rational phase_f(const Rational& v, const Rational& u) {
    Rational d = u.pow(2) - v.pow(2);
    if (d.is_zero()) throw std::domain_error("phase_f: u^2 = v^2 is singular");
    return u.pow(2) / d;
}
inline Rational phase_g(const Rational& v, const Rational& u) {
    Rational d = u.pow(2) - v.pow(2);
    if (d.is_zero()) throw std::domain_error("phase_g: u^2 = v^2 is singular");
    return u * v / d;
}

// Evaluated R-matrix with the denominator divided back out. For the q-boson
// model this is the q-rescaled matrix, the only form rational in t.
template <class R>
std::array<std::array<R, 4>, 4> r_matrix(Model model, const Rational& u, const Rational& v,
                                         const R& t) {
    if (model == Model::phase && !t.is_zero())
        throw std::invalid_argument("r_matrix: the phase model has t = 0");
    auto out = r_matrix_cleared(u, v, t);
    R scale = R((u.pow(2) - v.pow(2)).inverse());
    for (auto& row : out)
        for (auto& x : row) x = x * scale;
    return out;
}

// ---------------------------------------------------------------------------
// Exact operator checks. A failure carries the first mismatching entry.

struct CheckFailure {
    std::string where;
    int row = -1, col = -1;
    std::string lhs, rhs;
};

namespace detail {

template <class R>
std::optional<CheckFailure> compare_on_sectors(const SparseMat<R>& a, const SparseMat<R>& b,
                                               const FockSpace& f, int max_N,
                                               const std::string& where) {
    auto diff = first_mismatch(a, b, 0, f.sector_end(std::min(max_N, f.max_total())));
    if (!diff) return std::nullopt;
    auto [r, c, va, vb] = *diff;
    return CheckFailure{where, r, c, va.str(), vb.str()};
}

template <class R>
using Mat2 = std::array<std::array<SparseMat<R>, 2>, 2>;

// (X tensor Y)[(i,k)][(j,l)] = X[i][j] Y[k][l], applied right factor first.
template <class R>
std::array<std::array<SparseMat<R>, 4>, 4> kron(const Mat2<R>& x, const Mat2<R>& y) {
    std::array<std::array<SparseMat<R>, 4>, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = x[i][j] * y[k][l];
    return out;
}

// R (X tensor Y) == (Y tensor X) R with the cleared R-matrix.
template <class R>
std::optional<CheckFailure> bilinear_failure(const FockSpace& f, const Mat2<R>& xu,
                                             const Mat2<R>& xv, const Rational& u,
                                             const Rational& v, const R& t, int max_N,
                                             const std::string& where) {
    auto rm = r_matrix_cleared(u, v, t);
    auto uv = kron(xu, xv);
    auto vu = kron(xv, xu);
    const int dim = f.dim();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            SparseMat<R> lhs(dim, dim), rhs(dim, dim);
            for (int m = 0; m < 4; ++m) {
                if (!rm[r][m].is_zero()) lhs = lhs + uv[m][c].scaled(rm[r][m]);
                if (!rm[m][c].is_zero()) rhs = rhs + vu[r][m].scaled(rm[m][c]);
            }
            auto fail = compare_on_sectors(lhs, rhs, f, max_N,
                                           where + " entry (" + std::to_string(r) + "," +
                                               std::to_string(c) + ")");
            if (fail) return fail;
        }
    return std::nullopt;
}

}  // namespace detail

// Bilinear exchange relation for every site L-matrix.
template <class R>
std::optional<CheckFailure> rtt_site_failure(const FockSpace& f, Model model, const R& t,
                                             const Rational& u, const Rational& v, int max_N) {
    for (int site = 0; site <= f.sites(); ++site) {
        auto L = l_matrix(f, model, site, t);
        auto fail = detail::bilinear_failure(f, L.eval(u), L.eval(v), u, v, t, max_N,
                                             "site " + std::to_string(site));
        if (fail) return fail;
    }
    return std::nullopt;
}

// Bilinear exchange relation for the monodromy matrix.
template <class R>
std::optional<CheckFailure> rtt_monodromy_failure(const FockSpace& f, Model model, const R& t,
                                                  const Rational& u, const Rational& v,
                                                  int max_N) {
    auto T = monodromy(f, model, t);
    return detail::bilinear_failure(f, T.eval(u), T.eval(v), u, v, t, max_N, "monodromy");
}

// N-hat B(u) = B(u)(N-hat + 1), N-hat C(u) = C(u)(N-hat - 1), and A, D commute
// with N-hat.
template <class R>
std::optional<CheckFailure> number_shift_failure(const FockSpace& f, Model model, const R& t,
                                                 const Rational& u0, int max_N) {
    auto T = monodromy(f, model, t).eval(u0);
    auto nhat = total_number_op<R>(f);
    auto id = SparseMat<R>::identity(f.dim());
    const std::array<std::pair<std::string, int>, 4> shifts = {
        std::make_pair(std::string("A"), 0), std::make_pair(std::string("B"), 1),
        std::make_pair(std::string("C"), -1), std::make_pair(std::string("D"), 0)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const auto& [name, shift] = shifts[2 * i + j];
            SparseMat<R> lhs = nhat * T[i][j];
            SparseMat<R> rhs = T[i][j] * (nhat + id.scaled(R(shift)));
            auto fail = detail::compare_on_sectors(lhs, rhs, f, max_N, "number shift of " + name);
            if (fail) return fail;
        }
    return std::nullopt;
}

// Phase-model relations between the monodromy entries:
//   B(u) = u A(u) phidag_0, C(u) = u^{-1} phi_0 Adag(u^{-1}),
//   D(u) = phi_0 Adag(u^{-1}) phidag_0,
// where Adag is the entrywise Fock-space adjoint of A (the basis is
// orthonormal for the phase model).
inline std::optional<CheckFailure> lemma_abcd_failure(const FockSpace& f, const Rational& u0,
                                                      int max_N) {
    if (u0.is_zero()) throw std::domain_error("lemma_abcd: u must be nonzero");
    auto T = monodromy(f, Model::phase, Rational(0));
    auto adag_series = T.A.transposed_coeffs().substitute_inverse();
    auto adag = adag_series.eval(u0);
    auto phi0 = annihilation_op(f, Model::phase, 0, Rational(0));
    auto phidag0 = creation_op(f, Model::phase, 0, Rational(0));

    auto b_lhs = T.B.eval(u0);
    auto b_rhs = (T.A.eval(u0) * phidag0).scaled(u0);
    if (auto fail = detail::compare_on_sectors(b_lhs, b_rhs, f, max_N, "B = u A phidag0"))
        return fail;

    auto c_lhs = T.C.eval(u0);
    auto c_rhs = (phi0 * adag).scaled(u0.inverse());
    if (auto fail = detail::compare_on_sectors(c_lhs, c_rhs, f, max_N, "C = u^-1 phi0 Adag"))
        return fail;

    auto d_lhs = T.D.eval(u0);
    auto d_rhs = phi0 * adag * phidag0;
    return detail::compare_on_sectors(d_lhs, d_rhs, f, max_N, "D = phi0 Adag phidag0");
}

// Consequence on the positive-energy side: the annihilating entry at u equals
// the transpose of the creating entry at u^{-1}, sector by sector.
inline std::optional<CheckFailure> c_is_b_transpose_failure(const FockSpace& f, const Rational& u0,
                                                            int max_N) {
    auto T = monodromy(f, Model::phase, Rational(0));
    auto b_inv = T.B.eval(u0.inverse());
    auto c_mat = T.C.eval(u0);
    for (int N = 1; N <= std::min(max_N, f.max_total()); ++N) {
        auto c_block = c_mat.block(f.sector_begin(N - 1), f.sector_dim(N - 1), f.sector_begin(N),
                                   f.sector_dim(N));
        auto b_block = b_inv.block(f.sector_begin(N), f.sector_dim(N), f.sector_begin(N - 1),
                                   f.sector_dim(N - 1));
        if (c_block != b_block.transposed()) {
            auto diff = first_mismatch(c_block, b_block.transposed(), 0, c_block.cols());
            auto [r, c, va, vb] = *diff;
            return CheckFailure{"C(u) vs B(1/u)^T on sector N=" + std::to_string(N), r, c,
                                va.str(), vb.str()};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// States.

template <class R>
struct FockVector {
    int sites = 0;
    R t = R(0);
    std::map<OccupationVector, R> terms;

    void add_term(const OccupationVector& s, const R& c) {
        auto it = terms.find(s);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(s, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.sites == b.sites && a.t == b.t && a.terms == b.terms;
    }
};

// |Psi_N> = B(u_1)...B(u_N) |0>, computed by repeated application of the
// evaluated creation entry. The space must allow at least N particles.
template <class R>
FockVector<R> wavefunction(const FockSpace& f, Model model, const R& t,
                           const std::vector<Rational>& u_points) {
    const int N = static_cast<int>(u_points.size());
    if (f.max_total() < N) throw std::invalid_argument("wavefunction: window too small");
    for (const auto& u : u_points)
        if (u.is_zero()) throw std::domain_error("wavefunction: u must be nonzero");
    auto T = monodromy(f, model, t);
    std::vector<R> vec(f.dim(), R(0));
    vec[f.index_of(OccupationVector(std::vector<int>(f.sites() + 1, 0)))] = R(1);
    for (const auto& u : u_points) vec = T.B.eval(u).apply(vec);
    FockVector<R> out;
    out.sites = f.sites();
    out.t = t;
    for (int i = 0; i < f.dim(); ++i)
        if (!vec[i].is_zero()) out.add_term(f.state(i), vec[i]);
    return out;
}

// Transport along the occupation/partition correspondence. The vector must be
// homogeneous of particle number N.
template <class R>
SymFunc<R> to_symfunc(const FockVector<R>& v, int N) {
    Basis basis = (v.t == R(0)) ? Basis::schur : Basis::hl_P;
    SymFunc<R> out(basis, v.t);
    for (const auto& [s, c] : v.terms) {
        if (s.total() != N)
            throw std::domain_error("to_symfunc: vector is not homogeneous of the stated number");
        out.add_term(partition_from_occupations(s), c);
    }
    return out;
}

template <class R>
FockVector<R> from_symfunc(const SymFunc<R>& g, int M, int N) {
    FockVector<R> out;
    out.sites = M;
    out.t = g.t;
    for (const auto& [lam, c] : g.terms) out.add_term(occupations_from_partition(lam, M, N), c);
    return out;
}

}  // namespace qboson
