#pragma once

#include "qboson/boxcount.hpp"
#include "qboson/fock.hpp"
#include "qboson/matrix.hpp"
#include "qboson/partition.hpp"
#include "qboson/powersum.hpp"
#include "qboson/symfunc.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qboson {

// One verified identity: parameters, verdict, and on failure the first
// mismatching basis element with both sides' values.
struct CheckReport {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    nlohmann::json witness;  // null on pass
    std::string note;
    bool informational = false;  // reported but not gating

    void fail(nlohmann::json w) {
        pass = false;
        if (witness.is_null()) witness = std::move(w);
    }
    void fail(const CheckFailure& f) {
        fail(nlohmann::json{{"where", f.where},
                            {"row", f.row},
                            {"col", f.col},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs}});
    }
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["identity"] = identity;
        j["params"] = params;
        j["verdict"] = pass ? "pass" : "fail";
        j["witness"] = witness;
        if (!note.empty()) j["note"] = note;
        if (informational) j["informational"] = true;
        return j;
    }
};

// Deterministic small-rational sample points with singular configurations
// excluded. Values have numerator and denominator in 1..7.
class SamplePoints {
public:
    explicit SamplePoints(unsigned long seed) : rng_(seed) {}

    Rational positive_rational() {
        long num = 1 + static_cast<long>(rng_() % 7);
        long den = 1 + static_cast<long>(rng_() % 7);
        return Rational(num, den);
    }
    // u != v (so u^2 != v^2 for positive values) and u v != 1.
    std::pair<Rational, Rational> spectral_pair() {
        while (true) {
            Rational u = positive_rational(), v = positive_rational();
            if (u != v && u * v != Rational(1)) return {u, v};
        }
    }
    std::vector<Rational> distinct_points(int n) {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < n) {
            Rational x = positive_rational();
            bool fresh = true;
            for (const auto& y : out) fresh = fresh && x != y;
            if (fresh) out.push_back(x);
        }
        return out;
    }

private:
    std::mt19937 rng_;
};

namespace detail {

inline nlohmann::json rational_list_json(const std::vector<Rational>& xs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : xs) j.push_back(x.str());
    return j;
}

// Pieri matrix between box bases: box(N, M) -> box(N+1, M), entry 1 for each
// horizontal k-strip (phase), phi_{lambda/mu}(t) for the q-deformed version.
inline SparseMat<Rational> box_pieri_matrix(int M, int N, int k,
                                            const std::optional<Rational>& t = std::nullopt) {
    auto dom = partitions_in_box(N, M);
    auto cod = partitions_in_box(N + 1, M);
    std::map<Partition, int, PartitionOrder> cidx;
    for (int i = 0; i < static_cast<int>(cod.size()); ++i) cidx.emplace(cod[i], i);
    SparseMat<Rational> m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (int j = 0; j < static_cast<int>(dom.size()); ++j)
        for (const auto& lam : strips_above(dom[j], k, M))
            m.add_at(cidx.at(lam), j, t ? phi_strip(lam, dom[j], *t) : Rational(1));
    return m;
}

// Shared body of the two creation-operator checks: every u-coefficient of
// the creating monodromy entry, transported to partitions, must equal the
// corresponding Pieri matrix (coefficient of u^{2k-M} for strip size k).
inline CheckReport verify_creation_mult(Model model, int M, int N_max, const Rational& t,
                                        bool perturb) {
    CheckReport rep;
    rep.identity = model == Model::phase ? "prop_B" : "prop_qB";
    rep.params = {{"M", M}, {"N_max", N_max}};
    if (model == Model::qboson) rep.params["t"] = t.str();
    if (perturb) rep.params["perturbed"] = true;
    FockSpace f(M, N_max + 2);
    auto T = monodromy(f, model, t, perturb);
    int lo = std::min(-M, T.B.min_exponent());
    int hi = std::max(M, T.B.max_exponent());
    for (int N = 0; N <= N_max && rep.pass; ++N) {
        for (int e = lo; e <= hi && rep.pass; ++e) {
            auto blk = T.B.coeff(e, f.dim()).block(f.sector_begin(N + 1), f.sector_dim(N + 1),
                                                   f.sector_begin(N), f.sector_dim(N));
            SparseMat<Rational> expect(f.sector_dim(N + 1), f.sector_dim(N));
            int twice_k = e + M;
            if (twice_k >= 0 && twice_k % 2 == 0 && twice_k / 2 <= M)
                expect = model == Model::phase
                             ? box_pieri_matrix(M, N, twice_k / 2)
                             : box_pieri_matrix(M, N, twice_k / 2, t);
            if (auto diff = first_mismatch(blk, expect, 0, blk.cols())) {
                auto [r, c, va, vb] = *diff;
                rep.fail(nlohmann::json{{"where", "N=" + std::to_string(N) +
                                                      " exponent=" + std::to_string(e)},
                                        {"row", r},
                                        {"col", c},
                                        {"lhs", va.str()},
                                        {"rhs", vb.str()}});
            }
        }
    }
    return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// QISM-side checks.

inline CheckReport verify_rtt(Model model, int M, const Rational& t,
                              const std::vector<std::pair<Rational, Rational>>& uv_pairs,
                              int N_max) {
    CheckReport rep;
    rep.identity = "rtt";
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [u, v] : uv_pairs) pairs.push_back({u.str(), v.str()});
    rep.params = {{"model", model_name(model)}, {"M", M}, {"N_max", N_max}, {"uv", pairs}};
    if (model == Model::qboson) rep.params["t"] = t.str();
    FockSpace f(M, N_max + 2);
    for (const auto& [u, v] : uv_pairs) {
        if (auto fail = rtt_site_failure(f, model, t, u, v, N_max)) {
            rep.fail(*fail);
            return rep;
        }
        if (auto fail = rtt_monodromy_failure(f, model, t, u, v, N_max)) {
            rep.fail(*fail);
            return rep;
        }
    }
    return rep;
}

inline CheckReport verify_number_shift(Model model, int M, const Rational& t, const Rational& u,
                                       int N_max) {
    CheckReport rep;
    rep.identity = "number_shift";
    rep.params = {{"model", model_name(model)}, {"M", M}, {"N_max", N_max}, {"u", u.str()}};
    if (model == Model::qboson) rep.params["t"] = t.str();
    FockSpace f(M, N_max + 2);
    if (auto fail = number_shift_failure(f, model, t, u, N_max)) rep.fail(*fail);
    return rep;
}

inline CheckReport verify_lemma_abcd(int M, const std::vector<Rational>& u_points, int N_max) {
    CheckReport rep;
    rep.identity = "lemma_abcd";
    rep.params = {{"M", M}, {"N_max", N_max}, {"u", detail::rational_list_json(u_points)}};
    FockSpace f(M, N_max + 3);
    for (const auto& u : u_points) {
        if (auto fail = lemma_abcd_failure(f, u, N_max)) {
            rep.fail(*fail);
            return rep;
        }
        if (auto fail = c_is_b_transpose_failure(f, u, N_max)) {
            rep.fail(*fail);
            return rep;
        }
    }
    return rep;
}

inline CheckReport verify_prop_B(int M, int N_max, bool perturb = false) {
    return detail::verify_creation_mult(Model::phase, M, N_max, Rational(0), perturb);
}

inline CheckReport verify_prop_qB(int M, int N_max, const Rational& t) {
    if (t == Rational(1)) throw std::domain_error("verify_prop_qB: t must differ from 1");
    return detail::verify_creation_mult(Model::qboson, M, N_max, t, false);
}

// Bit-identical reduction of the q-deformed stack at t = 0 to the phase one.
inline CheckReport verify_prop_qB_reduction(int M, int N_max) {
    CheckReport rep;
    rep.identity = "prop_qB_t0_reduction";
    rep.params = {{"M", M}, {"N_max", N_max}};
    FockSpace f(M, N_max + 2);
    auto Tq = monodromy(f, Model::qboson, Rational(0));
    auto Tp = monodromy(f, Model::phase, Rational(0));
    if (!(Tq.A == Tp.A && Tq.B == Tp.B && Tq.C == Tp.C && Tq.D == Tp.D))
        rep.fail(nlohmann::json{{"where", "monodromy entries at t = 0"}});
    return rep;
}

inline CheckReport verify_wavefunction(Model model, int M, int N, const Rational& t,
                                       const std::vector<Rational>& u_points) {
    CheckReport rep;
    rep.identity = "wavefunction";
    rep.params = {{"model", model_name(model)},
                  {"M", M},
                  {"N", N},
                  {"u", detail::rational_list_json(u_points)}};
    if (model == Model::qboson) rep.params["t"] = t.str();
    if (static_cast<int>(u_points.size()) != N)
        throw std::invalid_argument("verify_wavefunction: need N spectral points");
    FockSpace f(M, N);
    auto psi = wavefunction(f, model, t, u_points);
    Rational prefactor(1);
    for (const auto& u : u_points) prefactor *= u;
    prefactor = prefactor.pow(-M);
    std::vector<Rational> squares;
    for (const auto& u : u_points) squares.push_back(u.pow(2));
    for (const auto& lam : partitions_in_box(N, M)) {
        Rational expect = model == Model::phase ? schur_eval(lam, squares)
                                                : hl_Q_eval(lam, squares, t);
        expect *= prefactor;
        OccupationVector occ = occupations_from_partition(lam, M, N);
        auto it = psi.terms.find(occ);
        Rational got = it == psi.terms.end() ? Rational(0) : it->second;
        if (got != expect) {
            rep.fail(nlohmann::json{{"where", "coefficient of " + lam.str()},
                                    {"lhs", got.str()},
                                    {"rhs", expect.str()}});
            return rep;
        }
    }
    return rep;
}

inline CheckReport verify_db_exchange(int M, const Rational& u, const Rational& v, int N_max) {
    CheckReport rep;
    rep.identity = "db_exchange";
    rep.params = {{"M", M}, {"N_max", N_max}, {"u", u.str()}, {"v", v.str()}};
    Rational denom = u.pow(2) - v.pow(2);
    if (denom.is_zero()) throw std::domain_error("verify_db_exchange: u^2 = v^2 is singular");
    FockSpace f(M, N_max + 2);
    auto T = monodromy(f, Model::phase, Rational(0));
    auto Du = T.D.eval(u), Dv = T.D.eval(v), Bu = T.B.eval(u), Bv = T.B.eval(v);
    auto lhs = (Du * Bv).scaled(denom);
    auto rhs = (Bv * Du).scaled(u.pow(2)) - (Bu * Dv).scaled(u * v);
    if (auto fail = detail::compare_on_sectors(lhs, rhs, f, N_max, "D(u)B(v) exchange"))
        rep.fail(*fail);
    return rep;
}

// ---------------------------------------------------------------------------
// Truncated commutation relation and its coefficient identities, on the
// symmetric-function side (orthonormal Schur basis, adjoints = transposes).

inline CheckReport verify_commfin(int M, int D, const Rational& u, const Rational& v,
                                  bool drop_correction = false) {
    CheckReport rep;
    rep.identity = "commfin";
    rep.params = {{"M", M}, {"D", D}, {"u", u.str()}, {"v", v.str()}};
    if (drop_correction) rep.params["drop_correction"] = true;
    if (u * v == Rational(1))
        throw std::domain_error("verify_commfin: u v = 1 is singular");
    auto w = ColumnWindow::make(M, D + M);
    const int dim = w.dim();
    SparseMat<Rational> H_v(dim, dim), Hperp_u(dim, dim), H_uinv(dim, dim), Hperp_vinv(dim, dim);
    for (int k = 0; k <= M; ++k) {
        auto h = h_window_matrix(w, k);
        auto hp = h.transposed();
        H_v = H_v + h.scaled(v.pow(k));
        Hperp_u = Hperp_u + hp.scaled(u.pow(k));
        H_uinv = H_uinv + h.scaled(u.pow(-k));
        Hperp_vinv = Hperp_vinv + hp.scaled(v.pow(-k));
    }
    auto lhs = (Hperp_u * H_v).scaled(Rational(1) - u * v);
    auto rhs = H_v * Hperp_u;
    if (!drop_correction) rhs = rhs - (H_uinv * Hperp_vinv).scaled((u * v).pow(M + 1));
    if (auto diff = first_mismatch(lhs, rhs, 0, w.degrees_upto(D))) {
        auto [r, c, va, vb] = *diff;
        rep.fail(nlohmann::json{{"where", "on " + w.basis[c].str() + " -> " + w.basis[r].str()},
                                {"row", r},
                                {"col", c},
                                {"lhs", va.str()},
                                {"rhs", vb.str()}});
    }
    return rep;
}

inline CheckReport verify_hperp_coefficients(int M, int m, int n, int D) {
    CheckReport rep;
    rep.identity = "hperp_coefficients";
    rep.params = {{"M", M}, {"m", m}, {"n", n}, {"D", D}};
    if (m < 0 || n < 0 || m > M || n > M)
        throw std::domain_error("verify_hperp_coefficients: require 0 <= m, n <= M");
    auto w = ColumnWindow::make(M, D + M);
    auto h = [&](int k) { return h_window_matrix(w, k); };
    auto hp = [&](int k) { return h_window_matrix(w, k).transposed(); };
    auto lhs = hp(m) * h(n);
    SparseMat<Rational> rhs(w.dim(), w.dim());
    for (int i = 0; i <= std::min(m, n); ++i) rhs = rhs + h(n - i) * hp(m - i);
    for (int i = 0; i + 1 <= std::min(m, n); ++i)
        rhs = rhs - h(M + 1 - m + i) * hp(M + 1 - n + i);
    if (auto diff = first_mismatch(lhs, rhs, 0, w.degrees_upto(D))) {
        auto [r, c, va, vb] = *diff;
        rep.fail(nlohmann::json{{"where", "on " + w.basis[c].str() + " -> " + w.basis[r].str()},
                                {"row", r},
                                {"col", c},
                                {"lhs", va.str()},
                                {"rhs", vb.str()}});
    }
    return rep;
}

// The printed low-rank cases, asserted as standalone operator identities.
inline CheckReport verify_hperp_examples(int M, int D) {
    CheckReport rep;
    rep.identity = "hperp_examples";
    rep.params = {{"M", M}, {"D", D}};
    auto w = ColumnWindow::make(M, D + M);
    auto h = [&](int k) { return h_window_matrix(w, k); };
    auto hp = [&](int k) { return h_window_matrix(w, k).transposed(); };
    auto id = SparseMat<Rational>::identity(w.dim());
    std::vector<std::pair<std::string, std::pair<SparseMat<Rational>, SparseMat<Rational>>>> eqs;
    if (M == 1) {
        eqs.emplace_back("hperp_1 h_1 = 1", std::make_pair(hp(1) * h(1), id));
    } else if (M == 2) {
        eqs.emplace_back("hperp_1 h_1 = h_1 hperp_1 + 1 - h_2 hperp_2",
                         std::make_pair(hp(1) * h(1), h(1) * hp(1) + id - h(2) * hp(2)));
        eqs.emplace_back("hperp_1 h_2 = h_1", std::make_pair(hp(1) * h(2), h(1)));
        eqs.emplace_back("hperp_2 h_1 = hperp_1", std::make_pair(hp(2) * h(1), hp(1)));
        eqs.emplace_back("hperp_2 h_2 = 1", std::make_pair(hp(2) * h(2), id));
    } else {
        throw std::domain_error("verify_hperp_examples: only M = 1 and M = 2 are printed");
    }
    for (const auto& [name, sides] : eqs) {
        if (auto diff = first_mismatch(sides.first, sides.second, 0, w.degrees_upto(D))) {
            auto [r, c, va, vb] = *diff;
            rep.fail(nlohmann::json{
                {"where", name + " on " + w.basis[c].str() + " -> " + w.basis[r].str()},
                {"row", r},
                {"col", c},
                {"lhs", va.str()},
                {"rhs", vb.str()}});
            return rep;
        }
    }
    return rep;
}

// For M > D + n - 1 the correction term vanishes on degrees <= D and the
// relation stabilizes to the untruncated commutation relation.
inline CheckReport verify_hperp_stabilization(int M, int m, int n, int D) {
    CheckReport rep;
    rep.identity = "hperp_stabilization";
    rep.params = {{"M", M}, {"m", m}, {"n", n}, {"D", D}};
    if (M <= D + n - 1)
        throw std::domain_error("verify_hperp_stabilization: require M > D + n - 1");
    auto w = ColumnWindow::make(M, D + M);
    auto h = [&](int k) { return h_window_matrix(w, k); };
    auto hp = [&](int k) { return h_window_matrix(w, k).transposed(); };
    SparseMat<Rational> correction(w.dim(), w.dim());
    for (int i = 0; i + 1 <= std::min(m, n); ++i)
        correction = correction + h(M + 1 - m + i) * hp(M + 1 - n + i);
    if (auto diff = first_mismatch(correction, SparseMat<Rational>(w.dim(), w.dim()), 0,
                                   w.degrees_upto(D))) {
        rep.fail(nlohmann::json{{"where", "correction term is nonzero on the window"}});
        return rep;
    }
    auto lhs = hp(m) * h(n);
    SparseMat<Rational> rhs(w.dim(), w.dim());
    for (int i = 0; i <= std::min(m, n); ++i) rhs = rhs + h(n - i) * hp(m - i);
    if (auto diff = first_mismatch(lhs, rhs, 0, w.degrees_upto(D))) {
        auto [r, c, va, vb] = *diff;
        rep.fail(nlohmann::json{{"where", "untruncated relation on " + w.basis[c].str()},
                                {"row", r},
                                {"col", c},
                                {"lhs", va.str()},
                                {"rhs", vb.str()}});
    }
    return rep;
}

// exp(sum p_k z^k / k) has h_k as its z^k coefficient, after Newton
// conversion to the h-basis.
inline CheckReport verify_vertex_exp(int D) {
    CheckReport rep;
    rep.identity = "vertex_exp";
    rep.params = {{"D", D}};
    auto series = powersum_exp_series(D);
    for (int k = 0; k <= D; ++k) {
        GeneratorPoly expected;
        gp_add(expected, k == 0 ? Partition() : Partition({k}), Rational(1));
        if (to_h_basis(series[k]) != expected) {
            rep.fail(nlohmann::json{{"where", "coefficient of z^" + std::to_string(k)}});
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cauchy kernels, truncated by total degree via an auxiliary grading variable.

inline CheckReport verify_cauchy_classical(int D, const std::vector<Rational>& x,
                                           const std::vector<Rational>& y) {
    CheckReport rep;
    rep.identity = "cauchy_classical";
    rep.params = {{"D", D},
                  {"x", detail::rational_list_json(x)},
                  {"y", detail::rational_list_json(y)}};
    std::vector<Rational> kernel(D + 1, Rational(0));
    kernel[0] = Rational(1);
    for (const auto& xi : x)
        for (const auto& yj : y)
            for (int k = 1; k <= D; ++k) kernel[k] += xi * yj * kernel[k - 1];
    for (int d = 0; d <= D; ++d) {
        Rational sum(0);
        for (const auto& lam : partitions_of_weight(d, d))
            sum += schur_eval(lam, x) * schur_eval(lam, y);
        if (sum != kernel[d]) {
            rep.fail(nlohmann::json{
                {"where", "degree " + std::to_string(d)}, {"lhs", sum.str()}, {"rhs", kernel[d].str()}});
            return rep;
        }
    }
    return rep;
}

inline CheckReport verify_cauchy_hl(int D, const Rational& t, const std::vector<Rational>& x,
                                    const std::vector<Rational>& y) {
    CheckReport rep;
    rep.identity = "cauchy_hl";
    rep.params = {{"D", D},
                  {"t", t.str()},
                  {"x", detail::rational_list_json(x)},
                  {"y", detail::rational_list_json(y)}};
    std::vector<Rational> kernel(D + 1, Rational(0));
    kernel[0] = Rational(1);
    for (const auto& xi : x)
        for (const auto& yj : y) {
            Rational a = xi * yj;
            // multiply by 1/(1 - a z), then by (1 - t a z)
            for (int k = 1; k <= D; ++k) kernel[k] += a * kernel[k - 1];
            for (int k = D; k >= 1; --k) kernel[k] -= t * a * kernel[k - 1];
        }
    for (int d = 0; d <= D; ++d) {
        Rational sum(0);
        for (const auto& lam : partitions_of_weight(d, d))
            sum += b_lambda(lam, t) * hl_eval(lam, x, t) * hl_eval(lam, y, t);
        if (sum != kernel[d]) {
            rep.fail(nlohmann::json{
                {"where", "degree " + std::to_string(d)}, {"lhs", sum.str()}, {"rhs", kernel[d].str()}});
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Degenerations of the q-deformed stack.

inline CheckReport verify_degenerations(int M, int N_max, const Rational& u) {
    CheckReport rep;
    rep.identity = "degenerations";
    rep.params = {{"M", M}, {"N_max", N_max}, {"u", u.str()}};
    FockSpace f(M, N_max + 2);
    // (a) t = 0: the q-boson stack collapses onto the phase stack.
    for (int site = 0; site <= M; ++site) {
        if (!(creation_op(f, Model::qboson, site, Rational(0)) ==
                  creation_op(f, Model::phase, site, Rational(0)) &&
              annihilation_op(f, Model::qboson, site, Rational(0)) ==
                  annihilation_op(f, Model::phase, site, Rational(0)))) {
            rep.fail(nlohmann::json{{"where", "site operators at t = 0, site " +
                                                  std::to_string(site)}});
            return rep;
        }
    }
    auto Tq = monodromy(f, Model::qboson, Rational(0));
    auto Tp = monodromy(f, Model::phase, Rational(0));
    if (!(Tq.A == Tp.A && Tq.B == Tp.B && Tq.C == Tp.C && Tq.D == Tp.D)) {
        rep.fail(nlohmann::json{{"where", "monodromy entries at t = 0"}});
        return rep;
    }
    // (b) t = 1: the creating entry degenerates to u^{-M} times the
    // zero-energy site creator.
    auto Tq1 = monodromy(f, Model::qboson, Rational(1));
    auto expected =
        OpSeries<Rational>::single(-M, creation_op(f, Model::qboson, 0, Rational(1)));
    if (!(Tq1.B == expected)) {
        rep.fail(nlohmann::json{{"where", "creating entry at t = 1"}});
        return rep;
    }
    // (c) t = 1: the one-row generators vanish in positive degree.
    std::vector<Rational> xs = {u, u + Rational(1), u + Rational(2)};
    for (int r = 1; r <= 6; ++r) {
        Rational val = q_eval(r, xs, Rational(1));
        if (!val.is_zero()) {
            rep.fail(nlohmann::json{{"where", "q_" + std::to_string(r) + " at t = 1"},
                                    {"lhs", val.str()},
                                    {"rhs", "0"}});
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Norm bookkeeping: the creation and annihilation operators are mutually
// adjoint under the site-product norms. The report notes where the
// alternative closed form [n_0]/prod [n_j]! first disagrees with the
// site-product value [n_0]!/prod [n_j]!.
inline CheckReport verify_fock_norms(int M, const Rational& t, int N_max) {
    CheckReport rep;
    rep.identity = "fock_norms";
    rep.params = {{"M", M}, {"N_max", N_max}, {"t", t.str()}};
    FockSpace f(M, N_max + 1);
    Model model = t.is_zero() ? Model::phase : Model::qboson;
    for (int site = 0; site <= M && rep.pass; ++site) {
        auto up = creation_op(f, model, site, t);
        auto down = annihilation_op(f, model, site, t);
        for (const auto& [rc, v] : up.entries()) {
            auto [i, j] = rc;
            Rational wi = fock_norm_squared(model, t, f.state(i));
            Rational wj = fock_norm_squared(model, t, f.state(j));
            if (!(v * wi == down.at(j, i) * wj)) {
                rep.fail(nlohmann::json{{"where", "adjointness at site " + std::to_string(site)},
                                        {"row", i},
                                        {"col", j},
                                        {"lhs", (v * wi).str()},
                                        {"rhs", (down.at(j, i) * wj).str()}});
                break;
            }
        }
    }
    // Diagnostic: compare against the closed form [n_0]/prod [n_j]!.
    for (int i = 0; i < f.dim(); ++i) {
        const auto& s = f.state(i);
        Rational alt = q_int(s.counts[0], t);
        for (int site = 1; site <= M; ++site) alt = alt / q_factorial(s.counts[site], t);
        if (alt != fock_norm_squared(model, t, s)) {
            rep.note = "site-product norm [n0]!/prod_j [nj]! differs from the closed form "
                       "[n0]/prod_j [nj]! first at occupations " +
                       partition_from_occupations(s).str() + " with n0 = " +
                       std::to_string(s.counts[0]) +
                       "; adjointness pins the site-product value";
            break;
        }
    }
    return rep;
}

// Empirical question with no asserted answer: is the annihilating entry the
// Gram adjoint of the creating entry at the inverse point, in the
// Hall-Littlewood pairing? Reported, not gated.
inline CheckReport verify_qboson_c_gram_adjoint(int M, const Rational& t, const Rational& u,
                                                int N_max) {
    CheckReport rep;
    rep.identity = "qboson_c_gram_adjoint";
    rep.informational = true;
    rep.params = {{"M", M}, {"N_max", N_max}, {"t", t.str()}, {"u", u.str()}};
    FockSpace f(M, N_max + 2);
    auto T = monodromy(f, Model::qboson, t);
    auto b_inv = T.B.eval(u.inverse());
    auto c_mat = T.C.eval(u);
    bool holds = true;
    nlohmann::json first_diff;
    for (int N = 1; N <= N_max && holds; ++N) {
        auto dom = partitions_in_box(N, M);      // domain of C at sector N
        auto cod = partitions_in_box(N - 1, M);  // image sector
        auto c_block = c_mat.block(f.sector_begin(N - 1), f.sector_dim(N - 1), f.sector_begin(N),
                                   f.sector_dim(N));
        auto b_block = b_inv.block(f.sector_begin(N), f.sector_dim(N), f.sector_begin(N - 1),
                                   f.sector_dim(N - 1));
        // Gram adjoint of b_block: entries b_mu(t) * b_block[lam][mu] / b_lam(t).
        SparseMat<Rational> adj(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
        for (const auto& [rc, v] : b_block.entries()) {
            auto [lam_i, mu_j] = rc;
            adj.add_at(mu_j, lam_i, b_lambda(cod[mu_j], t) * v / b_lambda(dom[lam_i], t));
        }
        if (auto diff = first_mismatch(c_block, adj, 0, c_block.cols())) {
            holds = false;
            auto [r, c, va, vb] = *diff;
            first_diff = {{"sector", N},
                          {"on", dom[c].str()},
                          {"annihilating", va.str()},
                          {"gram_adjoint", vb.str()}};
        }
    }
    rep.params["holds"] = holds;
    if (!holds) {
        // Informational: the verdict stays pass, the finding lives in params.
        rep.params["first_difference"] = first_diff;
        rep.note = "the relation fails at finite sectors; the discrepancy sits in the "
                   "zero-energy coefficient 1 - t^{n0}";
    }
    return rep;
}

// Route agreement for boxed plane partitions.
inline CheckReport verify_boxcount(const BoxSpec& box) {
    CheckReport rep;
    rep.identity = "boxcount";
    rep.params = {{"box", {box.rows, box.cols, box.height}}};
    Poly transfer = genfun_box_transfer(box);
    Poly brute = genfun_box_bruteforce(box);
    Rational schur_count = count_box_schur(box);
    if (transfer != brute) {
        rep.fail(nlohmann::json{{"where", "transfer vs brute-force generating polynomial"},
                                {"lhs", transfer.str("q")},
                                {"rhs", brute.str("q")}});
        return rep;
    }
    if (transfer.eval(Rational(1)) != schur_count) {
        rep.fail(nlohmann::json{{"where", "transfer count vs rectangular Schur value"},
                                {"lhs", transfer.eval(Rational(1)).str()},
                                {"rhs", schur_count.str()}});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Aggregate runs.

struct VerifyOptions {
    bool quick = false;
    unsigned long seed = 20240915;
};

inline std::vector<CheckReport> run_all(const VerifyOptions& opt = {}) {
    std::vector<CheckReport> reports;
    SamplePoints gen(opt.seed);
    const bool q = opt.quick;
    const int rtt_pairs = q ? 2 : 5;
    const std::vector<Rational> ts = q ? std::vector<Rational>{Rational(1, 2)}
                                       : std::vector<Rational>{Rational(1, 4), Rational(1, 2)};

    // RTT for both models.
    for (int M = 1; M <= (q ? 2 : 4); ++M) {
        std::vector<std::pair<Rational, Rational>> pairs;
        for (int i = 0; i < rtt_pairs; ++i) pairs.push_back(gen.spectral_pair());
        reports.push_back(verify_rtt(Model::phase, M, Rational(0), pairs, q ? 2 : 4));
    }
    for (const auto& t : ts)
        for (int M = 1; M <= (q ? 2 : 3); ++M) {
            std::vector<std::pair<Rational, Rational>> pairs;
            for (int i = 0; i < rtt_pairs; ++i) pairs.push_back(gen.spectral_pair());
            reports.push_back(verify_rtt(Model::qboson, M, t, pairs, q ? 2 : 3));
        }

    // Number shifts.
    reports.push_back(
        verify_number_shift(Model::phase, 2, Rational(0), gen.positive_rational(), q ? 2 : 3));
    reports.push_back(
        verify_number_shift(Model::qboson, 2, ts.front(), gen.positive_rational(), q ? 2 : 3));

    // Creation operator as truncated Pieri multiplication.
    for (int M = 1; M <= (q ? 2 : 3); ++M) {
        reports.push_back(verify_prop_B(M, q ? 2 : 3));
        for (const auto& t : ts) reports.push_back(verify_prop_qB(M, q ? 2 : 3, t));
        reports.push_back(verify_prop_qB_reduction(M, q ? 2 : 3));
    }

    // Wave functions.
    {
        std::vector<std::pair<int, int>> mns =
            q ? std::vector<std::pair<int, int>>{{1, 1}, {2, 2}}
              : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {2, 3}};
        for (const auto& [M, N] : mns) {
            auto us = gen.distinct_points(N);
            reports.push_back(verify_wavefunction(Model::phase, M, N, Rational(0), us));
            for (const auto& t : ts)
                reports.push_back(verify_wavefunction(Model::qboson, M, N, t, us));
        }
    }

    // Entry relations of the phase monodromy matrix.
    for (int M = 1; M <= (q ? 2 : 3); ++M)
        reports.push_back(verify_lemma_abcd(M, gen.distinct_points(q ? 2 : 3), q ? 2 : 3));

    // Exchange relation and the truncated commutation relation.
    {
        auto [u, v] = gen.spectral_pair();
        reports.push_back(verify_db_exchange(2, u, v, q ? 2 : 3));
    }
    for (int M = 1; M <= (q ? 2 : 3); ++M)
        for (int i = 0; i < (q ? 2 : 5); ++i) {
            auto [u, v] = gen.spectral_pair();
            reports.push_back(verify_commfin(M, q ? 4 : 6, u, v));
        }
    for (int M = 1; M <= (q ? 2 : 3); ++M)
        for (int m = 0; m <= M; ++m)
            for (int n = 0; n <= M; ++n)
                reports.push_back(verify_hperp_coefficients(M, m, n, q ? 4 : 6));
    reports.push_back(verify_hperp_examples(1, q ? 4 : 6));
    reports.push_back(verify_hperp_examples(2, q ? 4 : 6));
    reports.push_back(verify_hperp_stabilization(q ? 6 : 8, 2, 2, q ? 3 : 4));

    // Vertex exponential and Cauchy kernels.
    reports.push_back(verify_vertex_exp(q ? 4 : 8));
    reports.push_back(verify_cauchy_classical(q ? 4 : 8, gen.distinct_points(3),
                                              gen.distinct_points(3)));
    reports.push_back(
        verify_cauchy_hl(q ? 4 : 6, Rational(1, 2), gen.distinct_points(2), gen.distinct_points(3)));

    // Degenerations and norms.
    for (int M = 1; M <= (q ? 2 : 3); ++M)
        reports.push_back(verify_degenerations(M, q ? 2 : 3, gen.positive_rational()));
    reports.push_back(verify_fock_norms(2, ts.front(), q ? 2 : 3));
    reports.push_back(
        verify_qboson_c_gram_adjoint(2, ts.front(), gen.positive_rational(), q ? 2 : 3));

    // Boxed plane partitions.
    {
        int cap = q ? 2 : 3;
        for (int a = 1; a <= cap; ++a)
            for (int b = a; b <= cap; ++b)
                for (int c = b; c <= cap; ++c) reports.push_back(verify_boxcount(BoxSpec(a, b, c)));
    }

    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         return a.identity < b.identity;
                     });
    return reports;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.informational && !r.pass) return false;
    return true;
}

}  // namespace qboson
