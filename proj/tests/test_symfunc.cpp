#include "qboson/symfunc.hpp"

#include "qboson/powersum.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace qboson;

namespace {

// Semistandard-tableau brute force for Schur polynomials: rows weakly
// increasing, columns strictly increasing, entries in 1..n.
Rational ssyt_schur(const Partition& lam, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    const int l = lam.length();
    if (l == 0) return Rational(1);
    if (l > n) return Rational(0);
    std::vector<std::vector<int>> tab(l);
    for (int r = 0; r < l; ++r) tab[r].assign(lam.part(r), 0);
    Rational total(0);
    auto rec = [&](auto&& self, int r, int c, Rational weight) -> void {
        if (r == l) {
            total += weight;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lam.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0 && c < lam.part(r - 1)) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            self(self, nr, nc, weight * x[v - 1]);
        }
    };
    rec(rec, 0, 0, Rational(1));
    return total;
}

// Monomial symmetric polynomial by enumerating distinct rearrangements.
Rational monomial_eval(const Partition& lam, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    if (lam.length() > n) return Rational(0);
    std::vector<int> expo(n, 0);
    for (int i = 0; i < lam.length(); ++i) expo[i] = lam.part(i);
    std::sort(expo.begin(), expo.end());
    Rational total(0);
    do {
        Rational term(1);
        for (int i = 0; i < n; ++i) term *= x[i].pow(expo[i]);
        total += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return total;
}

std::vector<Rational> distinct_points(std::mt19937& rng, int n) {
    std::vector<Rational> x;
    while (static_cast<int>(x.size()) < n) {
        Rational v(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1);
        bool fresh = true;
        for (const auto& w : x) fresh = fresh && !(w == v);
        if (fresh) x.push_back(v);
    }
    return x;
}

}  // namespace

TEST(SymFunc, MulHExamples) {
    auto s1 = SymFunc<Rational>::single(Basis::schur, Rational(0), Partition({1}));
    auto r = mul_h(s1, 1, 2);
    EXPECT_EQ(r.coeff(Partition({2})), Rational(1));
    EXPECT_EQ(r.coeff(Partition({1, 1})), Rational(1));
    EXPECT_EQ(r.terms.size(), 2u);

    auto r2 = mul_h(s1, 2, 2);
    EXPECT_EQ(r2.terms.size(), 1u);
    EXPECT_EQ(r2.coeff(Partition({2, 1})), Rational(1));

    EXPECT_EQ(mul_h(r2, 0, 2), r2);
}

TEST(SymFunc, MulHFamily) {
    auto one = SymFunc<Rational>::unit(Basis::schur, Rational(0));
    auto fam = mul_H(one, 1);
    ASSERT_EQ(fam.size(), 2u);
    EXPECT_EQ(fam[0], one);
    EXPECT_EQ(fam[1], SymFunc<Rational>::single(Basis::schur, Rational(0), Partition({1})));

    auto s1 = SymFunc<Rational>::single(Basis::schur, Rational(0), Partition({1}));
    auto fam2 = mul_H(s1, 1);
    EXPECT_EQ(fam2[0], s1);
    EXPECT_EQ(fam2[1], SymFunc<Rational>::single(Basis::schur, Rational(0), Partition({1, 1})));

    SymFunc<Rational> zero(Basis::schur, Rational(0));
    for (const auto& g : mul_H(zero, 2)) EXPECT_TRUE(g.is_zero());
}

TEST(SymFunc, MulQSymbolic) {
    Poly t = Poly::t();
    auto p1 = SymFunc<Poly>::single(Basis::hl_P, t, Partition({1}));
    auto r = mul_q(p1, 1, t, 2);
    EXPECT_EQ(r.coeff(Partition({2})), Poly(1) - t);
    EXPECT_EQ(r.coeff(Partition({1, 1})), Poly(1) - t * t);
    EXPECT_EQ(r.terms.size(), 2u);

    EXPECT_EQ(mul_q(r, 0, t, 2), r);
}

TEST(SymFunc, MulQAtZeroIsMulH) {
    // Bit-for-bit agreement of the Pieri expansions at t = 0.
    for (int r = 0; r <= 3; ++r) {
        for (const auto& mu : partitions_in_box(3, 3)) {
            auto hl = SymFunc<Rational>::single(Basis::hl_P, Rational(0), mu);
            auto sc = SymFunc<Rational>::single(Basis::schur, Rational(0), mu);
            auto a = mul_q(hl, r, Rational(0), 3);
            auto b = mul_h(sc, r, 3);
            EXPECT_EQ(a.terms, b.terms);
        }
    }
}

TEST(SymFunc, GramMatrix) {
    auto s0 = GradedSector::make(2, 0);
    EXPECT_EQ(gram_matrix(s0, Rational(1, 2)), SparseMat<Rational>::identity(1));

    auto s1 = GradedSector::make(2, 1);
    auto g = gram_matrix(s1, Rational(1, 2));
    EXPECT_EQ(g.at(0, 0), Rational(2));  // 1/b_{(1)}(1/2) = 1/(1 - 1/2)

    auto s2 = GradedSector::make(3, 2);
    EXPECT_EQ(gram_matrix(s2, Rational(0)), SparseMat<Rational>::identity(s2.dim()));

    EXPECT_THROW(gram_matrix(s1, Rational(1)), std::domain_error);
    // b_{(1,1)}(-1) = (1-t)(1-t^2) at t = -1 vanishes as well.
    EXPECT_THROW(gram_matrix(GradedSector::make(2, 2), Rational(-1)), std::domain_error);
}

TEST(SymFunc, AdjointShiftOnOneColumn) {
    // In the one-column algebra, multiplication by h_1 and its adjoint are
    // one-sided shifts: the adjoint composed with the map is the identity.
    for (int d = 0; d <= 4; ++d) {
        auto dom = GradedSector::make(1, d);
        auto cod = GradedSector::make(1, d + 1);
        auto op = mul_h_matrix<Rational>(dom, 1);
        auto adj = adjoint_op(op, dom, cod, Rational(0));
        EXPECT_EQ(adj * op, SparseMat<Rational>::identity(dom.dim()));
    }
}

TEST(SymFunc, AdjointOfIdentity) {
    auto s = GradedSector::make(3, 3);
    auto id = SparseMat<Rational>::identity(s.dim());
    EXPECT_EQ(adjoint_op(id, s, s, Rational(1, 2)), id);
}

TEST(SymFunc, AdjointPieriExample) {
    // h_2 adjoint on two columns sends s_{(2,1)} to s_{(1)}.
    auto dom = GradedSector::make(2, 1);
    auto cod = GradedSector::make(2, 3);
    auto op = mul_h_matrix<Rational>(dom, 2);
    auto adj = adjoint_op(op, dom, cod, Rational(0));
    int col = cod.index.at(Partition({2, 1}));
    std::vector<Rational> e(cod.dim(), Rational(0));
    e[col] = Rational(1);
    auto img = adj.apply(e);
    for (int i = 0; i < dom.dim(); ++i)
        EXPECT_EQ(img[i], dom.basis[i] == Partition({1}) ? Rational(1) : Rational(0));
}

TEST(SymFunc, AdjointnessPairing) {
    // <op f, g> = <f, adj g> for every basis pair, h_n and q_r versions.
    for (Rational t : {Rational(0), Rational(1, 2)}) {
        for (int M = 1; M <= 4; ++M)
            for (int d = 0; d <= 4; ++d)
                for (int n = 0; n <= 4; ++n) {
                    auto dom = GradedSector::make(M, d);
                    auto cod = GradedSector::make(M, d + n);
                    auto g_dom = gram_matrix(dom, t);
                    auto g_cod = gram_matrix(cod, t);
                    auto op = t.is_zero() ? mul_h_matrix<Rational>(dom, n)
                                          : mul_q_matrix<Rational>(dom, n, t);
                    auto adj = adjoint_op(op, dom, cod, t);
                    // <op e_j, e_i>_cod = <e_j, adj e_i>_dom for all i, j.
                    EXPECT_EQ(g_cod * op, (g_dom * adj).transposed());
                }
    }
}

TEST(SymFunc, SchurEval) {
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto x = distinct_points(rng, 2);
        EXPECT_EQ(schur_eval(Partition({1}), x), x[0] + x[1]);
    }
    EXPECT_EQ(schur_eval(Partition({2, 2}), {Rational(1), Rational(1), Rational(1)}), Rational(6));
    EXPECT_EQ(schur_eval(Partition({1, 1}), {Rational(5)}), Rational(0));
    EXPECT_EQ(schur_eval(Partition(), {}), Rational(1));
}

TEST(SymFunc, SchurEvalMatchesTableaux) {
    std::mt19937 rng(37);
    std::vector<Partition> shapes = {Partition({1}),    Partition({2}),    Partition({1, 1}),
                                     Partition({2, 1}), Partition({3, 1}), Partition({2, 2, 1})};
    for (const auto& lam : shapes)
        for (int n = 1; n <= 4; ++n) {
            auto x = distinct_points(rng, n);
            EXPECT_EQ(schur_eval(lam, x), ssyt_schur(lam, x)) << lam.str() << " n=" << n;
        }
}

TEST(SymFunc, PieriEvaluationHomomorphism) {
    // Evaluating mul_h with a non-binding column bound agrees with direct
    // multiplication by h_k at rational points.
    std::mt19937 rng(41);
    std::vector<Partition> shapes = {Partition(), Partition({2, 1}), Partition({3, 2})};
    for (const auto& mu : shapes)
        for (int k = 0; k <= 3; ++k) {
            int M = mu.weight() + k + 1;
            auto f = SymFunc<Rational>::single(Basis::schur, Rational(0), mu);
            auto g = mul_h(f, k, M);
            auto x = distinct_points(rng, 4);
            Rational lhs(0);
            for (const auto& [lam, c] : g.terms) lhs += c * schur_eval(lam, x);
            Rational rhs = schur_eval(mu, x) * h_values(x, k)[k];
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(SymFunc, HlEvalBasics) {
    std::mt19937 rng(43);
    for (int i = 0; i < 10; ++i) {
        auto x = distinct_points(rng, 3);
        Rational t(1, 3);
        EXPECT_EQ(hl_eval(Partition({1}), x, t), x[0] + x[1] + x[2]);
    }
    EXPECT_EQ(hl_eval(Partition({1, 1}), {Rational(7)}, Rational(1, 2)), Rational(0));
    EXPECT_EQ(hl_eval(Partition(), {Rational(1), Rational(1)}, Rational(1, 2)), Rational(1));
}

TEST(SymFunc, HlEvalDegenerations) {
    std::mt19937 rng(47);
    std::vector<Partition> shapes = {Partition({1}), Partition({2}), Partition({2, 1}),
                                     Partition({2, 2}), Partition({3, 1})};
    for (const auto& lam : shapes) {
        auto x = distinct_points(rng, 4);
        EXPECT_EQ(hl_eval(lam, x, Rational(0)), schur_eval(lam, x)) << lam.str();
        EXPECT_EQ(hl_eval(lam, x, Rational(1)), monomial_eval(lam, x)) << lam.str();
    }
}

TEST(SymFunc, HlEvalVariableCap) {
    std::vector<Rational> nine(9, Rational(1));
    for (int i = 0; i < 9; ++i) nine[i] = Rational(i + 1);
    EXPECT_THROW(hl_eval(Partition({1}), nine, Rational(1, 2)), std::domain_error);
}

TEST(SymFunc, MulHAnnihilatesPastColumnBound) {
    auto one = SymFunc<Rational>::unit(Basis::schur, Rational(0));
    EXPECT_TRUE(mul_h(one, 3, 2).is_zero());
    EXPECT_FALSE(mul_h(one, 2, 2).is_zero());
}

TEST(SymFunc, HlEvalStability) {
    std::mt19937 rng(53);
    for (const auto& lam : {Partition({2, 1}), Partition({3})}) {
        auto x = distinct_points(rng, 3);
        std::vector<Rational> x0(x);
        x0.push_back(Rational(0));
        EXPECT_EQ(hl_eval(lam, x0, Rational(1, 2)), hl_eval(lam, x, Rational(1, 2)));
    }
}

TEST(SymFunc, HlEvalCoincidentPoints) {
    // Removable singularities at equal coordinates, resolved by interpolation.
    std::vector<Rational> ones = {Rational(1), Rational(1), Rational(1)};
    EXPECT_EQ(hl_eval(Partition({2, 2}), ones, Rational(0)), Rational(6));
    // P_(2) = m_(2) + (1-t) m_(1,1): at (3,3) this is 18 + (1-t)*9 = 27 - 9t.
    EXPECT_EQ(hl_eval(Partition({2}), {Rational(3), Rational(3)}, Rational(1, 2)),
              Rational(45, 2));
    // All-equal points against the monomial expansion at t = 1.
    EXPECT_EQ(hl_eval(Partition({2, 1}), ones, Rational(1)), monomial_eval(Partition({2, 1}), ones));
    // Two separate duplicate groups force nested interpolation.
    std::vector<Rational> pairs = {Rational(1), Rational(1), Rational(2), Rational(2)};
    EXPECT_EQ(hl_eval(Partition({2, 1}), pairs, Rational(1)),
              monomial_eval(Partition({2, 1}), pairs));
    EXPECT_EQ(hl_eval(Partition({2, 2}), pairs, Rational(0)),
              schur_eval(Partition({2, 2}), pairs));
}

TEST(SymFunc, QEval) {
    std::mt19937 rng(59);
    auto x = distinct_points(rng, 3);
    Rational t(1, 2);
    Rational sum = x[0] + x[1] + x[2];
    EXPECT_EQ(q_eval(1, x, t), (Rational(1) - t) * sum);
    EXPECT_EQ(q_eval(0, x, t), Rational(1));
    for (int r = 1; r <= 5; ++r) EXPECT_EQ(q_eval(r, x, Rational(1)), Rational(0));
    for (int r = 0; r <= 5; ++r) EXPECT_EQ(q_eval(r, x, Rational(0)), h_values(x, r)[r]);
    // q_r = (1-t) P_(r) for r >= 1.
    for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(q_eval(r, x, t), (Rational(1) - t) * hl_eval(Partition({r}), x, t));
}

TEST(SymFunc, HlPieriPointwise) {
    // mul_q against direct multiplication q_r * P_mu at rational points.
    std::mt19937 rng(61);
    Rational t(1, 2);
    std::vector<Partition> shapes = {Partition(), Partition({1}), Partition({2, 1}),
                                     Partition({1, 1})};
    for (const auto& mu : shapes)
        for (int r = 0; r + mu.weight() <= 5; ++r) {
            int M = mu.weight() + r + 1;
            auto f = SymFunc<Rational>::single(Basis::hl_P, t, mu);
            auto g = mul_q(f, r, t, M);
            auto x = distinct_points(rng, 3);
            Rational lhs(0);
            for (const auto& [lam, c] : g.terms) lhs += c * hl_eval(lam, x, t);
            EXPECT_EQ(lhs, hl_eval(mu, x, t) * q_eval(r, x, t));
        }
}

TEST(SymFunc, HlQEval) {
    std::mt19937 rng(67);
    auto x = distinct_points(rng, 3);
    Rational t(1, 4);
    EXPECT_EQ(hl_Q_eval(Partition({1}), x, t), (Rational(1) - t) * (x[0] + x[1] + x[2]));
    EXPECT_EQ(hl_Q_eval(Partition(), x, t), Rational(1));
}

TEST(SymFunc, CauchyClassicalTruncated) {
    // sum_lambda s_lambda(x) s_lambda(y) z^{|lambda|} against the product
    // kernel prod 1/(1 - x_i y_j z), both truncated at degree D.
    const int D = 5;
    std::mt19937 rng(71);
    auto x = distinct_points(rng, 2), y = distinct_points(rng, 3);
    std::vector<Rational> kernel(D + 1, Rational(0));
    kernel[0] = Rational(1);
    for (const auto& xi : x)
        for (const auto& yj : y)
            for (int k = 1; k <= D; ++k) kernel[k] += xi * yj * kernel[k - 1];
    for (int d = 0; d <= D; ++d) {
        Rational lhs(0);
        for (const auto& lam : partitions_of_weight(d, d))
            lhs += schur_eval(lam, x) * schur_eval(lam, y);
        EXPECT_EQ(lhs, kernel[d]) << "degree " << d;
    }
}

TEST(SymFunc, ColumnWindowLayout) {
    auto w = ColumnWindow::make(2, 3);
    EXPECT_EQ(w.dim(), 1 + 1 + 2 + 2);  // degrees 0,1,2,3 with at most 2 columns
    EXPECT_EQ(w.degrees_upto(1), 2);
    EXPECT_EQ(w.basis[0], Partition());
    auto h1 = h_window_matrix(w, 1);
    EXPECT_EQ(h1.at(w.index.at(Partition({1})), w.index.at(Partition())), Rational(1));
    EXPECT_EQ(hperp_window_matrix(w, 1), h1.transposed());
}

TEST(PowerSum, ExpSeriesLowDegrees) {
    auto e = powersum_exp_series(3);
    GeneratorPoly one;
    gp_add(one, Partition(), Rational(1));
    EXPECT_EQ(e[0], one);
    GeneratorPoly p1;
    gp_add(p1, Partition({1}), Rational(1));
    EXPECT_EQ(e[1], p1);
    GeneratorPoly deg2;  // p_1^2/2 + p_2/2
    gp_add(deg2, Partition({1, 1}), Rational(1, 2));
    gp_add(deg2, Partition({2}), Rational(1, 2));
    EXPECT_EQ(e[2], deg2);
}

TEST(PowerSum, NewtonConversion) {
    // exp coefficients convert to single h_k terms.
    const int D = 5;
    auto e = powersum_exp_series(D);
    for (int k = 0; k <= D; ++k) {
        GeneratorPoly expected;
        gp_add(expected, k == 0 ? Partition() : Partition({k}), Rational(1));
        EXPECT_EQ(to_h_basis(e[k]), expected) << "k=" << k;
    }
}
