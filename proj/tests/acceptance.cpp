// Acceptance suite: one line per criterion, exact equality throughout.
// Usage: acceptance [path-to-cli]   (the CLI path is needed for criterion 10)

#include "qboson/boxcount.hpp"
#include "qboson/json_io.hpp"
#include "qboson/verify.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace qboson;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name << "\n";
    if (!pass) ++failures;
}

constexpr unsigned long kSeed = 20240915UL;

// 1. Bilinear exchange relations, per site and for the monodromy matrix.
bool rtt_suite() {
    SamplePoints gen(kSeed);
    for (int M = 1; M <= 4; ++M) {
        std::vector<std::pair<Rational, Rational>> pairs;
        for (int i = 0; i < 5; ++i) pairs.push_back(gen.spectral_pair());
        if (!verify_rtt(Model::phase, M, Rational(0), pairs, 4).pass) return false;
    }
    for (Rational t : {Rational(1, 4), Rational(1, 2)})
        for (int M = 1; M <= 3; ++M) {
            std::vector<std::pair<Rational, Rational>> pairs;
            for (int i = 0; i < 5; ++i) pairs.push_back(gen.spectral_pair());
            if (!verify_rtt(Model::qboson, M, t, pairs, 3).pass) return false;
        }
    return true;
}

// 2. The creating entry acts as truncated Pieri multiplication, every
// u-coefficient, with the q-deformed version at t in {1/4, 1/2} and the
// bit-identical t = 0 reduction.
bool creation_multiplication() {
    for (int M = 1; M <= 3; ++M) {
        if (!verify_prop_B(M, 3).pass) return false;
        for (Rational t : {Rational(1, 4), Rational(1, 2)})
            if (!verify_prop_qB(M, 3, t).pass) return false;
        if (!verify_prop_qB_reduction(M, 3).pass) return false;
    }
    return true;
}

// 3. Wave-function expansions with Schur / Hall-Littlewood Q coefficients,
// plus the row/column vanishing constraints.
bool wavefunction_expansions() {
    SamplePoints gen(kSeed + 1);
    const std::vector<std::pair<int, int>> grid = {{1, 1}, {2, 2}, {3, 2}, {2, 3}};
    for (const auto& [M, N] : grid) {
        auto us = gen.distinct_points(N);
        if (!verify_wavefunction(Model::phase, M, N, Rational(0), us).pass) return false;
        for (Rational t : {Rational(1, 4), Rational(1, 2)})
            if (!verify_wavefunction(Model::qboson, M, N, t, us).pass) return false;
        // More rows than spectral points: the coefficient functions vanish.
        std::vector<Rational> squares;
        for (const auto& u : us) squares.push_back(u.pow(2));
        Partition tall(std::vector<int>(N + 1, 1));
        if (!schur_eval(tall, squares).is_zero()) return false;
        if (!hl_eval(tall, squares, Rational(1, 2)).is_zero()) return false;
    }
    return true;
}

// 4. Relations between the monodromy entries and the adjoint consequence.
bool entry_relations() {
    SamplePoints gen(kSeed + 2);
    for (int M = 1; M <= 3; ++M)
        if (!verify_lemma_abcd(M, gen.distinct_points(3), 3).pass) return false;
    return true;
}

// 5. Truncated commutation relation: matrix form, coefficient identities,
// printed low-rank examples, negative control, and stabilization.
bool truncated_commutation() {
    SamplePoints gen(kSeed + 3);
    for (int M = 1; M <= 3; ++M)
        for (int i = 0; i < 5; ++i) {
            auto [u, v] = gen.spectral_pair();
            if (!verify_commfin(M, 6, u, v).pass) return false;
        }
    for (int M = 1; M <= 3; ++M)
        for (int m = 0; m <= M; ++m)
            for (int n = 0; n <= M; ++n)
                if (!verify_hperp_coefficients(M, m, n, 6).pass) return false;
    if (!verify_hperp_examples(1, 6).pass) return false;
    if (!verify_hperp_examples(2, 6).pass) return false;
    auto negative = verify_commfin(2, 6, Rational(2), Rational(3), /*drop_correction=*/true);
    if (negative.pass || negative.witness.is_null()) return false;
    // M > D + n - 1 stabilizes to the untruncated relation.
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            if (!verify_hperp_stabilization(8, m, n, 4).pass) return false;
    return true;
}

// 6. The exponential of weighted power sums reproduces the complete
// homogeneous generators through degree 8.
bool vertex_exponential() { return verify_vertex_exp(8).pass; }

// 7. Cauchy kernels, classical through degree 8 and deformed through 6.
bool cauchy_kernels() {
    SamplePoints gen(kSeed + 4);
    if (!verify_cauchy_classical(8, gen.distinct_points(3), gen.distinct_points(2)).pass)
        return false;
    if (!verify_cauchy_hl(6, Rational(1, 2), gen.distinct_points(3), gen.distinct_points(2)).pass)
        return false;
    return true;
}

// 8. Degenerations: t = 0 collapses the q-deformed stack onto the phase
// stack (including wave functions), t = 1 trivializes the creating entry and
// kills the one-row generators.
bool degenerations() {
    SamplePoints gen(kSeed + 5);
    for (int M = 1; M <= 3; ++M)
        if (!verify_degenerations(M, 3, gen.positive_rational()).pass) return false;
    auto us = gen.distinct_points(2);
    FockSpace f(2, 2);
    if (!(wavefunction(f, Model::qboson, Rational(0), us) ==
          wavefunction(f, Model::phase, Rational(0), us)))
        return false;
    return true;
}

// 9. Boxed plane partitions: transfer, brute-force, and Schur routes agree on
// counts and volume generating polynomials for every box with sides <= 3.
bool box_routes() {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                if (!verify_boxcount(BoxSpec(a, b, c)).pass) return false;
    if (count_box_transfer(BoxSpec(2, 2, 2)) != Rational(20)) return false;
    return count_box_transfer(BoxSpec(3, 3, 3)) == count_box_bruteforce(BoxSpec(3, 3, 3));
}

// 10. The CLI quick suite exits 0 with byte-identical output across runs.
bool cli_byte_stability(const std::string& cli) {
    if (cli.empty()) {
        std::cerr << "criterion 10 needs the CLI path as argv[1]\n";
        return false;
    }
    auto run = [&](std::string& out) -> int {
        std::string cmd = "\"" + cli + "\" verify --all --quick 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return -1;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
        return pclose(pipe);
    };
    std::string first, second;
    int rc1 = run(first), rc2 = run(second);
    return rc1 == 0 && rc2 == 0 && !first.empty() && first == second;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    criterion(1, "bilinear exchange relations (both models, per site and monodromy)", rtt_suite());
    criterion(2, "creating entry acts as truncated Pieri multiplication", creation_multiplication());
    criterion(3, "wave-function expansions with vanishing constraints", wavefunction_expansions());
    criterion(4, "monodromy entry relations and adjoint consequence", entry_relations());
    criterion(5, "truncated commutation relation with controls", truncated_commutation());
    criterion(6, "power-sum exponential gives the h generators", vertex_exponential());
    criterion(7, "Cauchy kernels, classical and deformed", cauchy_kernels());
    criterion(8, "degenerations at t = 0 and t = 1", degenerations());
    criterion(9, "boxed plane partition routes agree", box_routes());
    criterion(10, "CLI quick suite exits 0 and is byte-stable", cli_byte_stability(cli));
    if (failures) std::cout << failures << " criteria failed\n";
    return failures ? 1 : 0;
}
