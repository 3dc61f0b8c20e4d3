// Command-line front end: run verification suites, evaluate symmetric
// functions, expand wave functions, and count boxed plane partitions.
// Output is JSON on stdout; exit 0 on success/pass, 1 on a failed check,
// 2 on usage errors.

#include "qboson/json_io.hpp"
#include "qboson/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qboson;

namespace {

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Rational::from_string(tok));
    return out;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    if (s.empty()) return Partition();
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

void emit(const nlohmann::json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else if (j.is_array()) {
        for (const auto& r : j)
            std::cout << r.value("identity", std::string("?")) << ": "
                      << r.value("verdict", std::string("?")) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

nlohmann::json reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr;
}

struct VerifyFlags {
    std::string identity;
    bool all = false, quick = false;
    std::string model = "phase";
    std::string t = "0", u, v;
    int M = 2, N = 2, D = 4, m = 1, n = 1;
    std::vector<int> box;
    unsigned long seed = 20240915UL;
};

int run_verify(const VerifyFlags& fl, bool as_json) {
    Model model = fl.model == "qboson" ? Model::qboson : Model::phase;
    Rational t = Rational::from_string(fl.t);
    if (model == Model::phase) t = Rational(0);
    SamplePoints gen(fl.seed);

    if (fl.all) {
        auto reports = run_all({fl.quick, fl.seed});
        emit(reports_json(reports), as_json);
        return all_pass(reports) ? 0 : 1;
    }

    auto need_u = [&] { return fl.u.empty() ? gen.positive_rational() : Rational::from_string(fl.u); };
    auto need_uv = [&]() -> std::pair<Rational, Rational> {
        if (!fl.u.empty() && !fl.v.empty())
            return {Rational::from_string(fl.u), Rational::from_string(fl.v)};
        return gen.spectral_pair();
    };

    CheckReport rep;
    if (fl.identity == "rtt") {
        std::vector<std::pair<Rational, Rational>> pairs;
        if (!fl.u.empty() && !fl.v.empty())
            pairs.push_back({Rational::from_string(fl.u), Rational::from_string(fl.v)});
        else
            for (int i = 0; i < 5; ++i) pairs.push_back(gen.spectral_pair());
        rep = verify_rtt(model, fl.M, t, pairs, fl.N);
    } else if (fl.identity == "number_shift") {
        rep = verify_number_shift(model, fl.M, t, need_u(), fl.N);
    } else if (fl.identity == "prop_B") {
        rep = verify_prop_B(fl.M, fl.N);
    } else if (fl.identity == "prop_qB") {
        rep = verify_prop_qB(fl.M, fl.N, t);
    } else if (fl.identity == "prop_qB_t0_reduction") {
        rep = verify_prop_qB_reduction(fl.M, fl.N);
    } else if (fl.identity == "wavefunction") {
        auto us = fl.u.empty() ? gen.distinct_points(fl.N) : parse_rational_list(fl.u);
        rep = verify_wavefunction(model, fl.M, static_cast<int>(us.size()), t, us);
    } else if (fl.identity == "lemma_abcd") {
        auto us = fl.u.empty() ? gen.distinct_points(3) : parse_rational_list(fl.u);
        rep = verify_lemma_abcd(fl.M, us, fl.N);
    } else if (fl.identity == "db_exchange") {
        auto [u, v] = need_uv();
        rep = verify_db_exchange(fl.M, u, v, fl.N);
    } else if (fl.identity == "commfin") {
        auto [u, v] = need_uv();
        rep = verify_commfin(fl.M, fl.D, u, v);
    } else if (fl.identity == "hperp_coefficients") {
        rep = verify_hperp_coefficients(fl.M, fl.m, fl.n, fl.D);
    } else if (fl.identity == "hperp_examples") {
        rep = verify_hperp_examples(fl.M, fl.D);
    } else if (fl.identity == "hperp_stabilization") {
        rep = verify_hperp_stabilization(fl.M, fl.m, fl.n, fl.D);
    } else if (fl.identity == "vertex_exp") {
        rep = verify_vertex_exp(fl.D);
    } else if (fl.identity == "cauchy_classical") {
        rep = verify_cauchy_classical(fl.D, gen.distinct_points(3), gen.distinct_points(3));
    } else if (fl.identity == "cauchy_hl") {
        rep = verify_cauchy_hl(fl.D, t.is_zero() ? Rational(1, 2) : t, gen.distinct_points(2),
                               gen.distinct_points(3));
    } else if (fl.identity == "degenerations") {
        rep = verify_degenerations(fl.M, fl.N, need_u());
    } else if (fl.identity == "fock_norms") {
        rep = verify_fock_norms(fl.M, t.is_zero() ? Rational(1, 2) : t, fl.N);
    } else if (fl.identity == "qboson_c_gram_adjoint") {
        rep = verify_qboson_c_gram_adjoint(fl.M, t.is_zero() ? Rational(1, 2) : t, need_u(), fl.N);
    } else if (fl.identity == "boxcount") {
        if (fl.box.size() != 3) {
            std::cerr << "verify --identity boxcount needs --box a b c\n";
            return 2;
        }
        rep = verify_boxcount(BoxSpec(fl.box[0], fl.box[1], fl.box[2]));
    } else {
        std::cerr << "unknown identity: " << fl.identity << "\n";
        return 2;
    }
    emit(rep.to_json(), as_json);
    return rep.pass || rep.informational ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the phase/q-boson lattice models against "
                 "Schur and Hall-Littlewood symmetric functions"};
    app.require_subcommand(1);
    bool as_json = true;
    app.add_flag("--json,!--no-json", as_json, "JSON output (default on)");

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--identity", vf.identity, "single identity to check");
    verify->add_flag("--all", vf.all, "run the whole suite");
    verify->add_flag("--quick", vf.quick, "small parameter grid");
    verify->add_option("--model", vf.model, "phase or qboson")
        ->check(CLI::IsMember({"phase", "qboson"}));
    verify->add_option("--t", vf.t, "deformation parameter p/q");
    verify->add_option("--M", vf.M, "number of sites / column bound");
    verify->add_option("--N", vf.N, "particle sector bound");
    verify->add_option("--D", vf.D, "degree bound");
    verify->add_option("--m", vf.m, "first coefficient index");
    verify->add_option("--n", vf.n, "second coefficient index");
    verify->add_option("--u", vf.u, "spectral point(s), comma separated");
    verify->add_option("--v", vf.v, "second spectral point");
    verify->add_option("--box", vf.box, "box sides a b c")->expected(3);
    verify->add_option("--seed", vf.seed, "sample point seed");

    std::string eval_basis, eval_partition, eval_at, eval_t = "0";
    int eval_r = 0;
    auto* eval = app.add_subcommand("eval", "evaluate a symmetric function at rational points");
    eval->add_option("basis", eval_basis, "schur, hl_P, Q, or q")->required();
    eval->add_option("--partition", eval_partition, "comma separated parts");
    eval->add_option("--r", eval_r, "one-row index for the q generator");
    eval->add_option("--at", eval_at, "evaluation points, comma separated")->required();
    eval->add_option("--t", eval_t, "deformation parameter p/q");

    std::string wf_model = "phase", wf_t = "0", wf_u;
    int wf_M = 2;
    auto* wf = app.add_subcommand("wavefunction", "expand a Bethe-type state in Fock basis");
    wf->add_option("--model", wf_model)->check(CLI::IsMember({"phase", "qboson"}));
    wf->add_option("--M", wf_M, "number of sites");
    wf->add_option("--t", wf_t, "deformation parameter p/q");
    wf->add_option("--u", wf_u, "spectral points, comma separated")->required();

    std::vector<int> box_sides;
    auto* box = app.add_subcommand("boxcount", "count boxed plane partitions");
    box->add_option("--box", box_sides, "box sides a b c")->expected(3)->required();

    bool report_quick = false;
    unsigned long report_seed = 20240915UL;
    auto* report = app.add_subcommand("report", "aggregate verification report");
    report->add_flag("--quick", report_quick, "small parameter grid");
    report->add_option("--seed", report_seed, "sample point seed");

    try {
        app.parse(argc, argv);

        if (verify->parsed()) {
            if (!vf.all && vf.identity.empty()) {
                std::cerr << "verify: need --identity or --all\n";
                return 2;
            }
            return run_verify(vf, as_json);
        }
        if (eval->parsed()) {
            auto xs = parse_rational_list(eval_at);
            Rational t = Rational::from_string(eval_t);
            Partition lam = parse_partition(eval_partition);
            Rational value;
            if (eval_basis == "schur") {
                value = schur_eval(lam, xs);
            } else if (eval_basis == "hl_P") {
                value = hl_eval(lam, xs, t);
            } else if (eval_basis == "Q") {
                value = hl_Q_eval(lam, xs, t);
            } else if (eval_basis == "q") {
                value = q_eval(eval_r, xs, t);
            } else {
                std::cerr << "eval: unknown basis " << eval_basis << "\n";
                return 2;
            }
            nlohmann::json j{{"basis", eval_basis},
                             {"partition", partition_json(lam)},
                             {"at", detail::rational_list_json(xs)},
                             {"t", t.str()},
                             {"value", value.str()}};
            if (eval_basis == "q") j["r"] = eval_r;
            emit(j, as_json);
            return 0;
        }
        if (wf->parsed()) {
            Model model = wf_model == "qboson" ? Model::qboson : Model::phase;
            Rational t = model == Model::phase ? Rational(0) : Rational::from_string(wf_t);
            auto us = parse_rational_list(wf_u);
            FockSpace f(wf_M, static_cast<int>(us.size()));
            auto psi = wavefunction(f, model, t, us);
            emit(fockvector_json(psi), as_json);
            return 0;
        }
        if (box->parsed()) {
            BoxSpec spec(box_sides[0], box_sides[1], box_sides[2]);
            auto j = boxcount_json(spec);
            emit(j, as_json);
            return j["routes_agree"].get<bool>() ? 0 : 1;
        }
        if (report->parsed()) {
            auto reports = run_all({report_quick, report_seed});
            int total = static_cast<int>(reports.size());
            int passed = 0;
            for (const auto& r : reports) passed += r.pass ? 1 : 0;
            nlohmann::json j{{"summary", {{"total", total}, {"passed", passed}}},
                             {"all_pass", all_pass(reports)},
                             {"reports", reports_json(reports)}};
            emit(j, as_json);
            return all_pass(reports) ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help text
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
