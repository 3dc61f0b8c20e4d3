#pragma once

#include "qboson/boxcount.hpp"
#include "qboson/fock.hpp"
#include "qboson/laurent.hpp"
#include "qboson/partition.hpp"
#include "qboson/symfunc.hpp"

#include <json.hpp>

#include <string>

namespace qboson {

inline nlohmann::json partition_json(const Partition& lam) {
    nlohmann::json j = nlohmann::json::array();
    for (int p : lam.parts()) j.push_back(p);
    return j;
}

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Poly& x) { return x.str(); }
template <class C>
std::string scalar_str(const Laurent<C>& x) {
    return x.str();
}

inline std::string parameter_label(const Rational& t) { return t.str(); }
inline std::string parameter_label(const Poly& t) {
    return t == Poly::t() ? "symbolic" : t.str();
}

template <class R>
nlohmann::json symfunc_json(const SymFunc<R>& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms)
        terms.push_back({{"partition", partition_json(lam)}, {"coeff", scalar_str(c)}});
    return {{"basis", basis_name(f.basis)}, {"t", parameter_label(f.t)}, {"terms", terms}};
}

template <class R>
nlohmann::json fockvector_json(const FockVector<R>& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [s, c] : v.terms) {
        nlohmann::json occ = nlohmann::json::array();
        for (int n : s.counts) occ.push_back(n);
        terms.push_back({{"occ", occ}, {"coeff", scalar_str(c)}});
    }
    return {{"M", v.sites}, {"t", parameter_label(v.t)}, {"terms", terms}};
}

// Count and volume generating polynomial with cross-route agreement. The
// brute-force route participates only within its enumeration budget.
inline nlohmann::json boxcount_json(const BoxSpec& box) {
    Poly genfun = genfun_box_transfer(box);
    Rational count = genfun.eval(Rational(1));
    bool agree = count == count_box_schur(box);
    if (box.rows * box.cols * box.height <= 30)
        agree = agree && genfun == genfun_box_bruteforce(box);
    return {{"box", {box.rows, box.cols, box.height}},
            {"count", count.str()},
            {"genfun", genfun.str("q")},
            {"routes_agree", agree}};
}

}  // namespace qboson
