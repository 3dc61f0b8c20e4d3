#pragma once

#include "qboson/partition.hpp"
#include "qboson/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace qboson {

// Formal Q-linear combination of products of one family of generators
// (power sums p_k or complete homogeneous h_k), indexed by the partition of
// subscripts. The empty partition is the constant term.
using GeneratorPoly = std::map<Partition, Rational, PartitionOrder>;

inline void gp_add(GeneratorPoly& f, const Partition& lam, const Rational& c) {
    auto it = f.find(lam);
    if (it == f.end()) {
        if (!c.is_zero()) f.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline GeneratorPoly gp_mul(const GeneratorPoly& a, const GeneratorPoly& b) {
    GeneratorPoly out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            gp_add(out, Partition(std::move(parts)), ca * cb);
        }
    return out;
}

inline GeneratorPoly gp_scale(const GeneratorPoly& a, const Rational& s) {
    GeneratorPoly out;
    if (s.is_zero()) return out;
    for (const auto& [lam, c] : a) out.emplace(lam, c * s);
    return out;
}

namespace detail {
// Truncated series with GeneratorPoly coefficients, degree = index.
using GpSeries = std::vector<GeneratorPoly>;

inline GpSeries gp_series_mul(const GpSeries& a, const GpSeries& b, int D) {
    GpSeries out(D + 1);
    for (int i = 0; i <= D; ++i) {
        if (i >= static_cast<int>(a.size()) || a[i].empty()) continue;
        for (int j = 0; i + j <= D; ++j) {
            if (j >= static_cast<int>(b.size()) || b[j].empty()) continue;
            for (auto& [lam, c] : gp_mul(a[i], b[j])) gp_add(out[i + j], lam, c);
        }
    }
    return out;
}
}  // namespace detail

// Coefficients of z^0..z^D of exp(sum_{k>=1} p_k z^k / k) as p-polynomials,
// computed by direct series exponentiation: sum_m S^m / m! with S the
// argument of the exponential.
inline std::vector<GeneratorPoly> powersum_exp_series(int D) {
    if (D < 0) throw std::domain_error("powersum_exp_series: negative degree");
    detail::GpSeries arg(D + 1);
    for (int k = 1; k <= D; ++k) arg[k].emplace(Partition({k}), Rational(1, k));
    detail::GpSeries result(D + 1), power(D + 1);
    gp_add(result[0], Partition(), Rational(1));
    gp_add(power[0], Partition(), Rational(1));
    for (int m = 1; m <= D; ++m) {
        power = detail::gp_series_mul(power, arg, D);
        for (int d = 0; d <= D; ++d) power[d] = gp_scale(power[d], Rational(1, m));
        for (int d = 0; d <= D; ++d)
            for (const auto& [lam, c] : power[d]) gp_add(result[d], lam, c);
    }
    return result;
}

// p_1..p_kmax written as h-polynomials via the Newton recurrence
// p_k = k h_k - sum_{i=1}^{k-1} h_i p_{k-i}.
inline std::vector<GeneratorPoly> p_in_h_upto(int kmax) {
    std::vector<GeneratorPoly> p(kmax + 1);
    for (int k = 1; k <= kmax; ++k) {
        GeneratorPoly out;
        gp_add(out, Partition({k}), Rational(k));
        for (int i = 1; i < k; ++i) {
            GeneratorPoly hi;
            gp_add(hi, Partition({i}), Rational(1));
            for (const auto& [lam, c] : gp_mul(hi, p[k - i])) gp_add(out, lam, -c);
        }
        p[k] = std::move(out);
    }
    return p;
}

// Substitute each p_k by its h-expansion: the result is an h-polynomial.
inline GeneratorPoly to_h_basis(const GeneratorPoly& f) {
    int kmax = 1;
    for (const auto& [lam, c] : f) kmax = std::max(kmax, lam.part(0));
    auto table = p_in_h_upto(kmax);
    GeneratorPoly out;
    for (const auto& [lam, c] : f) {
        GeneratorPoly prod;
        gp_add(prod, Partition(), Rational(1));
        for (int i = 0; i < lam.length(); ++i) prod = gp_mul(prod, table[lam.part(i)]);
        for (const auto& [mu, d] : prod) gp_add(out, mu, c * d);
    }
    return out;
}

}  // namespace qboson
