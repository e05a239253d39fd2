/*
   Copyright 2026 The expoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXPOLY_ORACLE_HPP
#define EXPOLY_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly_core.hpp"

// Floating-point root finding, used only to cross-check the exact engines.
// Nothing here is ever authoritative: near-circle cases are reported as
// inconclusive and non-convergence throws OracleFailure.

namespace expoly {

struct NumericRoots {
    std::vector<std::complex<double>> roots;
    double max_residual = 0.0;  // max |f(z)| / (L(f) max(1,|z|)^n)
};

inline constexpr int kOracleSweepCap = 10000;
inline constexpr double kOracleResidualThreshold = 1e-12;

namespace detail {

using cld = std::complex<long double>;

inline long double to_long_double(const Integer& v) {
    if (v == 0) return 0.0L;
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

// Relative residual; for |z| > 1 evaluates the reversed polynomial at 1/z to avoid overflow.
inline long double relative_residual(const std::vector<long double>& a, long double length, cld z) {
    const std::size_t n = a.size() - 1;
    cld acc = 0;
    if (std::abs(z) <= 1.0L) {
        for (std::size_t i = n + 1; i-- > 0;) acc = acc * z + a[i];
    } else {
        const cld w = 1.0L / z;
        for (std::size_t i = 0; i <= n; ++i) acc = acc * w + a[i];
    }
    return std::abs(acc) / length;
}

inline void enforce_conjugate_closure(std::vector<cld>& z) {
    auto scale = [](const cld& v) { return std::max(1.0L, std::abs(v)); };
    std::vector<cld> upper, lower;
    std::vector<cld> out;
    for (const auto& v : z) {
        if (std::abs(v.imag()) <= 1e-9L * scale(v))
            out.emplace_back(v.real(), 0.0L);
        else
            (v.imag() > 0 ? upper : lower).push_back(v);
    }
    std::vector<bool> used(lower.size(), false);
    for (const auto& u : upper) {
        std::size_t best = lower.size();
        long double best_d = 0;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            const long double d = std::abs(u - std::conj(lower[j]));
            if (best == lower.size() || d < best_d) best = j, best_d = d;
        }
        if (best == lower.size()) {
            out.push_back(u);
            continue;
        }
        used[best] = true;
        const cld avg = (u + std::conj(lower[best])) / 2.0L;
        out.push_back(avg);
        out.push_back(std::conj(avg));
    }
    for (std::size_t j = 0; j < lower.size(); ++j)
        if (!used[j]) out.push_back(lower[j]);
    z = std::move(out);
}

}  // namespace detail

/**
 * All roots by Aberth-Ehrlich simultaneous iteration in long double.
 * Initial guesses sit on a circle of radius 1 + H/|a_n| with a fixed
 * irrational angular offset, so runs are reproducible.
 */
inline NumericRoots find_roots_numeric(const IntPolynomial& f) {
    require_nonzero(f, "find_roots_numeric");
    const IntPolynomial g = f.canonical();
    const int n = g.degree();
    if (n < 1) throw InputError("find_roots_numeric: degree must be at least 1");

    std::vector<long double> a(static_cast<std::size_t>(n) + 1);
    long double length = 0, height = 0;
    for (int i = 0; i <= n; ++i) {
        a[i] = detail::to_long_double(g[i]);
        length += std::fabs(a[i]);
        height = std::max(height, std::fabs(a[i]));
    }

    using detail::cld;
    const long double pi = std::acos(-1.0L);
    const long double radius = 1.0L + height / std::fabs(a[n]);
    const long double offset = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    std::vector<cld> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[i] = std::polar(radius, 2.0L * pi * i / n + offset);

    auto max_residual = [&] {
        long double r = 0;
        for (const auto& v : z) r = std::max(r, detail::relative_residual(a, length, v));
        return r;
    };

    bool converged = false;
    int quiet_sweeps = 0;
    for (int sweep = 0; sweep < kOracleSweepCap && !converged; ++sweep) {
        long double max_step = 0;
        for (int i = 0; i < n; ++i) {
            cld p = a[n], dp = 0;
            for (int j = n; j-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + a[j];
            }
            if (p == cld(0)) continue;
            cld step;
            if (dp == cld(0)) {
                step = cld(1e-7L, 1e-7L) * std::max(1.0L, std::abs(z[i]));
            } else {
                const cld newton = p / dp;
                cld s = 0;
                for (int j = 0; j < n; ++j)
                    if (j != i) s += 1.0L / (z[i] - z[j]);
                const cld denom = 1.0L - newton * s;
                step = denom == cld(0) ? newton : newton / denom;
            }
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        // Multiple roots stall at noise level, so stop on a tiny residual too.
        if (max_step < 1e-18L || max_residual() < 1e-18L) {
            if (++quiet_sweeps >= 2) converged = true;
        } else {
            quiet_sweeps = 0;
        }
    }

    NumericRoots out;
    const long double residual = max_residual();
    if (!(residual <= kOracleResidualThreshold))
        throw OracleFailure("root oracle did not converge for " + g.to_string() +
                            " (residual " + std::to_string(static_cast<double>(residual)) + ")");
    detail::enforce_conjugate_closure(z);
    out.max_residual = static_cast<double>(std::max(residual, max_residual()));
    for (const auto& v : z) out.roots.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return out;
}

enum class NumericVerdict { expansive, not_expansive, inconclusive };

inline std::string to_string(NumericVerdict v) {
    switch (v) {
        case NumericVerdict::expansive: return "true";
        case NumericVerdict::not_expansive: return "false";
        case NumericVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

inline double min_abs_root(const NumericRoots& r) {
    double m = INFINITY;
    for (const auto& z : r.roots) m = std::min(m, std::abs(z));
    return m;
}

inline NumericVerdict numeric_expansive(const IntPolynomial& f, double margin) {
    const double m = min_abs_root(find_roots_numeric(f));
    if (m > 1.0 + margin) return NumericVerdict::expansive;
    if (m < 1.0 - margin) return NumericVerdict::not_expansive;
    return NumericVerdict::inconclusive;
}

/// min |alpha_i| - 1
inline double numeric_gap(const IntPolynomial& f) { return min_abs_root(find_roots_numeric(f)) - 1.0; }

}  // namespace expoly

#endif  // EXPOLY_ORACLE_HPP
