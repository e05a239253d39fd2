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

#ifndef EXPOLY_EXPANSIVITY_HPP
#define EXPOLY_EXPANSIVITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_linalg.hpp"
#include "poly_core.hpp"

namespace expoly {

enum class DSign { plus, minus };

inline char sign_char(DSign s) { return s == DSign::plus ? '+' : '-'; }

/// Selects the k x k determinant D_k^(+/-) of a polynomial of (pseudo-)degree n.
struct DMatrixSpec {
    int k = 1;
    DSign sign = DSign::plus;
    int n = 1;
};

/**
 * d_ij = a_(j-i) +/- a_(i+j+n-k-1) for 1 <= i, j <= k, where a_i = 0 outside
 * [0, n]. Coefficients stored beyond index n are ignored.
 */
inline ExactMatrix build_d_matrix(const IntPolynomial& f, const DMatrixSpec& spec) {
    if (spec.n < 1 || spec.k < 1 || spec.k > spec.n)
        throw InputError("D-matrix needs 1 <= k <= n (k=" + std::to_string(spec.k) +
                         ", n=" + std::to_string(spec.n) + ")");
    auto a = [&](long i) -> Integer { return (i < 0 || i > spec.n) ? Integer(0) : f[i]; };
    const long k = spec.k;
    const long shift = spec.n - spec.k - 1;
    ExactMatrix m(static_cast<std::size_t>(k));
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j) {
            Integer& d = m.at(i - 1, j - 1);
            d = a(j - i);
            if (spec.sign == DSign::plus)
                d += a(i + j + shift);
            else
                d -= a(i + j + shift);
        }
    return m;
}

inline Integer d_value(const IntPolynomial& f, const DMatrixSpec& spec) {
    return bareiss_determinant(build_d_matrix(f, spec)).value;
}

enum class Method { d_conditions_full, d_conditions_reduced, schur_cohn, numeric };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::d_conditions_full: return "d-conditions-full";
        case Method::d_conditions_reduced: return "d-conditions-reduced";
        case Method::schur_cohn: return "schur-cohn";
        case Method::numeric: return "numeric";
    }
    return "?";
}

/// Which condition set of the determinant characterisation to check.
enum class Strategy {
    full,                 // D_1, f(+/-1), D_k for k = 2..n-1
    reduced,              // D_1, f(+/-1), D_k for k = n-1, n-3, ... only
    reduced_determinant,  // D_1, D_k for k = n, n-2, ... (D_n computed as a determinant)
};

inline constexpr const char* kAllPassed = "all conditions passed";

struct ExpansivityVerdict {
    bool expansive = false;
    Method method = Method::d_conditions_full;
    std::string witness;
    std::size_t conditions_checked = 0;
};

namespace detail {

inline std::string relation(const Integer& v) { return v == 0 ? " = 0" : " < 0"; }

/// Canonical form with degree >= 1, or InputError.
inline IntPolynomial engine_input(const IntPolynomial& f, const char* op) {
    require_nonzero(f, op);
    IntPolynomial g = f.canonical();
    if (g.degree() < 1) throw InputError(std::string(op) + ": degree must be at least 1");
    return g;
}

}  // namespace detail

/**
 * Decides expansivity from the signs of the D-determinants. Conditions are
 * checked cheapest first and the first failure is reported as the witness.
 * All strategies give the same verdict.
 */
inline ExpansivityVerdict check_d_conditions(const IntPolynomial& f, Strategy strategy = Strategy::full) {
    const IntPolynomial g0 = detail::engine_input(f, "check_d_conditions");
    ExpansivityVerdict v;
    v.method = strategy == Strategy::full ? Method::d_conditions_full : Method::d_conditions_reduced;

    const auto normalized = normalize_sign(g0);
    if (normalized.zero_constant) {
        v.witness = "a_0 = 0";
        return v;
    }
    const IntPolynomial& g = normalized.poly;
    const int n = g.degree();

    auto check_d = [&](int k, DSign s) {
        ++v.conditions_checked;
        Integer d = d_value(g, {k, s, n});
        if (d > 0) return true;
        v.witness = "D_" + std::to_string(k) + "^" + sign_char(s) + detail::relation(d);
        return false;
    };
    auto check_pair = [&](int k) { return check_d(k, DSign::plus) && check_d(k, DSign::minus); };
    auto check_at = [&](long x) {
        ++v.conditions_checked;
        Integer val = evaluate(g, Integer(x));
        if (val > 0) return true;
        v.witness = "f(" + std::to_string(x) + ")" + detail::relation(val);
        return false;
    };

    if (!check_pair(1)) return v;
    std::vector<int> ks;
    if (strategy == Strategy::reduced_determinant) {
        for (int k = n; k >= 2; k -= 2) ks.insert(ks.begin(), k);
    } else {
        if (!check_at(1) || !check_at(-1)) return v;
        if (strategy == Strategy::full)
            for (int k = 2; k <= n - 1; ++k) ks.push_back(k);
        else
            for (int k = n - 1; k >= 2; k -= 2) ks.insert(ks.begin(), k);
    }
    for (int k : ks)
        if (!check_pair(k)) return v;

    v.expansive = true;
    v.witness = kAllPassed;
    return v;
}

/// The Schur-Cohn sequence f, T f, T^2 f, ... down to a constant (pseudo-degree convention).
inline std::vector<IntPolynomial> schur_chain(const IntPolynomial& f) {
    std::vector<IntPolynomial> chain{f};
    while (chain.back().pseudo_degree() >= 1) chain.push_back(schur_transform(chain.back()));
    return chain;
}

inline ExpansivityVerdict check_schur_cohn(const IntPolynomial& f) {
    IntPolynomial g = detail::engine_input(f, "check_schur_cohn");
    ExpansivityVerdict v;
    v.method = Method::schur_cohn;
    for (int step = 0; g.pseudo_degree() >= 1; ++step) {
        ++v.conditions_checked;
        if (abs(g.top()) >= abs(g.constant())) {
            v.witness = "|a_" + std::to_string(g.pseudo_degree()) + "| >= |a_0| at Schur step " +
                        std::to_string(step);
            return v;
        }
        g = schur_transform(g);
    }
    v.expansive = true;
    v.witness = kAllPassed;
    return v;
}

struct RootCountReport {
    int inside = 0;
    bool on_circle_detected = false;
    int outside = 0;
};

/**
 * Counts roots strictly inside the unit circle by following the Schur chain.
 * If |a_m| = |a_0| at some step neither recursion branch applies; the report
 * then carries on_circle_detected with zero counts.
 */
inline RootCountReport count_roots_inside_unit(const IntPolynomial& f) {
    IntPolynomial g = detail::engine_input(f, "count_roots_inside_unit");
    const int n = g.degree();

    // true: |a_m| < |a_0| (inside count inherited); false: |a_m| > |a_0| (count flipped)
    std::vector<bool> keeps;
    while (g.pseudo_degree() >= 1) {
        const int c = cmp(abs(g.top()), abs(g.constant()));
        if (c == 0) return {0, true, 0};
        keeps.push_back(c < 0);
        g = schur_transform(g);
    }
    int inside = 0;
    for (std::size_t i = keeps.size(); i-- > 0;) {
        const int m = n - static_cast<int>(i);
        if (!keeps[i]) inside = m - inside;
    }
    return {inside, false, n - inside};
}

/// Necessary conditions |a_n| < |a_0| and |a_k| < C(n-1,k-1)|a_n| + C(n-1,k)|a_0|.
inline bool coefficient_bound_filter(const IntPolynomial& f) {
    const IntPolynomial g = detail::engine_input(f, "coefficient_bound_filter");
    const int n = g.degree();
    const Integer an = abs(g[n]);
    const Integer a0 = abs(g[0]);
    if (an >= a0) return false;
    for (int k = 1; k <= n - 1; ++k)
        if (abs(g[k]) >= binomial(n - 1, k - 1) * an + binomial(n - 1, k) * a0) return false;
    return true;
}

/// Exclusive upper bound of the coefficient search box: |a_k| must be below this.
inline Integer coefficient_box_limit(int n, int k, const Integer& abs_an, const Integer& abs_a0) {
    return binomial(n - 1, k - 1) * abs_an + binomial(n - 1, k) * abs_a0;
}

/// True iff every root satisfies |alpha| > s.
inline ExpansivityVerdict roots_outside_radius(const IntPolynomial& f, const Rational& s,
                                               Strategy strategy = Strategy::full) {
    if (s <= 0) throw InputError("roots_outside_radius: radius must be positive");
    const IntPolynomial g = detail::engine_input(f, "roots_outside_radius");
    return check_d_conditions(scale_argument(g, s), strategy);
}

/**
 * Exact bisection on the radius test. Returns s_low >= 1 such that all roots
 * lie outside radius s_low but not all outside s_low + tol, so the gap
 * min|alpha| - 1 lies in [s_low - 1, s_low - 1 + tol).
 */
inline Rational certified_gap(const IntPolynomial& f, const Rational& tol) {
    if (tol <= 0) throw InputError("certified_gap: tolerance must be positive");
    const IntPolynomial g = detail::engine_input(f, "certified_gap");
    if (auto v = check_d_conditions(g); !v.expansive)
        throw InputError("certified_gap: polynomial is not expansive (" + v.witness + ")");

    // min|alpha| <= (|a_0|/|a_n|)^(1/n) <= |a_0|/|a_n|, so the radius test fails there.
    Rational lo(1);
    Rational hi = make_rational(abs(g.constant()), abs(g.top()));
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (roots_outside_radius(g, mid).expansive)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace expoly

#endif  // EXPOLY_EXPANSIVITY_HPP
