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

// Independent reference routines for the test suites. Nothing here calls into
// the elimination or interpolation code it is used to check.

#ifndef EXPOLY_TESTS_SUPPORT_HPP
#define EXPOLY_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "expoly/expoly.hpp"

namespace expoly::ref {

/// Laplace expansion along the first row; generic over the entry ring.
template <class T>
T cofactor_determinant(const std::vector<std::vector<T>>& m) {
    const std::size_t d = m.size();
    if (d == 0) return T(1);
    if (d == 1) return m[0][0];
    T acc(0);
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < d; ++r) {
            std::vector<T> row;
            for (std::size_t j = 0; j < d; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        T term = m[0][c] * cofactor_determinant(minor);
        acc = (c % 2 == 0) ? T(acc + term) : T(acc - term);
    }
    return acc;
}

inline Integer cofactor_determinant(const ExactMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.dim(), std::vector<Integer>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
    return cofactor_determinant(rows);
}

/// D-polynomial straight from the definition: entries a_(j-i) x^(j-i) +/- a_(...) x^(...).
inline SymbolicPoly symbolic_d_polynomial(const IntPolynomial& f, int k, DSign sign, int n) {
    auto monomial = [&](long idx) {
        if (idx < 0 || idx > n || f[idx] == 0) return SymbolicPoly{};
        std::vector<Integer> c(static_cast<std::size_t>(idx) + 1);
        c[idx] = f[idx];
        return SymbolicPoly(std::move(c));
    };
    std::vector<std::vector<SymbolicPoly>> m(k, std::vector<SymbolicPoly>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            SymbolicPoly a = monomial(j - i), b = monomial(i + j + n - k - 1);
            m[i - 1][j - 1] = sign == DSign::plus ? a + b : a - b;
        }
    if (k == 0) return SymbolicPoly{1};
    // SymbolicPoly(0) is the empty polynomial; build the alternating sum by hand.
    std::function<SymbolicPoly(const std::vector<std::vector<SymbolicPoly>>&)> det =
        [&](const std::vector<std::vector<SymbolicPoly>>& a) -> SymbolicPoly {
        const std::size_t d = a.size();
        if (d == 1) return a[0][0];
        SymbolicPoly acc;
        for (std::size_t c = 0; c < d; ++c) {
            if (a[0][c].is_zero()) continue;
            std::vector<std::vector<SymbolicPoly>> minor;
            for (std::size_t r = 1; r < d; ++r) {
                std::vector<SymbolicPoly> row;
                for (std::size_t j = 0; j < d; ++j)
                    if (j != c) row.push_back(a[r][j]);
                minor.push_back(std::move(row));
            }
            SymbolicPoly term = a[0][c] * det(minor);
            acc = c % 2 == 0 ? acc + term : acc - term;
        }
        return acc;
    };
    return det(m);
}

/// D-polynomial with the empty-determinant convention for k = 0.
inline SymbolicPoly d_poly_or_one(const IntPolynomial& f, int k, DSign sign, int n) {
    if (k == 0) return SymbolicPoly{1};
    return d_polynomial(f, {k, sign, n});
}

inline Integer d_value_or_one(const IntPolynomial& f, int k, DSign sign, int n) {
    if (k == 0) return 1;
    return d_value(f, {k, sign, n});
}

/// Random polynomial of exact degree n, coefficients in [-height, height].
inline IntPolynomial random_polynomial(std::mt19937_64& rng, int n, long height, bool positive_constant = false) {
    std::uniform_int_distribution<long> dist(-height, height);
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        long v = dist(rng);
        while (i == n && v == 0) v = dist(rng);
        c[i] = v;
    }
    if (positive_constant) {
        while (c[0] == 0) c[0] = dist(rng);
        if (c[0] < 0) c[0] = -c[0];
    }
    return IntPolynomial(std::move(c));
}

/// Calls fn on every polynomial of exact degree 1..max_degree with coefficients
/// in [-range, range] and a_0 > 0.
template <class Fn>
void sweep(int max_degree, long range, Fn&& fn) {
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<long> c(static_cast<std::size_t>(n) + 1, -range);
        c[0] = 1;
        for (;;) {
            if (c[n] != 0) {
                std::vector<Integer> z(c.begin(), c.end());
                fn(IntPolynomial(std::move(z)));
            }
            std::size_t i = 0;
            for (; i < c.size(); ++i) {
                if (c[i] < range) {
                    ++c[i];
                    break;
                }
                c[i] = i == 0 ? 1 : -range;
            }
            if (i == c.size()) break;
        }
    }
}

/// Degree-n coefficients of a_n prod (x - r_i), numerically.
inline std::vector<std::complex<double>> expand_roots(double lead, const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> c{lead};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

inline IntPolynomial to_int_polynomial(const SymbolicPoly& p) {
    if (p.is_zero()) return IntPolynomial{0};
    return IntPolynomial(p.coeffs());
}

/// Greedy nearest matching of two multisets of complex numbers; true if every
/// pair is within rel_tol * max(1, |expected|).
inline bool multisets_match(std::vector<std::complex<double>> expected, std::vector<std::complex<double>> actual,
                            double rel_tol) {
    if (expected.size() != actual.size()) return false;
    std::vector<bool> used(actual.size(), false);
    for (const auto& e : expected) {
        std::size_t best = actual.size();
        double best_d = 0;
        for (std::size_t j = 0; j < actual.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(e - actual[j]);
            if (best == actual.size() || d < best_d) best = j, best_d = d;
        }
        if (best_d > rel_tol * std::max(1.0, std::abs(e))) return false;
        used[best] = true;
    }
    return true;
}

/// Products alpha_i alpha_j for i < j.
inline std::vector<std::complex<double>> pair_products(const std::vector<std::complex<double>>& r) {
    std::vector<std::complex<double>> out;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) out.push_back(r[i] * r[j]);
    return out;
}

/// Smallest pairwise distance relative to magnitude; large values mean well separated.
inline double min_relative_separation(const std::vector<std::complex<double>>& v) {
    double best = INFINITY;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::min(best, std::abs(v[i] - v[j]) / std::max(1.0, std::max(std::abs(v[i]), std::abs(v[j]))));
    return best;
}

}  // namespace expoly::ref

#endif  // EXPOLY_TESTS_SUPPORT_HPP
