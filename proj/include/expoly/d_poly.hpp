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

#ifndef EXPOLY_D_POLY_HPP
#define EXPOLY_D_POLY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_linalg.hpp"
#include "expansivity.hpp"
#include "poly_core.hpp"

namespace expoly {

/// Univariate integer polynomial with trailing zeros trimmed; the zero polynomial is empty.
class SymbolicPoly {
public:
    SymbolicPoly() = default;

    explicit SymbolicPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    SymbolicPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static SymbolicPoly from(const IntPolynomial& f) {
        return SymbolicPoly(std::vector<Integer>(f.coeffs().begin(), f.coeffs().end()));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Integer& operator[](long i) const {
        static const Integer zero(0);
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer operator()(const Integer& x) const {
        Integer acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// p(-x)
    SymbolicPoly reflect() const {
        std::vector<Integer> c(coeffs_);
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return SymbolicPoly(std::move(c));
    }

    /// p(x^2)
    SymbolicPoly substitute_square() const {
        if (is_zero()) return {};
        std::vector<Integer> c(2 * coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[2 * i] = coeffs_[i];
        return SymbolicPoly(std::move(c));
    }

    bool has_only_even_powers() const {
        for (std::size_t i = 1; i < coeffs_.size(); i += 2)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    /// q with q(x^2) = p(x); requires only even powers.
    SymbolicPoly halve_exponents() const {
        if (!has_only_even_powers()) throw InternalError("halve_exponents: odd power present");
        std::vector<Integer> c;
        for (std::size_t i = 0; i < coeffs_.size(); i += 2) c.push_back(coeffs_[i]);
        return SymbolicPoly(std::move(c));
    }

    friend SymbolicPoly operator+(const SymbolicPoly& a, const SymbolicPoly& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return SymbolicPoly(std::move(c));
    }

    friend SymbolicPoly operator-(const SymbolicPoly& a) {
        std::vector<Integer> c(a.coeffs_);
        for (auto& v : c) v = -v;
        return SymbolicPoly(std::move(c));
    }

    friend SymbolicPoly operator-(const SymbolicPoly& a, const SymbolicPoly& b) { return a + (-b); }

    friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return SymbolicPoly(std::move(c));
    }

    friend bool operator==(const SymbolicPoly&, const SymbolicPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// 0, 1, -1, 2, -2, ...
inline std::vector<Integer> default_nodes(std::size_t count) {
    std::vector<Integer> nodes;
    nodes.reserve(count);
    for (long i = 0; nodes.size() < count; ++i) {
        if (i == 0) {
            nodes.emplace_back(0);
            continue;
        }
        nodes.emplace_back(i);
        if (nodes.size() < count) nodes.emplace_back(-i);
    }
    return nodes;
}

/**
 * Exact interpolation through (nodes[i], values[i]) in Newton form. The
 * result is expected to have integer coefficients; anything else means the
 * degree bound was wrong and is reported as an internal error.
 */
inline SymbolicPoly interpolate(const std::vector<Integer>& nodes, const std::vector<Integer>& values) {
    const std::size_t m = nodes.size();
    if (m == 0 || values.size() != m) throw InputError("interpolate: node/value count mismatch");

    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            const Integer dx = nodes[i] - nodes[i - level];
            if (dx == 0) throw InputError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / Rational(dx);
        }

    // Horner on the Newton basis: p = dd0 + (x-x0)(dd1 + (x-x1)(...)).
    std::vector<Rational> poly{dd[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * nodes[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }

    std::vector<Integer> coeffs(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].get_den() != 1) throw InternalError("interpolate: non-integral coefficient");
        coeffs[i] = poly[i].get_num();
    }
    return SymbolicPoly(std::move(coeffs));
}

namespace detail {

/// Coefficients a_j y^j of f(y x), for j in [0, n].
inline IntPolynomial scaled_by(const IntPolynomial& f, int n, const Integer& y) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    Integer power(1);
    for (int j = 0; j <= n; ++j) {
        c[j] = f[j] * power;
        power *= y;
    }
    return IntPolynomial(std::move(c));
}

}  // namespace detail

/**
 * The D-polynomial: D_k^(+/-) with every a_j replaced by a_j x^j. Computed
 * by evaluating D_k(f(y x)) at kn+1 integer nodes and interpolating.
 */
inline SymbolicPoly d_polynomial(const IntPolynomial& f, const DMatrixSpec& spec,
                                 std::optional<std::vector<Integer>> nodes = std::nullopt) {
    const std::size_t count = static_cast<std::size_t>(spec.k) * spec.n + 1;
    std::vector<Integer> ys = nodes ? std::move(*nodes) : default_nodes(count);
    if (ys.size() != count)
        throw InputError("d_polynomial: need exactly " + std::to_string(count) + " nodes");
    build_d_matrix(f, spec);  // validates spec

    std::vector<Integer> values;
    values.reserve(count);
    for (const auto& y : ys) values.push_back(d_value(detail::scaled_by(f, spec.n, y), spec));
    return interpolate(ys, values);
}

/**
 * D_(n-1)^- (x^(1/2)): degree C(n,2), roots alpha_i alpha_j for i < j.
 */
inline SymbolicPoly pair_product_polynomial(const IntPolynomial& f) {
    const IntPolynomial g = f.canonical();
    const int n = g.degree();
    if (n < 2) throw InputError("pair_product_polynomial: degree must be at least 2");
    SymbolicPoly d = d_polynomial(g, {n - 1, DSign::minus, n});
    if (!d.has_only_even_powers())
        throw InternalError("pair_product_polynomial: D_(n-1)^- has an odd power");
    return d.halve_exponents();
}

/// The 2n x 2n Sylvester-style matrix whose determinant is (-1)^n F(x), at x = y.
inline ExactMatrix pair_resultant_matrix(const IntPolynomial& f, const Integer& y) {
    const int n = f.degree();
    const std::size_t dim = 2 * static_cast<std::size_t>(n);
    ExactMatrix m(dim);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
            Integer& e = m.at(i - 1, j - 1);
            if (j <= n) {
                const int d = i - j;
                e = (d < 0 || d > n) ? Integer(0) : Integer(f[d] * pow_int(y, d));
            } else {
                const int d = j - i;
                e = (d < 0 || d > n) ? Integer(0) : f[d];
            }
        }
    return m;
}

/**
 * F(x) = res_y(f(y), y^n f(x/y)) = a_n^(2n) prod_(i,j) (x - alpha_i alpha_j),
 * degree n^2, by interpolating exact determinants at n^2+1 nodes.
 */
inline SymbolicPoly resultant_pair_product(const IntPolynomial& f) {
    const IntPolynomial g = f.canonical();
    const int n = g.degree();
    if (n < 1) throw InputError("resultant_pair_product: degree must be at least 1");
    const std::vector<Integer> ys = default_nodes(static_cast<std::size_t>(n) * n + 1);
    std::vector<Integer> values;
    values.reserve(ys.size());
    for (const auto& y : ys) {
        Integer det = bareiss_determinant(pair_resultant_matrix(g, y)).value;
        values.push_back(n % 2 ? Integer(-det) : det);
    }
    return interpolate(ys, values);
}

// ---------------------------------------------------------------------------
// Term count of the formal expansion of D_(n-1)^-

struct TermCountReport {
    int n = 0;
    std::uint64_t raw_terms = 0;        // signed products with every a_i - a_j expanded
    std::uint64_t collected_terms = 0;  // distinct monomials with nonzero coefficient
};

inline constexpr int kTermCountMaxDegree = 8;

inline TermCountReport term_count(int n) {
    if (n < 1 || n > kTermCountMaxDegree)
        throw InputError("term_count: n must be in [1, " + std::to_string(kTermCountMaxDegree) + "]");

    using Monomial = std::array<std::uint8_t, kTermCountMaxDegree + 1>;
    struct Term {
        int sign;
        int index;
    };
    const int k = n - 1;
    TermCountReport report{n, 0, 0};
    if (k == 0) {  // empty determinant
        report.raw_terms = report.collected_terms = 1;
        return report;
    }

    // entry(i, j) = a_(j-i) - a_(i+j), 1-based, indices outside [0, n] dropped
    std::vector<std::vector<Term>> entries(static_cast<std::size_t>(k * k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            auto& e = entries[(i - 1) * k + (j - 1)];
            if (j - i >= 0 && j - i <= n) e.push_back({+1, j - i});
            if (i + j <= n) e.push_back({-1, i + j});
        }

    std::map<Monomial, long long> collected;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::uint64_t product_count = 1;
        for (int i = 0; i < k; ++i) product_count *= entries[i * k + perm[i]].size();
        if (product_count == 0) continue;
        report.raw_terms += product_count;

        int parity = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) parity ^= 1;

        std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
        for (std::uint64_t t = 0; t < product_count; ++t) {
            Monomial mono{};
            int sign = parity ? -1 : 1;
            for (int i = 0; i < k; ++i) {
                const Term& term = entries[i * k + perm[i]][choice[i]];
                sign *= term.sign;
                ++mono[term.index];
            }
            collected[mono] += sign;
            for (int i = 0; i < k; ++i) {
                if (++choice[i] < entries[i * k + perm[i]].size()) break;
                choice[i] = 0;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& [mono, coeff] : collected)
        if (coeff != 0) ++report.collected_terms;
    return report;
}

enum class TermConvention { raw, collected, neither };

inline constexpr std::array<std::uint64_t, 5> kKnownTermCounts{1, 2, 4, 12, 40};

/// Which counting convention reproduces the known values for n = 1..5.
inline TermConvention matching_term_convention() {
    bool raw = true, collected = true;
    for (int n = 1; n <= 5; ++n) {
        const auto r = term_count(n);
        raw = raw && r.raw_terms == kKnownTermCounts[n - 1];
        collected = collected && r.collected_terms == kKnownTermCounts[n - 1];
    }
    return raw ? TermConvention::raw : (collected ? TermConvention::collected : TermConvention::neither);
}

inline std::string to_string(TermConvention c) {
    switch (c) {
        case TermConvention::raw: return "raw";
        case TermConvention::collected: return "collected";
        case TermConvention::neither: return "neither";
    }
    return "?";
}

}  // namespace expoly

#endif  // EXPOLY_D_POLY_HPP
