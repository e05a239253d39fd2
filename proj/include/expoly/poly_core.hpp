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

#ifndef EXPOLY_POLY_CORE_HPP
#define EXPOLY_POLY_CORE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace expoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& p, const Integer& q) {
    if (q == 0) throw InputError("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Number of bits in |v|; zero has bit-length 0.
inline std::size_t bit_length(const Integer& v) {
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/**
 * Dense integer polynomial, coefficients ascending (a_0 first).
 *
 * The stored length is significant: a polynomial of stored length m+1 has
 * pseudo-degree m even when its top coefficient is zero. This is what the
 * Schur chain relies on. canonical() trims to the true degree.
 */
class IntPolynomial {
public:
    IntPolynomial() : coeffs_(1) {}

    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InputError("polynomial needs at least one coefficient");
    }

    IntPolynomial(std::initializer_list<long> coeffs) {
        if (coeffs.size() == 0) throw InputError("polynomial needs at least one coefficient");
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
    }

    std::size_t stored_length() const { return coeffs_.size(); }
    int pseudo_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Index of the highest nonzero coefficient; 0 for the zero polynomial.
    int degree() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return 0;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
    }

    /// a_i, with a_i = 0 outside the stored range.
    const Integer& operator[](long i) const {
        static const Integer zero(0);
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const Integer& constant() const { return coeffs_.front(); }
    const Integer& top() const { return coeffs_.back(); }

    std::span<const Integer> coeffs() const { return coeffs_; }

    IntPolynomial canonical() const {
        std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + degree() + 1);
        return IntPolynomial(std::move(c));
    }

    IntPolynomial operator-() const {
        std::vector<Integer> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ',';
            out += coeffs_[i].get_str();
        }
        return out;
    }

private:
    std::vector<Integer> coeffs_;
};

inline void require_nonzero(const IntPolynomial& f, const char* op) {
    if (f.is_zero()) throw InputError(std::string(op) + ": zero polynomial");
}

struct SignNormalized {
    IntPolynomial poly;
    bool zero_constant = false;  // a_0 = 0: root at the origin, never expansive
};

/// Multiplies by -1 when a_0 < 0 so that a_0 > 0 (or flags a_0 = 0).
inline SignNormalized normalize_sign(const IntPolynomial& f) {
    require_nonzero(f, "normalize_sign");
    const int s = sgn(f.constant());
    if (s < 0) return {-f, false};
    return {f, s == 0};
}

inline Rational evaluate(const IntPolynomial& f, const Rational& x) {
    Rational acc(0);
    const auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

inline Integer evaluate(const IntPolynomial& f, const Integer& x) {
    Integer acc(0);
    const auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

struct Measures {
    Integer height;               // H(f) = max |a_i|
    Integer length;               // L(f) = sum |a_i|
    Integer mahler_if_expansive;  // |a_0|; equals M(f) only for expansive f
};

inline Measures measures(const IntPolynomial& f) {
    require_nonzero(f, "measures");
    Measures m{0, 0, abs(f.constant())};
    for (const auto& c : f.coeffs()) {
        const Integer a = abs(c);
        if (a > m.height) m.height = a;
        m.length += a;
    }
    return m;
}

inline IntPolynomial reverse(const IntPolynomial& f) {
    std::vector<Integer> c(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPolynomial(std::move(c));
}

/**
 * One step of the Schur-Cohn chain, b_k = a_0 a_k - a_m a_{m-k}, where m is
 * the pseudo-degree. b_m vanishes identically and is dropped, so the output
 * is exactly one coefficient shorter than the input.
 */
inline IntPolynomial schur_transform(const IntPolynomial& f) {
    const int m = f.pseudo_degree();
    if (m < 1) throw InputError("schur_transform: pseudo-degree must be at least 1");
    std::vector<Integer> b(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) b[k] = f[0] * f[k] - f[m] * f[m - k];
    return IntPolynomial(std::move(b));
}

/// q^n f((p/q) x): integer coefficients a_j p^j q^(n-j); roots become alpha_i / s.
inline IntPolynomial scale_argument(const IntPolynomial& f, const Rational& s) {
    if (s == 0) throw InputError("scale_argument: scale must be nonzero");
    const int n = f.pseudo_degree();
    const Integer& p = s.get_num();
    const Integer& q = s.get_den();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = f[j] * pow_int(p, j) * pow_int(q, n - j);
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Text formats

enum class CoefficientOrder { ascending, descending };

namespace detail {

inline bool is_integer_token(std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

inline Integer parse_integer(std::string_view t) {
    if (!is_integer_token(t)) throw InputError("not an integer: '" + std::string(t) + "'");
    if (t[0] == '+') t.remove_prefix(1);
    return Integer(std::string(t), 10);
}

}  // namespace detail

/// Parses "3,0,-1" or "3 0 -1" (ascending unless told otherwise).
inline IntPolynomial parse_polynomial(std::string_view text,
                                      CoefficientOrder order = CoefficientOrder::ascending) {
    std::vector<Integer> coeffs;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
            ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        coeffs.push_back(detail::parse_integer(text.substr(i, j - i)));
        i = j;
    }
    if (coeffs.empty()) throw InputError("empty polynomial");
    if (order == CoefficientOrder::descending) std::reverse(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(coeffs));
}

/// Accepts "p/q", an integer, or a plain decimal such as "0.001".
inline Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InputError("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return make_rational(detail::parse_integer(text.substr(0, slash)),
                             detail::parse_integer(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string_view frac = text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+") digits += '0';
        if (frac.empty() || !detail::is_integer_token(frac) || frac[0] == '-' || frac[0] == '+')
            throw InputError("not a decimal: '" + std::string(text) + "'");
        digits += frac;
        return make_rational(detail::parse_integer(digits), pow_int(Integer(10), frac.size()));
    }
    return Rational(detail::parse_integer(text));
}

inline std::string to_string(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace expoly

#endif  // EXPOLY_POLY_CORE_HPP
