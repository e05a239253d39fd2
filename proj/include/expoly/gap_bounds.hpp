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

#ifndef EXPOLY_GAP_BOUNDS_HPP
#define EXPOLY_GAP_BOUNDS_HPP

#include <array>
#include <optional>
#include <string>

#include "errors.hpp"
#include "expansivity.hpp"
#include "poly_core.hpp"

namespace expoly {

// Upper bounds on 1/(|alpha| - 1) for the roots alpha of an expansive integer
// polynomial, split by whether alpha is real. All values are exact. For
// n = 1 there are no non-real roots and the complex column is absent.

struct BoundPair {
    Rational real;
    std::optional<Rational> complex;
};

/// Fixed order; ties in best_bound_report go to the earlier family.
enum class BoundFamily { A, AZ, H, L };

inline constexpr std::array<BoundFamily, 4> kBoundFamilies{BoundFamily::A, BoundFamily::AZ, BoundFamily::H,
                                                           BoundFamily::L};

inline std::string to_string(BoundFamily f) {
    switch (f) {
        case BoundFamily::A: return "A";
        case BoundFamily::AZ: return "AZ";
        case BoundFamily::H: return "H";
        case BoundFamily::L: return "L";
    }
    return "?";
}

namespace detail {

inline IntPolynomial bound_input(const IntPolynomial& f) {
    return engine_input(f, "gap bound");
}

inline Rational pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

inline unsigned long choose2(int n) { return n < 2 ? 0ul : static_cast<unsigned long>(n) * (n - 1) / 2; }

}  // namespace detail

/// Liouville-type: 2^(n-1)|a_0| and 2^C(n,2) |a_0|^(n-1) + 1.
inline BoundPair bound_a(const IntPolynomial& f) {
    const IntPolynomial g = detail::bound_input(f);
    const int n = g.degree();
    const Integer a0 = abs(g.constant());
    BoundPair b{detail::pow2(n - 1) * a0, std::nullopt};
    if (n >= 2) b.complex = detail::pow2(detail::choose2(n)) * Rational(pow_int(a0, n - 1)) + 1;
    return b;
}

/// With the leading coefficient: 2^(n-2)(|a_0|+|a_n|) and 2^C(n-1,2) (|a_0|+|a_n|)^(n-1) + 1.
inline BoundPair bound_az(const IntPolynomial& f) {
    const IntPolynomial g = detail::bound_input(f);
    const int n = g.degree();
    const Integer s = abs(g.constant()) + abs(g.top());
    BoundPair b{detail::pow2(n - 2) * s, std::nullopt};
    if (n >= 2) b.complex = detail::pow2(detail::choose2(n - 1)) * Rational(pow_int(s, n - 1)) + 1;
    return b;
}

/// Height-based: C(n+1,2)H + n/2 and C(n,2) n! H^(n-1) + C(n,2) + 1.
inline BoundPair bound_height(const IntPolynomial& f) {
    const IntPolynomial g = detail::bound_input(f);
    const int n = g.degree();
    const Integer h = measures(g).height;
    BoundPair b{Rational(binomial(n + 1, 2) * h) + make_rational(n, 2), std::nullopt};
    if (n >= 2) {
        const Integer c = binomial(n, 2);
        b.complex = Rational(c * factorial(n) * pow_int(h, n - 1) + c + 1);
    }
    return b;
}

/// Length-based: nL + n and 2C(n,2) L^(n-1) + 2C(n,2) + 1.
inline BoundPair bound_length(const IntPolynomial& f) {
    const IntPolynomial g = detail::bound_input(f);
    const int n = g.degree();
    const Integer l = measures(g).length;
    BoundPair b{Rational(n * l + n), std::nullopt};
    if (n >= 2) {
        const Integer c2 = 2 * binomial(n, 2);
        b.complex = Rational(c2 * pow_int(l, n - 1) + c2 + 1);
    }
    return b;
}

inline BoundPair bound_for(BoundFamily family, const IntPolynomial& f) {
    switch (family) {
        case BoundFamily::A: return bound_a(f);
        case BoundFamily::AZ: return bound_az(f);
        case BoundFamily::H: return bound_height(f);
        case BoundFamily::L: return bound_length(f);
    }
    throw InternalError("unknown bound family");
}

struct GapBoundReport {
    int n = 0;
    std::array<BoundPair, 4> bounds;  // indexed like kBoundFamilies
    BoundFamily best_real = BoundFamily::A;
    std::optional<BoundFamily> best_complex;
    Rational implied_gap_real;
    std::optional<Rational> implied_gap_complex;
    // max of the per-column minima: bounds 1/(|alpha|-1) for every root
    Rational combined;
    Rational implied_gap_combined;

    const BoundPair& of(BoundFamily f) const { return bounds[static_cast<std::size_t>(f)]; }
};

inline GapBoundReport best_bound_report(const IntPolynomial& f) {
    const IntPolynomial g = detail::bound_input(f);
    if (auto v = check_d_conditions(g); !v.expansive)
        throw InputError("gap bounds need an expansive polynomial (" + v.witness + ")");

    GapBoundReport r;
    r.n = g.degree();
    for (auto fam : kBoundFamilies) r.bounds[static_cast<std::size_t>(fam)] = bound_for(fam, g);

    for (auto fam : kBoundFamilies) {
        if (r.of(fam).real < r.of(r.best_real).real) r.best_real = fam;
        if (r.n >= 2 && (!r.best_complex || *r.of(fam).complex < *r.of(*r.best_complex).complex))
            r.best_complex = fam;
    }
    const Rational& real = r.of(r.best_real).real;
    r.implied_gap_real = 1 / real;
    r.combined = real;
    if (r.best_complex) {
        const Rational& cplx = *r.of(*r.best_complex).complex;
        r.implied_gap_complex = 1 / cplx;
        if (cplx > r.combined) r.combined = cplx;
    }
    r.implied_gap_combined = 1 / r.combined;
    return r;
}

struct LiouvilleQuery {
    IntPolynomial g;  // test polynomial
    IntPolynomial f;  // expansive, so M(f) = |a_0|
};

/// L(g)^(n-1) M(f)^(deg g), the bound on 1/|g(alpha)| for a root alpha of f.
inline Integer liouville_rhs(const LiouvilleQuery& q) {
    require_nonzero(q.g, "liouville_rhs");
    const IntPolynomial f = detail::engine_input(q.f, "liouville_rhs");
    const int n = f.degree();
    const Integer lg = measures(q.g).length;
    return pow_int(lg, n - 1) * pow_int(abs(f.constant()), q.g.degree());
}

}  // namespace expoly

#endif  // EXPOLY_GAP_BOUNDS_HPP
