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

#include <gtest/gtest.h>

#include <random>

#include "expoly/d_poly.hpp"
#include "expoly/oracle.hpp"
#include "support.hpp"

using namespace expoly;
using ref::d_poly_or_one;

TEST(DPolynomial, HandExamples) {
    EXPECT_EQ(d_polynomial({3, 0, -1}, {1, DSign::minus, 2}), (SymbolicPoly{3, 0, 1}));
    EXPECT_EQ(d_polynomial({3, 0, -1}, {2, DSign::plus, 2}), (SymbolicPoly{9, 0, 0, 0, -1}));
}

TEST(DPolynomial, AgreesWithDirectExpansion) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 5;
        const IntPolynomial f = ref::random_polynomial(rng, n, 7);
        for (int k = 1; k <= n; ++k)
            for (DSign s : {DSign::plus, DSign::minus})
                ASSERT_EQ(d_polynomial(f, {k, s, n}), ref::symbolic_d_polynomial(f, k, s, n))
                    << f.to_string() << " k=" << k;
    }
}

TEST(DPolynomial, AtOneEqualsDeterminant) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 80; ++t) {
        const int n = 1 + t % 6;
        const IntPolynomial f = ref::random_polynomial(rng, n, 10);
        for (int k = 1; k <= n; ++k)
            for (DSign s : {DSign::plus, DSign::minus})
                ASSERT_EQ(d_polynomial(f, {k, s, n})(Integer(1)), d_value(f, {k, s, n}));
    }
}

TEST(DPolynomial, IndependentOfInterpolationNodes) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + t % 4;
        const IntPolynomial f = ref::random_polynomial(rng, n, 6);
        for (int k = 1; k <= n; ++k) {
            std::vector<Integer> nodes;
            for (int i = 0; i <= k * n; ++i) nodes.emplace_back(100 + 3 * i);
            const DMatrixSpec spec{k, DSign::minus, n};
            ASSERT_EQ(d_polynomial(f, spec), d_polynomial(f, spec, nodes));
        }
    }
    EXPECT_THROW(d_polynomial({1, 2, 3}, {1, DSign::plus, 2}, std::vector<Integer>{0, 1}), InputError);
}

TEST(DPolynomial, ConstantAndLeadingTerms) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 120; ++t) {
        const int n = 1 + t % 6;
        const IntPolynomial f = ref::random_polynomial(rng, n, 5);
        for (int k = 1; k <= n; ++k)
            for (DSign s : {DSign::plus, DSign::minus}) {
                const SymbolicPoly d = d_polynomial(f, {k, s, n});
                ASSERT_EQ(d[0], pow_int(f[0], k));
                ASSERT_EQ(d.degree(), k * n);
                // (-1)^floor(k/2) (+/-1)^k a_n^k
                int sign = (k / 2) % 2 ? -1 : 1;
                if (s == DSign::minus && k % 2) sign = -sign;
                ASSERT_EQ(d[k * n], sign * pow_int(f[n], k));
                if ((n - 1 - k) % 2 == 0) {
                    ASSERT_TRUE(d.has_only_even_powers());
                }
            }
    }
}

TEST(PairProduct, HandExample) {
    const SymbolicPoly p = pair_product_polynomial({3, 0, -1});
    EXPECT_EQ(p, (SymbolicPoly{3, 1}));
    EXPECT_EQ(p(Integer(-3)), 0);
    EXPECT_THROW(pair_product_polynomial({2, 1}), InputError);
}

TEST(PairProduct, DegreeAndConstantTerm) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + t % 5;
        const IntPolynomial f = ref::random_polynomial(rng, n, 8);
        const SymbolicPoly p = pair_product_polynomial(f);
        EXPECT_EQ(p.degree(), n * (n - 1) / 2);
        EXPECT_EQ(p[0], pow_int(f[0], n - 1));
    }
}

TEST(PairProduct, RootsAreProductsOfRootPairs) {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 40; ++t) {
        const int n = 2 + t % 5;
        const IntPolynomial f = ref::random_polynomial(rng, n, 5, true);
        const auto roots = find_roots_numeric(f).roots;
        const auto expected = ref::pair_products(roots);
        if (ref::min_relative_separation(roots) < 1e-2 || ref::min_relative_separation(expected) < 1e-2)
            continue;
        ++checked;
        const auto actual = find_roots_numeric(ref::to_int_polynomial(pair_product_polynomial(f))).roots;
        EXPECT_TRUE(ref::multisets_match(expected, actual, 1e-6)) << f.to_string();
    }
    EXPECT_GE(checked, 20);
}

TEST(Resultant, HandExamples) {
    EXPECT_EQ(resultant_pair_product({3, 0, -1}), (SymbolicPoly{81, 0, -18, 0, 1}));
    EXPECT_EQ(resultant_pair_product({2, -1}), (SymbolicPoly{-4, 1}));
}

TEST(Resultant, FactorizesIntoDPolynomials) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 5;
        const IntPolynomial f = ref::random_polynomial(rng, n, 10);
        const SymbolicPoly fx2 = resultant_pair_product(f).substitute_square();
        const SymbolicPoly sign{n % 2 ? -1 : 1};
        const SymbolicPoly a = sign * d_polynomial(f, {n, DSign::plus, n}) * d_polynomial(f, {n, DSign::minus, n});
        ASSERT_EQ(fx2, a) << f.to_string();
        const SymbolicPoly fp = SymbolicPoly::from(f);
        const SymbolicPoly lower = d_poly_or_one(f, n - 1, DSign::minus, n);
        ASSERT_EQ(fx2, sign * fp * fp.reflect() * lower * lower) << f.to_string();
    }
}

TEST(Resultant, RootsAreAllPairProducts) {
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 15; ++t) {
        const int n = 1 + t % 3;
        const IntPolynomial f = ref::random_polynomial(rng, n, 5, true);
        const auto roots = find_roots_numeric(f).roots;
        if (ref::min_relative_separation(roots) < 1e-2) continue;
        std::vector<std::complex<double>> expected;
        for (const auto& a : roots)
            for (const auto& b : roots) expected.push_back(a * b);
        ++checked;
        const SymbolicPoly F = resultant_pair_product(f);
        EXPECT_EQ(F[F.degree()], pow_int(f[n], 2 * n));
        // Doubled roots (alpha_i alpha_j = alpha_j alpha_i) converge slowly; loose tolerance.
        const auto actual = find_roots_numeric(ref::to_int_polynomial(F)).roots;
        EXPECT_TRUE(ref::multisets_match(expected, actual, 1e-5)) << f.to_string();
    }
}

TEST(TermCount, KnownValues) {
    EXPECT_EQ(term_count(1).collected_terms, 1u);
    EXPECT_EQ(term_count(3).collected_terms, 4u);
    EXPECT_EQ(term_count(3).raw_terms, 4u);
    EXPECT_EQ(term_count(4).raw_terms, 12u);
    EXPECT_EQ(term_count(5).raw_terms, 40u);
    EXPECT_EQ(matching_term_convention(), TermConvention::raw);
}

TEST(TermCount, Ordering) {
    for (int n = 1; n <= 8; ++n) {
        const auto r = term_count(n);
        EXPECT_LE(r.collected_terms, r.raw_terms);
        EXPECT_LE(Integer(std::to_string(r.raw_terms)), factorial(n));
    }
    EXPECT_THROW(term_count(0), InputError);
    EXPECT_THROW(term_count(9), InputError);
}

TEST(Interpolate, RecoversKnownPolynomial) {
    const SymbolicPoly p{5, -3, 0, 7};
    std::vector<Integer> nodes{-2, 0, 3, 10}, values;
    for (const auto& x : nodes) values.push_back(p(x));
    EXPECT_EQ(interpolate(nodes, values), p);
    EXPECT_THROW(interpolate({1, 1}, {2, 3}), InputError);
    EXPECT_THROW(interpolate({0, 2}, {0, 1}), InternalError);
}
