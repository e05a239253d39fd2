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

#include "expoly/exact_linalg.hpp"
#include "support.hpp"

using namespace expoly;

TEST(Bareiss, SmallDeterminants) {
    EXPECT_EQ(bareiss_determinant({{1, 2}, {3, 4}}).value, -2);
    EXPECT_EQ(bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {0, 1, 4}}).value, 21);
    EXPECT_EQ(bareiss_determinant(ExactMatrix::identity(5)).value, 1);
}

TEST(Bareiss, HandValuesAgreeWithCofactorExpansion) {
    const ExactMatrix m{{2, 0, 1}, {1, 3, 2}, {0, 1, 4}};
    EXPECT_EQ(ref::cofactor_determinant(m), 21);
}

TEST(Bareiss, PivotSwapAndSingular) {
    auto r = bareiss_determinant({{0, 1}, {1, 0}});
    EXPECT_EQ(r.value, -1);
    EXPECT_EQ(r.trace.pivot_swaps, 1u);
    EXPECT_EQ(bareiss_determinant({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}).value, 0);
    EXPECT_EQ(bareiss_determinant({{7}}).value, 7);
}

TEST(Bareiss, AgreesWithCofactorExpansion) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> dist(-5, 5);
    std::uniform_int_distribution<std::size_t> dims(1, 5);
    for (int t = 0; t < 500; ++t) {
        ExactMatrix m(dims(rng));
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) m.at(i, j) = dist(rng);
        ASSERT_EQ(bareiss_determinant(m).value, ref::cofactor_determinant(m));
    }
}

TEST(Bareiss, RowSwapFlipsSignDuplicateRowGivesZero) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int t = 0; t < 100; ++t) {
        ExactMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = dist(rng);
        ExactMatrix swapped = m;
        swapped.swap_rows(1, 3);
        EXPECT_EQ(bareiss_determinant(swapped).value, -bareiss_determinant(m).value);
        ExactMatrix dup = m;
        for (std::size_t j = 0; j < 4; ++j) dup.at(2, j) = dup.at(0, j);
        EXPECT_EQ(bareiss_determinant(dup).value, 0);
    }
}

TEST(Bareiss, TraceStaysWithinHadamardBits) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 2 + t % 8;
        ExactMatrix m(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m.at(i, j) = dist(rng);
        const auto r = bareiss_determinant(m);
        const Integer h = hadamard_bound(m);
        EXPECT_LE(abs(r.value), h);
        EXPECT_LE(r.trace.max_entry_bits.size(), d);
        for (auto bits : r.trace.max_entry_bits) EXPECT_LE(bits, bit_length(h) + d);
    }
}

TEST(DeterminantSign, Cases) {
    EXPECT_EQ(determinant_sign({{1, 2}, {3, 4}}), Sign::negative);
    EXPECT_EQ(determinant_sign({{1, 1}, {1, 1}}), Sign::zero);
    EXPECT_EQ(determinant_sign({{2, 0}, {0, 3}}), Sign::positive);
}

TEST(Hadamard, Values) {
    EXPECT_EQ(hadamard_bound({{1, 2}, {3, 4}}), 12);
    EXPECT_EQ(hadamard_bound(ExactMatrix::identity(3)), 1);
    EXPECT_EQ(hadamard_bound({{0, 0}, {0, 0}}), 0);
}

TEST(Hadamard, BoundsDeterminant) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int t = 0; t < 300; ++t) {
        ExactMatrix m(1 + t % 6);
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) m.at(i, j) = dist(rng);
        ASSERT_LE(abs(bareiss_determinant(m).value), hadamard_bound(m));
    }
}

TEST(ExactMatrix, RejectsBadShapes) {
    EXPECT_THROW(ExactMatrix(0), InputError);
    EXPECT_THROW((ExactMatrix{{1, 2}, {3}}), InputError);
}
