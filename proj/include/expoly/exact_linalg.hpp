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

#ifndef EXPOLY_EXACT_LINALG_HPP
#define EXPOLY_EXACT_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly_core.hpp"

namespace expoly {

/// Dense square matrix of arbitrary-precision integers, row-major.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (dim == 0) throw InputError("matrix dimension must be positive");
    }

    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) : ExactMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_) throw InputError("matrix must be square");
            std::size_t j = 0;
            for (long v : row) at(i, j++) = v;
            ++i;
        }
    }

    static ExactMatrix identity(std::size_t dim) {
        ExactMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }
    Integer& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < dim_; ++j) std::swap(at(a, j), at(b, j));
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Integer> entries_;
};

struct EliminationTrace {
    // Entry 0 is the input; entry s is the working matrix after elimination step s.
    std::vector<std::size_t> max_entry_bits;
    std::size_t pivot_swaps = 0;
};

struct DeterminantResult {
    Integer value;
    EliminationTrace trace;
};

namespace detail {

inline std::size_t max_bits(const ExactMatrix& m) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) best = std::max(best, bit_length(m.at(i, j)));
    return best;
}

}  // namespace detail

/**
 * Fraction-free Gaussian elimination (Bareiss). Every intermediate entry is a
 * minor of the input, so entry sizes stay polynomial. Pivoting takes the first
 * nonzero entry in the column, scanning rows top-down. A column with no
 * nonzero pivot ends the elimination with determinant 0.
 */
inline DeterminantResult bareiss_determinant(ExactMatrix m) {
    const std::size_t d = m.dim();
    DeterminantResult out;
    out.trace.max_entry_bits.push_back(detail::max_bits(m));

    bool negate = false;
    Integer prev(1);
    Integer t;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < d && m.at(r, k) == 0) ++r;
            if (r == d) {
                out.value = 0;
                return out;
            }
            m.swap_rows(k, r);
            ++out.trace.pivot_swaps;
            negate = !negate;
        }
        const Integer& pivot = m.at(k, k);
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j < d; ++j) {
                t = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
                    throw InternalError("Bareiss division is not exact");
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = pivot;
        out.trace.max_entry_bits.push_back(detail::max_bits(m));
    }
    out.value = negate ? Integer(-m.at(d - 1, d - 1)) : m.at(d - 1, d - 1);
    return out;
}

enum class Sign { negative, zero, positive };

inline Sign sign_of(const Integer& v) {
    const int s = sgn(v);
    return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
}

inline Sign determinant_sign(const ExactMatrix& m) { return sign_of(bareiss_determinant(m).value); }

/// ceil(prod_i ||row_i||_2); an a-priori bound on |det m|.
inline Integer hadamard_bound(const ExactMatrix& m) {
    Integer product(1);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Integer sq(0);
        for (std::size_t j = 0; j < m.dim(); ++j) sq += m.at(i, j) * m.at(i, j);
        product *= sq;
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), product.get_mpz_t());
    if (root * root < product) ++root;
    return root;
}

}  // namespace expoly

#endif  // EXPOLY_EXACT_LINALG_HPP
