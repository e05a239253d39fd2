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

#ifndef EXPOLY_ENUMERATION_HPP
#define EXPOLY_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "expansivity.hpp"
#include "poly_core.hpp"

namespace expoly {

struct EnumerationSpec {
    int degree = 1;
    long constant_term = 1;  // a_0 > 0; a_0 < 0 is the mirror image under negation
    std::optional<long> height_cap;
};

struct EnumerationOptions {
    std::uint64_t box_cap = 20'000'000;
    unsigned threads = 1;
};

struct CensusResult {
    std::uint64_t total_checked = 0;
    std::uint64_t expansive = 0;
    std::vector<IntPolynomial> polynomials;  // lexicographic by (a_0, ..., a_n)
};

inline bool coefficient_less(const IntPolynomial& a, const IntPolynomial& b) {
    const auto x = a.coeffs();
    const auto y = b.coeffs();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

namespace detail {

/// Largest admissible |a_k| for k = 1..n-1 given a_n, after the optional height cap.
inline std::vector<long> inner_limits(const EnumerationSpec& spec, long an) {
    std::vector<long> lim;
    const Integer abs_an(std::abs(an)), a0(spec.constant_term);
    for (int k = 1; k <= spec.degree - 1; ++k) {
        Integer open = coefficient_box_limit(spec.degree, k, abs_an, a0) - 1;
        if (spec.height_cap && open > *spec.height_cap) open = *spec.height_cap;
        if (!open.fits_slong_p()) throw InputError("search box coefficient range too large");
        lim.push_back(open.get_si());
    }
    return lim;
}

inline std::vector<long> leading_values(const EnumerationSpec& spec) {
    std::vector<long> out;
    long top = spec.constant_term - 1;
    if (spec.height_cap) top = std::min(top, *spec.height_cap);
    for (long v = -top; v <= top; ++v)
        if (v != 0) out.push_back(v);
    return out;
}

inline CensusResult enumerate_for_leading(const EnumerationSpec& spec, long an) {
    CensusResult r;
    const int n = spec.degree;
    const std::vector<long> lim = inner_limits(spec, an);
    std::vector<long> inner(lim.size());
    for (std::size_t i = 0; i < lim.size(); ++i) inner[i] = -lim[i];

    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    c[0] = spec.constant_term;
    c[n] = an;
    for (;;) {
        for (std::size_t i = 0; i < inner.size(); ++i) c[i + 1] = inner[i];
        IntPolynomial f(c);
        ++r.total_checked;
        if (coefficient_bound_filter(f) && check_d_conditions(f).expansive) {
            ++r.expansive;
            r.polynomials.push_back(std::move(f));
        }
        std::size_t i = 0;
        for (; i < inner.size(); ++i) {
            if (inner[i] < lim[i]) {
                ++inner[i];
                break;
            }
            inner[i] = -lim[i];
        }
        if (i == inner.size()) break;
    }
    return r;
}

}  // namespace detail

/// Number of candidates enumerate_expansive would visit.
inline Integer search_box_size(const EnumerationSpec& spec) {
    Integer total(0);
    for (long an : detail::leading_values(spec)) {
        Integer box(1);
        for (long l : detail::inner_limits(spec, an)) box *= 2 * l + 1;
        total += box;
    }
    return total;
}

/**
 * Every expansive polynomial of the given degree and constant term. a_n runs
 * over 0 < |a_n| < a_0 and the inner coefficients over the open box
 * |a_k| < C(n-1,k-1)|a_n| + C(n-1,k)a_0. Work is split by a_n; the merged
 * result does not depend on the thread count.
 */
inline CensusResult enumerate_expansive(const EnumerationSpec& spec, const EnumerationOptions& opts = {}) {
    if (spec.degree < 1) throw InputError("enumerate_expansive: degree must be at least 1");
    if (spec.constant_term < 1) throw InputError("enumerate_expansive: constant term must be positive");
    if (const Integer size = search_box_size(spec); size > Integer(std::to_string(opts.box_cap)))
        throw InputError("search box has " + size.get_str() + " candidates, above the cap of " +
                         std::to_string(opts.box_cap));

    const std::vector<long> leading = detail::leading_values(spec);
    std::vector<CensusResult> parts(leading.size());
    if (opts.threads <= 1) {
        for (std::size_t i = 0; i < leading.size(); ++i) parts[i] = detail::enumerate_for_leading(spec, leading[i]);
    } else {
        std::size_t next = 0;
        while (next < leading.size()) {
            std::vector<std::future<CensusResult>> batch;
            const std::size_t begin = next;
            for (unsigned t = 0; t < opts.threads && next < leading.size(); ++t, ++next)
                batch.push_back(std::async(std::launch::async, detail::enumerate_for_leading, spec, leading[next]));
            for (std::size_t i = 0; i < batch.size(); ++i) parts[begin + i] = batch[i].get();
        }
    }

    CensusResult out;
    for (auto& p : parts) {
        out.total_checked += p.total_checked;
        out.expansive += p.expansive;
        for (auto& f : p.polynomials) out.polynomials.push_back(std::move(f));
    }
    std::sort(out.polynomials.begin(), out.polynomials.end(), coefficient_less);
    return out;
}

}  // namespace expoly

#endif  // EXPOLY_ENUMERATION_HPP
