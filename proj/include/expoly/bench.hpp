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

#ifndef EXPOLY_BENCH_HPP
#define EXPOLY_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_linalg.hpp"
#include "expansivity.hpp"
#include "poly_core.hpp"

// Coefficient growth of the Schur-Cohn chain against the Bareiss elimination
// of the D-matrices. Bit-lengths are the primary, machine-independent metric;
// wall-times are secondary and never written to the CSV.

namespace expoly {

struct BenchSpec {
    int degree = 12;
    unsigned coefficient_bits = 32;  // coefficients uniform in [-2^bits, 2^bits]
    int trials = 5;
    std::uint64_t seed = 1;
};

struct DMatrixGrowth {
    int k = 1;
    DSign sign = DSign::plus;
    std::vector<std::size_t> step_bits;  // EliminationTrace::max_entry_bits
    std::size_t max_bits = 0;
    std::size_t hadamard_bits = 0;
};

struct TrialGrowth {
    IntPolynomial poly;
    std::vector<std::size_t> schur_bits;  // max coefficient bit-length per chain step
    std::vector<DMatrixGrowth> d_matrices;
    double schur_seconds = 0;
    double bareiss_seconds = 0;
};

struct GrowthProfile {
    BenchSpec spec;
    std::vector<TrialGrowth> trials;
    std::vector<double> median_schur_bits;    // per chain step
    std::vector<double> median_bareiss_bits;  // per D-matrix, ordered k = 1.., + before -
    double median_schur_seconds = 0;
    double median_bareiss_seconds = 0;
};

inline double median(std::vector<double> v) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

inline std::size_t max_coefficient_bits(const IntPolynomial& f) {
    std::size_t b = 0;
    for (const auto& c : f.coeffs()) b = std::max(b, bit_length(c));
    return b;
}

/// Random polynomial with coefficients uniform in [-2^bits, 2^bits], a_0 > 0 and a_n != 0.
inline IntPolynomial random_polynomial(gmp_randclass& rng, int degree, unsigned bits) {
    Integer h(1);
    h <<= bits;
    const Integer span = 2 * h + 1;
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
        do {
            c[i] = rng.get_z_range(span) - h;
        } while ((i == 0 || i == degree) && c[i] == 0);
    }
    if (c[0] < 0) c[0] = -c[0];
    return IntPolynomial(std::move(c));
}

inline TrialGrowth measure_growth(const IntPolynomial& f) {
    using clock = std::chrono::steady_clock;
    TrialGrowth t;
    t.poly = f;
    const int n = f.degree();

    auto start = clock::now();
    for (const auto& p : schur_chain(f)) t.schur_bits.push_back(max_coefficient_bits(p));
    t.schur_seconds = std::chrono::duration<double>(clock::now() - start).count();

    start = clock::now();
    for (int k = 1; k <= n - 1; ++k)
        for (DSign s : {DSign::plus, DSign::minus}) {
            ExactMatrix m = build_d_matrix(f, {k, s, n});
            DMatrixGrowth g;
            g.k = k;
            g.sign = s;
            g.hadamard_bits = bit_length(hadamard_bound(m));
            g.step_bits = bareiss_determinant(std::move(m)).trace.max_entry_bits;
            g.max_bits = *std::max_element(g.step_bits.begin(), g.step_bits.end());
            t.d_matrices.push_back(std::move(g));
        }
    t.bareiss_seconds = std::chrono::duration<double>(clock::now() - start).count();
    return t;
}

inline GrowthProfile bench_growth(const BenchSpec& spec) {
    if (spec.degree < 2) throw InputError("bench_growth: degree must be at least 2");
    if (spec.trials < 1) throw InputError("bench_growth: need at least one trial");

    GrowthProfile prof;
    prof.spec = spec;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Integer(std::to_string(spec.seed)));
    for (int t = 0; t < spec.trials; ++t)
        prof.trials.push_back(measure_growth(random_polynomial(rng, spec.degree, spec.coefficient_bits)));

    const std::size_t steps = prof.trials.front().schur_bits.size();
    for (std::size_t s = 0; s < steps; ++s) {
        std::vector<double> col;
        for (const auto& t : prof.trials) col.push_back(static_cast<double>(t.schur_bits[s]));
        prof.median_schur_bits.push_back(median(col));
    }
    const std::size_t mats = prof.trials.front().d_matrices.size();
    for (std::size_t m = 0; m < mats; ++m) {
        std::vector<double> col;
        for (const auto& t : prof.trials) col.push_back(static_cast<double>(t.d_matrices[m].max_bits));
        prof.median_bareiss_bits.push_back(median(col));
    }
    std::vector<double> st, bt;
    for (const auto& t : prof.trials) {
        st.push_back(t.schur_seconds);
        bt.push_back(t.bareiss_seconds);
    }
    prof.median_schur_seconds = median(st);
    prof.median_bareiss_seconds = median(bt);
    return prof;
}

inline constexpr const char* kBenchCsvVersion = "expoly-bench-csv v1";

/// Columns: kind,trial,step,k,sign,max_bits,bound_bits. Contains no timings.
inline void write_growth_csv(std::ostream& os, const GrowthProfile& p) {
    os << "# " << kBenchCsvVersion << " degree=" << p.spec.degree << " bits=" << p.spec.coefficient_bits
       << " trials=" << p.spec.trials << " seed=" << p.spec.seed << '\n';
    os << "kind,trial,step,k,sign,max_bits,bound_bits\n";
    for (std::size_t t = 0; t < p.trials.size(); ++t) {
        const auto& tr = p.trials[t];
        for (std::size_t s = 0; s < tr.schur_bits.size(); ++s)
            os << "schur," << t << ',' << s << ",,," << tr.schur_bits[s] << ",\n";
        for (const auto& m : tr.d_matrices)
            for (std::size_t s = 0; s < m.step_bits.size(); ++s)
                os << "bareiss," << t << ',' << s << ',' << m.k << ',' << sign_char(m.sign) << ','
                   << m.step_bits[s] << ',' << m.hadamard_bits << '\n';
    }
    for (std::size_t s = 0; s < p.median_schur_bits.size(); ++s)
        os << "schur_median,," << s << ",,," << std::fixed << std::setprecision(1) << p.median_schur_bits[s]
           << ",\n";
}

}  // namespace expoly

#endif  // EXPOLY_BENCH_HPP
