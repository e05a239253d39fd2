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

#ifndef EXPOLY_JSON_IO_HPP
#define EXPOLY_JSON_IO_HPP

// JSON views of the result types. Requires nlohmann/json (vendor/json.hpp).
// Integers that fit in a signed 64-bit value are JSON numbers, larger ones are
// decimal strings; rationals are always strings "p/q" or "p".

#include <string>

#include "json.hpp"

#include "bench.hpp"
#include "d_poly.hpp"
#include "enumeration.hpp"
#include "expansivity.hpp"
#include "gap_bounds.hpp"
#include "oracle.hpp"
#include "poly_core.hpp"

namespace expoly {

using json = nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

inline json int_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

inline json rational_json(const Rational& r) { return json(to_string(r)); }

inline json coeffs_json(std::span<const Integer> c) {
    json arr = json::array();
    for (const auto& v : c) arr.push_back(int_json(v));
    return arr;
}

inline json to_json(const IntPolynomial& f) { return coeffs_json(f.coeffs()); }

inline json to_json(const SymbolicPoly& p) {
    if (p.is_zero()) return json::array({0});
    return coeffs_json(p.coeffs());
}

inline json to_json(const ExpansivityVerdict& v) {
    return {{"expansive", v.expansive},
            {"method", to_string(v.method)},
            {"witness", v.witness},
            {"conditions_checked", v.conditions_checked}};
}

inline json to_json(const RootCountReport& r) {
    return {{"inside", r.inside}, {"outside", r.outside}, {"on_circle_detected", r.on_circle_detected}};
}

inline json to_json(const GapBoundReport& r) {
    json fams = json::object();
    for (auto fam : kBoundFamilies) {
        const auto& b = r.of(fam);
        fams[to_string(fam)] = {{"real", rational_json(b.real)},
                                {"complex", b.complex ? rational_json(*b.complex) : json(nullptr)}};
    }
    return {{"n", r.n},
            {"bounds", fams},
            {"best_real", to_string(r.best_real)},
            {"best_complex", r.best_complex ? json(to_string(*r.best_complex)) : json(nullptr)},
            {"implied_gap_real", rational_json(r.implied_gap_real)},
            {"implied_gap_complex", r.implied_gap_complex ? rational_json(*r.implied_gap_complex) : json(nullptr)},
            {"combined", rational_json(r.combined)},
            {"implied_gap_combined", rational_json(r.implied_gap_combined)}};
}

inline json to_json(const NumericRoots& r) {
    json roots = json::array();
    for (const auto& z : r.roots) roots.push_back({{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}});
    return {{"roots", roots}, {"max_residual", r.max_residual}, {"min_abs", min_abs_root(r)}};
}

inline json to_json(const CensusResult& c) {
    json polys = json::array();
    for (const auto& f : c.polynomials) polys.push_back(to_json(f));
    return {{"total_checked", c.total_checked}, {"expansive", c.expansive}, {"polynomials", polys}};
}

inline json to_json(const TermCountReport& t) {
    return {{"n", t.n}, {"raw_terms", t.raw_terms}, {"collected_terms", t.collected_terms}};
}

inline json to_json(const GrowthProfile& p) {
    json trials = json::array();
    for (const auto& t : p.trials) {
        json mats = json::array();
        for (const auto& m : t.d_matrices)
            mats.push_back({{"k", m.k},
                            {"sign", std::string(1, sign_char(m.sign))},
                            {"max_bits", m.max_bits},
                            {"hadamard_bits", m.hadamard_bits}});
        trials.push_back({{"polynomial", to_json(t.poly)},
                          {"schur_bits", t.schur_bits},
                          {"d_matrices", mats},
                          {"schur_seconds", t.schur_seconds},
                          {"bareiss_seconds", t.bareiss_seconds}});
    }
    return {{"degree", p.spec.degree},
            {"coefficient_bits", p.spec.coefficient_bits},
            {"trials", trials},
            {"seed", p.spec.seed},
            {"median_schur_bits", p.median_schur_bits},
            {"median_bareiss_bits", p.median_bareiss_bits},
            {"median_schur_seconds", p.median_schur_seconds},
            {"median_bareiss_seconds", p.median_bareiss_seconds}};
}

}  // namespace expoly

#endif  // EXPOLY_JSON_IO_HPP
