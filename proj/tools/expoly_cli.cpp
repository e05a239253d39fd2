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

// expoly: command-line front end.
//
//   expoly check  <poly> [--strategy full|reduced] [--engine dcond|schur-cohn] [--oracle]
//   expoly gap    <poly> [--certify] [--tol r] [--oracle]
//   expoly dpoly  <poly> [--k k --sign +|-] [--pair-product] [--resultant]
//   expoly roots  <poly>
//   expoly search --degree n --a0 c [--height-cap h] [--threads t]
//   expoly bench  --degree n --bits b --trials t --seed s
//   expoly terms  <n>
//
// Polynomials are comma- or space-separated integers, ascending (a_0 first)
// unless --order desc is given. Exit status: 0 success, 1 input error,
// 2 internal or oracle failure.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expoly/expoly.hpp"
#include "expoly/json_io.hpp"

namespace {

using namespace expoly;

enum class Format { json, table, csv };

struct CliConfig {
    std::string polynomial;
    CoefficientOrder order = CoefficientOrder::ascending;
    Format format = Format::json;
    std::string tolerance = "1/1000";
    Strategy strategy = Strategy::full;
    std::string engine = "dcond";
    bool certify = false;
    bool oracle = false;
    std::uint64_t seed = 1;
    std::string out;

    // dpoly
    std::optional<int> k;
    std::string sign = "-";
    bool pair_product = false;
    bool resultant = false;

    // search
    int degree = 2;
    long a0 = 2;
    std::optional<long> height_cap;
    unsigned threads = 1;
    std::uint64_t box_cap = 20'000'000;

    // bench
    unsigned bits = 32;
    int trials = 5;

    // terms
    int terms_n = 1;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

json envelope(const char* command) { return {{"schema", std::string("expoly.") + command}, {"version", kJsonSchemaVersion}}; }

IntPolynomial input_polynomial(const CliConfig& c) { return parse_polynomial(c.polynomial, c.order); }

void print_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

int cmd_check(const CliConfig& c) {
    const IntPolynomial f = input_polynomial(c);
    const ExpansivityVerdict v = c.engine == "schur-cohn" ? check_schur_cohn(f) : check_d_conditions(f, c.strategy);
    const RootCountReport rc = count_roots_inside_unit(f);
    std::optional<NumericVerdict> numeric;
    if (c.oracle) numeric = numeric_expansive(f, 1e-9);

    Output out(c.out);
    auto& os = out.stream();
    if (c.format == Format::json) {
        json j = envelope("check");
        j["polynomial"] = to_json(f);
        j["verdict"] = to_json(v);
        j["root_count"] = to_json(rc);
        if (numeric) j["numeric"] = to_string(*numeric);
        print_json(os, j);
    } else {
        os << "polynomial            " << f.to_string() << '\n'
           << "expansive             " << (v.expansive ? "true" : "false") << '\n'
           << "method                " << to_string(v.method) << '\n'
           << "witness               " << v.witness << '\n'
           << "conditions checked    " << v.conditions_checked << '\n'
           << "roots inside/outside  " << rc.inside << '/' << rc.outside
           << (rc.on_circle_detected ? " (unresolved: |a_m| = |a_0| in chain)" : "") << '\n';
        if (numeric) os << "numeric oracle        " << to_string(*numeric) << '\n';
    }
    return 0;
}

int cmd_gap(const CliConfig& c) {
    const IntPolynomial f = input_polynomial(c);
    if (auto v = check_d_conditions(f); !v.expansive) {
        std::cerr << "error: polynomial is not expansive (" << v.witness << ")\n";
        return 1;
    }
    const GapBoundReport r = best_bound_report(f);
    std::optional<Rational> s_low, tol;
    if (c.certify) {
        tol = parse_rational(c.tolerance);
        s_low = certified_gap(f, *tol);
    }
    std::optional<double> numeric;
    if (c.oracle) numeric = numeric_gap(f);

    Output out(c.out);
    auto& os = out.stream();
    if (c.format == Format::json) {
        json j = envelope("gap");
        j["polynomial"] = to_json(f);
        j["report"] = to_json(r);
        if (s_low) {
            j["certified"] = {{"s_low", rational_json(*s_low)},
                              {"tol", rational_json(*tol)},
                              {"gap_low", rational_json(*s_low - 1)},
                              {"gap_low_approx", to_double(*s_low - 1)}};
        }
        if (numeric) j["numeric_gap"] = *numeric;
        print_json(os, j);
    } else {
        os << "bounds on 1/(|alpha|-1), n = " << r.n << "\n";
        os << std::left << std::setw(8) << "family" << std::setw(28) << "real" << "complex\n";
        for (auto fam : kBoundFamilies) {
            const auto& b = r.of(fam);
            os << std::setw(8) << to_string(fam) << std::setw(28) << to_string(b.real)
               << (b.complex ? to_string(*b.complex) : "-") << '\n';
        }
        os << "best real     " << to_string(r.best_real) << "  gap >= " << to_string(r.implied_gap_real) << '\n';
        if (r.best_complex)
            os << "best complex  " << to_string(*r.best_complex) << "  gap >= " << to_string(*r.implied_gap_complex)
               << '\n';
        if (s_low)
            os << "certified     s_low = " << to_string(*s_low) << "  gap in [" << to_double(*s_low - 1) << ", "
               << to_double(*s_low - 1 + *tol) << ")\n";
        if (numeric) os << "numeric gap   " << std::setprecision(12) << *numeric << '\n';
    }
    return 0;
}

int cmd_dpoly(const CliConfig& c) {
    const IntPolynomial f = input_polynomial(c).canonical();
    const int n = f.degree();
    if (n < 1) throw InputError("dpoly: degree must be at least 1");
    if (c.sign != "+" && c.sign != "-") throw InputError("--sign must be + or -");

    json list = json::array();
    auto add = [&](int k, DSign s) {
        list.push_back({{"k", k}, {"sign", std::string(1, sign_char(s))},
                        {"coeffs", to_json(d_polynomial(f, {k, s, n}))}});
    };
    const bool all = !c.k && !c.pair_product && !c.resultant;
    if (c.k) add(*c.k, c.sign == "+" ? DSign::plus : DSign::minus);
    if (all)
        for (int k = 1; k <= n; ++k)
            for (DSign s : {DSign::plus, DSign::minus}) add(k, s);

    json j = envelope("dpoly");
    j["polynomial"] = to_json(f);
    j["d_polynomials"] = list;
    if (c.pair_product) j["pair_product"] = to_json(pair_product_polynomial(f));
    if (c.resultant) j["resultant"] = to_json(resultant_pair_product(f));

    Output out(c.out);
    print_json(out.stream(), j);
    return 0;
}

int cmd_roots(const CliConfig& c) {
    const IntPolynomial f = input_polynomial(c);
    const NumericRoots r = find_roots_numeric(f);
    Output out(c.out);
    auto& os = out.stream();
    if (c.format == Format::json) {
        json j = envelope("roots");
        j["polynomial"] = to_json(f);
        j.update(to_json(r));
        print_json(os, j);
    } else {
        os << std::setprecision(15);
        for (const auto& z : r.roots) os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i\n";
        os << "max residual " << r.max_residual << '\n';
    }
    return 0;
}

int cmd_search(const CliConfig& c) {
    EnumerationSpec spec{c.degree, c.a0, c.height_cap};
    const CensusResult r = enumerate_expansive(spec, {c.box_cap, c.threads});
    Output out(c.out);
    auto& os = out.stream();
    if (c.format == Format::csv) {
        os << "# expoly-search-csv v1 degree=" << c.degree << " a0=" << c.a0 << '\n';
        for (int i = 0; i <= c.degree; ++i) os << (i ? "," : "") << 'a' << i;
        os << '\n';
        for (const auto& f : r.polynomials) os << f.to_string() << '\n';
    } else if (c.format == Format::table) {
        os << "checked " << r.total_checked << ", expansive " << r.expansive << '\n';
        for (const auto& f : r.polynomials) os << "  " << f.to_string() << '\n';
    } else {
        json j = envelope("search");
        j["degree"] = c.degree;
        j["a0"] = c.a0;
        j.update(to_json(r));
        print_json(os, j);
    }
    return 0;
}

int cmd_bench(const CliConfig& c) {
    const GrowthProfile p = bench_growth({c.degree, c.bits, c.trials, c.seed});
    Output out(c.out);
    auto& os = out.stream();
    if (c.format == Format::csv) {
        write_growth_csv(os, p);
    } else if (c.format == Format::table) {
        os << "step  median Schur-Cohn bits\n";
        for (std::size_t s = 0; s < p.median_schur_bits.size(); ++s)
            os << std::setw(4) << s << "  " << p.median_schur_bits[s] << '\n';
        std::size_t worst = 0;
        for (double b : p.median_bareiss_bits) worst = std::max(worst, static_cast<std::size_t>(b));
        os << "max median Bareiss entry bits " << worst << '\n'
           << "median seconds: schur " << p.median_schur_seconds << ", bareiss " << p.median_bareiss_seconds << '\n';
    } else {
        json j = envelope("bench");
        j.update(to_json(p));
        print_json(os, j);
    }
    return 0;
}

int cmd_terms(const CliConfig& c) {
    const TermCountReport t = term_count(c.terms_n);
    json j = envelope("terms");
    j.update(to_json(t));
    j["matching_convention"] = to_string(matching_term_convention());
    Output out(c.out);
    print_json(out.stream(), j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"expoly: exact expansivity tests for integer polynomials"};
    app.require_subcommand(1);
    app.allow_extras(false);

    const std::map<std::string, CoefficientOrder> orders{{"asc", CoefficientOrder::ascending},
                                                         {"desc", CoefficientOrder::descending}};
    const std::map<std::string, Format> formats{{"json", Format::json}, {"table", Format::table}, {"csv", Format::csv}};
    const std::map<std::string, Strategy> strategies{{"full", Strategy::full}, {"reduced", Strategy::reduced}};

    auto common = [&](CLI::App* sub, bool takes_poly) {
        if (takes_poly) sub->add_option("polynomial", cfg.polynomial, "coefficients, e.g. 3,0,-1")->required();
        sub->add_option("--order", cfg.order, "coefficient order of the input")
            ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
        sub->add_option("--format", cfg.format, "output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", cfg.out, "write output to this file");
    };

    auto* check = app.add_subcommand("check", "decide expansivity");
    common(check, true);
    check->add_option("--strategy", cfg.strategy, "D-condition set")
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
    check->add_option("--engine", cfg.engine, "decision engine")->check(CLI::IsMember({"dcond", "schur-cohn"}));
    check->add_flag("--oracle", cfg.oracle, "also report the floating-point verdict");

    auto* gap = app.add_subcommand("gap", "bounds on the expansivity gap");
    common(gap, true);
    gap->add_flag("--certify", cfg.certify, "certify the gap by exact bisection");
    gap->add_option("--tol", cfg.tolerance, "bisection tolerance (p/q or decimal)");
    gap->add_flag("--oracle", cfg.oracle, "also report the numeric gap");

    auto* dpoly = app.add_subcommand("dpoly", "D-polynomials and the pair-product polynomials");
    common(dpoly, true);
    dpoly->add_option("--k", cfg.k, "determinant size");
    dpoly->add_option("--sign", cfg.sign, "+ or -");
    dpoly->add_flag("--pair-product", cfg.pair_product, "D_(n-1)^-(x^(1/2))");
    dpoly->add_flag("--resultant", cfg.resultant, "F(x) with all products alpha_i alpha_j as roots");

    auto* roots = app.add_subcommand("roots", "numeric roots (test oracle)");
    common(roots, true);

    auto* search = app.add_subcommand("search", "enumerate expansive polynomials");
    common(search, false);
    search->add_option("--degree", cfg.degree, "degree n")->required();
    search->add_option("--a0", cfg.a0, "constant term a_0 > 0")->required();
    search->add_option("--height-cap", cfg.height_cap, "extra cap on |a_k|");
    search->add_option("--threads", cfg.threads, "worker threads");
    search->add_option("--box-cap", cfg.box_cap, "refuse searches with more candidates than this");

    auto* bench = app.add_subcommand("bench", "coefficient growth: Schur-Cohn vs Bareiss");
    common(bench, false);
    bench->add_option("--degree", cfg.degree, "degree n");
    bench->add_option("--bits", cfg.bits, "coefficients uniform in [-2^bits, 2^bits]");
    bench->add_option("--trials", cfg.trials, "number of random polynomials");
    bench->add_option("--seed", cfg.seed, "RNG seed");

    auto* terms = app.add_subcommand("terms", "term count of the expanded D_(n-1)^-");
    common(terms, false);
    terms->add_option("n", cfg.terms_n, "degree n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*check) return cmd_check(cfg);
        if (*gap) return cmd_gap(cfg);
        if (*dpoly) return cmd_dpoly(cfg);
        if (*roots) return cmd_roots(cfg);
        if (*search) return cmd_search(cfg);
        if (*bench) return cmd_bench(cfg);
        if (*terms) return cmd_terms(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const OracleFailure& e) {
        std::cerr << "oracle failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
