// Command-line frontend for the dedekind library.
//
// Exit codes: 0 success, 1 usage error, 2 precondition violation,
// 3 internal invariant violation (a cross-check that must hold failed).

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedekind/cfrac.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/generator.hpp"
#include "dedekind/search.hpp"
#include "dedekind/structure.hpp"

namespace {

using dedekind::BigInt;
using dedekind::Rational;
using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt arg_bigint(const std::string& text, const char* what) {
    try {
        return dedekind::parse_bigint(text);
    } catch (const dedekind::precondition_error&) {
        throw usage_error(std::string(what) + ": expected an integer, got \"" +
                          text + "\"");
    }
}

Rational arg_rational(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const dedekind::precondition_error&) {
        throw usage_error(std::string(what) + ": expected k/q, got \"" + text +
                          "\"");
    }
}

// b3 / (r1^4 * n * q^5) to two decimals, rounded half up. Exact integer
// arithmetic; the result is the one explicitly-approximate output field.
std::string ratio_approx(const BigInt& b3, const BigInt& r1, const BigInt& n,
                         const BigInt& q) {
    const BigInt monomial = r1 * r1 * r1 * r1 * n * q * q * q * q * q;
    const BigInt scaled = (200 * b3 + monomial) / (2 * monomial);
    const BigInt whole = scaled / 100;
    const BigInt cents = scaled % 100;
    std::string frac = dedekind::to_string(cents);
    if (frac.size() < 2)
        frac.insert(0, 2 - frac.size(), '0');
    return dedekind::to_string(whole) + "." + frac;
}

struct Options {
    bool json_output = false;

    std::string a, b;                // sum / decompose / generate seeds
    std::string sum_method = "fast";
    std::string enum_method = "both";

    std::string r1_max = "0";
    bool verify = false;

    std::string k, q;                // enumerate / density target
    std::string b_max;
    unsigned threads = 0;

    std::string expansion;           // cfrac
    int max_order = 0;
    std::string filter;

    std::string seed_a, seed_b;      // density override
};

void emit(const json& record, bool json_output, const std::string& text) {
    if (json_output)
        std::cout << record.dump() << '\n';
    else
        std::cout << text << '\n';
    std::cout.flush();
}

int run_sum(const Options& opt) {
    const BigInt a = arg_bigint(opt.a, "a");
    const BigInt b = arg_bigint(opt.b, "b");
    const dedekind::Pair p(a, b);

    Rational value;
    if (opt.sum_method == "fast") {
        value = dedekind::sum_fast(p);
    } else if (opt.sum_method == "def") {
        value = dedekind::sum_definitional(p);
    } else if (opt.sum_method == "both") {
        value = dedekind::sum_fast(p);
        const Rational check = dedekind::sum_definitional(p);
        if (value != check)
            throw dedekind::invariant_error(
                "sum: methods disagree: fast = " + value.str() +
                ", def = " + check.str());
    } else {
        throw usage_error("sum: --method must be fast, def or both");
    }

    emit(json{{"a", opt.a}, {"b", opt.b}, {"method", opt.sum_method},
              {"sum", value.str()}},
         opt.json_output, value.str());
    return 0;
}

int run_decompose(const Options& opt) {
    const dedekind::Pair p(arg_bigint(opt.a, "a"), arg_bigint(opt.b, "b"));
    const dedekind::Decomposition d = dedekind::decompose(p);

    using dedekind::to_string;
    emit(json{{"a", to_string(p.a())}, {"b", to_string(p.b())},
              {"k", to_string(d.k)},   {"q", to_string(d.q)},
              {"t", to_string(d.t)},   {"s", to_string(d.s)},
              {"r", to_string(d.r)},   {"n", to_string(d.n)}},
         opt.json_output,
         "k=" + to_string(d.k) + " q=" + to_string(d.q) + " t=" + to_string(d.t) +
             " s=" + to_string(d.s) + " r=" + to_string(d.r) +
             " n=" + to_string(d.n));
    return 0;
}

int run_generate(const Options& opt) {
    const dedekind::Pair p(arg_bigint(opt.a, "a"), arg_bigint(opt.b, "b"));
    const BigInt r1_max = arg_bigint(opt.r1_max, "--r1-max");
    if (r1_max < 0)
        throw dedekind::precondition_error("generate: --r1-max must be >= 0");
    const dedekind::Decomposition d = dedekind::decompose(p);
    const Rational target(d.k, d.q);

    using dedekind::to_string;
    for (BigInt r1 = 0; r1 <= r1_max; ++r1) {
        const dedekind::GeneratedTerm g = dedekind::generate_term(d, r1);

        json record{{"r1", to_string(g.r1)}, {"r2", to_string(g.r2)},
                    {"t2", to_string(g.t2)}, {"a2", to_string(g.a2)},
                    {"b2", to_string(g.b2)}, {"a3", to_string(g.a3)},
                    {"b3", to_string(g.b3)}};
        std::string text = "r1=" + to_string(g.r1) + " t2=" + to_string(g.t2) +
                           " a3=" + to_string(g.a3) + " b3=" + to_string(g.b3);

        if (opt.verify) {
            const Rational recomputed = dedekind::sum_fast(g.a3, g.b3);
            if (recomputed != target)
                throw dedekind::invariant_error(
                    "generate: S(a3,b3) = " + recomputed.str() + " at r1 = " +
                    to_string(r1) + ", expected " + target.str());
            record["sum"] = recomputed.str();
            text += " sum=" + recomputed.str();
        }
        if (r1 >= 1) {
            const std::string ratio = ratio_approx(g.b3, r1, d.n, d.q);
            record["ratio_approx"] = ratio;
            text += " ratio_approx=" + ratio;
        }
        emit(record, opt.json_output, text);
    }

    if (r1_max >= 5) {
        // The difference certificate only needs a handful of points; cap the
        // window so huge --r1-max runs keep streaming in constant memory.
        const BigInt window = r1_max <= 10000 ? r1_max : BigInt(10000);
        const dedekind::QuarticCertificate cert =
            dedekind::quartic_structure_check(d, window);
        emit(json{{"degree", cert.degree},
                  {"leading_coefficient", to_string(cert.leading_coefficient)},
                  {"fourth_difference", to_string(cert.fourth_difference)}},
             opt.json_output,
             "quartic: degree=" + std::to_string(cert.degree) +
                 " leading_coefficient=" + to_string(cert.leading_coefficient) +
                 " fourth_difference=" + to_string(cert.fourth_difference));
    }
    return 0;
}

int run_enumerate(const Options& opt) {
    const BigInt k = arg_bigint(opt.k, "k");
    const BigInt q = arg_bigint(opt.q, "q");
    const BigInt b_max = arg_bigint(opt.b_max, "--b-max");
    const Rational target(k, q);

    std::vector<dedekind::ModulusHit> hits;
    if (opt.enum_method == "brute") {
        hits = dedekind::enumerate_bruteforce(target, b_max, opt.threads);
    } else if (opt.enum_method == "divisor") {
        hits = dedekind::enumerate_divisor(target, b_max, opt.threads);
    } else if (opt.enum_method == "both") {
        hits = dedekind::enumerate_bruteforce(target, b_max, opt.threads);
        const auto check = dedekind::enumerate_divisor(target, b_max, opt.threads);
        if (hits.size() != check.size() ||
            !std::equal(hits.begin(), hits.end(), check.begin()))
            throw dedekind::invariant_error(
                "enumerate: brute-force and divisor enumerations disagree "
                "(" + std::to_string(hits.size()) + " vs " +
                std::to_string(check.size()) + " hits)");
    } else {
        throw usage_error("enumerate: --method must be brute, divisor or both");
    }

    using dedekind::to_string;
    for (const dedekind::ModulusHit& h : hits)
        emit(json{{"a", to_string(h.a)}, {"b", to_string(h.b)},
                  {"sum", h.value.str()}},
             opt.json_output,
             to_string(h.a) + " " + to_string(h.b) + " " + h.value.str());
    return 0;
}

int run_cfrac(const Options& opt) {
    dedekind::PeriodicCF cf;
    try {
        cf = dedekind::parse_periodic_cf(opt.expansion);
    } catch (const dedekind::precondition_error& e) {
        throw usage_error(std::string("cfrac: ") + e.what());
    }
    if (opt.max_order < 0)
        throw usage_error("cfrac: --max-order must be >= 0");

    std::vector<dedekind::Convergent> convs =
        dedekind::convergents(cf, opt.max_order);
    if (!opt.filter.empty())
        convs = dedekind::filter_by_value(convs,
                                          arg_rational(opt.filter, "--filter"));

    using dedekind::to_string;
    for (const dedekind::Convergent& c : convs)
        emit(json{{"order", c.order}, {"num", to_string(c.num)},
                  {"den", to_string(c.den)}},
             opt.json_output,
             std::to_string(c.order) + " " + to_string(c.num) + "/" +
                 to_string(c.den));
    return 0;
}

int run_density(const Options& opt) {
    const Rational target(arg_bigint(opt.k, "k"), arg_bigint(opt.q, "q"));
    const BigInt b_max = arg_bigint(opt.b_max, "--b-max");
    const BigInt r1_max = arg_bigint(opt.r1_max, "--r1-max");

    const auto hits = dedekind::enumerate_divisor(target, b_max, opt.threads);

    dedekind::Pair seed = [&]() {
        if (!opt.seed_a.empty())
            return dedekind::Pair(arg_bigint(opt.seed_a, "--seed a"),
                                  arg_bigint(opt.seed_b, "--seed b"));
        if (hits.empty())
            throw dedekind::precondition_error(
                "density: no modulus <= b-max to use as seed; pass --seed");
        return dedekind::Pair(hits.front().a, hits.front().b);
    }();

    const auto terms =
        dedekind::generate_sequence(dedekind::decompose(seed), r1_max);
    std::cout << dedekind::density_report(hits, terms);
    std::cout.flush();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normalized Dedekind sums: evaluation, seed "
                 "decomposition, value-preserving sequences, moduli search, "
                 "continued fraction filtering"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json_output,
                 "One JSON object per output line; big integers as strings");
    app.add_option("--threads", opt.threads,
                   "Worker threads for enumeration (0 = hardware)");

    auto* sum = app.add_subcommand("sum", "Compute S(a,b) exactly");
    sum->add_option("a", opt.a)->required();
    sum->add_option("b", opt.b)->required();
    sum->add_option("--method", opt.sum_method, "fast | def | both");

    auto* dec = app.add_subcommand("decompose",
                                   "Extract (k,q,t,s,r,n) from a seed pair");
    dec->add_option("a", opt.a)->required();
    dec->add_option("b", opt.b)->required();

    auto* gen = app.add_subcommand(
        "generate", "Emit the value-preserving sequence (a3,b3) for r1=0..N");
    gen->add_option("a", opt.a)->required();
    gen->add_option("b", opt.b)->required();
    gen->add_option("--r1-max", opt.r1_max)->required();
    gen->add_flag("--verify", opt.verify, "Recompute S(a3,b3) for every row");

    auto* enu = app.add_subcommand(
        "enumerate", "All moduli b <= b-max with S(a,b) = k/q");
    enu->add_option("k", opt.k)->required();
    enu->add_option("q", opt.q)->required();
    enu->add_option("--b-max", opt.b_max)->required();
    enu->add_option("--method", opt.enum_method, "brute | divisor | both");

    auto* cfr = app.add_subcommand(
        "cfrac", "Convergents of a periodic continued fraction \"head;period\"");
    cfr->add_option("expansion", opt.expansion)->required();
    cfr->add_option("--max-order", opt.max_order)->required();
    cfr->add_option("--filter", opt.filter, "Keep convergents with S = k/q");

    auto* den = app.add_subcommand(
        "density", "Per-decade counts: all moduli vs the generated sequence");
    den->add_option("k", opt.k)->required();
    den->add_option("q", opt.q)->required();
    den->add_option("--b-max", opt.b_max)->required();
    den->add_option("--r1-max", opt.r1_max)->default_val("3");
    den->add_option("--seed-a", opt.seed_a);
    den->add_option("--seed-b", opt.seed_b);

    try {
        app.parse(argc, argv);
        if (sum->parsed())
            return run_sum(opt);
        if (dec->parsed())
            return run_decompose(opt);
        if (gen->parsed())
            return run_generate(opt);
        if (enu->parsed())
            return run_enumerate(opt);
        if (cfr->parsed())
            return run_cfrac(opt);
        if (den->parsed())
            return run_density(opt);
        return 1; // unreachable with require_subcommand(1)
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const dedekind::invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const dedekind::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
