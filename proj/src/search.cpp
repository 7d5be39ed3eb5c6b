#include "dedekind/search.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

namespace {

void validate_search_args(const Rational& target, const BigInt& b_max) {
    if (target.den() < 2)
        throw precondition_error("enumerate: integer targets (q = 1) are the "
                                 "trivial case; need denominator >= 2");
    if (b_max < 1)
        throw precondition_error("enumerate: b_max must be >= 1");
}

unsigned worker_count(unsigned threads) {
    if (threads == 0)
        threads = std::thread::hardware_concurrency();
    return threads == 0 ? 1 : threads;
}

void sort_canonical(std::vector<ModulusHit>& hits) {
    std::sort(hits.begin(), hits.end(), [](const ModulusHit& x, const ModulusHit& y) {
        return x.b != y.b ? x.b < y.b : x.a < y.a;
    });
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
}

// Run fn(worker_index) on `threads` workers, collecting per-worker hit
// vectors; the final sort makes the result independent of scheduling.
std::vector<ModulusHit> run_workers(unsigned threads,
                                    const std::function<void(unsigned, std::vector<ModulusHit>&)>& fn) {
    std::vector<std::vector<ModulusHit>> buckets(threads);
    if (threads == 1) {
        fn(0, buckets[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] { fn(w, buckets[w]); });
        for (std::thread& th : pool)
            th.join();
    }
    std::vector<ModulusHit> hits;
    for (std::vector<ModulusHit>& bucket : buckets)
        hits.insert(hits.end(), std::make_move_iterator(bucket.begin()),
                    std::make_move_iterator(bucket.end()));
    sort_canonical(hits);
    return hits;
}

// Divisors of m coprime to q, by trial division. int64 path for desk-scale
// m, BigInt fallback above that.
std::vector<BigInt> coprime_divisors(const BigInt& m, const BigInt& q) {
    std::vector<BigInt> out;
    if (m <= std::numeric_limits<std::int64_t>::max() &&
        q <= std::numeric_limits<std::int64_t>::max()) {
        const auto mv = static_cast<std::int64_t>(m);
        const auto qv = static_cast<std::int64_t>(q);
        for (std::int64_t d = 1; d * d <= mv; ++d) {
            if (mv % d != 0)
                continue;
            const std::int64_t e = mv / d;
            if (std::gcd(d, qv) == 1)
                out.push_back(BigInt(d));
            if (e != d && std::gcd(e, qv) == 1)
                out.push_back(BigInt(e));
        }
    } else {
        const BigInt root = boost::multiprecision::sqrt(m);
        for (BigInt d = 1; d <= root; ++d) {
            if (m % d != 0)
                continue;
            const BigInt e = m / d;
            if (gcd(d, q) == 1)
                out.push_back(d);
            if (e != d && gcd(e, q) == 1)
                out.push_back(e);
        }
    }
    return out;
}

} // namespace

std::vector<ModulusHit> enumerate_bruteforce(const Rational& target,
                                             const BigInt& b_max,
                                             unsigned threads) {
    validate_search_args(target, b_max);
    const unsigned workers = worker_count(threads);
    return run_workers(workers, [&](unsigned w, std::vector<ModulusHit>& sink) {
        for (BigInt b = 1 + w; b <= b_max; b += workers) {
            for (BigInt a = 0; a < b; ++a) {
                if (gcd(a, b) != 1)
                    continue;
                if (sum_fast(a, b) == target)
                    sink.push_back(ModulusHit{a, b, target});
            }
        }
    });
}

std::vector<ModulusHit> enumerate_divisor(const Rational& target,
                                          const BigInt& b_max,
                                          unsigned threads) {
    validate_search_args(target, b_max);
    const BigInt& q = target.den();
    const unsigned workers = worker_count(threads);
    return run_workers(workers, [&](unsigned w, std::vector<ModulusHit>& sink) {
        // Every hit has a < b <= b_max, so a ranges over [0, b_max).
        for (BigInt a = w; a < b_max; a += workers) {
            const BigInt m = a * a + 1;
            for (const BigInt& t : coprime_divisors(m, q)) {
                const BigInt b = q * (m / t);
                if (b > b_max || b <= a || gcd(a, b) != 1)
                    continue;
                if (sum_fast(a, b) == target)
                    sink.push_back(ModulusHit{a, b, target});
            }
        }
    });
}

std::string density_report(const std::vector<ModulusHit>& hits,
                           const std::vector<GeneratedTerm>& generated) {
    if (hits.empty() && generated.empty())
        return "";

    int max_decade = 0;
    const auto decade_of = [](const BigInt& b) {
        return static_cast<int>(to_string(b).size()) - 1; // b >= 1 always
    };
    for (const ModulusHit& h : hits)
        max_decade = std::max(max_decade, decade_of(h.b));
    for (const GeneratedTerm& g : generated)
        max_decade = std::max(max_decade, decade_of(g.b3));

    std::vector<std::size_t> hit_counts(static_cast<std::size_t>(max_decade) + 1, 0);
    std::vector<std::size_t> seq_counts(hit_counts.size(), 0);
    for (const ModulusHit& h : hits)
        ++hit_counts[static_cast<std::size_t>(decade_of(h.b))];
    for (const GeneratedTerm& g : generated)
        ++seq_counts[static_cast<std::size_t>(decade_of(g.b3))];

    std::ostringstream os;
    os << std::left << std::setw(24) << "b range" << std::right << std::setw(10)
       << "moduli" << std::setw(10) << "sequence" << '\n';
    for (std::size_t d = 0; d < hit_counts.size(); ++d) {
        const std::string range =
            "[10^" + std::to_string(d) + ",10^" + std::to_string(d + 1) + ")";
        os << std::left << std::setw(24) << range << std::right << std::setw(10)
           << hit_counts[d] << std::setw(10) << seq_counts[d] << '\n';
    }
    os << std::left << std::setw(24) << "total" << std::right << std::setw(10)
       << hits.size() << std::setw(10) << generated.size() << '\n';
    return os.str();
}

} // namespace dedekind
