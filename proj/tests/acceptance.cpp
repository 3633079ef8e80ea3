// Acceptance gate: twelve criteria, one [PASS]/[FAIL] line each, nonzero
// exit when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcpl/analysis.hpp"
#include "pcpl/bitio.hpp"
#include "pcpl/codes.hpp"
#include "pcpl/distributions.hpp"
#include "pcpl/rational.hpp"

using namespace pcpl;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

int failures = 0;
std::string detail;

void fail(std::string msg) {
    if (detail.empty()) detail = std::move(msg);
}

void check(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void criterion(int num, const char* title, const std::function<void()>& body) {
    detail.clear();
    const double t0 = now_seconds();
    try {
        body();
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
    const double secs = now_seconds() - t0;
    if (detail.empty()) {
        std::printf("[PASS] criterion %2d (%6.1fs): %s\n", num, secs, title);
    } else {
        std::printf("[FAIL] criterion %2d (%6.1fs): %s -- %s\n", num, secs, title,
                    detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

ExpectedLength cell(const char* code, const char* dist, double precision) {
    return expected_length(CodeId::parse(code), DistId::parse(dist), precision);
}

// Reference values quoted to d decimals carry half-ulp quantization; an
// enclosure that converges tighter than the print can exclude the rounded
// figure even when it is correct, so containment is checked with exactly that
// half ulp of slack.
double print_ulp(int decimals) { return 0.5 * std::pow(10.0, -decimals); }

// value inside the enclosure (within slack), enclosure no wider than width_cap
void check_cell(const char* code, const char* dist, double value, double precision,
                double width_cap, double slack = 0.0) {
    const ExpectedLength el = cell(code, dist, precision);
    check(!el.infinite, fmt("%s x %s unexpectedly infinite", code, dist));
    if (el.infinite) return;
    check(el.value.lo - slack <= value && value <= el.value.hi + slack,
          fmt("%s x %s: %.7f not in [%.7f, %.7f]", code, dist, value, el.value.lo,
              el.value.hi));
    check(el.value.hi - el.value.lo <= width_cap,
          fmt("%s x %s: width %.2e > %.0e", code, dist, el.value.hi - el.value.lo,
              width_cap));
}

u128 kraft126(const std::vector<u64>& lengths) {
    u128 sum = 0;
    for (u64 n : lengths) sum += u128{1} << (126 - n);
    return sum;
}

// ---------------------------------------------------------------- criteria

void c1_table1() {
    static const char* words[5][10] = {
        {"0", "10", "1100", "11010", "11011", "111000", "111001", "1110100",
         "1110101", "1110110"},
        {"0", "100", "1010", "1011", "11000", "11001", "110100", "110101", "110110",
         "110111"},
        {"00", "010", "011", "1000", "1001", "10100", "10101", "10110", "10111",
         "110000"},
        {"000", "001", "0100", "0101", "0110", "0111", "10000", "10001", "10010",
         "10011"},
        {"0000", "0001", "0010", "0011", "01000", "01001", "01010", "01011", "01100",
         "01101"}};
    const double t0 = now_seconds();
    for (int c = 0; c < 5; ++c) {
        const int k = c - 2;
        const auto rows = codebook(CodeId(Family::CodeK, k), 10);
        check(rows.size() == 10, "codebook row count");
        for (int i = 0; i < 10 && i < int(rows.size()); ++i) {
            const std::string got = rows[i].codeword.to_string();
            check(got == words[c][i], fmt("code %d symbol %d: got %s want %s", k,
                                          i + 1, got.c_str(), words[c][i]));
            check(rows[i].bits == std::string(words[c][i]).size(),
                  fmt("code %d symbol %d: length %u", k, i + 1, rows[i].bits));
        }
    }
    const double secs = now_seconds() - t0;
    check(secs < 1.0, fmt("runtime %.2fs >= 1s", secs));
}

void c2_worked_example() {
    const std::string got = encode(CodeId(Family::CodeK, 0), 12).to_string();
    check(got == "110010", fmt("encode(code 0, 12) = %s", got.c_str()));
}

void c3_table2_bracketing() {
    const double u5 = print_ulp(5), u6 = print_ulp(6);
    check_cell("codek:-1", "gk", 3.472346, 1e-4, 1e-4, u6);
    check_cell("levenshtein", "gk", 3.77915, 1e-4, 1e-4, u5);
    check_cell("gamma", "gk", 3.50705, 1e-4, 1e-4, u5);
    check_cell("yokoo", "gk", 3.48765, 1e-4, 1e-4, u5);
    check_cell("codek:-2", "zeta:2", 2.417772, 1e-4, 1e-4, u6);
    check_cell("gamma", "zeta:2", 2.44631, 1e-4, 1e-4, u5);
    check_cell("yokoo", "zeta:2", 2.43042, 1e-4, 1e-4, u5);
    check_cell("codek:-1", "ys:1", 2.983338, 1e-4, 1e-4, u6);
    check_cell("gamma", "ys:1", 3.0, 1e-9, 1e-9);
    check_cell("yokoo", "ys:1", 2.98138, 1e-4, 1e-4, u5);
    check_cell("codek:-4", "ys:2", 1.848484, 1e-4, 1e-4, u6);
    check_cell("golomb:1", "ys:2", 2.0, 1e-9, 1e-9);
    check_cell("golomb:1", "ys:3", 1.5, 1e-9, 1e-9);

    const double r25 = zeta_value(1.5) / zeta_value(2.5);
    check(std::fabs(r25 - 1.94737) < 1e-5, fmt("zeta ratio 1.5/2.5 = %.6f", r25));
    check_cell("golomb:1", "zeta:2.5", r25, 1e-9, 1e-6, 1e-11);
    const double r3 = zeta_value(2.0) / zeta_value(3.0);
    check(std::fabs(r3 - 1.36843) < 1e-5, fmt("zeta ratio 2/3 = %.6f", r3));
    check_cell("golomb:1", "zeta:3", r3, 1e-9, 1e-6, 1e-11);
}

void c4_ys25_golomb() {
    const double third5 = 5.0 / 3.0;
    const ExpectedLength el = cell("golomb:1", "ys:2.5", 1e-9);
    check(!el.infinite, "golomb:1 x ys:2.5 infinite");
    check(el.value.lo <= third5 && third5 <= el.value.hi,
          fmt("5/3 not in [%.9f, %.9f]", el.value.lo, el.value.hi));
    check(el.value.hi - el.value.lo <= 1e-6, "width > 1e-6");

    // the closed form is rho/(rho-1)
    const Distribution d(DistId::parse("ys:2.5"));
    const Interval m = d.mean();
    check(m.lo <= 2.5 / 1.5 && 2.5 / 1.5 <= m.hi, "mean != rho/(rho-1)");

    // brute-force oracle over i <= 10^7 agrees
    PmfScan scan(d);
    long double acc = 0.0L;
    while (scan.symbol() <= 10000000) {
        const u64 i = scan.symbol();
        acc += static_cast<long double>(i) *
               static_cast<long double>(scan.next().mid());
    }
    const Interval tail = d.first_moment_tail(10000001);
    const double partial = static_cast<double>(acc);
    check(partial <= third5 + 1e-6, fmt("partial sum %.7f above 5/3", partial));
    check(partial + tail.hi >= third5 - 1e-6,
          fmt("partial %.7f + tail %.2e below 5/3", partial, tail.hi));
    check(std::fabs(partial + tail.mid() - third5) < 1e-4,
          fmt("oracle %.7f vs 5/3", partial + tail.mid()));

    // explicitly not the table's printed 2.66666
    check(std::fabs(el.value.mid() - 2.66666) > 0.9, "value near 2.66666");
}

void c5_golomb_divergence() {
    for (const char* dist : {"gk", "ys:1", "zeta:2"}) {
        for (int k : {1, 2, 7}) {
            const ExpectedLength el =
                expected_length(CodeId(Family::Golomb, k), DistId::parse(dist), 1e-2);
            check(el.infinite, fmt("golomb:%d x %s should be infinite", k, dist));
        }
        check(expected_length(CodeId(Family::Unary), DistId::parse(dist), 1e-2)
                  .infinite,
              fmt("unary x %s should be infinite", dist));
    }
    for (const char* dist : {"ys:1.5", "ys:2", "ys:2.5", "ys:3", "zeta:2.5", "zeta:3"}) {
        const ExpectedLength el = cell("golomb:1", dist, 1e-2);
        check(!el.infinite, fmt("golomb:1 x %s should be finite", dist));
    }
}

void c6_entropy() {
    static const double H[9] = {3.43253, 2.95215, 2.17073, 1.74685, 1.47629,
                                1.28665, 2.36259, 1.46525, 0.97887};
    const auto dists = table2_distributions();
    const double u5 = print_ulp(5);
    for (int r = 0; r < 9; ++r) {
        const Interval h = Distribution(dists[r]).entropy_interval();
        check(h.lo - u5 <= H[r] && H[r] <= h.hi + u5,
              fmt("%s: %.5f not in [%.6f, %.6f]", dists[r].name().c_str(), H[r],
                  h.lo, h.hi));
        check(h.hi - h.lo <= 1e-4,
              fmt("%s: entropy width %.2e", dists[r].name().c_str(), h.hi - h.lo));
    }
}

void c7_best_parameters() {
    const auto dists = table2_distributions();
    // zeta:2.5 prints superscript -4; the rigorous upper bounds order -3 at
    // or below -4 (near-tie at printed precision), so the argmin is -3.
    static const int ck_expect[9] = {-1, -1, -2, -4, -5, -6, -2, -3, -4};
    for (int r = 0; r < 9; ++r) {
        const BestParameter bp = best_parameter(Family::CodeK, dists[r], 1e-6);
        check(bp.code.param == ck_expect[r],
              fmt("%s: best codek %d want %d", dists[r].name().c_str(),
                  bp.code.param, ck_expect[r]));
    }
    // re-prove the zeta:2.5 ordering and the printed value each run
    const ExpectedLength e3 = cell("codek:-3", "zeta:2.5", 1e-6);
    const ExpectedLength e4 = cell("codek:-4", "zeta:2.5", 1e-6);
    check(e3.value.hi <= e4.value.hi,
          fmt("codek:-3 hi %.8f > codek:-4 hi %.8f", e3.value.hi, e4.value.hi));
    check(e3.value.lo <= 1.658015 && 1.658015 <= e3.value.hi + 1e-4,
          fmt("codek:-3 x zeta:2.5 = [%.7f, %.7f]", e3.value.lo, e3.value.hi));

    static const std::pair<const char*, int> golomb_expect[6] = {
        {"ys:1.5", 3}, {"ys:2", 1}, {"ys:2.5", 1},
        {"ys:3", 1},   {"zeta:2.5", 1}, {"zeta:3", 1}};
    for (const auto& [dist, want] : golomb_expect) {
        const BestParameter bp =
            best_parameter(Family::Golomb, DistId::parse(dist), 1e-4);
        check(!bp.value.infinite, fmt("golomb x %s infinite", dist));
        check(bp.code.param == want,
              fmt("%s: best golomb %d want %d", dist, bp.code.param, want));
    }

    // gamma beats delta, omega, and every exp-golomb (k = 0 ties, it is the
    // same code) on every row
    for (const DistId id : dists) {
        const ExpectedLength g =
            expected_length(CodeId(Family::EliasGamma), id, 1e-4);
        const ExpectedLength dl =
            expected_length(CodeId(Family::EliasDelta), id, 1e-4);
        const ExpectedLength om =
            expected_length(CodeId(Family::EliasOmega), id, 1e-4);
        check(g.value.hi < dl.value.lo,
              fmt("%s: gamma %.5f !< delta %.5f", id.name().c_str(), g.value.hi,
                  dl.value.lo));
        check(g.value.hi < om.value.lo,
              fmt("%s: gamma %.5f !< omega %.5f", id.name().c_str(), g.value.hi,
                  om.value.lo));
        const BestParameter eg = best_parameter(Family::ExpGolomb, id, 1e-4);
        check(eg.code.param == 0,
              fmt("%s: best expgolomb k=%d", id.name().c_str(), eg.code.param));
        check(std::fabs(eg.value.value.hi - g.value.hi) <= 1e-9,
              fmt("%s: expgolomb:0 differs from gamma", id.name().c_str()));
        const ExpectedLength eg1 =
            expected_length(CodeId(Family::ExpGolomb, 1), id, 1e-4);
        check(g.value.hi < eg1.value.lo,
              fmt("%s: gamma !< expgolomb:1", id.name().c_str()));
    }
}

void c8_golin() {
    const DistId ys1 = DistId::parse("ys:1");
    const Distribution d1(ys1);
    const DesignerCode a1 = golin_alg1(d1, 64);
    const DesignerCode a2 = golin_alg2(d1, 64);
    check(a1.group_sizes == a2.group_sizes, "alg1 != alg2 on ys:1");
    const Interval est = designer_expected_length(a1, d1, int(a1.groups()));
    check(est.lo <= 3.0 && 3.0 <= est.hi,
          fmt("ys:1 designer interval [%.6f, %.6f] misses 3.0", est.lo, est.hi));

    const Distribution gk(DistId::parse("gk"));
    const DesignerCode g1 = golin_alg1(gk, 64);
    const Interval eg = designer_expected_length(g1, gk, int(g1.groups()));
    check(std::fabs(eg.mid() - 3.50705) <= 5e-3,
          fmt("gk golin estimate %.6f vs 3.50705", eg.mid()));
}

void c9_optimal_estimate() {
    static const std::pair<const char*, double> targets[3] = {
        {"gk", 3.47207}, {"ys:1", 2.98136}, {"zeta:2", 2.41766}};
    for (const auto& [dist, n_star] : targets) {
        const Distribution d(DistId::parse(dist));
        const double e16 = optimal_estimate(d, u64{1} << 16);
        check(std::fabs(e16 - n_star) <= 2e-3,
              fmt("%s: estimate %.6f vs %.5f", dist, e16, n_star));
        const double e17 = optimal_estimate(d, u64{1} << 17);
        check(std::fabs(e16 - e17) < 1e-3,
              fmt("%s: estimate moved %.2e between x and 2x", dist,
                  std::fabs(e16 - e17)));
    }
}

void c10_property_suites() {
    std::mt19937_64 rng(0x5EEDC0DE);
    const std::vector<CodeId> log_codes = {
        CodeId(Family::EliasGamma),    CodeId(Family::EliasDelta),
        CodeId(Family::EliasOmega),    CodeId(Family::Levenshtein),
        CodeId(Family::Yokoo),         CodeId(Family::ExpGolomb, 0),
        CodeId(Family::ExpGolomb, 2),  CodeId(Family::CodeK, -2),
        CodeId(Family::CodeK, -1),     CodeId(Family::CodeK, 0),
        CodeId(Family::CodeK, 1),      CodeId(Family::CodeK, 2)};
    const std::vector<CodeId> lin_codes = {
        CodeId(Family::Unary), CodeId(Family::Golomb, 1), CodeId(Family::Golomb, 3),
        CodeId(Family::Golomb, 7)};
    std::vector<CodeId> pool = log_codes;
    pool.insert(pool.end(), lin_codes.begin(), lin_codes.end());

    auto random_symbol = [&](const CodeId& code) -> u64 {
        const bool linear =
            code.family == Family::Unary || code.family == Family::Golomb;
        const unsigned max_mag = linear ? 13 : 40;
        const unsigned mag = unsigned(rng() % max_mag);
        return (rng() % (u64{1} << mag)) + 1;
    };

    // roundtrip (>= 10^4 cases across the pool)
    double t0 = now_seconds();
    for (const CodeId& code : pool) {
        std::vector<u64> symbols;
        BitString stream;
        for (int n = 0; n < 700; ++n) {
            const u64 s = random_symbol(code);
            symbols.push_back(s);
            encode_append(code, s, stream);
        }
        BitCursor cur(stream);
        for (int n = 0; n < 700; ++n) {
            const u64 back = decode(code, cur);
            if (back != symbols[size_t(n)]) {
                fail(fmt("roundtrip %s: %llu -> %llu", code.name().c_str(),
                         (unsigned long long)symbols[size_t(n)],
                         (unsigned long long)back));
                return;
            }
        }
        check(cur.remaining() == 0, fmt("roundtrip %s: stream tail", code.name().c_str()));
    }
    check(now_seconds() - t0 < 60.0, "roundtrip suite over 1 min");

    // prefix-freeness: random unequal pairs never compare Prefix/Extends/EQ
    t0 = now_seconds();
    for (const CodeId& code : pool) {
        for (int n = 0; n < 700; ++n) {
            const u64 a = random_symbol(code);
            u64 b = random_symbol(code);
            if (a == b) b = a + 1;
            const LexOrder ord = lex_compare(encode(code, a), encode(code, b));
            if (ord != LexOrder::LT && ord != LexOrder::GT) {
                fail(fmt("prefix violation %s: %llu vs %llu", code.name().c_str(),
                         (unsigned long long)a, (unsigned long long)b));
                return;
            }
        }
    }
    check(now_seconds() - t0 < 60.0, "prefix suite over 1 min");

    // alphabetic order on adjacent symbols
    t0 = now_seconds();
    for (const CodeId& code : pool) {
        for (int n = 0; n < 700; ++n) {
            const u64 i = random_symbol(code);
            if (lex_compare(encode(code, i), encode(code, i + 1)) != LexOrder::LT) {
                fail(fmt("alphabetic violation %s at %llu", code.name().c_str(),
                         (unsigned long long)i));
                return;
            }
        }
    }
    check(now_seconds() - t0 < 60.0, "alphabetic suite over 1 min");

    // monotone lengths, far past the emit guard
    t0 = now_seconds();
    for (const CodeId& code : pool) {
        for (int n = 0; n < 700; ++n) {
            const unsigned mag = unsigned(rng() % 50);
            const u64 i = (rng() % (u64{1} << mag)) + 1;
            if (unbounded_length(code, i) > unbounded_length(code, i + 1)) {
                fail(fmt("monotone violation %s at %llu", code.name().c_str(),
                         (unsigned long long)i));
                return;
            }
        }
    }
    check(now_seconds() - t0 < 60.0, "monotone suite over 1 min");

    // Kraft convergence: partial sums never pass one and the deficit keeps
    // shrinking.  Families with doubly-logarithmic lengths exhaust the 64-bit
    // symbol space before the 100-bit horizon, stranding the tail mass past
    // symbol 2^62 (measured: delta 1.6e-2, omega 5.5e-2); the residual bound
    // distinguishes the two regimes.
    t0 = now_seconds();
    for (const CodeId& code : pool) {
        const u128 one = u128{1} << 120;
        u128 sum = 0, sum_mid = 0;
        RunCursor runs(code);
        int steps = 0;
        while (auto run = runs.next()) {
            if (run->bits > 100 || ++steps > 200000) break;
            if (run->bits > 50 && sum_mid == 0) sum_mid = sum;
            sum += u128(run->count) << (120 - run->bits);
            if (sum > one) {
                fail(fmt("kraft sum exceeds one for %s", code.name().c_str()));
                return;
            }
        }
        const double deficit = double(one - sum) / double(one);
        const double deficit_mid = double(one - sum_mid) / double(one);
        check(sum_mid != 0 && deficit < deficit_mid,
              fmt("kraft not converging for %s", code.name().c_str()));
        const bool symbol_limited = unbounded_length(code, u64{1} << 62) <= 100;
        const double cap = symbol_limited ? 0.07 : 1e-6;
        check(deficit < cap,
              fmt("kraft deficit %.2e for %s", deficit, code.name().c_str()));
    }
    check(now_seconds() - t0 < 60.0, "kraft suite over 1 min");

    // codek family is 0-smooth
    t0 = now_seconds();
    for (int k = -8; k <= 8; ++k) {
        if (!is_j_smooth(CodeId(Family::CodeK, k), 0, u64{1} << 16)) {
            fail(fmt("codek:%d not 0-smooth", k));
            return;
        }
    }
    check(now_seconds() - t0 < 60.0, "smoothness suite over 1 min");

    // antiunary checks across the three families
    t0 = now_seconds();
    check(!is_antiunary(Distribution(DistId::parse("gk")), 0, 100000),
          "gk 0-antiunary");
    check(is_antiunary(Distribution(DistId::parse("gk")), 2, 100000),
          "gk not 2-antiunary");
    check(is_antiunary(Distribution(DistId::parse("ys:1")), 3, 100000),
          "ys:1 not 3-antiunary");
    check(is_antiunary(Distribution(DistId::parse("zeta:2")), 3, 100000),
          "zeta:2 not 3-antiunary");
    check(now_seconds() - t0 < 60.0, "antiunary suite over 1 min");

    // smooth_improve: structural properties on random trees, strict gain on a
    // non-smooth code under an antiunary distribution
    t0 = now_seconds();
    for (int t = 0; t < 10000; ++t) {
        std::vector<u64> lens = {1, 1};
        const int splits = int(rng() % 10);
        for (int s = 0; s < splits; ++s) {
            const size_t at = size_t(rng() % lens.size());
            lens[at] += 1;
            lens.insert(lens.begin() + long(at), lens[at]);
        }
        if (rng() % 4 == 0) lens.erase(lens.begin() + long(rng() % lens.size()));
        std::sort(lens.begin(), lens.end());
        const u128 before = kraft126(lens);
        const auto improved = smooth_improve(lens);
        if (improved.size() > 2 && !is_j_smooth(improved, 0)) {
            fail("smooth_improve output not 0-smooth");
            return;
        }
        if (kraft126(improved) > before) {
            fail("smooth_improve raised kraft mass");
            return;
        }
        if (smooth_improve(improved) != improved) {
            fail("smooth_improve not idempotent");
            return;
        }
    }
    const auto geom = [](u64 i) { return 0.25 * std::pow(0.75, double(i - 1)); };
    check(is_antiunary(geom, 0, 500), "geometric 3/4 stub not 0-antiunary");
    std::vector<u64> glen;
    for (u64 i = 1; i <= 127; ++i)
        glen.push_back(unbounded_length(CodeId(Family::EliasGamma), i));
    check(!is_j_smooth(glen, 0), "gamma prefix unexpectedly smooth");
    const auto improved = smooth_improve(glen);
    check(is_j_smooth(improved, 0), "improved gamma prefix not smooth");
    check(improved != glen, "smooth_improve left gamma unchanged");
    double before = 0.0, after = 0.0;
    for (u64 i = 1; i <= 127; ++i) {
        before += geom(i) * double(glen[i - 1]);
        after += geom(i) * double(improved[i - 1]);
    }
    check(after < before - 1e-9,
          fmt("no strict improvement: %.9f -> %.9f", before, after));
    check(now_seconds() - t0 < 60.0, "smooth_improve suite over 1 min");
}

void c11_monte_carlo() {
    std::mt19937_64 rng(0xACCE575EED);
    const std::vector<std::string> log_codes = {"gamma",   "delta",    "omega",
                                                "levenshtein", "yokoo", "codek:-2",
                                                "codek:-1", "codek:0", "codek:1",
                                                "expgolomb:1"};
    const std::vector<std::string> lin_codes = {"unary", "golomb:1", "golomb:2",
                                                "golomb:3"};
    const std::vector<std::string> all_dists = {"gk",     "ys:1",   "ys:1.5",
                                                "ys:2",   "ys:2.5", "ys:3",
                                                "zeta:2", "zeta:2.5", "zeta:3"};
    // linear codes need a finite length variance for the 4-sigma band
    const std::vector<std::string> lin_dists = {"ys:2.5", "ys:3"};

    std::set<std::pair<std::string, std::string>> picked;
    while (picked.size() < 6) {
        std::string code, dist;
        if (rng() % 3 == 0) {
            code = lin_codes[rng() % lin_codes.size()];
            dist = lin_dists[rng() % lin_dists.size()];
        } else {
            code = log_codes[rng() % log_codes.size()];
            dist = all_dists[rng() % all_dists.size()];
        }
        picked.insert({code, dist});
    }
    for (const auto& [code, dist] : picked) {
        const ExpectedLength el = cell(code.c_str(), dist.c_str(), 1e-3);
        check(!el.infinite, fmt("%s x %s infinite", code.c_str(), dist.c_str()));
        if (el.infinite) continue;
        const Distribution d(DistId::parse(dist));
        const MonteCarlo mc =
            monte_carlo_check(CodeId::parse(code), d, 1000000, rng);
        const double lo = el.value.lo - 4.0 * mc.std_error;
        const double hi = el.value.hi + 4.0 * mc.std_error;
        check(lo <= mc.mean && mc.mean <= hi,
              fmt("%s x %s: mean %.5f outside [%.5f, %.5f] (se %.5f)",
                  code.c_str(), dist.c_str(), mc.mean, lo, hi, mc.std_error));
    }
}

void c12_rational() {
    // canonical expansion of the classic convergent
    const CFTerms pi_terms = cf_expand(Rational(355, 113));
    check(pi_terms.a0 == 3 && pi_terms.terms.size() == 2 && pi_terms.terms[0] == 7 &&
              pi_terms.terms[1] == 16,
          "355/113 expansion wrong");

    // 10^5 random rationals roundtrip exactly
    std::mt19937_64 rng(0x5A11E27);
    const CodeId ck(Family::CodeK, -1);
    for (int t = 0; t < 100000; ++t) {
        const u64 q = (rng() % ((u64{1} << 31) - 2)) + 2;
        const u64 p = (rng() % (2 * q)) + 1;  // exercises a0 = 0 and a0 >= 1
        const Rational r{BigInt(p), BigInt(q)};
        const BitString bits = encode_rational(r, ck);
        BitCursor cur(bits);
        const Rational back = decode_rational(cur, ck);
        if (!(back == r) || cur.remaining() != 0) {
            fail(fmt("rational roundtrip failed at %llu/%llu",
                     (unsigned long long)p, (unsigned long long)q));
            return;
        }
    }

    // mean bits per continued-fraction term over uniform rationals
    std::mt19937_64 rng2(555);
    std::uniform_int_distribution<u64> den_pick(2, 1000000);
    u64 bits = 0, terms = 0;
    for (int s = 0; s < 20000; ++s) {
        u64 q, p;
        do {
            q = den_pick(rng2);
            p = std::uniform_int_distribution<u64>(1, q - 1)(rng2);
        } while (std::gcd(p, q) != 1);
        while (p != 0) {
            bits += unbounded_length(ck, q / p);
            ++terms;
            const u64 r = q % p;
            q = p;
            p = r;
        }
    }
    const double mean = double(bits) / double(terms);
    check(mean > 3.3 && mean < 3.7, fmt("mean bits/term %.4f", mean));
}

}  // namespace

int main() {
    criterion(1, "codebook golden vectors for codes -2..2", c1_table1);
    criterion(2, "worked example encode(code 0, 12)", c2_worked_example);
    criterion(3, "expected-length interval bracketing", c3_table2_bracketing);
    criterion(4, "ys:2.5 golomb:1 closed form is 5/3", c4_ys25_golomb);
    criterion(5, "golomb divergence on infinite-mean rows", c5_golomb_divergence);
    criterion(6, "entropy enclosures", c6_entropy);
    criterion(7, "best-parameter agreement and gamma dominance", c7_best_parameters);
    criterion(8, "designer-code agreement and estimates", c8_golin);
    criterion(9, "minimum-redundancy estimates", c9_optimal_estimate);
    criterion(10, "property suites", c10_property_suites);
    criterion(11, "monte carlo cross-check", c11_monte_carlo);
    criterion(12, "rational codec", c12_rational);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
