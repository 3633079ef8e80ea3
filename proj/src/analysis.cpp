#include "pcpl/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "pcpl/errors.hpp"

namespace pcpl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr double kLgE = 1.4426950408889634;            // 1/ln 2
constexpr double kAlpha0 = -2.1699250014423124;        // 1 - 2 lg 3
constexpr double kGolinThreshold = 0.38196601125010515;  // (3 - sqrt 5)/2

LengthSandwich raw_sandwich(CodeId code) {
    const int k = code.param;
    switch (code.family) {
        case Family::EliasGamma:
        case Family::Yokoo:
            return {-1.0, 1.0, 0.0, 2 * kLgE, 2 * kLgE, 1};
        case Family::Levenshtein:
            return {2.0, 2.0, -1.0, kLgE, 2.5 * kLgE, 3};
        case Family::EliasDelta:
            return {0.0, 4.0, 0.0, kLgE, 1.5 * kLgE, 1};
        case Family::EliasOmega:
            return {1.0, 5.0, 0.0, kLgE, 1.5 * kLgE, 2};
        case Family::ExpGolomb:
            return {-(k + 1.0), 1.0 - k, double(u64{1} << k) - 1.0, 2 * kLgE, 2 * kLgE, 1};
        case Family::CodeK: {
            const double mu = k <= 0 ? 2.0 + k : 3.0 * double(u64{1} << k) - 1.0;
            const u64 i_min = k < 0 ? u64(-k) + 1 : 1;
            return {kAlpha0 - k, -1.0 - k, mu, 2 * kLgE, 2 * kLgE, i_min};
        }
        default:
            throw std::invalid_argument(
                "length_sandwich: " + code.name() + " grows linearly, not logarithmically");
    }
}

void check_sandwich(CodeId code, const LengthSandwich& sw) {
    constexpr double tol = 1e-9;
    for (u64 i = sw.i_min; i <= 1000000; ++i) {
        const double n = double(unbounded_length(code, i));
        const double lo = sw.tau * std::log(double(i) + sw.mu + 1.0) + sw.alpha;
        const double hi = sw.upsilon * std::log(double(i) + sw.mu) + sw.beta;
        if (lo > n + tol || n > hi + tol)
            throw SandwichValidationFailed(code.name() + ": length bound fails at i=" +
                                           std::to_string(i));
    }
}

const LengthSandwich& cached_sandwich(CodeId code) {
    static std::map<std::pair<int, int>, LengthSandwich> cache;
    static std::mutex gate;
    std::lock_guard<std::mutex> lock(gate);
    const auto key = std::make_pair(int(code.family), code.param);
    auto it = cache.find(key);
    if (it == cache.end()) {
        LengthSandwich sw = raw_sandwich(code);
        check_sandwich(code, sw);
        it = cache.emplace(key, sw).first;
    }
    return it->second;
}

bool linear_family(Family f) { return f == Family::Unary || f == Family::Golomb; }

// Golomb k writes n(i) = i/k + g(r) with r = (i-1) mod k; the extremes of g
// turn the linear tail into first-moment and mass terms.
void golomb_offsets(u64 k, double& g_min, double& g_max) {
    g_min = std::numeric_limits<double>::infinity();
    g_max = -g_min;
    for (u64 r = 0; r < k; ++r) {
        const double g =
            1.0 - double(r + 1) / double(k) + double(complete_binary_length(r, k));
        g_min = std::min(g_min, g);
        g_max = std::max(g_max, g);
    }
}

ExpectedLength linear_expected_length(CodeId code, const Distribution& dist,
                                      double precision) {
    if (!dist.has_finite_mean()) return {true, Interval(0.0), EvalMethod::ClosedForm};
    const u64 k = code.family == Family::Unary ? 1 : u64(code.param);
    if (k == 1) {
        Interval mean = dist.mean();
        if (mean.width() > precision)
            throw PrecisionUnreachable(code.name() + ": mean enclosure is wider than requested");
        return {false, mean, EvalMethod::ClosedForm};
    }
    double g_min, g_max;
    golomb_offsets(k, g_min, g_max);
    PmfScan scan(dist);
    Interval partial(0.0);
    u64 i = 1;
    for (u64 x = 64;; x *= 2) {
        for (; i < x; ++i)
            partial += scan.next() * Interval(double(unbounded_length(code, i)));
        const Interval tail = dist.first_moment_tail(i) / Interval(double(k)) +
                              Interval(g_min, g_max) * dist.tail(i);
        const Interval total = partial + tail;
        if (total.width() <= precision) return {false, total, EvalMethod::ClosedForm};
        if (x > (u64{1} << 26))
            throw PrecisionUnreachable(code.name() + ": linear tail not tight enough by x=2^26");
    }
}

ExpectedLength log_expected_length(CodeId code, const Distribution& dist,
                                   double precision) {
    const LengthSandwich& sw = cached_sandwich(code);
    const ProbSandwich& ps = dist.prob_sandwich();
    const u64 start = std::max({sw.i_min, ps.i_min, u64{3}});
    if (precision >= 1e-6) {
        PmfScan scan(dist);
        Interval partial(0.0);
        u64 i = 1;
        u64 x = 4096;
        while (x <= start) x *= 2;
        for (;; x *= 2) {
            for (; i < x; ++i)
                partial += scan.next() * Interval(double(unbounded_length(code, i)));
            const Interval total = partial + tail_expected_length(sw, ps, x);
            if (total.width() <= precision)
                return {false, total, EvalMethod::RigorousSandwich};
            if (x >= (u64{1} << 26)) {
                const double need =
                    double(x) * std::pow(total.width() / precision, 1.0 / ps.xi);
                if (need > 1e9)
                    throw PrecisionUnreachable(code.name() +
                                               ": tail decay too slow for requested precision");
            }
            if (x >= (u64{1} << 30))
                throw PrecisionUnreachable(code.name() + ": cutoff limit reached");
        }
    }
    // Length runs let the partial sum ride closed-form tail masses instead of
    // symbol-by-symbol pmf calls, so the cutoff can reach 2^62.
    RunCursor cursor(code);
    Interval partial(0.0);
    u64 covered = 1;
    const u64 first_check = std::max(start, u64{4096});
    while (auto run = cursor.next()) {
        Interval mass = dist.tail(run->first) - dist.tail(run->first + run->count);
        if (mass.lo < 0.0) mass.lo = 0.0;
        partial += Interval(double(run->bits)) * mass;
        covered = run->first + run->count;
        if (covered > first_check) {
            const Interval total = partial + tail_expected_length(sw, ps, covered);
            if (total.width() <= precision)
                return {false, total, EvalMethod::RigorousSandwich};
        }
    }
    const Interval total = partial + tail_expected_length(sw, ps, covered);
    if (total.width() <= precision) return {false, total, EvalMethod::RigorousSandwich};
    throw PrecisionUnreachable(code.name() + ": enclosure floor above requested precision");
}

// Strict ordering for parameter search: smaller upper bound, then smaller
// |k|, then smaller k.
bool better_candidate(double hi_a, int k_a, double hi_b, int k_b) {
    if (hi_a != hi_b) return hi_a < hi_b;
    if (std::abs(k_a) != std::abs(k_b)) return std::abs(k_a) < std::abs(k_b);
    return k_a < k_b;
}

const char* method_token(EvalMethod m) {
    switch (m) {
        case EvalMethod::RigorousSandwich: return "rigorous_sandwich";
        case EvalMethod::EntropyTailEstimate: return "entropy_tail_estimate";
        case EvalMethod::ClosedForm: return "closed_form";
    }
    return "unknown";
}

const char* family_token(DistFamily f) {
    switch (f) {
        case DistFamily::GaussKuzmin: return "gk";
        case DistFamily::YuleSimon: return "ys";
        case DistFamily::Zeta: return "zeta";
    }
    return "unknown";
}

// Cumulative mass with exact per-symbol sums up to 2^20 and closed-form
// tails beyond; the double-precision mids feed Golin's threshold tests.
class SigmaOracle {
  public:
    explicit SigmaOracle(const Distribution& dist) : dist_(dist), scan_(dist) {
        cum_.push_back(0.0L);
    }

    long double sigma(u64 c) {
        if (c == 0) return 0.0L;
        if (c <= kExactLimit) {
            while (cum_.size() <= c)
                cum_.push_back(cum_.back() + (long double)(scan_.next().mid()));
            return cum_[c];
        }
        return 1.0L - (long double)(dist_.tail(c + 1).mid());
    }

  private:
    static constexpr u64 kExactLimit = u64{1} << 20;
    const Distribution& dist_;
    PmfScan scan_;
    std::vector<long double> cum_;
};

DesignerCode golin_core(const Distribution& dist, int h_max, bool even_split) {
    if (h_max < 1) throw std::invalid_argument("golin: h_max must be at least 1");
    constexpr u64 kBoundaryCap = u64{1} << 62;
    SigmaOracle oracle(dist);
    DesignerCode dc;
    u64 c = 0;
    for (int h = 1; h <= h_max; ++h) {
        const long double sigma_c = oracle.sigma(c);
        const long double rem = 1.0L - sigma_c;
        if (!(rem > 0.0L)) break;
        int pick = -1;
        if (!even_split) {
            for (int k = 0; k <= 62; ++k) {
                const u64 width = u64{1} << k;
                if (c > kBoundaryCap - width) break;
                const long double s = (oracle.sigma(c + width) - sigma_c) / rem;
                if (s > (long double)kGolinThreshold) {
                    pick = k;
                    break;
                }
            }
        } else {
            long double best_dist = 0.0L;
            bool scan_complete = false;
            for (int k = 0; k <= 62; ++k) {
                const u64 width = u64{1} << k;
                if (c > kBoundaryCap - width) break;
                const long double s = (oracle.sigma(c + width) - sigma_c) / rem;
                const long double d = s < 0.5L ? 0.5L - s : s - 0.5L;
                if (pick < 0 || d < best_dist - 1e-9L) {
                    pick = k;
                    best_dist = d;
                }
                if (s >= 0.5L) {  // larger groups only move away from the even split
                    scan_complete = true;
                    break;
                }
                if (k == 62) scan_complete = true;
            }
            // a scan cut short by the boundary cap never saw the even split,
            // so stop the design rather than commit to a biased minimizer
            if (!scan_complete) pick = -1;
        }
        if (pick < 0) break;
        dc.group_sizes.push_back(pick);
        c += u64{1} << pick;
    }
    return dc;
}

// Entropy of the conditional tail past x (unnormalized, -sum p lg p), with a
// short exact head so the closed-form part starts safely beyond i_min.
Interval tail_entropy_from(const Distribution& dist, u64 x) {
    const ProbSandwich& ps = dist.prob_sandwich();
    const u64 cut = std::max({x, u64{16}, ps.i_min + 1});
    Interval head(0.0);
    for (u64 i = x; i < cut; ++i) {
        const Interval p = dist.pmf(i);
        head += -(p * ilog2(p));
    }
    return head + entropy_tail(ps, cut);
}

}  // namespace

LengthSandwich length_sandwich(CodeId code) { return cached_sandwich(code); }

Interval tail_expected_length(const LengthSandwich& sw, const ProbSandwich& ps,
                              std::uint64_t x) {
    if (x <= sw.i_min)
        throw std::invalid_argument("tail_expected_length: cutoff below length-bound start");
    return power_weight_tail(ps, x, Interval(sw.tau), sw.mu, Interval(sw.alpha),
                             Interval(sw.upsilon), sw.mu + 1.0, Interval(sw.beta));
}

ExpectedLength expected_length(CodeId code, const Distribution& dist, double precision) {
    if (!(precision > 0.0))
        throw std::invalid_argument("expected_length: precision must be positive");
    if (linear_family(code.family)) return linear_expected_length(code, dist, precision);
    return log_expected_length(code, dist, precision);
}

ExpectedLength expected_length(CodeId code, DistId dist, double precision) {
    return expected_length(code, Distribution(dist), precision);
}

Interval expected_length_at(CodeId code, const Distribution& dist, std::uint64_t x) {
    if (linear_family(code.family)) {
        if (!dist.has_finite_mean())
            throw std::domain_error("expected_length_at: expectation diverges");
        const u64 k = code.family == Family::Unary ? 1 : u64(code.param);
        double g_min, g_max;
        golomb_offsets(k, g_min, g_max);
        PmfScan scan(dist);
        Interval partial(0.0);
        for (u64 i = 1; i < x; ++i)
            partial += scan.next() * Interval(double(unbounded_length(code, i)));
        return partial + dist.first_moment_tail(x) / Interval(double(k)) +
               Interval(g_min, g_max) * dist.tail(x);
    }
    const LengthSandwich& sw = cached_sandwich(code);
    const ProbSandwich& ps = dist.prob_sandwich();
    PmfScan scan(dist);
    Interval partial(0.0);
    for (u64 i = 1; i < x; ++i)
        partial += scan.next() * Interval(double(unbounded_length(code, i)));
    return partial + tail_expected_length(sw, ps, x);
}

BestParameter best_parameter(Family family, const Distribution& dist, double precision) {
    const Interval p1 = dist.pmf(1);
    bool have = false;
    int best_k = 0;
    ExpectedLength best_value;

    auto consider = [&](CodeId code) {
        const ExpectedLength el = expected_length(code, dist, precision);
        if (!have ||
            better_candidate(el.value.hi, code.param, best_value.value.hi, best_k)) {
            have = true;
            best_k = code.param;
            best_value = el;
        }
    };

    switch (family) {
        case Family::Golomb: {
            if (!dist.has_finite_mean())
                return {CodeId(Family::Golomb, 1),
                        {true, Interval(0.0), EvalMethod::ClosedForm}};
            for (int k = 1; k <= kGolombMaxParam; ++k) {
                CodeId code(Family::Golomb, k);
                // n_k(1) = bit_width(k) never decreases, so once the first
                // symbol alone is too expensive every larger k is out.
                if (have && p1.lo * double(unbounded_length(code, 1)) > best_value.value.hi)
                    break;
                consider(code);
            }
            return {CodeId(Family::Golomb, best_k), best_value};
        }
        case Family::ExpGolomb: {
            for (int k = 0; k <= kExpGolombMaxParam; ++k) {
                if (have && p1.lo * double(k + 1) > best_value.value.hi) break;
                consider(CodeId(Family::ExpGolomb, k));
            }
            return {CodeId(Family::ExpGolomb, best_k), best_value};
        }
        case Family::CodeK: {
            for (int k = 0; k <= kCodeKMaxParam; ++k) {
                if (have && p1.lo * double(k + 2) > best_value.value.hi) break;
                consider(CodeId(Family::CodeK, k));
            }
            // Downward, the unary prefix alone costs sum_{i<=kappa} i p(i),
            // which only grows as kappa does.
            Interval head(0.0);
            for (int k = -1; k >= kCodeKMinParam; --k) {
                const u64 kappa = u64(-k);
                head += Interval(double(kappa)) * dist.pmf(kappa);
                if (have && head.lo > best_value.value.hi) break;
                consider(CodeId(Family::CodeK, k));
            }
            return {CodeId(Family::CodeK, best_k), best_value};
        }
        default:
            throw std::invalid_argument("best_parameter: family takes no parameter");
    }
}

BestParameter best_parameter(Family family, DistId dist, double precision) {
    return best_parameter(family, Distribution(dist), precision);
}

std::uint64_t DesignerCode::symbols_through(std::uint64_t h) const {
    if (h > group_sizes.size())
        throw std::out_of_range("designer code: group index past the design");
    u64 total = 0;
    for (u64 g = 0; g < h; ++g) total += u64{1} << group_sizes[g];
    return total;
}

std::uint64_t DesignerCode::first_symbol(std::uint64_t h) const {
    if (h == 0) throw std::out_of_range("designer code: groups are 1-based");
    return symbols_through(h - 1) + 1;
}

std::uint64_t DesignerCode::length(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("designer code: symbols start at 1");
    u64 total = 0;
    for (u64 g = 0; g < group_sizes.size(); ++g) {
        total += u64{1} << group_sizes[g];
        if (i <= total) return g + 1 + u64(group_sizes[g]);
    }
    throw std::out_of_range("designer code: symbol past the designed groups");
}

BitString DesignerCode::encode(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("designer code: symbols start at 1");
    u64 total = 0;
    for (u64 g = 0; g < group_sizes.size(); ++g) {
        const u64 width = u64{1} << group_sizes[g];
        if (i <= total + width) {
            BitString out;
            out.append_run(true, g);
            out.push_back(false);
            out.append_bits(i - total - 1, unsigned(group_sizes[g]));
            return out;
        }
        total += width;
    }
    throw std::out_of_range("designer code: symbol past the designed groups");
}

DesignerCode golin_alg1(const Distribution& dist, int h_max) {
    return golin_core(dist, h_max, false);
}

DesignerCode golin_alg2(const Distribution& dist, int h_max) {
    return golin_core(dist, h_max, true);
}

DesignerCode golin_alg1(DistId dist, int h_max) {
    return golin_alg1(Distribution(dist), h_max);
}

DesignerCode golin_alg2(DistId dist, int h_max) {
    return golin_alg2(Distribution(dist), h_max);
}

Interval designer_expected_length(const DesignerCode& dc, const Distribution& dist,
                                  int h) {
    if (h < 1 || u64(h) > dc.groups())
        throw std::invalid_argument("designer_expected_length: invalid group count");
    const ProbSandwich& ps = dist.prob_sandwich();
    Interval partial(0.0);
    for (u64 g = 1; g <= u64(h); ++g) {
        const u64 a = dc.first_symbol(g);
        const u64 b = a + (u64{1} << dc.group_sizes[g - 1]);
        Interval mass = dist.tail(a) - dist.tail(b);
        if (mass.lo < 0.0) mass.lo = 0.0;
        partial += Interval(double(g) + double(dc.group_sizes[g - 1])) * mass;
    }
    const u64 x = dc.symbols_through(u64(h)) + 1;
    Interval t_x = dist.tail(x);
    if (t_x.lo <= 0.0) t_x.lo = std::numeric_limits<double>::min();

    // Any completion keeps tail lengths at h + (a code with Kraft <= 1), so
    // the normalized-subtree entropy bound gives the floor.
    const Interval h_x = tail_entropy_from(dist, x);
    const Interval lower = partial + h_x + (Interval(double(h)) + ilog2(t_x)) * t_x;

    // Concrete ceiling: continue after group h with 1^h followed by a gamma
    // codeword for the offset, i.e. lengths h + n_gamma(i - x + 1).
    const LengthSandwich& gamma_sw = cached_sandwich(CodeId(Family::EliasGamma));
    const u64 cut = std::max({x, u64{16}, ps.i_min + 1});
    Interval head_upper(0.0);
    const CodeId gamma(Family::EliasGamma);
    for (u64 i = x; i < cut; ++i)
        head_upper += dist.pmf(i) *
                      Interval(double(h) + double(unbounded_length(gamma, i - x + 1)));
    const Interval upper = partial + head_upper + Interval(double(h)) * dist.tail(cut) +
                           tail_expected_length(gamma_sw, ps, cut);

    return {std::min(lower.lo, upper.hi), upper.hi};
}

Interval designer_expected_length(const DesignerCode& dc, DistId dist, int h) {
    return designer_expected_length(dc, Distribution(dist), h);
}

double huffman_estimate(std::span<const double> head, double tail_mass,
                        double tail_entropy) {
    struct Node {
        double weight;
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * head.size() + 3);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (double p : head) {
        heap.emplace(p, int(nodes.size()));
        nodes.push_back({p});
    }
    const bool super = tail_mass > 0.0;
    int super_id = -1;
    if (super) {
        super_id = int(nodes.size());
        heap.emplace(tail_mass, super_id);
        nodes.push_back({tail_mass});
    }
    if (nodes.empty()) return 0.0;
    while (heap.size() > 1) {
        const Entry a = heap.top();
        heap.pop();
        const Entry b = heap.top();
        heap.pop();
        const double w = a.first + b.first;
        heap.emplace(w, int(nodes.size()));
        nodes.push_back({w, a.second, b.second});
    }
    std::vector<int> depth(nodes.size(), 0);
    std::vector<int> stack{heap.top().second};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int child : {nodes[v].left, nodes[v].right}) {
            if (child < 0) continue;
            depth[child] = depth[v] + 1;
            stack.push_back(child);
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < head.size(); ++i) total += head[i] * depth[i];
    if (super)
        total += tail_mass * depth[super_id] + tail_mass * std::log2(tail_mass) +
                 tail_entropy;
    return total;
}

double optimal_estimate(const Distribution& dist, std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("optimal_estimate: need x >= 2");
    if (x > (u64{1} << 22))
        throw std::invalid_argument("optimal_estimate: truncation too large to tabulate");
    std::vector<double> head;
    head.reserve(x - 1);
    PmfScan scan(dist);
    for (u64 i = 1; i < x; ++i) head.push_back(scan.next().mid());
    const double tail_mass = dist.tail(x).mid();
    const double tail_entropy = tail_entropy_from(dist, x).mid();
    return huffman_estimate(head, tail_mass, tail_entropy);
}

double optimal_estimate(DistId dist, std::uint64_t x) {
    return optimal_estimate(Distribution(dist), x);
}

bool is_j_smooth(CodeId code, std::uint64_t j, std::uint64_t N) {
    if (N < j + 3) throw std::invalid_argument("is_j_smooth: need N > j + 2");
    u64 n1 = unbounded_length(code, j + 1);
    u64 n2 = unbounded_length(code, j + 2);
    for (u64 i = j + 1; i + 2 <= N; ++i) {
        const u64 n3 = unbounded_length(code, i + 2);
        if (n2 == n3 && n2 > n1 + 1) return false;
        n1 = n2;
        n2 = n3;
    }
    return true;
}

bool is_j_smooth(std::span<const std::uint64_t> lengths, std::uint64_t j) {
    const u64 n = lengths.size();
    if (n < j + 3) throw std::invalid_argument("is_j_smooth: need N > j + 2");
    for (u64 i = j + 1; i + 2 <= n; ++i) {
        if (lengths[i] == lengths[i + 1] && lengths[i] > lengths[i - 1] + 1) return false;
    }
    return true;
}

bool is_antiunary(const Distribution& dist, std::uint64_t j, std::uint64_t N) {
    for (u64 i = j + 1; i <= N; ++i) {
        if (!(dist.pmf(i).mid() < dist.pmf(i + 1).mid() + dist.pmf(i + 2).mid()))
            return false;
    }
    return true;
}

bool is_antiunary(const std::function<double(std::uint64_t)>& pmf, std::uint64_t j,
                  std::uint64_t N) {
    for (u64 i = j + 1; i <= N; ++i) {
        if (!(pmf(i) < pmf(i + 1) + pmf(i + 2))) return false;
    }
    return true;
}

std::vector<std::uint64_t> smooth_improve(std::vector<std::uint64_t> lengths) {
    const u128 one = u128{1} << 126;
    u128 mass = 0;
    bool truncated = false;
    for (u64 n : lengths) {
        if (n == 0) throw KraftViolation("smooth_improve: zero-length codeword");
        if (n > 126) {
            truncated = true;
            continue;
        }
        mass += u128{1} << (126 - n);
        if (mass > one) throw KraftViolation("smooth_improve: Kraft mass exceeds one");
    }
    if (mass == one && truncated)
        throw KraftViolation("smooth_improve: Kraft mass exceeds one");

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 2 < lengths.size(); ++i) {
            if (lengths[i + 1] == lengths[i + 2] && lengths[i + 1] > lengths[i] + 1) {
                ++lengths[i];
                --lengths[i + 1];
                --lengths[i + 2];
                changed = true;
            }
        }
    }
    return lengths;
}

std::vector<DistId> table2_distributions() {
    return {DistId(DistFamily::GaussKuzmin),
            DistId(DistFamily::YuleSimon, 1.0),
            DistId(DistFamily::YuleSimon, 1.5),
            DistId(DistFamily::YuleSimon, 2.0),
            DistId(DistFamily::YuleSimon, 2.5),
            DistId(DistFamily::YuleSimon, 3.0),
            DistId(DistFamily::Zeta, 2.0),
            DistId(DistFamily::Zeta, 2.5),
            DistId(DistFamily::Zeta, 3.0)};
}

std::vector<CodeReport> table2_row(DistId id, double precision) {
    const Distribution dist(id);
    std::vector<CodeReport> row;

    row.push_back({id, "entropy", "", {false, dist.entropy_interval(),
                                       EvalMethod::RigorousSandwich}, ""});

    const double opt = optimal_estimate(dist, u64{1} << 16);
    row.push_back({id, "optimal", "x=65536",
                   {false, Interval(opt), EvalMethod::EntropyTailEstimate}, ""});

    for (int alg = 1; alg <= 2; ++alg) {
        const DesignerCode dc =
            alg == 1 ? golin_alg1(dist, 64) : golin_alg2(dist, 64);
        const Interval est = designer_expected_length(dc, dist, int(dc.groups()));
        row.push_back({id, alg == 1 ? "golin1" : "golin2",
                       "h=" + std::to_string(dc.groups()),
                       {false, est, EvalMethod::EntropyTailEstimate}, ""});
    }

    const BestParameter ck = best_parameter(Family::CodeK, dist, precision);
    row.push_back({id, "codek", ck.code.name(), ck.value, ""});

    row.push_back({id, "levenshtein", "levenshtein",
                   expected_length(CodeId(Family::Levenshtein), dist, precision), ""});

    // Best of the gamma/delta/omega trio and every exp-golomb parameter.
    CodeId elias_code(Family::EliasGamma);
    ExpectedLength elias_best =
        expected_length(elias_code, dist, precision);
    for (Family f : {Family::EliasDelta, Family::EliasOmega}) {
        const ExpectedLength el = expected_length(CodeId(f), dist, precision);
        if (el.value.hi < elias_best.value.hi) {
            elias_best = el;
            elias_code = CodeId(f);
        }
    }
    const BestParameter eg = best_parameter(Family::ExpGolomb, dist, precision);
    if (eg.value.value.hi < elias_best.value.hi) {
        elias_best = eg.value;
        elias_code = eg.code;
    }
    row.push_back({id, "elias", elias_code.name(), elias_best, ""});

    row.push_back({id, "yokoo", "yokoo",
                   expected_length(CodeId(Family::Yokoo), dist, precision), ""});

    if (!dist.has_finite_mean()) {
        row.push_back({id, "golomb", "",
                       {true, Interval(0.0), EvalMethod::ClosedForm}, ""});
    } else {
        const BestParameter gb = best_parameter(Family::Golomb, dist, precision);
        std::string note;
        if (id.family == DistFamily::YuleSimon && id.param == 2.5)
            note = "closed form rho/(rho-1) = 5/3 = 1.66666..., "
                   "not the sometimes-quoted 2.66666...";
        row.push_back({id, "golomb", gb.code.name(), gb.value, note});
    }

    return row;
}

std::vector<std::vector<CodeReport>> table2_grid(double precision) {
    std::vector<std::vector<CodeReport>> grid;
    for (const DistId id : table2_distributions())
        grid.push_back(table2_row(id, precision));
    return grid;
}

std::string grid_csv(const std::vector<std::vector<CodeReport>>& grid) {
    std::string out = "dist,param,method,code_param,lo,hi,infinite\n";
    char buf[160];
    for (const auto& row : grid) {
        for (const auto& cell : row) {
            if (cell.value.infinite) {
                std::snprintf(buf, sizeof buf, "%s,%g,%s,%s,inf,inf,1\n",
                              family_token(cell.dist.family), cell.dist.param,
                              cell.column.c_str(), cell.code_param.c_str());
            } else {
                std::snprintf(buf, sizeof buf, "%s,%g,%s,%s,%.10g,%.10g,0\n",
                              family_token(cell.dist.family), cell.dist.param,
                              cell.column.c_str(), cell.code_param.c_str(),
                              cell.value.value.lo, cell.value.value.hi);
            }
            out += buf;
        }
    }
    return out;
}

std::string grid_json(const std::vector<std::vector<CodeReport>>& grid) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : grid) {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            nlohmann::ordered_json c;
            c["column"] = cell.column;
            c["code_param"] = cell.code_param;
            c["infinite"] = cell.value.infinite;
            if (!cell.value.infinite) {
                c["lo"] = cell.value.value.lo;
                c["hi"] = cell.value.value.hi;
            }
            c["method"] = method_token(cell.value.method);
            if (!cell.note.empty()) c["note"] = cell.note;
            cells.push_back(std::move(c));
        }
        nlohmann::ordered_json entry;
        entry["dist"] = row.front().dist.name();
        entry["cells"] = std::move(cells);
        rows.push_back(std::move(entry));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

MonteCarlo monte_carlo_check(CodeId code, const Distribution& dist, std::uint64_t n,
                             std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("monte_carlo_check: need n >= 2");
    Sampler sampler(dist);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (u64 t = 0; t < n; ++t) {
        const double bits = double(unbounded_length(code, sampler.sample(rng)));
        sum += bits;
        sum_sq += bits * bits;
    }
    const double mean = sum / double(n);
    const double var =
        std::max(0.0, (sum_sq - double(n) * mean * mean) / double(n - 1));
    return {mean, std::sqrt(var / double(n))};
}

}  // namespace pcpl
