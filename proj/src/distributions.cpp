#include "pcpl/distributions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace pcpl {

namespace {

using u64 = std::uint64_t;

const Interval kLn2 = pad(Interval(std::numbers::ln2), 1);
const Interval kLgE = Interval(1.0) / kLn2;
const Interval kHalfLn2Pi = Interval(0.5) * ilog(pad(Interval(2.0 * std::numbers::pi), 1));

// Stirling correction S(x) = 1/(12x) - 1/(360x^3) + 1/(1260x^5), with the
// truncation error absorbed as +-1/(1680 x^7).  Valid for x >= 32.
Interval stirling_s(Interval x) {
    Interval x2 = x * x;
    Interval x3 = x2 * x;
    Interval x5 = x3 * x2;
    Interval s = Interval(1.0) / (Interval(12.0) * x) -
                 Interval(1.0) / (Interval(360.0) * x3) +
                 Interval(1.0) / (Interval(1260.0) * x5);
    double rem = detail::up(1.0 / (1680.0 * std::pow(x.lo, 7.0)), 4);
    return s + Interval(-rem, rem);
}

}  // namespace

Interval lgamma_interval(double x) {
    if (!(x >= 1.0)) throw std::invalid_argument("lgamma_interval requires x >= 1");
    Interval shifts(0.0);
    double y = x;
    while (y < 32.0) {
        shifts += ilog(Interval(y));
        y += 1.0;
    }
    Interval Y(y);
    Interval value = (Y - Interval(0.5)) * ilog(Y) - Y + kHalfLn2Pi + stirling_s(Y);
    return value - shifts;
}

// ln Gamma(x+s) - ln Gamma(x) without the catastrophic cancellation that two
// separate evaluations would suffer at large x.
Interval lgamma_ratio(double x, double s) {
    if (!(x >= 1.0) || !(s >= 0.0)) throw std::invalid_argument("lgamma_ratio domain");
    Interval acc(0.0);
    while (x < 32.0) {
        acc -= ilog1p(Interval(s) / Interval(x));
        x += 1.0;
    }
    Interval X(x), S(s);
    Interval XS = X + S;
    Interval value = (X - Interval(0.5)) * ilog1p(S / X) + S * ilog(XS) - S +
                     stirling_s(XS) - stirling_s(X);
    return value + acc;
}

namespace {

// sum_{i >= x} i^(-a) for a > 1, via Euler-Maclaurin once x is at least 64.
Interval pow_tail(Interval a, u64 x) {
    Interval sum(0.0);
    while (x < 64) {
        sum += ipow(Interval(static_cast<double>(x)), -a);
        ++x;
    }
    Interval X(static_cast<double>(x));
    Interval minus_a = -a;
    Interval tail = ipow(X, Interval(1.0) - a) / (a - Interval(1.0)) +
                    ipow(X, minus_a) * Interval(0.5) +
                    a * ipow(X, minus_a - Interval(1.0)) / Interval(12.0) -
                    a * (a + Interval(1.0)) * (a + Interval(2.0)) *
                        ipow(X, minus_a - Interval(3.0)) / Interval(720.0);
    Interval omitted = a * (a + Interval(1.0)) * (a + Interval(2.0)) *
                       (a + Interval(3.0)) * (a + Interval(4.0)) *
                       ipow(X, minus_a - Interval(5.0)) / Interval(30240.0);
    double rem = detail::up(2.0 * std::max(std::abs(omitted.lo), std::abs(omitted.hi)), 4);
    return sum + tail + Interval(-rem, rem);
}

}  // namespace

Interval zeta_interval(double s) {
    if (!(s > 1.0) || !(s <= 64.0)) throw std::invalid_argument("zeta_interval requires 1 < s <= 64");
    return Interval(1.0) + pow_tail(Interval(s), 2);
}

double zeta_value(double s) { return zeta_interval(s).mid(); }

DistId::DistId(DistFamily f, double p) : family(f), param(p) {
    switch (f) {
        case DistFamily::GaussKuzmin:
            param = 0.0;
            break;
        case DistFamily::YuleSimon:
            if (!(p > 0.0)) throw std::invalid_argument("yule-simon parameter must be positive");
            break;
        case DistFamily::Zeta:
            if (!(p > 1.0)) throw std::invalid_argument("zeta parameter must exceed 1");
            break;
    }
}

DistId DistId::parse(std::string_view text) {
    std::string_view name = text;
    double param = 0.0;
    bool has_param = false;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        name = text.substr(0, colon);
        auto rest = text.substr(colon + 1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), param);
        if (ec != std::errc{} || ptr != rest.data() + rest.size())
            throw std::invalid_argument("bad distribution parameter: " + std::string(text));
        has_param = true;
    }
    if (name == "gk") {
        if (has_param) throw std::invalid_argument("gk takes no parameter");
        return DistId(DistFamily::GaussKuzmin);
    }
    if (name == "ys") {
        if (!has_param) throw std::invalid_argument("ys needs a parameter, e.g. ys:2");
        return DistId(DistFamily::YuleSimon, param);
    }
    if (name == "zeta") {
        if (!has_param) throw std::invalid_argument("zeta needs a parameter, e.g. zeta:2");
        return DistId(DistFamily::Zeta, param);
    }
    throw std::invalid_argument("unknown distribution: " + std::string(text));
}

std::string DistId::name() const {
    char buf[48];
    switch (family) {
        case DistFamily::GaussKuzmin:
            return "gk";
        case DistFamily::YuleSimon:
            std::snprintf(buf, sizeof buf, "ys:%g", param);
            return buf;
        case DistFamily::Zeta:
            std::snprintf(buf, sizeof buf, "zeta:%g", param);
            return buf;
    }
    return "?";
}

Distribution::Distribution(DistId id) : id_(id) {
    switch (id_.family) {
        case DistFamily::GaussKuzmin:
            sandwich_ = {1.0, kLgE, 1.0, 1};
            break;
        case DistFamily::YuleSimon: {
            double rho = id_.param;
            lgamma_rho1_ = lgamma_interval(rho + 1.0);
            sandwich_ = {rho, Interval(rho) * iexp(lgamma_rho1_), rho + 1.0, 1};
            break;
        }
        case DistFamily::Zeta: {
            double s = id_.param;
            zeta_s_ = zeta_interval(s);
            sandwich_ = {s - 1.0, Interval(1.0) / zeta_s_, 0.0, 1};
            break;
        }
    }

    // Numeric safety net for the envelope: find the smallest starting index
    // (at most 64) from which every probe up to 1e6 respects it.
    std::vector<u64> probes;
    for (u64 j = 1; j <= 128; ++j) probes.push_back(j);
    for (u64 j = 160; j <= 1000000; j = j * 5 / 4) probes.push_back(j);
    u64 i_min = 1;
    const double tol = 1e-9;
    for (u64 j : probes) {
        Interval p = pmf(j);
        double ub = sandwich_.phi.hi / std::pow(static_cast<double>(j), sandwich_.xi + 1.0);
        double lb = sandwich_.phi.lo /
                    std::pow(static_cast<double>(j) + sandwich_.kappa, sandwich_.xi + 1.0);
        bool ok = p.hi <= ub * (1.0 + tol) && p.lo >= lb * (1.0 - tol);
        if (!ok) {
            if (j >= 64) throw SandwichValidationFailed("power-law envelope failed at large index");
            i_min = j + 1;
        }
    }
    sandwich_.i_min = i_min;
}

Interval Distribution::pmf(u64 i) const {
    if (i == 0) throw std::invalid_argument("symbols start at 1");
    double x = static_cast<double>(i);
    switch (id_.family) {
        case DistFamily::GaussKuzmin: {
            Interval ip1(x + 1.0);
            return -ilog1p(-(Interval(1.0) / (ip1 * ip1))) / kLn2;
        }
        case DistFamily::YuleSimon: {
            double rho = id_.param;
            return iexp(ilog(Interval(rho)) + lgamma_rho1_ - lgamma_ratio(x, rho + 1.0));
        }
        case DistFamily::Zeta:
            return ipow(Interval(x), -id_.param) / zeta_s_;
    }
    throw std::logic_error("unreachable");
}

Interval Distribution::tail(u64 x) const {
    if (x == 0) throw std::invalid_argument("tail starts at 1");
    double xd = static_cast<double>(x);
    switch (id_.family) {
        case DistFamily::GaussKuzmin:
            return ilog1p(Interval(1.0) / Interval(xd)) / kLn2;
        case DistFamily::YuleSimon:
            return iexp(lgamma_rho1_ - lgamma_ratio(xd, id_.param));
        case DistFamily::Zeta:
            return pow_tail(Interval(id_.param), x) / zeta_s_;
    }
    throw std::logic_error("unreachable");
}

Interval Distribution::partial_sum(u64 n) const {
    if (n == 0) return Interval(0.0);
    Interval s = Interval(1.0) - tail(n + 1);
    return {std::max(0.0, s.lo), std::min(1.0, s.hi)};
}

bool Distribution::has_finite_mean() const {
    switch (id_.family) {
        case DistFamily::GaussKuzmin: return false;
        case DistFamily::YuleSimon: return id_.param > 1.0;
        case DistFamily::Zeta: return id_.param > 2.0;
    }
    return false;
}

Interval Distribution::mean() const {
    if (!has_finite_mean()) throw std::domain_error("mean diverges");
    switch (id_.family) {
        case DistFamily::YuleSimon: {
            Interval rho(id_.param);
            return rho / (rho - Interval(1.0));
        }
        case DistFamily::Zeta:
            return zeta_interval(id_.param - 1.0) / zeta_s_;
        default:
            throw std::logic_error("unreachable");
    }
}

Interval Distribution::first_moment_tail(u64 x) const {
    if (!has_finite_mean()) throw std::domain_error("first moment diverges");
    if (x == 0) throw std::invalid_argument("tail starts at 1");
    double xd = static_cast<double>(x);
    switch (id_.family) {
        case DistFamily::YuleSimon: {
            Interval rho(id_.param);
            return rho / (rho - Interval(1.0)) *
                   iexp(lgamma_rho1_ - lgamma_ratio(xd + 1.0, id_.param - 1.0));
        }
        case DistFamily::Zeta:
            return pow_tail(Interval(id_.param) - Interval(1.0), x) / zeta_s_;
        default:
            throw std::logic_error("unreachable");
    }
}

Interval power_weight_tail(const ProbSandwich& ps, u64 x,
                           Interval a_lo, double c_lo, Interval d_lo,
                           Interval a_hi, double c_hi, Interval d_hi) {
    if (x <= std::max<u64>(ps.i_min, 2))
        throw std::invalid_argument("tail bound needs x beyond the envelope start");
    Interval X(static_cast<double>(x));
    Interval xi = pad(Interval(ps.xi), 2);

    Interval lo_log = ilog(X + Interval(std::min(ps.kappa, c_lo)));
    Interval lo_expr = ps.phi * (a_lo * lo_log + a_lo / xi + d_lo) /
                       (xi * ipow(X + Interval(ps.kappa), xi));

    Interval hi_log = ilog(X - Interval(1.0) + Interval(std::max(c_hi, 0.0)));
    Interval hi_expr = ps.phi * (a_hi * hi_log + a_hi / xi + d_hi) /
                       (xi * ipow(X - Interval(1.0), xi));

    double lo = std::max(0.0, lo_expr.lo);
    double hi = hi_expr.hi;
    return {std::min(lo, hi), hi};
}

Interval entropy_tail(const ProbSandwich& ps, u64 x) {
    Interval a = (Interval(ps.xi) + Interval(1.0)) * kLgE;
    Interval d = -ilog2(ps.phi);
    return power_weight_tail(ps, x, a, 0.0, d, a, ps.kappa, d);
}

Interval Distribution::entropy_interval() const {
    const u64 cutoff = 1 << 16;
    PmfScan scan(*this);
    Interval h(0.0);
    for (u64 i = 1; i <= cutoff; ++i) {
        Interval p = scan.next();
        h += -(p * ilog2(p));
    }
    return h + entropy_tail(sandwich_, cutoff + 1);
}

PmfScan::PmfScan(const Distribution& dist) : dist_(&dist) {
    if (dist.id().family == DistFamily::YuleSimon) {
        Interval rho(dist.id().param);
        p_ = rho / (rho + Interval(1.0));
    }
}

Interval PmfScan::next() {
    u64 i = i_++;
    if (dist_->id().family != DistFamily::YuleSimon) return dist_->pmf(i);
    Interval current = p_;
    Interval rho(dist_->id().param);
    p_ = current * (Interval(static_cast<double>(i)) /
                    (Interval(static_cast<double>(i)) + rho + Interval(1.0)));
    return current;
}

Sampler::Sampler(const Distribution& dist) : dist_(dist) {
    const std::size_t table = 4096;
    cdf_.resize(table + 1);
    cdf_[0] = 0.0;
    PmfScan scan(dist_);
    for (std::size_t i = 1; i <= table; ++i) cdf_[i] = cdf_[i - 1] + scan.next().mid();
}

u64 Sampler::sample(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double u = uniform(rng);
    if (u < cdf_.back()) {
        auto it = std::upper_bound(cdf_.begin() + 1, cdf_.end(), u);
        return static_cast<u64>(it - cdf_.begin());
    }
    auto cdf_at = [&](u64 n) { return 1.0 - dist_.tail(n + 1).mid(); };
    u64 lo = cdf_.size() - 1;  // cdf_at(lo) <= u
    u64 hi = lo * 2;
    while (cdf_at(hi) < u) {
        lo = hi;
        if (hi >= (u64{1} << 62)) return hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        (cdf_at(mid) < u ? lo : hi) = mid;
    }
    return hi;
}

std::vector<u64> sample(const Distribution& dist, std::mt19937_64& rng, std::size_t n) {
    Sampler sampler(dist);
    std::vector<u64> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.push_back(sampler.sample(rng));
    return out;
}

}  // namespace pcpl
