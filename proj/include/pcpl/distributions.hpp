#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pcpl/errors.hpp"
#include "pcpl/interval.hpp"

namespace pcpl {

// Riemann zeta via partial sum plus an Euler-Maclaurin tail; relative error
// stays below 1e-12 for s in (1, 64].
Interval zeta_interval(double s);
double zeta_value(double s);

// Rigorous enclosure of ln Gamma(x) for x >= 1.
Interval lgamma_interval(double x);

// ln Gamma(x+s) - ln Gamma(x) for x >= 1, s >= 0, evaluated in a form that
// stays fully precise even when x is astronomically large.
Interval lgamma_ratio(double x, double s);

enum class DistFamily { GaussKuzmin, YuleSimon, Zeta };

struct DistId {
    DistFamily family;
    double param;

    explicit DistId(DistFamily f, double p = 0.0);
    static DistId parse(std::string_view text);  // "gk", "ys:1.5", "zeta:2"
    std::string name() const;
    bool operator==(const DistId&) const = default;
};

// Power-law envelope phi/(i+kappa)^(xi+1) <= p(i) <= phi/i^(xi+1), valid for
// every i >= i_min.
struct ProbSandwich {
    double xi;
    Interval phi;
    double kappa;
    std::uint64_t i_min;
};

class Distribution {
  public:
    explicit Distribution(DistId id);

    const DistId& id() const { return id_; }
    Interval pmf(std::uint64_t i) const;
    Interval tail(std::uint64_t x) const;         // sum of p(i) over i >= x
    Interval partial_sum(std::uint64_t n) const;  // sum of p(i) over i <= n
    bool has_finite_mean() const;
    Interval mean() const;                        // throws std::domain_error when infinite
    Interval first_moment_tail(std::uint64_t x) const;  // sum of i*p(i) over i >= x
    const ProbSandwich& prob_sandwich() const { return sandwich_; }
    Interval entropy_interval() const;

  private:
    DistId id_;
    ProbSandwich sandwich_;
    Interval zeta_s_;      // zeta family: zeta(s)
    Interval lgamma_rho1_; // yule-simon: ln Gamma(rho + 1)
};

// Sequential pmf evaluation from i = 1 upward; uses the product recurrence
// where one exists, which is cheaper and tighter than isolated pmf() calls.
class PmfScan {
  public:
    explicit PmfScan(const Distribution& dist);
    std::uint64_t symbol() const { return i_; }
    Interval next();

  private:
    const Distribution* dist_;
    std::uint64_t i_ = 1;
    Interval p_;
};

// Inverse-CDF sampler: exact prefix table for small symbols, closed-form tail
// inversion beyond it.
class Sampler {
  public:
    explicit Sampler(const Distribution& dist);
    std::uint64_t sample(std::mt19937_64& rng) const;

  private:
    Distribution dist_;
    std::vector<double> cdf_;  // cdf_[i] = P(symbol <= i), i = 0..table size
};

std::vector<std::uint64_t> sample(const Distribution& dist, std::mt19937_64& rng,
                                  std::size_t n);

// Bounds on sum_{i >= x} w(i) p(i) where a_lo*ln(i+c_lo)+d_lo <= w(i) <=
// a_hi*ln(i+c_hi)+d_hi and p obeys the sandwich.  Requires x > max(i_min, 2)
// and a nonnegative, eventually decreasing upper weight envelope.
Interval power_weight_tail(const ProbSandwich& ps, std::uint64_t x,
                           Interval a_lo, double c_lo, Interval d_lo,
                           Interval a_hi, double c_hi, Interval d_hi);

// Bounds on the entropy contribution of symbols i >= x.
Interval entropy_tail(const ProbSandwich& ps, std::uint64_t x);

}  // namespace pcpl
