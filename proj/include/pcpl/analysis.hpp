#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pcpl/codes.hpp"
#include "pcpl/distributions.hpp"

namespace pcpl {

// Two-sided logarithmic bracket on codeword lengths:
//   tau*ln(i+mu+1) + alpha <= n(i) <= upsilon*ln(i+mu) + beta   for i >= i_min.
struct LengthSandwich {
    double alpha;
    double beta;
    double mu;
    double tau;
    double upsilon;
    std::uint64_t i_min;
};

// Bracket parameters for a logarithmic-length family, numerically verified
// over i_min..10^6 before first use (then cached).  Families whose lengths
// grow linearly (unary, golomb) are rejected with std::invalid_argument.
LengthSandwich length_sandwich(CodeId code);

// Encloses sum_{i >= x} p(i) n(i).  Requires x > max(sw.i_min, ps.i_min, 2).
Interval tail_expected_length(const LengthSandwich& sw, const ProbSandwich& ps,
                              std::uint64_t x);

enum class EvalMethod { RigorousSandwich, EntropyTailEstimate, ClosedForm };

struct ExpectedLength {
    bool infinite = false;
    Interval value{0.0};
    EvalMethod method = EvalMethod::RigorousSandwich;
};

// Expected codeword length in bits per symbol: exact partial sum plus a
// rigorous tail, refined until the enclosure is no wider than precision, or
// flagged infinite for linear-length codes over infinite-mean distributions.
ExpectedLength expected_length(CodeId code, const Distribution& dist,
                               double precision = 1e-4);
ExpectedLength expected_length(CodeId code, DistId dist, double precision = 1e-4);

// Enclosure with the symbol cutoff pinned at exactly x, whatever width that
// yields; exposes the refinement trajectory for monotonicity checks.
Interval expected_length_at(CodeId code, const Distribution& dist, std::uint64_t x);

struct BestParameter {
    CodeId code;
    ExpectedLength value;
};

// Parameter minimizing the expected-length upper bound within the family's
// range; one-sided partial-sum cuts keep the search finite.  Ties prefer the
// smaller absolute parameter, then the smaller parameter.
BestParameter best_parameter(Family family, const Distribution& dist,
                             double precision = 1e-4);
BestParameter best_parameter(Family family, DistId dist, double precision = 1e-4);

// Group-structured prefix code: group h (1-based) holds 2^{k_h} consecutive
// symbols whose codewords are 1^{h-1} 0 followed by k_h plain offset bits,
// so n(i) = h + k_h throughout group h.
struct DesignerCode {
    std::vector<int> group_sizes;

    std::uint64_t groups() const { return group_sizes.size(); }
    std::uint64_t symbols_through(std::uint64_t h) const;
    std::uint64_t first_symbol(std::uint64_t h) const;
    std::uint64_t length(std::uint64_t i) const;
    BitString encode(std::uint64_t i) const;
};

// Sequential group selection: alg1 takes the smallest k_h whose normalized
// group mass exceeds (3-sqrt 5)/2; alg2 takes the k_h whose mass is closest
// to 1/2 (ties toward smaller k_h).  Groups stop at h_max or once the symbol
// boundary would pass 2^62.
DesignerCode golin_alg1(const Distribution& dist, int h_max = 64);
DesignerCode golin_alg2(const Distribution& dist, int h_max = 64);
DesignerCode golin_alg1(DistId dist, int h_max = 64);
DesignerCode golin_alg2(DistId dist, int h_max = 64);

// Estimate for the first h groups: the lower end adds the normalized-subtree
// entropy bound for everything past them, the upper end extends the design
// with a concrete gamma-style continuation.
Interval designer_expected_length(const DesignerCode& dc, const Distribution& dist,
                                  int h);
Interval designer_expected_length(const DesignerCode& dc, DistId dist, int h);

// Average bits of a minimum-redundancy code over {p(1..x-1), tail mass},
// charging the tail its conditional entropy; a point estimate by design.
double optimal_estimate(const Distribution& dist, std::uint64_t x);
double optimal_estimate(DistId dist, std::uint64_t x);
double huffman_estimate(std::span<const double> head, double tail_mass,
                        double tail_entropy);

// True when no plateau n(i+1) = n(i+2) is entered by a jump of more than one
// bit, over j < i <= N-2.
bool is_j_smooth(CodeId code, std::uint64_t j, std::uint64_t N);
bool is_j_smooth(std::span<const std::uint64_t> lengths, std::uint64_t j);

// True when p(i) < p(i+1) + p(i+2) holds strictly for all j < i <= N.
bool is_antiunary(const Distribution& dist, std::uint64_t j, std::uint64_t N);
bool is_antiunary(const std::function<double(std::uint64_t)>& pmf, std::uint64_t j,
                  std::uint64_t N);

// Exchange n(i)+1, n(i+1)-1, n(i+2)-1 at every jump-into-plateau site, left
// to right until none remain; never increases Kraft mass and the result is
// 0-smooth.  Rejects inputs whose Kraft mass already exceeds one.
std::vector<std::uint64_t> smooth_improve(std::vector<std::uint64_t> lengths);

struct CodeReport {
    DistId dist;
    std::string column;      // grid column label
    std::string code_param;  // winning code id, or designer group count
    ExpectedLength value;
    std::string note;
};

std::vector<DistId> table2_distributions();

// One row per distribution; columns: entropy, optimal, golin1, golin2,
// codek, levenshtein, elias, yokoo, golomb.
std::vector<CodeReport> table2_row(DistId dist, double precision = 1e-4);
std::vector<std::vector<CodeReport>> table2_grid(double precision = 1e-4);
std::string grid_csv(const std::vector<std::vector<CodeReport>>& grid);
std::string grid_json(const std::vector<std::vector<CodeReport>>& grid);

struct MonteCarlo {
    double mean;
    double std_error;
};

MonteCarlo monte_carlo_check(CodeId code, const Distribution& dist, std::uint64_t n,
                             std::mt19937_64& rng);

}  // namespace pcpl
