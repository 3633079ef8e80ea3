#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcpl/bitio.hpp"
#include "pcpl/codes.hpp"

namespace pcpl {

using BigInt = boost::multiprecision::cpp_int;

// Nonnegative rational in lowest terms.
struct Rational {
    BigInt num;  // >= 0
    BigInt den;  // >= 1, gcd(num, den) == 1

    Rational() : num(0), den(1) {}
    Rational(BigInt n, BigInt d);  // normalizes; rejects den = 0 and negatives

    static Rational parse(std::string_view text);  // "p/q" or bare "p"
    std::string str() const;                       // "p/q", or "p" when den is 1

    bool operator==(const Rational&) const = default;
};

// Canonical continued fraction a0 + 1/(a1 + 1/(... + 1/an)): every term is
// at least 1 and the last is at least 2, except the bare-integer case with
// no terms at all.
struct CFTerms {
    BigInt a0;                  // >= 0
    std::vector<BigInt> terms;  // each >= 1, last >= 2

    bool operator==(const CFTerms&) const = default;
};

// Euclidean expansion; always lands in canonical form.
CFTerms cf_expand(const Rational& r);

// Exact back-substitution; rejects non-canonical input.
Rational cf_reconstruct(const CFTerms& t);

// Self-delimiting binary form: term_code(a0+1), term_code(n+1), then
// term_code(a_j) for each of the n terms.  The +1 shifts exist because the
// codes' alphabet starts at 1.
BitString encode_rational(const Rational& r,
                          CodeId term_code = CodeId(Family::CodeK, -1));
Rational decode_rational(BitCursor& cursor,
                         CodeId term_code = CodeId(Family::CodeK, -1));

// Empirical pmf of continued-fraction coefficients over uniformly sampled
// rationals p/q with 1 <= p < q <= den_bound and gcd(p, q) = 1.  Index b
// holds the relative frequency of coefficient value b (index 0 unused);
// values past the bucket range count toward the normalizer only.  `first`
// sees position 1; `deep` the fixed window of positions 4..6, excluding the
// final quotient (structurally >= 2) -- deep enough for the digit law to set
// in, shallow enough that requiring the expansion to continue past the
// position does not select for long, 1-rich expansions; `pooled` every
// position.
struct TermHistogram {
    std::vector<double> first;
    std::vector<double> deep;
    std::vector<double> pooled;
};

TermHistogram cf_term_histogram(std::uint64_t sample_count, std::uint64_t den_bound,
                                std::mt19937_64& rng);

}  // namespace pcpl
