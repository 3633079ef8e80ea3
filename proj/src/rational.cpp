#include "pcpl/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pcpl/errors.hpp"

namespace pcpl {

namespace {

using u64 = std::uint64_t;

constexpr std::size_t kHistogramBuckets = 128;

u64 checked_u64(const BigInt& v, const char* what) {
    if (v > BigInt(std::numeric_limits<u64>::max()))
        throw SymbolTooLarge(std::string(what) + " exceeds 64 bits");
    return v.convert_to<u64>();
}

// Back-substitution without the canonical-form gate, shared by the decoder,
// which must accept whatever terms the bits spell.
Rational reconstruct_raw(const BigInt& a0, const std::vector<BigInt>& terms) {
    BigInt num = 1;
    BigInt den = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        BigInt next_num = *it * num + den;
        den = std::exchange(num, std::move(next_num));
    }
    return Rational(a0 * num + den, num);
}

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (num < 0 || den < 0) throw std::invalid_argument("rational: negative component");
    BigInt g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
    if (num == 0) den = 1;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (num_part.empty() || den_part.empty())
        throw std::invalid_argument("rational: expected \"p/q\" or \"p\"");
    for (std::string_view part : {num_part, den_part})
        for (char c : part)
            if (c < '0' || c > '9')
                throw std::invalid_argument("rational: expected \"p/q\" or \"p\"");
    return Rational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

std::string Rational::str() const {
    std::string out = num.str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

CFTerms cf_expand(const Rational& r) {
    CFTerms t;
    t.a0 = r.num / r.den;
    BigInt p = r.num % r.den;
    BigInt q = r.den;
    while (p != 0) {
        t.terms.push_back(q / p);
        BigInt rem = q % p;
        q = std::exchange(p, std::move(rem));
    }
    return t;
}

Rational cf_reconstruct(const CFTerms& t) {
    if (t.a0 < 0) throw std::invalid_argument("continued fraction: negative integer part");
    for (const BigInt& a : t.terms)
        if (a < 1) throw std::invalid_argument("continued fraction: term below 1");
    if (!t.terms.empty() && t.terms.back() < 2)
        throw std::invalid_argument("continued fraction: non-canonical trailing 1");
    return reconstruct_raw(t.a0, t.terms);
}

BitString encode_rational(const Rational& r, CodeId term_code) {
    const CFTerms t = cf_expand(r);
    BitString out;
    encode_append(term_code, checked_u64(t.a0 + 1, "integer part"), out);
    encode_append(term_code, u64(t.terms.size()) + 1, out);
    for (const BigInt& a : t.terms)
        encode_append(term_code, checked_u64(a, "continued-fraction term"), out);
    return out;
}

Rational decode_rational(BitCursor& cursor, CodeId term_code) {
    const BigInt a0 = BigInt(decode(term_code, cursor)) - 1;
    const u64 n = decode(term_code, cursor) - 1;
    std::vector<BigInt> terms;
    terms.reserve(n < 4096 ? n : 4096);
    for (u64 j = 0; j < n; ++j) terms.push_back(BigInt(decode(term_code, cursor)));
    return reconstruct_raw(a0, terms);
}

TermHistogram cf_term_histogram(std::uint64_t sample_count, std::uint64_t den_bound,
                                std::mt19937_64& rng) {
    if (sample_count == 0) return {};
    if (den_bound < 2)
        throw std::invalid_argument("cf_term_histogram: need den_bound >= 2");

    std::vector<u64> first(kHistogramBuckets + 1, 0);
    std::vector<u64> deep(kHistogramBuckets + 1, 0);
    std::vector<u64> pooled(kHistogramBuckets + 1, 0);
    u64 first_total = 0, deep_total = 0, pooled_total = 0;

    std::uniform_int_distribution<u64> den_pick(2, den_bound);
    std::vector<u64> terms;
    for (u64 s = 0; s < sample_count; ++s) {
        u64 p, q;
        do {
            q = den_pick(rng);
            p = std::uniform_int_distribution<u64>(1, q - 1)(rng);
        } while (std::gcd(p, q) != 1);

        terms.clear();
        while (p != 0) {
            terms.push_back(q / p);
            q = std::exchange(p, q % p);
        }

        for (std::size_t pos = 1; pos <= terms.size(); ++pos) {
            const u64 a = terms[pos - 1];
            const bool in_range = a <= kHistogramBuckets;
            ++pooled_total;
            if (in_range) ++pooled[a];
            if (pos == 1) {
                ++first_total;
                if (in_range) ++first[a];
            }
            if (pos >= 4 && pos <= 6 && pos < terms.size()) {
                ++deep_total;
                if (in_range) ++deep[a];
            }
        }
    }

    TermHistogram h;
    const auto normalize = [](const std::vector<u64>& counts, u64 total) {
        std::vector<double> pmf(counts.size(), 0.0);
        if (total > 0)
            for (std::size_t i = 0; i < counts.size(); ++i)
                pmf[i] = double(counts[i]) / double(total);
        return pmf;
    };
    h.first = normalize(first, first_total);
    h.deep = normalize(deep, deep_total);
    h.pooled = normalize(pooled, pooled_total);
    return h;
}

}  // namespace pcpl
