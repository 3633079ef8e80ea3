#include "pcpl/codes.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace pcpl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kRunCap = u64{1} << 62;

unsigned flg(u64 x) { return std::bit_width(x) - 1; }

// Count of codewords that keep the shorter length in a complete binary code:
// 2^(L+1) - k, computed mod 2^64 so k near 2^63 still works.
u64 cb_split(u64 k, unsigned lo) {
    return (lo >= 63 ? u64{0} : u64{1} << (lo + 1)) - k;
}

// n_omega(i): 1 for i = 1, else n_omega(floor(lg i)) + floor(lg i) + 1.
std::uint32_t omega_len(u64 i) {
    std::uint32_t n = 1;
    while (i >= 2) {
        unsigned g = flg(i);
        n += g + 1;
        i = g;
    }
    return n;
}

// Canonical prefix of the omega length-group g: value and bit count.
// p_1 = 0b10; p_{g+1} = (p_g + 1) << (n_omega(g+1) - n_omega(g)).
struct OmegaGroup {
    u64 prefix;
    std::uint32_t prefix_bits;  // n_omega(g) + 1
};

const std::array<OmegaGroup, 64>& omega_groups() {
    static const auto table = [] {
        std::array<OmegaGroup, 64> t{};
        t[1] = {0b10, 2};
        for (unsigned g = 2; g < 64; ++g) {
            std::uint32_t bits = omega_len(g) + 1;
            t[g] = {(t[g - 1].prefix + 1) << (bits - t[g - 1].prefix_bits), bits};
        }
        return t;
    }();
    return table;
}

void check_symbol(u64 i) {
    if (i == 0) throw std::invalid_argument("symbols start at 1");
}

[[noreturn]] void too_large(const char* what) { throw SymbolTooLarge(what); }

// ---- per-family encoders ----

void unary_append(u64 i, BitString& out) {
    if (i > kMaxCodewordBits) too_large("unary codeword exceeds bit guard");
    out.append_run(true, i - 1);
    out.push_back(false);
}

void golomb_append(u64 k, u64 i, BitString& out) {
    u64 q = (i - 1) / static_cast<u64>(k), r = (i - 1) % static_cast<u64>(k);
    if (q + 1 + complete_binary_length(r, k) > kMaxCodewordBits)
        too_large("golomb codeword exceeds bit guard");
    out.append_run(true, q);
    out.push_back(false);
    complete_binary_append(r, k, out);
}

void gamma_append(u64 i, BitString& out) {
    unsigned m = flg(i);
    out.append_run(true, m);
    out.push_back(false);
    out.append_bits(i - (u64{1} << m), m);
}

void delta_append(u64 i, BitString& out) {
    unsigned m = flg(i);
    gamma_append(m + 1, out);
    out.append_bits(i - (u64{1} << m), m);
}

void omega_append(u64 i, BitString& out) {
    if (i == 1) {
        out.push_back(false);
        return;
    }
    unsigned g = flg(i);
    const auto& grp = omega_groups()[g];
    out.append_bits(grp.prefix, grp.prefix_bits);
    out.append_bits(i - (u64{1} << g), g);
}

void lev_append(u64 i, BitString& out) {
    if (i == 1) {
        out.push_back(false);
        return;
    }
    out.push_back(true);
    omega_append(i - 1, out);
}

void expgolomb_append(unsigned k, u64 i, BitString& out) {
    u64 q = (i - 1) >> k;
    if (q == ~u64{0}) too_large("expgolomb quotient overflow");
    gamma_append(q + 1, out);
    out.append_bits((i - 1) & ((u64{1} << k) - 1), k);
}

// Code 0 applied to quotient Q >= 1: unary group selector 1^{m-1}0 followed
// by the complete binary code over 3*2^{m-1} values.
unsigned code0_group(u64 q) { return std::bit_width((q - 1) / 3 + 1); }

void code0_append(u64 q, BitString& out) {
    unsigned m = code0_group(q);
    u64 base = 3 * (u64{1} << (m - 1)) - 2;
    out.append_run(true, m - 1);
    out.push_back(false);
    complete_binary_append(q - base, 3 * (u64{1} << (m - 1)), out);
}

std::uint32_t code0_length(u64 q) {
    unsigned m = code0_group(q);
    u64 base = 3 * (u64{1} << (m - 1)) - 2;
    return 2 * m + (q - base >= (u64{1} << (m - 1)) ? 1 : 0);
}

void codek_append(int k, u64 i, BitString& out) {
    if (k >= 0) {
        u64 q = ((i - 1) >> k) + 1;
        code0_append(q, out);
        out.append_bits((i - 1) & ((u64{1} << k) - 1), static_cast<unsigned>(k));
        return;
    }
    u64 kappa = static_cast<u64>(-k);
    if (i <= kappa) {
        out.append_run(true, i - 1);
        out.push_back(false);
        return;
    }
    out.append_run(true, kappa);
    code0_append(i - kappa, out);
}

// Yokoo: group g = floor(lg i) splits at q_g = 2^g + m_g, m_g = (2^g - (-1)^g)/3.
u64 yokoo_mg(unsigned g) { return ((u64{1} << g) + (g % 2 ? 1 : -1)) / 3; }

void yokoo_append(u64 i, BitString& out) {
    if (i == 1) {
        out.push_back(false);
        return;
    }
    unsigned g = flg(i);
    u64 m = yokoo_mg(g), q = (u64{1} << g) + m;
    out.append_run(true, g);
    if (i < q) {
        out.append_bits(0b00, 2);
        complete_binary_append(i - (u64{1} << g), m, out);
    } else {
        out.append_bits(0b01, 2);
        complete_binary_append(i - q, (u64{1} << g) - m, out);
    }
}

// ---- per-family decoders ----

u64 count_ones(BitCursor& cur) {
    u64 n = 0;
    while (cur.read_bit()) ++n;
    return n;
}

u64 gamma_decode(BitCursor& cur) {
    u64 m = count_ones(cur);
    if (m >= 64) too_large("gamma symbol exceeds 64 bits");
    return (u64{1} << m) + cur.read_bits(static_cast<unsigned>(m));
}

u64 omega_decode(BitCursor& cur) {
    if (!cur.read_bit()) return 1;
    const auto& groups = omega_groups();
    u128 w = 1;
    std::uint32_t have = 1;
    for (unsigned g = 1; g < 64; ++g) {
        std::uint32_t want = groups[g].prefix_bits + g;
        while (have < want) {
            w = (w << 1) | (cur.read_bit() ? 1 : 0);
            ++have;
        }
        u128 head = w >> g;
        if (head == groups[g].prefix)
            return (u64{1} << g) + static_cast<u64>(w & (((u128{1}) << g) - 1));
        if (head < groups[g].prefix) throw InvalidCodeword("bits precede the code range");
    }
    too_large("omega symbol exceeds 64 bits");
}

u64 code0_decode(BitCursor& cur) {
    u64 m = count_ones(cur) + 1;
    if (m > 63) too_large("code-0 group exceeds 64-bit symbols");
    u64 base = 3 * (u64{1} << (m - 1)) - 2;
    u128 q = static_cast<u128>(base) + complete_binary_decode(cur, 3 * (u64{1} << (m - 1)));
    if (q > ~u64{0}) too_large("code-0 symbol exceeds 64 bits");
    return static_cast<u64>(q);
}

u64 unary_decode(BitCursor& cur) { return count_ones(cur) + 1; }

u64 golomb_decode(u64 k, BitCursor& cur) {
    u64 q = count_ones(cur);
    u64 r = complete_binary_decode(cur, k);
    if (q > (~u64{0} - r - 1) / k) too_large("golomb symbol exceeds 64 bits");
    return q * k + r + 1;
}

u64 delta_decode(BitCursor& cur) {
    u64 m = gamma_decode(cur) - 1;
    if (m >= 64) too_large("delta symbol exceeds 64 bits");
    return (u64{1} << m) + cur.read_bits(static_cast<unsigned>(m));
}

u64 lev_decode(BitCursor& cur) {
    if (!cur.read_bit()) return 1;
    u64 v = omega_decode(cur);
    if (v == ~u64{0}) too_large("levenshtein symbol exceeds 64 bits");
    return v + 1;
}

u64 expgolomb_decode(unsigned k, BitCursor& cur) {
    u64 q = gamma_decode(cur);
    u64 r = cur.read_bits(k);
    u128 i = ((static_cast<u128>(q) - 1) << k) + r + 1;
    if (i > ~u64{0}) too_large("expgolomb symbol exceeds 64 bits");
    return static_cast<u64>(i);
}

u64 codek_decode(int k, BitCursor& cur) {
    if (k >= 0) {
        u64 q = code0_decode(cur);
        u64 r = cur.read_bits(static_cast<unsigned>(k));
        u128 i = ((static_cast<u128>(q) - 1) << k) + r + 1;
        if (i > ~u64{0}) too_large("code-k symbol exceeds 64 bits");
        return static_cast<u64>(i);
    }
    u64 kappa = static_cast<u64>(-k);
    for (u64 t = 0; t < kappa; ++t)
        if (!cur.read_bit()) return t + 1;
    u64 v = code0_decode(cur);
    if (v > ~u64{0} - kappa) too_large("code-k symbol exceeds 64 bits");
    return kappa + v;
}

u64 yokoo_decode(BitCursor& cur) {
    if (!cur.read_bit()) return 1;
    u64 g = count_ones(cur) + 1;  // remaining ones plus the one just read
    if (g >= 64) too_large("yokoo symbol exceeds 64 bits");
    u64 m = yokoo_mg(static_cast<unsigned>(g));
    if (!cur.read_bit()) return (u64{1} << g) + complete_binary_decode(cur, m);
    return (u64{1} << g) + m + complete_binary_decode(cur, (u64{1} << g) - m);
}

// ---- length runs ----

struct GroupRuns {
    LengthRun runs[4];
    int n = 0;
    void add(u64 first, u64 count, u64 bits) { runs[n++] = {first, count, bits}; }
    void add_cb_block(u64 base, u64 k, u64 prefix_bits) {
        unsigned lo = flg(k);
        if ((k & (k - 1)) == 0) {
            add(base, k, prefix_bits + lo);
            return;
        }
        u64 split = cb_split(k, lo);
        add(base, split, prefix_bits + lo);
        add(base + split, k - split, prefix_bits + lo + 1);
    }
};

GroupRuns code0_runs(u64 m) {
    GroupRuns r;
    if (m > 61) return r;
    u64 base = 3 * (u64{1} << (m - 1)) - 2;
    r.add(base, u64{1} << (m - 1), 2 * m);
    r.add(base + (u64{1} << (m - 1)), u64{1} << m, 2 * m + 1);
    return r;
}

GroupRuns group_runs(CodeId code, u64 g) {
    GroupRuns r;
    switch (code.family) {
        case Family::Unary:
            r.add(g + 1, 1, g + 1);
            break;
        case Family::Golomb: {
            u64 k = static_cast<u64>(code.param);
            if (g > (~u64{0} - 1) / k) break;
            r.add_cb_block(1 + g * k, k, g + 1);
            break;
        }
        case Family::EliasGamma:
            if (g <= 62) r.add(u64{1} << g, u64{1} << g, 2 * g + 1);
            break;
        case Family::EliasDelta:
            if (g <= 62) r.add(u64{1} << g, u64{1} << g, g + 2 * std::bit_width(g + 1) - 1);
            break;
        case Family::EliasOmega:
            if (g == 0)
                r.add(1, 1, 1);
            else if (g <= 62)
                r.add(u64{1} << g, u64{1} << g, omega_len(g) + g + 1);
            break;
        case Family::Levenshtein:
            if (g == 0) {
                r.add(1, 1, 1);
                r.add(2, 1, 2);
            } else if (g <= 62) {
                r.add((u64{1} << g) + 1, u64{1} << g, omega_len(g) + g + 2);
            }
            break;
        case Family::ExpGolomb: {
            unsigned k = static_cast<unsigned>(code.param);
            if (g + k <= 62)
                r.add((((u64{1} << g) - 1) << k) + 1, u64{1} << (g + k), 2 * g + 1 + k);
            break;
        }
        case Family::CodeK: {
            int k = code.param;
            if (k >= 0) {
                GroupRuns base = code0_runs(g + 1);
                for (int t = 0; t < base.n; ++t) {
                    auto [f, c, b] = base.runs[t];
                    if (f - 1 > (kRunCap >> k)) continue;
                    r.add(((f - 1) << k) + 1, c << k, b + k);
                }
            } else {
                u64 kappa = static_cast<u64>(-code.param);
                if (g < kappa) {
                    r.add(g + 1, 1, g + 1);
                } else {
                    GroupRuns base = code0_runs(g - kappa + 1);
                    for (int t = 0; t < base.n; ++t) {
                        auto [f, c, b] = base.runs[t];
                        r.add(f + kappa, c, b + kappa);
                    }
                }
            }
            break;
        }
        case Family::Yokoo:
            if (g == 0) {
                r.add(1, 1, 1);
            } else if (g <= 62) {
                u64 m = yokoo_mg(static_cast<unsigned>(g));
                r.add_cb_block(u64{1} << g, m, g + 2);
                r.add_cb_block((u64{1} << g) + m, (u64{1} << g) - m, g + 2);
            }
            break;
    }
    return r;
}

}  // namespace

CodeId::CodeId(Family f, int p) : family(f), param(p) {
    switch (f) {
        case Family::Golomb:
            if (p < 1 || p > kGolombMaxParam) throw std::invalid_argument("golomb parameter out of range");
            break;
        case Family::ExpGolomb:
            if (p < 0 || p > kExpGolombMaxParam) throw std::invalid_argument("expgolomb parameter out of range");
            break;
        case Family::CodeK:
            if (p < kCodeKMinParam || p > kCodeKMaxParam) throw std::invalid_argument("code-k parameter out of range");
            break;
        default:
            if (p != 0) throw std::invalid_argument("family takes no parameter");
    }
}

CodeId CodeId::parse(std::string_view text) {
    std::string_view name = text;
    int param = 0;
    bool has_param = false;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        name = text.substr(0, colon);
        auto rest = text.substr(colon + 1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), param);
        if (ec != std::errc{} || ptr != rest.data() + rest.size())
            throw std::invalid_argument("bad code parameter: " + std::string(text));
        has_param = true;
    }
    Family f;
    if (name == "unary") f = Family::Unary;
    else if (name == "gamma") f = Family::EliasGamma;
    else if (name == "delta") f = Family::EliasDelta;
    else if (name == "omega") f = Family::EliasOmega;
    else if (name == "levenshtein") f = Family::Levenshtein;
    else if (name == "golomb") f = Family::Golomb;
    else if (name == "expgolomb") f = Family::ExpGolomb;
    else if (name == "codek") f = Family::CodeK;
    else if (name == "yokoo") f = Family::Yokoo;
    else throw std::invalid_argument("unknown code family: " + std::string(name));
    if (f == Family::Golomb && !has_param) param = 1;
    return CodeId(f, param);
}

std::string CodeId::name() const {
    switch (family) {
        case Family::Unary: return "unary";
        case Family::EliasGamma: return "gamma";
        case Family::EliasDelta: return "delta";
        case Family::EliasOmega: return "omega";
        case Family::Levenshtein: return "levenshtein";
        case Family::Golomb: return "golomb:" + std::to_string(param);
        case Family::ExpGolomb: return "expgolomb:" + std::to_string(param);
        case Family::CodeK: return "codek:" + std::to_string(param);
        case Family::Yokoo: return "yokoo";
    }
    return "?";
}

void complete_binary_append(u64 j, u64 k, BitString& out) {
    if (k < 1) throw std::invalid_argument("complete_binary: k must be positive");
    if (j >= k) throw std::out_of_range("complete_binary: j out of range");
    unsigned lo = flg(k);
    if ((k & (k - 1)) == 0) {
        out.append_bits(j, lo);
        return;
    }
    u64 split = cb_split(k, lo);
    if (j < split)
        out.append_bits(j, lo);
    else
        out.append_bits(j + split, lo + 1);
}

BitString complete_binary(u64 j, u64 k) {
    BitString out;
    complete_binary_append(j, k, out);
    return out;
}

std::uint32_t complete_binary_length(u64 j, u64 k) {
    if (k < 1) throw std::invalid_argument("complete_binary: k must be positive");
    if (j >= k) throw std::out_of_range("complete_binary: j out of range");
    unsigned lo = flg(k);
    if ((k & (k - 1)) == 0) return lo;
    return j < cb_split(k, lo) ? lo : lo + 1;
}

std::uint64_t complete_binary_decode(BitCursor& cur, u64 k) {
    if (k < 1) throw std::invalid_argument("complete_binary: k must be positive");
    unsigned lo = flg(k);
    u64 v = cur.read_bits(lo);
    if ((k & (k - 1)) == 0) return v;
    u64 split = cb_split(k, lo);
    if (v < split) return v;
    return 2 * v + (cur.read_bit() ? 1 : 0) - split;
}

void encode_append(CodeId code, u64 i, BitString& out) {
    check_symbol(i);
    switch (code.family) {
        case Family::Unary: unary_append(i, out); break;
        case Family::EliasGamma: gamma_append(i, out); break;
        case Family::EliasDelta: delta_append(i, out); break;
        case Family::EliasOmega: omega_append(i, out); break;
        case Family::Levenshtein: lev_append(i, out); break;
        case Family::Golomb: golomb_append(static_cast<u64>(code.param), i, out); break;
        case Family::ExpGolomb: expgolomb_append(static_cast<unsigned>(code.param), i, out); break;
        case Family::CodeK: codek_append(code.param, i, out); break;
        case Family::Yokoo: yokoo_append(i, out); break;
    }
}

BitString encode(CodeId code, u64 i) {
    BitString out;
    encode_append(code, i, out);
    return out;
}

std::uint64_t decode(CodeId code, BitCursor& cur) {
    switch (code.family) {
        case Family::Unary: return unary_decode(cur);
        case Family::EliasGamma: return gamma_decode(cur);
        case Family::EliasDelta: return delta_decode(cur);
        case Family::EliasOmega: return omega_decode(cur);
        case Family::Levenshtein: return lev_decode(cur);
        case Family::Golomb: return golomb_decode(static_cast<u64>(code.param), cur);
        case Family::ExpGolomb: return expgolomb_decode(static_cast<unsigned>(code.param), cur);
        case Family::CodeK: return codek_decode(code.param, cur);
        case Family::Yokoo: return yokoo_decode(cur);
    }
    throw std::logic_error("unreachable");
}

std::uint64_t unbounded_length(CodeId code, u64 i) {
    check_symbol(i);
    switch (code.family) {
        case Family::Unary: return i;
        case Family::Golomb: {
            u64 k = static_cast<u64>(code.param);
            return (i - 1) / k + 1 + complete_binary_length((i - 1) % k, k);
        }
        case Family::EliasGamma: return 2 * static_cast<u64>(flg(i)) + 1;
        case Family::EliasDelta: {
            unsigned m = flg(i);
            return m + 2 * std::bit_width(static_cast<u64>(m) + 1) - 1;
        }
        case Family::EliasOmega: return omega_len(i);
        case Family::Levenshtein: return i == 1 ? 1 : omega_len(i - 1) + 1;
        case Family::ExpGolomb: {
            unsigned k = static_cast<unsigned>(code.param);
            return 2 * static_cast<u64>(flg(((i - 1) >> k) + 1)) + 1 + k;
        }
        case Family::CodeK: {
            int k = code.param;
            if (k >= 0) return code0_length(((i - 1) >> k) + 1) + static_cast<u64>(k);
            u64 kappa = static_cast<u64>(-k);
            return i <= kappa ? i : kappa + code0_length(i - kappa);
        }
        case Family::Yokoo: {
            if (i == 1) return 1;
            unsigned g = flg(i);
            u64 m = yokoo_mg(g), q = (u64{1} << g) + m;
            if (i < q) return g + 2 + complete_binary_length(i - (u64{1} << g), m);
            return g + 2 + complete_binary_length(i - q, (u64{1} << g) - m);
        }
    }
    throw std::logic_error("unreachable");
}

std::uint32_t codeword_length(CodeId code, u64 i) {
    u64 n = unbounded_length(code, i);
    if (n > kMaxCodewordBits) too_large("codeword exceeds bit guard");
    return static_cast<std::uint32_t>(n);
}

std::vector<CodebookRow> codebook(CodeId code, u64 count) {
    std::vector<CodebookRow> rows;
    rows.reserve(count);
    for (u64 i = 1; i <= count; ++i)
        rows.push_back({i, codeword_length(code, i), encode(code, i)});
    return rows;
}

RunCursor::RunCursor(CodeId code) : code_(code) {}

std::optional<LengthRun> RunCursor::next() {
    while (!done_) {
        GroupRuns runs = group_runs(code_, group_);
        if (runs.n == 0) {
            done_ = true;
            break;
        }
        if (sub_ < runs.n) {
            LengthRun run = runs.runs[sub_++];
            if (run.first > kRunCap) {
                done_ = true;
                break;
            }
            return run;
        }
        ++group_;
        sub_ = 0;
    }
    return std::nullopt;
}

}  // namespace pcpl
