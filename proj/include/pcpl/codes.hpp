#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcpl/bitio.hpp"

namespace pcpl {

enum class Family : std::uint8_t {
    Unary = 1,
    EliasGamma = 2,
    EliasDelta = 3,
    EliasOmega = 4,
    Levenshtein = 5,
    Golomb = 6,
    ExpGolomb = 7,
    CodeK = 8,
    Yokoo = 9,
};

inline constexpr int kGolombMaxParam = 32767;
inline constexpr int kExpGolombMaxParam = 62;
inline constexpr int kCodeKMinParam = -64;
inline constexpr int kCodeKMaxParam = 32;

// A code family plus its integer parameter; one value selects one length
// distribution over the alphabet {1, 2, 3, ...}.
struct CodeId {
    Family family;
    int param;

    CodeId(Family f, int p = 0);
    static CodeId parse(std::string_view text);  // e.g. "codek:-1", "golomb:3", "gamma"
    std::string name() const;
    bool operator==(const CodeId&) const = default;
};

// Codewords longer than this trip SymbolTooLarge from encode/codeword_length.
inline constexpr std::uint32_t kMaxCodewordBits = 1u << 20;

// Alphabetic code over k symbols using only lengths floor(lg k) and ceil(lg k).
BitString complete_binary(std::uint64_t j, std::uint64_t k);
void complete_binary_append(std::uint64_t j, std::uint64_t k, BitString& out);
std::uint32_t complete_binary_length(std::uint64_t j, std::uint64_t k);
std::uint64_t complete_binary_decode(BitCursor& cur, std::uint64_t k);

BitString encode(CodeId code, std::uint64_t i);
void encode_append(CodeId code, std::uint64_t i, BitString& out);
std::uint64_t decode(CodeId code, BitCursor& cur);
std::uint32_t codeword_length(CodeId code, std::uint64_t i);

// Length without the emit guard; analysis integrates lengths far past any
// codeword that would ever be materialized.
std::uint64_t unbounded_length(CodeId code, std::uint64_t i);

struct CodebookRow {
    std::uint64_t symbol;
    std::uint32_t bits;
    BitString codeword;
};

std::vector<CodebookRow> codebook(CodeId code, std::uint64_t count);

// Maximal run of consecutive symbols sharing one codeword length.
struct LengthRun {
    std::uint64_t first;
    std::uint64_t count;
    std::uint64_t bits;
};

// Walks a code's length runs in symbol order; exhausted (or past 2^62) -> nullopt.
class RunCursor {
  public:
    explicit RunCursor(CodeId code);
    std::optional<LengthRun> next();

  private:
    CodeId code_;
    std::uint64_t group_ = 0;  // family-specific group index
    int sub_ = 0;              // sub-run within the group
    bool done_ = false;
};

}  // namespace pcpl
