#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcpl/errors.hpp"

namespace pcpl {

// Packed bit sequence, MSB-first within each 64-bit word: bit p lives in
// word p>>6 at shift 63-(p&63).  Length is exact; trailing word bits past
// size() are kept zero.
class BitString {
  public:
    BitString() = default;

    void push_back(bool bit);
    // Appends the low `count` bits of value, most significant first.
    void append_bits(std::uint64_t value, unsigned count);
    void append_run(bool bit, std::size_t count);
    void append(const BitString& other);

    bool bit(std::size_t pos) const;
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    std::string to_string() const;
    static BitString from_string(std::string_view s);

    bool operator==(const BitString& other) const;
    std::span<const std::uint64_t> words() const { return words_; }

  private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

enum class LexOrder { LT, EQ, GT, Prefix, Extends };

// First-differing-bit comparison; Prefix means a is a proper prefix of b.
LexOrder lex_compare(const BitString& a, const BitString& b);

class BitCursor {
  public:
    explicit BitCursor(const BitString& source) : src_(&source) {}

    bool read_bit();
    std::uint64_t read_bits(unsigned count);
    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return src_->size() - pos_; }

  private:
    const BitString* src_;
    std::size_t pos_ = 0;
};

struct FrameInfo {
    std::uint8_t family = 0;
    std::int16_t param = 0;
    std::uint64_t symbols = 0;
    std::uint64_t payload_bits = 0;
};

struct Frame {
    FrameInfo info;
    BitString payload;
};

// Container: "PCPL", version 0x01, family byte, int16 BE param,
// u64 BE symbol count, u64 BE payload bit count, payload MSB-first
// zero-padded to a byte boundary.
std::vector<std::uint8_t> frame_write(std::uint8_t family, std::int16_t param,
                                      std::span<const BitString> codewords);
std::vector<std::uint8_t> frame_write(std::uint8_t family, std::int16_t param,
                                      std::uint64_t symbols, const BitString& payload);

// Trailing bytes beyond the declared payload are ignored.
Frame frame_read(std::span<const std::uint8_t> bytes);

}  // namespace pcpl
