#include "pcpl/bitio.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace pcpl {

void BitString::push_back(bool bit) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= std::uint64_t{1} << (63 - (size_ & 63));
    ++size_;
}

void BitString::append_bits(std::uint64_t value, unsigned count) {
    if (count == 0) return;
    if (count < 64) value &= (std::uint64_t{1} << count) - 1;
    unsigned free = 64 - (size_ & 63);
    if ((size_ & 63) == 0) {
        words_.push_back(0);
        free = 64;
    }
    if (count <= free) {
        words_.back() |= (free == 64 && count == 64) ? value : value << (free - count);
        size_ += count;
        return;
    }
    unsigned high = free, low = count - free;
    words_.back() |= value >> low;
    size_ += high;
    words_.push_back(low == 64 ? value : value << (64 - low));
    size_ += low;
}

void BitString::append_run(bool bit, std::size_t count) {
    if (!bit) {
        std::size_t target = size_ + count;
        while (size_ < target) {
            if ((size_ & 63) == 0) words_.push_back(0);
            std::size_t step = std::min<std::size_t>(64 - (size_ & 63), target - size_);
            size_ += step;
        }
        return;
    }
    while (count >= 64) {
        append_bits(~std::uint64_t{0}, 64);
        count -= 64;
    }
    if (count) append_bits(~std::uint64_t{0}, static_cast<unsigned>(count));
}

void BitString::append(const BitString& other) {
    std::size_t n = other.size_;
    for (std::size_t w = 0; n > 0; ++w) {
        unsigned take = static_cast<unsigned>(std::min<std::size_t>(64, n));
        append_bits(other.words_[w] >> (64 - take), take);
        n -= take;
    }
}

bool BitString::bit(std::size_t pos) const {
    return (words_[pos >> 6] >> (63 - (pos & 63))) & 1;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
}

BitString BitString::from_string(std::string_view s) {
    BitString b;
    for (char c : s) b.push_back(c == '1');
    return b;
}

bool BitString::operator==(const BitString& other) const {
    return size_ == other.size_ && words_ == other.words_;
}

LexOrder lex_compare(const BitString& a, const BitString& b) {
    std::size_t common = std::min(a.size(), b.size());
    std::size_t words = (common + 63) >> 6;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t wa = a.words()[w], wb = b.words()[w];
        std::size_t covered = (w + 1) << 6;
        if (covered > common) {
            unsigned pad = static_cast<unsigned>(covered - common);
            wa >>= pad;
            wb >>= pad;
        }
        if (wa != wb) return wa < wb ? LexOrder::LT : LexOrder::GT;
    }
    if (a.size() == b.size()) return LexOrder::EQ;
    return a.size() < b.size() ? LexOrder::Prefix : LexOrder::Extends;
}

bool BitCursor::read_bit() {
    if (pos_ >= src_->size()) throw TruncatedCodeword("bit stream exhausted");
    return src_->bit(pos_++);
}

std::uint64_t BitCursor::read_bits(unsigned count) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < count; ++i) v = (v << 1) | (read_bit() ? 1 : 0);
    return v;
}

namespace {

void put_u64be(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint64_t get_u64be(std::span<const std::uint8_t> b, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[at + i];
    return v;
}

}  // namespace

std::vector<std::uint8_t> frame_write(std::uint8_t family, std::int16_t param,
                                      std::uint64_t symbols, const BitString& payload) {
    std::vector<std::uint8_t> out = {'P', 'C', 'P', 'L', 0x01, family};
    out.push_back(static_cast<std::uint8_t>(static_cast<std::uint16_t>(param) >> 8));
    out.push_back(static_cast<std::uint8_t>(static_cast<std::uint16_t>(param) & 0xff));
    put_u64be(out, symbols);
    put_u64be(out, payload.size());
    std::size_t bytes = (payload.size() + 7) >> 3;
    auto words = payload.words();
    for (std::size_t i = 0; i < bytes; ++i)
        out.push_back(static_cast<std::uint8_t>(words[i >> 3] >> (56 - 8 * (i & 7))));
    return out;
}

std::vector<std::uint8_t> frame_write(std::uint8_t family, std::int16_t param,
                                      std::span<const BitString> codewords) {
    BitString payload;
    for (const auto& c : codewords) payload.append(c);
    return frame_write(family, param, codewords.size(), payload);
}

Frame frame_read(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), "PCPL", 4) != 0)
        throw BadMagic("not a PCPL frame");
    if (bytes.size() < 5 || bytes[4] != 0x01)
        throw BadVersion("unsupported frame version");
    if (bytes.size() < 24) throw TruncatedPayload("frame header incomplete");
    Frame f;
    f.info.family = bytes[5];
    f.info.param = static_cast<std::int16_t>((bytes[6] << 8) | bytes[7]);
    f.info.symbols = get_u64be(bytes, 8);
    f.info.payload_bits = get_u64be(bytes, 16);
    std::uint64_t need = (f.info.payload_bits + 7) >> 3;
    if (bytes.size() - 24 < need) throw TruncatedPayload("payload shorter than header declares");
    for (std::uint64_t i = 0; i < f.info.payload_bits; ++i) {
        std::uint8_t byte = bytes[24 + (i >> 3)];
        f.payload.push_back((byte >> (7 - (i & 7))) & 1);
    }
    return f;
}

}  // namespace pcpl
