#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace k2dyn {

/// Raised when serialized input is malformed (bad magic, truncation,
/// inconsistent header fields, non-canonical padding).
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Packed bit sequence. Bit i lives in word i/64 at bit i%64, which makes the
/// byte layout LSB-first within each byte, bytes in ascending position order.
/// Bits past size() in the last word are kept zero (canonical padding).
class BitVector {
public:
    BitVector() = default;

    /// Zero-filled vector of `len` bits.
    explicit BitVector(std::uint64_t len);

    void push_back(bool bit);
    void set(std::uint64_t i, bool value);

    bool get(std::uint64_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    std::uint64_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    std::uint64_t popcount() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Appends all bits of `other` after the current last bit.
    void append(const BitVector& other);

    void reserve(std::uint64_t bits) { words_.reserve((bits + 63) >> 6); }

    bool operator==(const BitVector&) const = default;

    /// Writes ceil(size()/8) bytes, no length prefix.
    void write_packed(std::ostream& out) const;
    /// Reads ceil(len/8) bytes; rejects nonzero padding bits.
    static BitVector read_packed(std::istream& in, std::uint64_t len);

    /// Length as u64-LE followed by the packed bytes.
    void serialize(std::ostream& out) const;
    static BitVector deserialize(std::istream& in);

private:
    void check_index(std::uint64_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector: index past end");
    }

    std::vector<std::uint64_t> words_;
    std::uint64_t len_ = 0;
};

/// Immutable bit vector with O(1) rank over a two-level directory:
/// superblocks of 512 bits carry cumulative 64-bit counts, blocks of 64 bits
/// carry 16-bit counts relative to their superblock. The directory is built
/// once and never mutated.
class RankBitVector {
public:
    RankBitVector() = default;
    explicit RankBitVector(BitVector bits);

    /// Number of set bits in positions [0, i). i == size() is allowed and
    /// yields the full popcount; anything larger is out of range.
    std::uint64_t rank1(std::uint64_t i) const;

    bool get(std::uint64_t i) const { return bits_.get(i); }
    std::uint64_t size() const noexcept { return bits_.size(); }
    std::uint64_t ones() const noexcept;
    const BitVector& bits() const noexcept { return bits_; }

private:
    static constexpr std::uint64_t kSuperblockBits = 512;
    static constexpr std::uint64_t kBlockBits = 64;

    BitVector bits_;
    std::vector<std::uint64_t> superblocks_;
    std::vector<std::uint16_t> blocks_;
};

/// Bit vector that only permits 1 -> 0 transitions after construction.
class ClearableBitVector {
public:
    ClearableBitVector() = default;
    explicit ClearableBitVector(BitVector bits) : bits_(std::move(bits)) {}

    /// Clears bit i and returns its previous value.
    bool clear(std::uint64_t i) {
        bool prev = bits_.get(i);
        if (prev) bits_.set(i, false);
        return prev;
    }

    bool get(std::uint64_t i) const { return bits_.get(i); }
    std::uint64_t size() const noexcept { return bits_.size(); }
    std::uint64_t popcount() const noexcept { return bits_.popcount(); }
    const BitVector& bits() const noexcept { return bits_; }

private:
    BitVector bits_;
};

// Little-endian scalar IO shared by every serialized format in the library.
void write_u64_le(std::ostream& out, std::uint64_t value);
std::uint64_t read_u64_le(std::istream& in);
void write_byte(std::ostream& out, std::uint8_t value);
std::uint8_t read_byte(std::istream& in);

}  // namespace k2dyn
