#include "k2dyn/bitvector.hpp"

#include <bit>
#include <istream>
#include <ostream>

namespace k2dyn {

void write_u64_le(std::ostream& out, std::uint64_t value) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
    out.write(buf, 8);
}

std::uint64_t read_u64_le(std::istream& in) {
    char buf[8];
    in.read(buf, 8);
    if (in.gcount() != 8) throw format_error("truncated input: expected u64");
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i)
        value |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return value;
}

void write_byte(std::ostream& out, std::uint8_t value) {
    out.put(static_cast<char>(value));
}

std::uint8_t read_byte(std::istream& in) {
    int c = in.get();
    if (c == std::char_traits<char>::eof()) throw format_error("truncated input: expected byte");
    return static_cast<std::uint8_t>(c);
}

BitVector::BitVector(std::uint64_t len) : words_((len + 63) >> 6, 0), len_(len) {}

void BitVector::push_back(bool bit) {
    if ((len_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= std::uint64_t{1} << (len_ & 63);
    ++len_;
}

void BitVector::set(std::uint64_t i, bool value) {
    check_index(i);
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

std::uint64_t BitVector::popcount() const noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

void BitVector::append(const BitVector& other) {
    std::uint64_t new_len = len_ + other.len_;
    std::size_t new_words = (new_len + 63) >> 6;
    std::uint64_t shift = len_ & 63;
    if (shift == 0) {
        words_.insert(words_.end(), other.words_.begin(), other.words_.end());
    } else {
        std::size_t base = len_ >> 6;  // the partial word holding the tail
        words_.resize(new_words, 0);
        for (std::size_t w = 0; w < other.words_.size(); ++w) {
            words_[base + w] |= other.words_[w] << shift;
            // spill past new_words is padding of `other` and therefore zero
            if (base + w + 1 < new_words)
                words_[base + w + 1] |= other.words_[w] >> (64 - shift);
        }
    }
    len_ = new_len;
}

void BitVector::write_packed(std::ostream& out) const {
    std::uint64_t nbytes = (len_ + 7) >> 3;
    std::vector<char> buf(nbytes);
    for (std::uint64_t j = 0; j < nbytes; ++j)
        buf[j] = static_cast<char>((words_[j >> 3] >> ((j & 7) * 8)) & 0xFF);
    out.write(buf.data(), static_cast<std::streamsize>(nbytes));
}

BitVector BitVector::read_packed(std::istream& in, std::uint64_t len) {
    std::uint64_t nbytes = (len + 7) >> 3;
    std::vector<char> buf(nbytes);
    in.read(buf.data(), static_cast<std::streamsize>(nbytes));
    if (static_cast<std::uint64_t>(in.gcount()) != nbytes)
        throw format_error("truncated bit vector payload");
    BitVector out(len);
    for (std::uint64_t j = 0; j < nbytes; ++j)
        out.words_[j >> 3] |=
            static_cast<std::uint64_t>(static_cast<unsigned char>(buf[j])) << ((j & 7) * 8);
    std::uint64_t tail = len & 63;
    if (!out.words_.empty() && tail != 0) {
        std::uint64_t padding = out.words_.back() >> tail;
        if (padding != 0) throw format_error("nonzero padding bits in bit vector");
        // bits within the final byte but past len were folded into words_;
        // the check above covers them since tail < 64
    }
    return out;
}

void BitVector::serialize(std::ostream& out) const {
    write_u64_le(out, len_);
    write_packed(out);
}

BitVector BitVector::deserialize(std::istream& in) {
    std::uint64_t len = read_u64_le(in);
    return read_packed(in, len);
}

RankBitVector::RankBitVector(BitVector bits) : bits_(std::move(bits)) {
    std::uint64_t nbits = bits_.size();
    superblocks_.assign(nbits / kSuperblockBits + 1, 0);
    blocks_.assign(nbits / kBlockBits + 1, 0);
    std::uint64_t total = 0;
    std::uint64_t within_super = 0;
    auto words = bits_.words();
    for (std::uint64_t blk = 0; blk < blocks_.size(); ++blk) {
        std::uint64_t bit_start = blk * kBlockBits;
        if (bit_start % kSuperblockBits == 0) {
            superblocks_[bit_start / kSuperblockBits] = total;
            within_super = 0;
        }
        blocks_[blk] = static_cast<std::uint16_t>(within_super);
        if (blk < words.size()) {
            std::uint64_t ones = static_cast<std::uint64_t>(std::popcount(words[blk]));
            total += ones;
            within_super += ones;
        }
    }
}

std::uint64_t RankBitVector::rank1(std::uint64_t i) const {
    if (i > bits_.size()) throw std::out_of_range("rank1: position past end");
    std::uint64_t count =
        superblocks_[i / kSuperblockBits] + blocks_[i / kBlockBits];
    std::uint64_t tail = i & 63;
    if (tail != 0)
        count += static_cast<std::uint64_t>(
            std::popcount(bits_.words()[i >> 6] & ((std::uint64_t{1} << tail) - 1)));
    return count;
}

std::uint64_t RankBitVector::ones() const noexcept {
    return bits_.popcount();
}

}  // namespace k2dyn
