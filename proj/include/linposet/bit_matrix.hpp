#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace linposet {

// Square boolean matrix with rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t r, std::size_t c) const noexcept {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] |= word(c); }
    void reset(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] &= ~word(c); }

    // row(dst) |= row(src)
    void or_row(std::size_t dst, std::size_t src) noexcept {
        for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
    }
    // row(dst) &= ~row(src) of `other`
    void and_not_row(std::size_t dst, const BitMatrix& other, std::size_t src) noexcept {
        for (std::size_t w = 0; w < words_; ++w)
            bits_[dst * words_ + w] &= ~other.bits_[src * words_ + w];
    }
    void copy_row(std::size_t dst, const BitMatrix& other, std::size_t src) noexcept {
        for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] = other.bits_[src * words_ + w];
    }

    std::size_t row_count(std::size_t r) const noexcept {
        std::size_t total = 0;
        for (std::size_t w = 0; w < words_; ++w) total += std::popcount(bits_[r * words_ + w]);
        return total;
    }

    // Column indices set in row r, ascending.
    std::vector<std::size_t> row_indices(std::size_t r) const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = bits_[r * words_ + w];
            while (bits != 0) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    static std::uint64_t word(std::size_t c) noexcept { return std::uint64_t{1} << (c % 64); }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace linposet
