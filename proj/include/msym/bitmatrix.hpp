#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace msym {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrixF2 {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrixF2() = default;

    BitMatrixF2(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v = true) {
        Word& w = data_[r * words_per_row_ + c / kWordBits];
        const Word mask = Word(1) << (c % kWordBits);
        w = v ? (w | mask) : (w & ~mask);
    }

    void flip(std::size_t r, std::size_t c) {
        data_[r * words_per_row_ + c / kWordBits] ^= Word(1) << (c % kWordBits);
    }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * words_per_row_, words_per_row_}; }
    std::span<const Word> row(std::size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    /// Appends a row; the span must hold words_per_row() words.
    void push_row(std::span<const Word> words) {
        if (words.size() != words_per_row_) throw std::invalid_argument("BitMatrixF2::push_row: width mismatch");
        data_.insert(data_.end(), words.begin(), words.end());
        ++rows_;
    }

    std::size_t words_per_row() const { return words_per_row_; }

    BitMatrixF2 transpose() const {
        BitMatrixF2 t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            auto rw = row(r);
            for (std::size_t q = 0; q < words_per_row_; ++q) {
                Word w = rw[q];
                while (w) {
                    const std::size_t c = q * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                    t.set(c, r);
                    w &= w - 1;
                }
            }
        }
        return t;
    }

    /// Rank by Gaussian elimination on a scratch copy. Pivots are searched
    /// column by column; each pivot row is XORed into the rows below it.
    std::size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        std::vector<Word> m = data_;
        const std::size_t wpr = words_per_row_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            const std::size_t q = c / kWordBits;
            const Word bit = Word(1) << (c % kWordBits);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(m[pivot * wpr + q] & bit)) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank) {
                std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * wpr),
                                 m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * wpr),
                                 m.begin() + static_cast<std::ptrdiff_t>(rank * wpr));
            }
            const Word* prow = m.data() + rank * wpr;
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                Word* rr = m.data() + r * wpr;
                if (!(rr[q] & bit)) continue;
                // Columns left of q are already zero in both rows.
                for (std::size_t k = q; k < wpr; ++k) rr[k] ^= prow[k];
            }
            ++rank;
        }
        return rank;
    }

    friend bool operator==(const BitMatrixF2&, const BitMatrixF2&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<Word> data_;
};

}  // namespace msym
