#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cfk {

/* Dense matrix over GF(2), rows packed into 64-bit words. Just enough for the
   rank computations behind homology dimensions; complexes here are tiny. */
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void flip(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] ^= (std::uint64_t{1} << (c % 64));
    }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }

    // Gaussian elimination on a scratch copy.
    std::size_t rank() const {
        std::vector<std::uint64_t> m = data_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t w = c / 64;
            std::uint64_t bit = std::uint64_t{1} << (c % 64);
            std::size_t pivot = rows_;
            for (std::size_t r = rank; r < rows_; ++r) {
                if (m[r * words_ + w] & bit) { pivot = r; break; }
            }
            if (pivot == rows_) continue;
            for (std::size_t k = 0; k < words_; ++k)
                std::swap(m[rank * words_ + k], m[pivot * words_ + k]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r != rank && (m[r * words_ + w] & bit)) {
                    for (std::size_t k = 0; k < words_; ++k)
                        m[r * words_ + k] ^= m[rank * words_ + k];
                }
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace cfk
