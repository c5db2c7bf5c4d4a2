#ifndef INDSAT_BITS_HH
#define INDSAT_BITS_HH

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace indsat
{
    using Word = std::uint64_t;

    inline constexpr std::size_t bits_per_word = 64;

    constexpr auto words_for(std::size_t n) -> std::size_t
    {
        return (n + bits_per_word - 1) / bits_per_word;
    }

    inline auto test_bit(std::span<const Word> row, std::size_t i) -> bool
    {
        return (row[i / bits_per_word] >> (i % bits_per_word)) & 1u;
    }

    inline auto set_bit(std::span<Word> row, std::size_t i) -> void
    {
        row[i / bits_per_word] |= Word{1} << (i % bits_per_word);
    }

    inline auto clear_bit(std::span<Word> row, std::size_t i) -> void
    {
        row[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
    }

    inline auto flip_bit(std::span<Word> row, std::size_t i) -> void
    {
        row[i / bits_per_word] ^= Word{1} << (i % bits_per_word);
    }

    inline auto popcount(std::span<const Word> row) -> std::size_t
    {
        std::size_t result = 0;
        for (auto w : row)
            result += static_cast<std::size_t>(std::popcount(w));
        return result;
    }

    /// Mask with the low (n mod 64) bits of the last word set; used to keep
    /// complemented rows inside [0, n).
    inline auto tail_mask(std::size_t n) -> Word
    {
        auto r = n % bits_per_word;
        return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
    }

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    auto for_each_bit(std::span<const Word> row, F && f) -> void
    {
        for (std::size_t w = 0; w < row.size(); ++w) {
            auto bits = row[w];
            while (bits) {
                auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * bits_per_word + b);
                bits &= bits - 1;
            }
        }
    }
}

#endif
