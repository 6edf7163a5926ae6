/*
 * Copyright 2026 The strand Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef STRAND_ALPHABET_HPP
#define STRAND_ALPHABET_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strand/error.hpp"

namespace strand {

/// A finite set of byte symbols with constant-time membership.
class Alphabet {
  public:
    explicit Alphabet(std::string_view symbols);

    bool contains(unsigned char c) const noexcept { return member_[c]; }

    /// True iff every byte of `text` is a member. O(|text|).
    bool is_word(std::string_view text) const noexcept;

    std::size_t size() const noexcept { return symbols_.size(); }
    unsigned char max_symbol() const noexcept { return symbols_.back(); }

    /// Distinct member bytes in ascending order.
    const std::vector<unsigned char>& symbols() const noexcept { return symbols_; }

  private:
    std::array<bool, 256> member_{};
    std::vector<unsigned char> symbols_;
};

/// A, C, G, T in both cases.
Alphabet dna_alphabet();

/// The 15 IUPAC nucleotide codes in both cases plus the gap symbol '-'.
Alphabet iupac_alphabet();

/// Complement of one IUPAC nucleotide, case preserved ('-' maps to itself).
unsigned char complement(unsigned char c);

/// Reverse complement of an IUPAC DNA sequence.
std::string revcomp(std::string_view text);

class RankTransform;

/// Lazily yields the bit-packed codes of all q-grams of a text.
///
/// Codes pack symbol ranks most-significant-first, q * bits_per_symbol
/// bits wide, updated by a rolling shift-or-mask per window step.
class QGramRanks {
  public:
    QGramRanks(const RankTransform& t, std::string_view text, unsigned q);

    class iterator {
      public:
        using value_type = std::uint64_t;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;
        using pointer = const std::uint64_t*;
        using reference = std::uint64_t;

        iterator() = default;
        iterator(const QGramRanks* owner, bool at_end);

        std::uint64_t operator*() const { return code_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& o) const {
            return owner_ == o.owner_ && pos_ == o.pos_;
        }
        bool operator!=(const iterator& o) const { return !(*this == o); }

      private:
        static constexpr std::size_t kEnd = static_cast<std::size_t>(-1);
        const QGramRanks* owner_ = nullptr;
        std::size_t pos_ = kEnd;  // index of the window's last symbol + 1
        std::uint64_t code_ = 0;
    };

    iterator begin() const;
    iterator end() const;

    /// Number of codes the range yields: max(0, |text| - q + 1).
    std::size_t size() const noexcept;

    std::vector<std::uint64_t> to_vector() const;

  private:
    friend class iterator;
    const RankTransform* t_;
    std::string_view text_;
    unsigned q_;
    std::uint64_t mask_;
};

/// Dense 0-based lexicographic ranks for an alphabet's symbols.
class RankTransform {
  public:
    explicit RankTransform(const Alphabet& a);

    std::size_t size() const noexcept { return by_rank_.size(); }
    unsigned bits_per_symbol() const noexcept { return bits_; }

    /// Rank of one byte; throws SymbolNotInAlphabet for non-members.
    std::uint8_t rank(unsigned char c) const {
        int r = rank_[c];
        if (r < 0) throw SymbolNotInAlphabet(c);
        return static_cast<std::uint8_t>(r);
    }

    bool contains(unsigned char c) const noexcept { return rank_[c] >= 0; }

    unsigned char symbol(std::size_t rank) const {
        if (rank >= by_rank_.size()) throw OutOfBounds("rank " + std::to_string(rank) + " out of range");
        return by_rank_[rank];
    }

    /// Element-wise rank substitution; throws SymbolNotInAlphabet with the
    /// offending position.
    std::vector<std::uint8_t> transform(std::string_view text) const;

    /// Lazy range over the bit-packed q-gram codes of `text`.
    /// Throws QTooLarge when q * bits_per_symbol exceeds 64.
    QGramRanks qgram_ranks(std::string_view text, unsigned q) const {
        return QGramRanks(*this, text, q);
    }

  private:
    std::array<int, 256> rank_;
    std::vector<unsigned char> by_rank_;
    unsigned bits_;
};

}  // namespace strand

#endif  // STRAND_ALPHABET_HPP
