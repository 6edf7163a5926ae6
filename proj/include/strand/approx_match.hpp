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

#ifndef STRAND_APPROX_MATCH_HPP
#define STRAND_APPROX_MATCH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strand/error.hpp"

namespace strand {

/// An approximate match: the pattern aligns to some text substring whose
/// last symbol sits at `end` (inclusive index), with edit distance
/// `distance`, the minimum over all substrings ending there.
struct Hit {
    std::size_t end = 0;
    std::size_t distance = 0;

    bool operator==(const Hit&) const = default;
    auto operator<=>(const Hit&) const = default;
};

/// Single-pass lazy range over the hits a scanner yields.
template <class Scan>
class HitRange {
  public:
    explicit HitRange(Scan s) : scan_(std::move(s)) {}

    class iterator {
      public:
        using value_type = Hit;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;
        using pointer = const Hit*;
        using reference = Hit;

        iterator() = default;
        explicit iterator(Scan* s) : scan_(s), cur_(s->next()) {
            if (!cur_) scan_ = nullptr;
        }

        Hit operator*() const { return *cur_; }
        iterator& operator++() {
            cur_ = scan_->next();
            if (!cur_) scan_ = nullptr;
            return *this;
        }
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& o) const { return scan_ == o.scan_; }
        bool operator!=(const iterator& o) const { return scan_ != o.scan_; }

      private:
        Scan* scan_ = nullptr;
        std::optional<Hit> cur_;
    };

    iterator begin() { return iterator(&scan_); }
    iterator end() { return iterator(); }
    Scan& scan() { return scan_; }

    std::vector<Hit> to_vector() {
        std::vector<Hit> out;
        for (auto it = begin(); it != end(); ++it) out.push_back(*it);
        return out;
    }

  private:
    Scan scan_;
};

/// Column dynamic program with the last-active-row cutoff.
class UkkonenScan {
  public:
    UkkonenScan(std::string_view pattern, std::string_view text, std::size_t k);
    std::optional<Hit> next();

  private:
    std::string pattern_;
    std::string_view text_;
    std::size_t k_;
    std::size_t j_ = 0;     // next text index
    std::size_t lact_;      // last row with value <= k
    std::vector<std::size_t> col_;
};

/// All text positions where the pattern matches with edit distance <= k,
/// lazily, ascending by end position.
inline HitRange<UkkonenScan> ukkonen_search(std::string_view pattern, std::string_view text,
                                            std::size_t k) {
    return HitRange<UkkonenScan>(UkkonenScan(pattern, text, k));
}

std::vector<Hit> ukkonen_find(std::string_view pattern, std::string_view text, std::size_t k);

class Myers;

class MyersScan {
  public:
    MyersScan(const Myers* m, std::string_view text, std::size_t k);
    std::optional<Hit> next();

  private:
    const Myers* m_;
    std::string_view text_;
    std::size_t k_;
    std::size_t j_ = 0;
    std::uint64_t pv_;
    std::uint64_t mv_ = 0;
    std::size_t score_;
};

/// Bit-parallel edit-distance automaton; the pattern masks are immutable
/// and shareable across concurrent searches.
class Myers {
  public:
    explicit Myers(std::string_view pattern);

    std::size_t pattern_len() const noexcept { return m_; }

    MyersScan scan(std::string_view text, std::size_t k) const {
        return MyersScan(this, text, k);
    }
    HitRange<MyersScan> find(std::string_view text, std::size_t k) const {
        return HitRange<MyersScan>(scan(text, k));
    }

  private:
    friend class MyersScan;
    std::array<std::uint64_t, 256> peq_{};
    std::uint64_t mask_ = 0;
    std::uint64_t high_ = 0;
    std::size_t m_ = 0;
};

std::vector<Hit> myers_find(std::string_view pattern, std::string_view text, std::size_t k);

/// Full (m+1) x (n+1) edit matrix: D[0][j] = 0, D[i][0] = i, minimum of
/// insert, delete, and substitute steps elsewhere. The reference the fast
/// searchers are checked against.
std::vector<std::vector<std::size_t>> dp_matrix(std::string_view pattern, std::string_view text);

std::vector<Hit> dp_find(std::string_view pattern, std::string_view text, std::size_t k);

}  // namespace strand

#endif  // STRAND_APPROX_MATCH_HPP
