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

#ifndef STRAND_EXACT_MATCH_HPP
#define STRAND_EXACT_MATCH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "strand/error.hpp"

namespace strand {

/// Single-pass lazy range over the positions a scanner yields.
///
/// Scanners advance through the text only as far as the matches consumed
/// so far require; `scan().cursor()` exposes the watermark.
template <class Scan>
class MatchRange {
  public:
    explicit MatchRange(Scan s) : scan_(std::move(s)) {}

    class iterator {
      public:
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        iterator() = default;
        explicit iterator(Scan* s) : scan_(s), cur_(s->next()) {
            if (!cur_) scan_ = nullptr;
        }

        std::size_t operator*() const { return *cur_; }
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
        std::optional<std::size_t> cur_;
    };

    iterator begin() { return iterator(&scan_); }
    iterator end() { return iterator(); }

    Scan& scan() { return scan_; }

    /// Drains the remaining matches.
    std::vector<std::size_t> to_vector() {
        std::vector<std::size_t> out;
        for (auto it = begin(); it != end(); ++it) out.push_back(*it);
        return out;
    }

  private:
    Scan scan_;
};

class NaiveMatcher;
class KmpMatcher;
class HorspoolMatcher;
class BndmMatcher;
class BomMatcher;
class ShiftAndMatcher;

/// Window-by-window comparison; the oracle the other matchers are tested
/// against.
class NaiveScan {
  public:
    NaiveScan(const NaiveMatcher* m, std::string_view text) : m_(m), text_(text) {}
    std::optional<std::size_t> next();
    /// One past the highest text index examined so far.
    std::size_t cursor() const noexcept { return cursor_; }

  private:
    const NaiveMatcher* m_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t cursor_ = 0;
};

class NaiveMatcher {
  public:
    explicit NaiveMatcher(std::string pattern);
    const std::string& pattern() const noexcept { return pattern_; }
    NaiveScan scan(std::string_view text) const { return NaiveScan(this, text); }
    MatchRange<NaiveScan> find_all(std::string_view text) const {
        return MatchRange<NaiveScan>(scan(text));
    }

  private:
    std::string pattern_;
};

class KmpScan {
  public:
    KmpScan(const KmpMatcher* m, std::string_view text) : m_(m), text_(text) {}
    std::optional<std::size_t> next();
    std::size_t cursor() const noexcept { return i_; }
    /// Symbol comparisons performed so far (at most 2 * cursor()).
    std::size_t comparisons() const noexcept { return comparisons_; }

  private:
    const KmpMatcher* m_;
    std::string_view text_;
    std::size_t i_ = 0;  // text index
    std::size_t j_ = 0;  // matched prefix length
    std::size_t comparisons_ = 0;
};

class KmpMatcher {
  public:
    explicit KmpMatcher(std::string pattern);
    const std::string& pattern() const noexcept { return pattern_; }
    /// failure[i] = length of the longest proper border of the length-i prefix.
    const std::vector<std::size_t>& failure() const noexcept { return failure_; }
    KmpScan scan(std::string_view text) const { return KmpScan(this, text); }
    MatchRange<KmpScan> find_all(std::string_view text) const {
        return MatchRange<KmpScan>(scan(text));
    }

  private:
    std::string pattern_;
    std::vector<std::size_t> failure_;
};

class HorspoolScan {
  public:
    HorspoolScan(const HorspoolMatcher* m, std::string_view text) : m_(m), text_(text) {}
    std::optional<std::size_t> next();
    std::size_t cursor() const noexcept { return cursor_; }

  private:
    const HorspoolMatcher* m_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t cursor_ = 0;
};

class HorspoolMatcher {
  public:
    explicit HorspoolMatcher(std::string pattern);
    const std::string& pattern() const noexcept { return pattern_; }
    std::size_t shift(unsigned char c) const noexcept { return shift_[c]; }
    HorspoolScan scan(std::string_view text) const { return HorspoolScan(this, text); }
    MatchRange<HorspoolScan> find_all(std::string_view text) const {
        return MatchRange<HorspoolScan>(scan(text));
    }

  private:
    std::string pattern_;
    std::array<std::size_t, 256> shift_;
};

class BndmScan {
  public:
    BndmScan(const BndmMatcher* m, std::string_view text) : m_(m), text_(text) {}
    std::optional<std::size_t> next();
    std::size_t cursor() const noexcept { return cursor_; }

  private:
    const BndmMatcher* m_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t cursor_ = 0;
};

/// Backward nondeterministic DAWG matching, 64-bit word parallel.
class BndmMatcher {
  public:
    explicit BndmMatcher(std::string pattern);
    const std::string& pattern() const noexcept { return pattern_; }
    BndmScan scan(std::string_view text) const { return BndmScan(this, text); }
    MatchRange<BndmScan> find_all(std::string_view text) const {
        return MatchRange<BndmScan>(scan(text));
    }

  private:
    friend class BndmScan;
    std::string pattern_;
    std::array<std::uint64_t, 256> masks_;  // bit k: pattern[m-1-k] == c
    std::uint64_t accept_ = 0;              // bit m-1
    std::uint64_t full_ = 0;                // low m bits
};

class BomScan {
  public:
    BomScan(const BomMatcher* m, std::string_view text) : m_(m), text_(text) {}
    std::optional<std::size_t> next();
    std::size_t cursor() const noexcept { return cursor_; }

  private:
    const BomMatcher* m_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t cursor_ = 0;
};

/// Backward oracle matching: factor oracle of the reversed pattern plus a
/// verification of every surviving window.
class BomMatcher {
  public:
    explicit BomMatcher(std::string pattern);
    const std::string& pattern() const noexcept { return pattern_; }
    BomScan scan(std::string_view text) const { return BomScan(this, text); }
    MatchRange<BomScan> find_all(std::string_view text) const {
        return MatchRange<BomScan>(scan(text));
    }

    /// Oracle transition; -1 when undefined.
    std::ptrdiff_t transition(std::size_t state, unsigned char c) const {
        auto it = transitions_.find(key(state, c));
        return it == transitions_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
    }

  private:
    static std::uint64_t key(std::size_t state, unsigned char c) {
        return (static_cast<std::uint64_t>(state) << 8) | c;
    }

    std::string pattern_;
    std::unordered_map<std::uint64_t, std::uint64_t> transitions_;
};

class ShiftAndScan {
  public:
    ShiftAndScan(const ShiftAndMatcher* m, std::string_view text) : m_(m), text_(text) {}
    std::optional<std::size_t> next();
    std::size_t cursor() const noexcept { return i_; }

  private:
    const ShiftAndMatcher* m_;
    std::string_view text_;
    std::size_t i_ = 0;
    std::uint64_t state_ = 0;
};

/// Bit-parallel simulation of the pattern's nondeterministic automaton.
class ShiftAndMatcher {
  public:
    explicit ShiftAndMatcher(std::string pattern);
    const std::string& pattern() const noexcept { return pattern_; }
    ShiftAndScan scan(std::string_view text) const { return ShiftAndScan(this, text); }
    MatchRange<ShiftAndScan> find_all(std::string_view text) const {
        return MatchRange<ShiftAndScan>(scan(text));
    }

  private:
    friend class ShiftAndScan;
    std::string pattern_;
    std::array<std::uint64_t, 256> masks_;  // bit k: pattern[k] == c
    std::uint64_t accept_ = 0;
};

enum class Algorithm { naive, kmp, horspool, bndm, bom, shift_and };

/// Parses "naive", "kmp", "horspool", "bndm", "bom", "shift-and"/"shift_and".
Algorithm algorithm_from_name(std::string_view name);
std::string_view algorithm_name(Algorithm a);

/// Eagerly collects all match start positions using the chosen algorithm.
std::vector<std::size_t> find_all(Algorithm a, std::string_view pattern, std::string_view text);

/// Number of occurrences, without materializing positions.
std::size_t count_matches(Algorithm a, std::string_view pattern, std::string_view text);

}  // namespace strand

#endif  // STRAND_EXACT_MATCH_HPP
