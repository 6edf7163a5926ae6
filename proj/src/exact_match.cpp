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

#include "strand/exact_match.hpp"

#include <algorithm>

namespace strand {
namespace {

void check_pattern(const std::string& p) {
    if (p.empty()) throw EmptyPattern("pattern must not be empty");
}

void check_word_width(const std::string& p) {
    if (p.size() > 64)
        throw PatternTooLong("pattern of " + std::to_string(p.size()) +
                             " symbols exceeds the 64-symbol word width");
}

}  // namespace

NaiveMatcher::NaiveMatcher(std::string pattern) : pattern_(std::move(pattern)) {
    check_pattern(pattern_);
}

std::optional<std::size_t> NaiveScan::next() {
    const std::string& p = m_->pattern();
    const std::size_t m = p.size();
    if (text_.size() < m) return std::nullopt;
    while (pos_ + m <= text_.size()) {
        std::size_t d = 0;
        while (d < m && text_[pos_ + d] == p[d]) ++d;
        cursor_ = std::max(cursor_, pos_ + std::min(d + 1, m));
        if (d == m) return pos_++;
        ++pos_;
    }
    return std::nullopt;
}

KmpMatcher::KmpMatcher(std::string pattern) : pattern_(std::move(pattern)) {
    check_pattern(pattern_);
    const std::size_t m = pattern_.size();
    failure_.assign(m + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < m; ++i) {
        while (k > 0 && pattern_[i] != pattern_[k]) k = failure_[k];
        if (pattern_[i] == pattern_[k]) ++k;
        failure_[i + 1] = k;
    }
}

std::optional<std::size_t> KmpScan::next() {
    const std::string& p = m_->pattern();
    const auto& fail = m_->failure();
    const std::size_t m = p.size();
    while (i_ < text_.size()) {
        ++comparisons_;
        if (text_[i_] == p[j_]) {
            ++i_;
            ++j_;
            if (j_ == m) {
                j_ = fail[j_];
                return i_ - m;
            }
        } else if (j_ > 0) {
            j_ = fail[j_];
        } else {
            ++i_;
        }
    }
    return std::nullopt;
}

HorspoolMatcher::HorspoolMatcher(std::string pattern) : pattern_(std::move(pattern)) {
    check_pattern(pattern_);
    const std::size_t m = pattern_.size();
    shift_.fill(m);
    // d(c) = m - 1 - rightmost position of c among the first m-1 symbols
    for (std::size_t k = 0; k + 1 < m; ++k)
        shift_[static_cast<unsigned char>(pattern_[k])] = m - 1 - k;
}

std::optional<std::size_t> HorspoolScan::next() {
    const std::string& p = m_->pattern();
    const std::size_t m = p.size();
    while (pos_ + m <= text_.size()) {
        unsigned char last = static_cast<unsigned char>(text_[pos_ + m - 1]);
        cursor_ = std::max(cursor_, pos_ + m);
        bool hit = last == static_cast<unsigned char>(p[m - 1]) &&
                   text_.compare(pos_, m - 1, p, 0, m - 1) == 0;
        std::size_t at = pos_;
        pos_ += m_->shift(last);
        if (hit) return at;
    }
    return std::nullopt;
}

BndmMatcher::BndmMatcher(std::string pattern) : pattern_(std::move(pattern)) {
    check_pattern(pattern_);
    check_word_width(pattern_);
    const std::size_t m = pattern_.size();
    masks_.fill(0);
    for (std::size_t k = 0; k < m; ++k)
        masks_[static_cast<unsigned char>(pattern_[k])] |= std::uint64_t{1} << (m - 1 - k);
    accept_ = std::uint64_t{1} << (m - 1);
    full_ = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

std::optional<std::size_t> BndmScan::next() {
    const std::string& p = m_->pattern();
    const std::size_t m = p.size();
    while (pos_ + m <= text_.size()) {
        std::uint64_t d = m_->full_;
        std::size_t j = m;
        std::size_t last = m;
        std::optional<std::size_t> found;
        while (d != 0) {
            d &= m_->masks_[static_cast<unsigned char>(text_[pos_ + j - 1])];
            cursor_ = std::max(cursor_, pos_ + m);
            --j;
            if (d & m_->accept_) {
                if (j > 0) {
                    last = j;  // a pattern prefix starts here: candidate shift
                } else {
                    found = pos_;
                    break;
                }
            }
            d = (d << 1) & m_->full_;
        }
        pos_ += last;
        if (found) return found;
    }
    return std::nullopt;
}

BomMatcher::BomMatcher(std::string pattern) : pattern_(std::move(pattern)) {
    check_pattern(pattern_);
    const std::size_t m = pattern_.size();
    // Incremental factor oracle of the reversed pattern with supply links.
    std::vector<std::ptrdiff_t> supply(m + 1);
    supply[0] = -1;
    transitions_.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        unsigned char c = static_cast<unsigned char>(pattern_[m - 1 - i]);
        transitions_[key(i, c)] = i + 1;
        std::ptrdiff_t k = supply[i];
        while (k > -1 && transition(static_cast<std::size_t>(k), c) < 0) {
            transitions_[key(static_cast<std::size_t>(k), c)] = i + 1;
            k = supply[static_cast<std::size_t>(k)];
        }
        supply[i + 1] = k == -1 ? 0 : transition(static_cast<std::size_t>(k), c);
    }
}

std::optional<std::size_t> BomScan::next() {
    const std::string& p = m_->pattern();
    const std::size_t m = p.size();
    while (pos_ + m <= text_.size()) {
        std::size_t state = 0;
        std::size_t j = m;
        bool alive = true;
        while (j > 0) {
            cursor_ = std::max(cursor_, pos_ + m);
            std::ptrdiff_t s = m_->transition(state, static_cast<unsigned char>(text_[pos_ + j - 1]));
            if (s < 0) {
                alive = false;
                break;
            }
            state = static_cast<std::size_t>(s);
            --j;
        }
        if (!alive) {
            // text[pos+j-1 .. pos+m) is not a pattern factor: no occurrence
            // can start before pos + j.
            pos_ += j;
            continue;
        }
        // The oracle may accept non-factors; verify the window.
        std::size_t at = pos_;
        ++pos_;
        if (text_.compare(at, m, p) == 0) return at;
    }
    return std::nullopt;
}

ShiftAndMatcher::ShiftAndMatcher(std::string pattern) : pattern_(std::move(pattern)) {
    check_pattern(pattern_);
    check_word_width(pattern_);
    masks_.fill(0);
    for (std::size_t k = 0; k < pattern_.size(); ++k)
        masks_[static_cast<unsigned char>(pattern_[k])] |= std::uint64_t{1} << k;
    accept_ = std::uint64_t{1} << (pattern_.size() - 1);
}

std::optional<std::size_t> ShiftAndScan::next() {
    const std::size_t m = m_->pattern().size();
    while (i_ < text_.size()) {
        state_ = ((state_ << 1) | 1) & m_->masks_[static_cast<unsigned char>(text_[i_])];
        ++i_;
        if (state_ & m_->accept_) return i_ - m;
    }
    return std::nullopt;
}

Algorithm algorithm_from_name(std::string_view name) {
    if (name == "naive") return Algorithm::naive;
    if (name == "kmp") return Algorithm::kmp;
    if (name == "horspool") return Algorithm::horspool;
    if (name == "bndm") return Algorithm::bndm;
    if (name == "bom") return Algorithm::bom;
    if (name == "shift-and" || name == "shift_and") return Algorithm::shift_and;
    throw Error("unknown algorithm name: " + std::string(name));
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::naive: return "naive";
        case Algorithm::kmp: return "kmp";
        case Algorithm::horspool: return "horspool";
        case Algorithm::bndm: return "bndm";
        case Algorithm::bom: return "bom";
        case Algorithm::shift_and: return "shift-and";
    }
    throw Error("unknown algorithm value");
}

namespace {

template <class F>
auto with_matcher(Algorithm a, std::string_view pattern, F&& f) {
    std::string p(pattern);
    switch (a) {
        case Algorithm::naive: return f(NaiveMatcher(std::move(p)));
        case Algorithm::kmp: return f(KmpMatcher(std::move(p)));
        case Algorithm::horspool: return f(HorspoolMatcher(std::move(p)));
        case Algorithm::bndm: return f(BndmMatcher(std::move(p)));
        case Algorithm::bom: return f(BomMatcher(std::move(p)));
        case Algorithm::shift_and: return f(ShiftAndMatcher(std::move(p)));
    }
    throw Error("unknown algorithm value");
}

}  // namespace

std::vector<std::size_t> find_all(Algorithm a, std::string_view pattern, std::string_view text) {
    return with_matcher(a, pattern, [&](const auto& m) { return m.find_all(text).to_vector(); });
}

std::size_t count_matches(Algorithm a, std::string_view pattern, std::string_view text) {
    return with_matcher(a, pattern, [&](const auto& m) {
        std::size_t count = 0;
        auto scan = m.scan(text);
        while (scan.next()) ++count;
        return count;
    });
}

}  // namespace strand
