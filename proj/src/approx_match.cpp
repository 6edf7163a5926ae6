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

#include "strand/approx_match.hpp"

#include <algorithm>

namespace strand {

UkkonenScan::UkkonenScan(std::string_view pattern, std::string_view text, std::size_t k)
    : pattern_(pattern), text_(text), k_(k) {
    const std::size_t m = pattern_.size();
    col_.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) col_[i] = i;
    lact_ = std::min(k_, m);
}

std::optional<Hit> UkkonenScan::next() {
    const std::size_t m = pattern_.size();
    const std::size_t big = k_ + 1;  // anything above k collapses to k+1
    while (j_ < text_.size()) {
        const char t = text_[j_];
        // Rows above lact_ + 1 cannot come back under k in this column, so
        // only rows 1..limit need computing (cell values grow along
        // diagonals).
        const std::size_t limit = std::min(lact_ + 1, m);
        std::size_t diag = col_[0];  // col_[i-1] before overwrite
        for (std::size_t i = 1; i <= limit; ++i) {
            std::size_t up = i <= lact_ ? col_[i] : big;
            std::size_t sub = diag + (pattern_[i - 1] == t ? 0 : 1);
            std::size_t val = std::min({sub, col_[i - 1] + 1, up + 1, big});
            diag = up;
            col_[i] = val;
        }
        std::size_t l = limit;
        while (col_[l] > k_) --l;  // row 0 is always 0
        lact_ = l;
        ++j_;
        if (lact_ == m) return Hit{j_ - 1, col_[m]};
    }
    return std::nullopt;
}

std::vector<Hit> ukkonen_find(std::string_view pattern, std::string_view text, std::size_t k) {
    return ukkonen_search(pattern, text, k).to_vector();
}

Myers::Myers(std::string_view pattern) : m_(pattern.size()) {
    if (m_ > 64)
        throw PatternTooLong("pattern of " + std::to_string(m_) +
                             " symbols exceeds the 64-symbol word width");
    if (m_ == 0) return;
    mask_ = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    high_ = std::uint64_t{1} << (m_ - 1);
    for (std::size_t i = 0; i < m_; ++i)
        peq_[static_cast<unsigned char>(pattern[i])] |= std::uint64_t{1} << i;
}

MyersScan::MyersScan(const Myers* m, std::string_view text, std::size_t k)
    : m_(m), text_(text), k_(k), pv_(m->mask_), score_(m->pattern_len()) {}

std::optional<Hit> MyersScan::next() {
    const std::uint64_t mask = m_->mask_;
    const std::uint64_t high = m_->high_;
    if (m_->pattern_len() == 0) {
        // The empty pattern matches the empty substring everywhere.
        if (j_ < text_.size()) return Hit{j_++, 0};
        return std::nullopt;
    }
    while (j_ < text_.size()) {
        const std::uint64_t eq = m_->peq_[static_cast<unsigned char>(text_[j_])];
        const std::uint64_t xv = eq | mv_;
        const std::uint64_t xh = (((eq & pv_) + pv_) ^ pv_) | eq;
        std::uint64_t ph = mv_ | (~(xh | pv_) & mask);
        std::uint64_t mh = pv_ & xh;
        if (ph & high)
            ++score_;
        else if (mh & high)
            --score_;
        // No carry into the bottom bit: the top row of the matrix is all
        // zeros (a match may start at any text position).
        ph = (ph << 1) & mask;
        mh = (mh << 1) & mask;
        pv_ = mh | (~(xv | ph) & mask);
        mv_ = ph & xv;
        ++j_;
        if (score_ <= k_) return Hit{j_ - 1, score_};
    }
    return std::nullopt;
}

std::vector<Hit> myers_find(std::string_view pattern, std::string_view text, std::size_t k) {
    Myers m(pattern);
    return m.find(text, k).to_vector();
}

std::vector<std::vector<std::size_t>> dp_matrix(std::string_view pattern, std::string_view text) {
    const std::size_t m = pattern.size(), n = text.size();
    std::vector<std::vector<std::size_t>> d(m + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 0; i <= m; ++i) d[i][0] = i;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            std::size_t sub = d[i - 1][j - 1] + (pattern[i - 1] == text[j - 1] ? 0 : 1);
            d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
        }
    }
    return d;
}

std::vector<Hit> dp_find(std::string_view pattern, std::string_view text, std::size_t k) {
    auto d = dp_matrix(pattern, text);
    const std::size_t m = pattern.size();
    std::vector<Hit> hits;
    for (std::size_t j = 1; j <= text.size(); ++j)
        if (d[m][j] <= k) hits.push_back(Hit{j - 1, d[m][j]});
    return hits;
}

}  // namespace strand
