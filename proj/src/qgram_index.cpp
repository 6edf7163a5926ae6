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

#include "strand/qgram_index.hpp"

namespace strand {

QGramIndex::QGramIndex(std::string_view text, unsigned q, const RankTransform& t,
                       std::size_t max_buckets)
    : q_(q), t_(t) {
    if (q < 1) throw QTooLarge("q must be at least 1");
    const unsigned width = q * t.bits_per_symbol();
    if (q > 64 || width > 64) throw QTooLarge("q-gram code would exceed 64 bits");
    if (width >= 64 || (std::uint64_t{1} << width) > max_buckets)
        throw BucketTableTooLarge("bucket table of 2^" + std::to_string(width) +
                                  " slots exceeds the cap of " + std::to_string(max_buckets));
    const std::size_t nb = std::size_t{1} << width;

    buckets_.assign(nb + 1, 0);
    QGramRanks ranks = t_.qgram_ranks(text, q);
    for (std::uint64_t code : ranks) ++buckets_[code + 1];
    for (std::size_t i = 1; i <= nb; ++i) buckets_[i] += buckets_[i - 1];

    positions_.resize(ranks.size());
    std::vector<std::size_t> fill(buckets_.begin(), buckets_.end() - 1);
    std::size_t pos = 0;
    for (std::uint64_t code : ranks) positions_[fill[code]++] = pos++;
}

std::vector<std::size_t> QGramIndex::matches(std::string_view qgram) const {
    if (qgram.size() != q_)
        throw LengthMismatch("query length " + std::to_string(qgram.size()) +
                             " does not match q = " + std::to_string(q_));
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < qgram.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(qgram[i]);
        if (!t_.contains(c)) throw SymbolNotInAlphabet(c, i);
        code = (code << t_.bits_per_symbol()) | t_.rank(c);
    }
    return std::vector<std::size_t>(
        positions_.begin() + static_cast<std::ptrdiff_t>(buckets_[code]),
        positions_.begin() + static_cast<std::ptrdiff_t>(buckets_[code + 1]));
}

}  // namespace strand
