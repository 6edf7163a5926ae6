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

#include "strand/alphabet.hpp"

#include <algorithm>
#include <cctype>

namespace strand {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty()) throw InvalidAlphabet("alphabet must contain at least one symbol");
    for (char ch : symbols) member_[static_cast<unsigned char>(ch)] = true;
    for (int c = 0; c < 256; ++c)
        if (member_[c]) symbols_.push_back(static_cast<unsigned char>(c));
}

bool Alphabet::is_word(std::string_view text) const noexcept {
    for (char ch : text)
        if (!member_[static_cast<unsigned char>(ch)]) return false;
    return true;
}

Alphabet dna_alphabet() { return Alphabet("ACGTacgt"); }

Alphabet iupac_alphabet() { return Alphabet("ACGTRYSWKMBDHVNacgtryswkmbdhvn-"); }

namespace {

// IUPAC complements, upper case; built once and mirrored to lower case.
constexpr std::pair<char, char> kComplements[] = {
    {'A', 'T'}, {'C', 'G'}, {'G', 'C'}, {'T', 'A'}, {'R', 'Y'}, {'Y', 'R'},
    {'S', 'S'}, {'W', 'W'}, {'K', 'M'}, {'M', 'K'}, {'B', 'V'}, {'V', 'B'},
    {'D', 'H'}, {'H', 'D'}, {'N', 'N'},
};

std::array<int, 256> make_complement_table() {
    std::array<int, 256> t;
    t.fill(-1);
    for (auto [from, to] : kComplements) {
        t[static_cast<unsigned char>(from)] = static_cast<unsigned char>(to);
        t[static_cast<unsigned char>(std::tolower(from))] =
            static_cast<unsigned char>(std::tolower(to));
    }
    t[static_cast<unsigned char>('-')] = '-';
    return t;
}

const std::array<int, 256>& complement_table() {
    static const std::array<int, 256> table = make_complement_table();
    return table;
}

}  // namespace

unsigned char complement(unsigned char c) {
    int r = complement_table()[c];
    if (r < 0) throw SymbolNotInAlphabet(c);
    return static_cast<unsigned char>(r);
}

std::string revcomp(std::string_view text) {
    std::string out(text.size(), '\0');
    const auto& table = complement_table();
    for (std::size_t i = 0; i < text.size(); ++i) {
        int r = table[static_cast<unsigned char>(text[i])];
        if (r < 0) throw SymbolNotInAlphabet(static_cast<unsigned char>(text[i]), i);
        out[text.size() - 1 - i] = static_cast<char>(r);
    }
    return out;
}

RankTransform::RankTransform(const Alphabet& a) : by_rank_(a.symbols()) {
    rank_.fill(-1);
    for (std::size_t r = 0; r < by_rank_.size(); ++r) rank_[by_rank_[r]] = static_cast<int>(r);
    bits_ = 1;
    while ((std::size_t{1} << bits_) < by_rank_.size()) ++bits_;
}

std::vector<std::uint8_t> RankTransform::transform(std::string_view text) const {
    std::vector<std::uint8_t> out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        int r = rank_[static_cast<unsigned char>(text[i])];
        if (r < 0) throw SymbolNotInAlphabet(static_cast<unsigned char>(text[i]), i);
        out[i] = static_cast<std::uint8_t>(r);
    }
    return out;
}

QGramRanks::QGramRanks(const RankTransform& t, std::string_view text, unsigned q)
    : t_(&t), text_(text), q_(q) {
    if (q < 1) throw QTooLarge("q must be at least 1");
    unsigned width = q * t.bits_per_symbol();
    if (q > 64 || width > 64) throw QTooLarge("q-gram code would exceed 64 bits");
    mask_ = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

std::size_t QGramRanks::size() const noexcept {
    return text_.size() >= q_ ? text_.size() - q_ + 1 : 0;
}

QGramRanks::iterator::iterator(const QGramRanks* owner, bool at_end) : owner_(owner) {
    if (at_end || owner->text_.size() < owner->q_) return;  // pos_ stays at kEnd
    // Prime the first window; pos_ becomes q, one past the window.
    const RankTransform& t = *owner_->t_;
    for (std::size_t i = 0; i < owner_->q_; ++i) {
        unsigned char c = static_cast<unsigned char>(owner_->text_[i]);
        if (!t.contains(c)) throw SymbolNotInAlphabet(c, i);
        code_ = ((code_ << t.bits_per_symbol()) | t.rank(c)) & owner_->mask_;
    }
    pos_ = owner_->q_;
}

QGramRanks::iterator& QGramRanks::iterator::operator++() {
    const QGramRanks& r = *owner_;
    if (pos_ >= r.text_.size()) {  // the yielded window was the last one
        pos_ = kEnd;
        code_ = 0;
        return *this;
    }
    const RankTransform& t = *r.t_;
    unsigned char c = static_cast<unsigned char>(r.text_[pos_]);
    if (!t.contains(c)) throw SymbolNotInAlphabet(c, pos_);
    code_ = ((code_ << t.bits_per_symbol()) | t.rank(c)) & r.mask_;
    ++pos_;
    return *this;
}

QGramRanks::iterator QGramRanks::begin() const { return iterator(this, false); }

QGramRanks::iterator QGramRanks::end() const { return iterator(this, true); }

std::vector<std::uint64_t> QGramRanks::to_vector() const {
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for (std::uint64_t code : *this) out.push_back(code);
    return out;
}

}  // namespace strand
