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

#include "strand/seqio.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

namespace strand {

namespace {

bool read_line(std::istream& in, std::string& out, std::size_t& line) {
    if (!std::getline(in, out)) {
        if (in.bad()) throw IoError("stream read failure");
        return false;
    }
    ++line;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
}

bool is_blank(unsigned char c) { return c == ' ' || c == '\t'; }

// Splits "id rest of header" into the id token and the optional remainder.
std::pair<std::string, std::optional<std::string>> split_header(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && !is_blank(s[i])) ++i;
    std::string id(s.substr(0, i));
    while (i < s.size() && is_blank(s[i])) ++i;
    if (i == s.size()) return {std::move(id), std::nullopt};
    return {std::move(id), std::string(s.substr(i))};
}

std::uint64_t parse_coord(std::string_view field, const char* what, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        throw FormatError(std::string("malformed ") + what + " coordinate '" +
                              std::string(field) + "'",
                          line);
    return value;
}

void check_write(std::ostream& out) {
    if (!out) throw IoError("stream write failure");
}

// A line opens a track or browser declaration only if the keyword is the
// whole first word.
bool is_directive(std::string_view line, std::string_view word) {
    if (line.substr(0, word.size()) != word) return false;
    return line.size() == word.size() || is_blank(line[word.size()]);
}

}  // namespace

std::optional<SeqRecord> FastaReader::next() {
    std::string header;
    std::size_t header_line = 0;
    if (pending_) {
        header = std::move(*pending_);
        header_line = pending_line_;
        pending_.reset();
    } else {
        std::string ln;
        while (true) {
            if (!read_line(*in_, ln, line_)) return std::nullopt;
            if (ln.empty()) continue;
            if (ln[0] != '>') throw FormatError("expected '>' to start a record", line_);
            header = std::move(ln);
            header_line = line_;
            break;
        }
    }

    auto [id, desc] = split_header(std::string_view(header).substr(1));
    if (id.empty()) throw FormatError("record has an empty id", header_line);

    SeqRecord rec{std::move(id), std::move(desc), {}, std::nullopt};
    std::string ln;
    while (read_line(*in_, ln, line_)) {
        if (ln.empty()) continue;
        if (ln[0] == '>') {
            pending_ = std::move(ln);
            pending_line_ = line_;
            break;
        }
        rec.seq += ln;
    }
    return rec;
}

FastaWriter::FastaWriter(std::ostream& out, std::size_t width) : out_(&out), width_(width) {
    if (width_ < 1) throw OutOfBounds("line width must be positive");
}

void FastaWriter::write(const SeqRecord& rec) {
    *out_ << '>' << rec.id;
    if (rec.desc) *out_ << ' ' << *rec.desc;
    *out_ << '\n';
    for (std::size_t i = 0; i < rec.seq.size(); i += width_)
        *out_ << std::string_view(rec.seq).substr(i, width_) << '\n';
    check_write(*out_);
}

std::optional<SeqRecord> FastqReader::next() {
    std::string ln;
    do {
        if (!read_line(*in_, ln, line_)) return std::nullopt;
    } while (ln.empty());
    if (ln[0] != '@') throw FormatError("expected '@' to start a record", line_);

    auto [id, desc] = split_header(std::string_view(ln).substr(1));
    if (id.empty()) throw FormatError("record has an empty id", line_);

    SeqRecord rec{std::move(id), std::move(desc), {}, {}};
    if (!read_line(*in_, rec.seq, line_))
        throw UnexpectedEof("record truncated before its sequence line");

    std::string plus;
    if (!read_line(*in_, plus, line_))
        throw UnexpectedEof("record truncated before its separator line");
    if (plus.empty() || plus[0] != '+') throw FormatError("expected '+' separator", line_);

    std::string qual;
    if (!read_line(*in_, qual, line_))
        throw UnexpectedEof("record truncated before its quality line");
    if (qual.size() != rec.seq.size())
        throw FormatError("quality length " + std::to_string(qual.size()) +
                              " does not match sequence length " + std::to_string(rec.seq.size()),
                          line_);
    rec.qual = std::move(qual);
    return rec;
}

void FastqWriter::write(const SeqRecord& rec) {
    if (!rec.qual) throw LengthMismatch("record has no quality string");
    if (rec.qual->size() != rec.seq.size())
        throw LengthMismatch("quality length " + std::to_string(rec.qual->size()) +
                             " does not match sequence length " + std::to_string(rec.seq.size()));
    *out_ << '@' << rec.id;
    if (rec.desc) *out_ << ' ' << *rec.desc;
    *out_ << '\n' << rec.seq << "\n+\n" << *rec.qual << '\n';
    check_write(*out_);
}

std::optional<BedRecord> BedReader::next() {
    std::string ln;
    while (true) {
        if (!read_line(*in_, ln, line_)) return std::nullopt;
        if (ln.empty() || ln[0] == '#') continue;
        if (is_directive(ln, "track") || is_directive(ln, "browser")) continue;
        break;
    }

    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        std::size_t tab = ln.find('\t', begin);
        if (tab == std::string::npos) {
            fields.push_back(ln.substr(begin));
            break;
        }
        fields.push_back(ln.substr(begin, tab - begin));
        begin = tab + 1;
    }
    if (fields.size() < 3)
        throw FormatError("expected at least 3 tab-separated columns, got " +
                              std::to_string(fields.size()),
                          line_);

    BedRecord rec;
    rec.chrom = std::move(fields[0]);
    rec.start = parse_coord(fields[1], "start", line_);
    rec.end = parse_coord(fields[2], "end", line_);
    if (rec.end <= rec.start)
        throw FormatError("end " + std::to_string(rec.end) + " is not greater than start " +
                              std::to_string(rec.start),
                          line_);
    if (fields.size() > 3) rec.name = std::move(fields[3]);
    if (fields.size() > 4) rec.score = std::move(fields[4]);
    if (fields.size() > 5) {
        if (fields[5].size() != 1 ||
            (fields[5][0] != '+' && fields[5][0] != '-' && fields[5][0] != '.'))
            throw FormatError("strand must be '+', '-' or '.', got '" + fields[5] + "'", line_);
        rec.strand = fields[5][0];
    }
    for (std::size_t i = 6; i < fields.size(); ++i) rec.extra.push_back(std::move(fields[i]));
    return rec;
}

void BedWriter::write(const BedRecord& rec) {
    const bool holes = (!rec.name && (rec.score || rec.strand || !rec.extra.empty())) ||
                       (!rec.score && (rec.strand || !rec.extra.empty())) ||
                       (!rec.strand && !rec.extra.empty());
    if (holes) throw Error("bed record leaves an optional column empty before a filled one");
    *out_ << rec.chrom << '\t' << rec.start << '\t' << rec.end;
    if (rec.name) *out_ << '\t' << *rec.name;
    if (rec.score) *out_ << '\t' << *rec.score;
    if (rec.strand) *out_ << '\t' << *rec.strand;
    for (const auto& f : rec.extra) *out_ << '\t' << f;
    *out_ << '\n';
    check_write(*out_);
}

}  // namespace strand
