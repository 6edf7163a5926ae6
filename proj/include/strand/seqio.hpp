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

#ifndef STRAND_SEQIO_HPP
#define STRAND_SEQIO_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strand/error.hpp"

namespace strand {

/// A FASTA or FASTQ record. `qual` is present for FASTQ and always has the
/// same length as `seq`; `id` never contains whitespace.
struct SeqRecord {
    std::string id;
    std::optional<std::string> desc;
    std::string seq;
    std::optional<std::string> qual;

    bool operator==(const SeqRecord&) const = default;
};

/// One BED line. `start` and `end` are a half-open interval with
/// start < end. Columns past the sixth are kept verbatim in `extra`.
struct BedRecord {
    std::string chrom;
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    std::optional<std::string> name;
    std::optional<std::string> score;
    std::optional<char> strand;
    std::vector<std::string> extra;

    bool operator==(const BedRecord&) const = default;
};

/// Streaming FASTA reader. Accepts \n and \r\n line endings, skips blank
/// lines, and holds at most one record in memory.
class FastaReader {
  public:
    explicit FastaReader(std::istream& in) : in_(&in) {}

    /// The next record, or nothing at end of stream.
    std::optional<SeqRecord> next();

  private:
    std::istream* in_;
    std::size_t line_ = 0;
    std::optional<std::string> pending_;
    std::size_t pending_line_ = 0;
};

/// FASTA writer; sequences wrap at `width` columns.
class FastaWriter {
  public:
    explicit FastaWriter(std::ostream& out, std::size_t width = 60);

    void write(const SeqRecord& rec);

  private:
    std::ostream* out_;
    std::size_t width_;
};

/// Streaming FASTQ reader over strict four-line records.
class FastqReader {
  public:
    explicit FastqReader(std::istream& in) : in_(&in) {}

    std::optional<SeqRecord> next();

  private:
    std::istream* in_;
    std::size_t line_ = 0;
};

class FastqWriter {
  public:
    explicit FastqWriter(std::ostream& out) : out_(&out) {}

    void write(const SeqRecord& rec);

  private:
    std::ostream* out_;
};

/// Streaming BED reader. Comment, track, browser, and blank lines are
/// skipped; fields are tab-separated.
class BedReader {
  public:
    explicit BedReader(std::istream& in) : in_(&in) {}

    std::optional<BedRecord> next();

  private:
    std::istream* in_;
    std::size_t line_ = 0;
};

class BedWriter {
  public:
    explicit BedWriter(std::ostream& out) : out_(&out) {}

    void write(const BedRecord& rec);

  private:
    std::ostream* out_;
};

}  // namespace strand

#endif  // STRAND_SEQIO_HPP
