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

#ifndef STRAND_ERROR_HPP
#define STRAND_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strand {

/// Base of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An alphabet was constructed from an empty symbol set.
struct InvalidAlphabet : Error {
    using Error::Error;
};

/// A byte outside the expected alphabet was encountered.
/// `position` is the 0-based offset within the offending sequence,
/// or npos when no sequence position applies.
struct SymbolNotInAlphabet : Error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    SymbolNotInAlphabet(unsigned char sym, std::size_t pos = npos)
        : Error("symbol 0x" + to_hex(sym) + " is not in the alphabet" +
                (pos == npos ? std::string{} : " (position " + std::to_string(pos) + ")")),
          symbol(sym),
          position(pos) {}

    unsigned char symbol;
    std::size_t position;

  private:
    static std::string to_hex(unsigned char c) {
        static const char digits[] = "0123456789abcdef";
        return {digits[c >> 4], digits[c & 0xf]};
    }
};

/// q-gram encoding would not fit one 64-bit word (q * bits_per_symbol > 64).
struct QTooLarge : Error {
    using Error::Error;
};

/// The sentinel byte is missing, not unique, or not the smallest byte present.
struct InvalidSentinel : Error {
    using Error::Error;
};

/// A suffix array / interval does not belong to the text or index it was used with.
struct IndexTextMismatch : Error {
    using Error::Error;
};

struct OutOfBounds : Error {
    using Error::Error;
};

/// select(j) was asked for more set (or unset) bits than the sequence holds.
struct NotEnoughBits : Error {
    using Error::Error;
};

struct EmptyPattern : Error {
    using Error::Error;
};

/// Pattern exceeds the 64-symbol bound of the bit-parallel algorithms.
struct PatternTooLong : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

/// The dense q-gram bucket table would exceed the configured cap.
struct BucketTableTooLarge : Error {
    using Error::Error;
};

/// Malformed input record; `line` is 1-based.
struct FormatError : Error {
    FormatError(std::string msg, std::size_t line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    std::size_t line;
};

/// Input ended in the middle of a record.
struct UnexpectedEof : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Two algorithms that must agree produced different results; this is a bug,
/// never a user error.
struct InternalConsistencyError : Error {
    using Error::Error;
};

}  // namespace strand

#endif  // STRAND_ERROR_HPP
