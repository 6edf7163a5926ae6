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

#ifndef STRAND_ALIGN_HPP
#define STRAND_ALIGN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace strand {

/// Boundary conditions of the alignment:
///   global      both sequences aligned end to end
///   semiglobal  all of x aligned, y's flanks are free
///   local       best-scoring pair of substrings, empty alignment scores 0
enum class AlignMode { global, semiglobal, local };

/// One column of an alignment. Del consumes a symbol of x against a gap,
/// Ins consumes a symbol of y against a gap.
enum class AlignOp : std::uint8_t { match, subst, del, ins };

/// Scoring parameters. A gap run of length L costs
/// gap_open + L * gap_extend; both values are expected to be <= 0.
struct Scoring {
    std::function<int(unsigned char, unsigned char)> substitution;
    int gap_open = 0;
    int gap_extend = 0;

    static Scoring simple(int match, int mismatch, int gap_open, int gap_extend) {
        return Scoring{
            [match, mismatch](unsigned char a, unsigned char b) {
                return a == b ? match : mismatch;
            },
            gap_open, gap_extend};
    }
};

/// The result of an alignment: the optimal score, the half-open spans
/// [x_start, x_end) and [y_start, y_end) the operations consume, and the
/// operations themselves in left-to-right order.
struct Alignment {
    std::int64_t score = 0;
    std::size_t x_start = 0;
    std::size_t x_end = 0;
    std::size_t y_start = 0;
    std::size_t y_end = 0;
    std::vector<AlignOp> ops;
};

/// Affine-gap pairwise aligner with reusable scratch matrices. One
/// alignment at a time per instance; concurrent callers use separate
/// instances.
class Aligner {
  public:
    Aligner() = default;

    Alignment align(std::string_view x, std::string_view y, const Scoring& scoring,
                    AlignMode mode);

  private:
    std::vector<std::int64_t> m_, d_, i_;
    std::vector<std::uint8_t> tm_, td_, ti_;
};

/// Convenience wrapper constructing a throwaway Aligner.
Alignment align(std::string_view x, std::string_view y, const Scoring& scoring, AlignMode mode);

}  // namespace strand

#endif  // STRAND_ALIGN_HPP
