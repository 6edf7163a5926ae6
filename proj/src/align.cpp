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

#include "strand/align.hpp"

#include <algorithm>
#include <limits>

namespace strand {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;

enum Tag : std::uint8_t { kFromM = 0, kFromD = 1, kFromI = 2, kOrigin = 3 };

struct Pick {
    std::int64_t value;
    std::uint8_t tag;
};

// Ties resolve toward the diagonal matrix, then deletion, then insertion.
Pick pick(std::int64_t from_m, std::int64_t from_d, std::int64_t from_i) {
    Pick best{from_m, kFromM};
    if (from_d > best.value) best = {from_d, kFromD};
    if (from_i > best.value) best = {from_i, kFromI};
    return best;
}

}  // namespace

Alignment Aligner::align(std::string_view x, std::string_view y, const Scoring& scoring,
                         AlignMode mode) {
    const std::size_t lx = x.size(), ly = y.size();
    const std::size_t w = ly + 1;
    const std::size_t cells = (lx + 1) * w;
    const std::int64_t open = scoring.gap_open;
    const std::int64_t ext = scoring.gap_extend;

    m_.assign(cells, kNegInf);
    d_.assign(cells, kNegInf);
    i_.assign(cells, kNegInf);
    tm_.assign(cells, kFromM);
    td_.assign(cells, kFromM);
    ti_.assign(cells, kFromM);

    m_[0] = 0;
    if (mode != AlignMode::global)
        for (std::size_t j = 1; j <= ly; ++j) m_[j] = 0;
    for (std::size_t j = 1; j <= ly; ++j) {
        Pick p = pick(m_[j - 1] + open + ext, d_[j - 1] + open + ext, i_[j - 1] + ext);
        i_[j] = p.value;
        ti_[j] = p.tag;
    }

    for (std::size_t i = 1; i <= lx; ++i) {
        const std::size_t row = i * w, prev = row - w;
        {
            Pick p = pick(m_[prev] + open + ext, d_[prev] + ext, i_[prev] + open + ext);
            d_[row] = p.value;
            td_[row] = p.tag;
        }
        for (std::size_t j = 1; j <= ly; ++j) {
            Pick pm = pick(m_[prev + j - 1], d_[prev + j - 1], i_[prev + j - 1]);
            if (mode == AlignMode::local && 0 > pm.value) pm = {0, kOrigin};
            m_[row + j] =
                pm.value + scoring.substitution(static_cast<unsigned char>(x[i - 1]),
                                                static_cast<unsigned char>(y[j - 1]));
            tm_[row + j] = pm.tag;

            Pick pd = pick(m_[prev + j] + open + ext, d_[prev + j] + ext,
                           i_[prev + j] + open + ext);
            d_[row + j] = pd.value;
            td_[row + j] = pd.tag;

            Pick pi = pick(m_[row + j - 1] + open + ext, d_[row + j - 1] + open + ext,
                           i_[row + j - 1] + ext);
            i_[row + j] = pi.value;
            ti_[row + j] = pi.tag;
        }
    }

    std::int64_t best = kNegInf;
    std::uint8_t state = kFromM;
    std::size_t bi = 0, bj = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
        const std::size_t at = i * w + j;
        if (m_[at] > best) best = m_[at], state = kFromM, bi = i, bj = j;
        if (d_[at] > best) best = d_[at], state = kFromD, bi = i, bj = j;
        if (i_[at] > best) best = i_[at], state = kFromI, bi = i, bj = j;
    };
    switch (mode) {
        case AlignMode::global:
            consider(lx, ly);
            break;
        case AlignMode::semiglobal:
            for (std::size_t j = 0; j <= ly; ++j) consider(lx, j);
            break;
        case AlignMode::local:
            for (std::size_t i = 0; i <= lx; ++i)
                for (std::size_t j = 0; j <= ly; ++j) consider(i, j);
            break;
    }

    Alignment out;
    out.score = best;
    out.x_end = bi;
    out.y_end = bj;

    std::size_t i = bi, j = bj;
    while (true) {
        if (state == kFromM) {
            if (i == 0) {
                out.x_start = 0;
                out.y_start = j;
                break;
            }
            std::uint8_t tag = tm_[i * w + j];
            out.ops.push_back(x[i - 1] == y[j - 1] ? AlignOp::match : AlignOp::subst);
            if (tag == kOrigin) {
                out.x_start = i - 1;
                out.y_start = j - 1;
                break;
            }
            state = tag;
            --i;
            --j;
        } else if (state == kFromD) {
            std::uint8_t tag = td_[i * w + j];
            out.ops.push_back(AlignOp::del);
            state = tag;
            --i;
        } else {
            std::uint8_t tag = ti_[i * w + j];
            out.ops.push_back(AlignOp::ins);
            state = tag;
            --j;
        }
    }
    std::reverse(out.ops.begin(), out.ops.end());
    return out;
}

Alignment align(std::string_view x, std::string_view y, const Scoring& scoring, AlignMode mode) {
    Aligner a;
    return a.align(x, y, scoring, mode);
}

}  // namespace strand
