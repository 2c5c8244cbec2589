// Copyright 2026 The canord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "canord/tableau.h"

#include <bit>

#include "canord/canary.h"

namespace canord {

Tableau::Tableau(size_t num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      xs_((2 * num_qubits + 1) * words_, 0),
      zs_((2 * num_qubits + 1) * words_, 0),
      signs_(2 * num_qubits + 1, 0) {
    for (size_t q = 0; q < n_; q++) {
        xs_[q * words_ + (q >> 6)] |= uint64_t{1} << (q & 63);
        zs_[(n_ + q) * words_ + (q >> 6)] |= uint64_t{1} << (q & 63);
    }
}

// Each single-qubit update visits bit q of every row. `f(x, z, r)` receives
// the bits by reference as 0/1 words.
#define CANORD_FOR_EACH_ROW_BIT(q, BODY)                           \
    do {                                                           \
        const size_t w_ = (q) >> 6;                                \
        const unsigned b_ = (q) & 63;                              \
        const size_t rows_ = 2 * n_;                               \
        for (size_t row_ = 0; row_ < rows_; row_++) {              \
            uint64_t &xw_ = xs_[row_ * words_ + w_];               \
            uint64_t &zw_ = zs_[row_ * words_ + w_];               \
            uint64_t x = (xw_ >> b_) & 1;                          \
            uint64_t z = (zw_ >> b_) & 1;                          \
            uint64_t r = signs_[row_];                             \
            BODY;                                                  \
            xw_ = (xw_ & ~(uint64_t{1} << b_)) | (x << b_);        \
            zw_ = (zw_ & ~(uint64_t{1} << b_)) | (z << b_);        \
            signs_[row_] = static_cast<uint8_t>(r);                \
        }                                                          \
    } while (0)

void Tableau::x(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, r ^= z);
}

void Tableau::y(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, r ^= x ^ z);
}

void Tableau::z(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, r ^= x);
}

void Tableau::h(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, {
        r ^= x & z;
        std::swap(x, z);
    });
}

void Tableau::s(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, {
        r ^= x & z;
        z ^= x;
    });
}

void Tableau::sdg(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, {
        r ^= x & (z ^ 1);
        z ^= x;
    });
}

// SX = H S H: X -> X, Z -> -Y, Y -> Z.
void Tableau::sx(size_t q) {
    CANORD_FOR_EACH_ROW_BIT(q, {
        r ^= z & (x ^ 1);
        x ^= z;
    });
}

#undef CANORD_FOR_EACH_ROW_BIT

void Tableau::cx(size_t control, size_t target) {
    const size_t wc = control >> 6;
    const unsigned bc = control & 63;
    const size_t wt = target >> 6;
    const unsigned bt = target & 63;
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t *xr = &xs_[row * words_];
        uint64_t *zr = &zs_[row * words_];
        uint64_t xc = (xr[wc] >> bc) & 1;
        uint64_t zc = (zr[wc] >> bc) & 1;
        uint64_t xt = (xr[wt] >> bt) & 1;
        uint64_t zt = (zr[wt] >> bt) & 1;
        signs_[row] ^= static_cast<uint8_t>(xc & zt & (xt ^ zc ^ 1));
        xr[wt] ^= xc << bt;
        zr[wc] ^= zt << bc;
    }
}

void Tableau::rz_quarter_turns(size_t q, int k) {
    switch (((k % 4) + 4) % 4) {
        case 1:
            s(q);
            break;
        case 2:
            z(q);
            break;
        case 3:
            sdg(q);
            break;
        default:
            break;
    }
}

void Tableau::apply(const Gate &gate) {
    const auto &q = gate.qubits;
    switch (gate.kind) {
        case GateKind::X:
            x(q[0]);
            break;
        case GateKind::SX:
            sx(q[0]);
            break;
        case GateKind::RZ:
            rz_quarter_turns(q[0], clifford_quarter_turns(gate.angle));
            break;
        case GateKind::CX:
            cx(q[0], q[1]);
            break;
        case GateKind::H:
            h(q[0]);
            break;
        case GateKind::S:
            s(q[0]);
            break;
        case GateKind::SDG:
            sdg(q[0]);
            break;
        case GateKind::SWAP:
            cx(q[0], q[1]);
            cx(q[1], q[0]);
            cx(q[0], q[1]);
            break;
        case GateKind::BARRIER:
            break;
        default:
            throw CircuitError("tableau cannot apply " + gate.str());
    }
}

// Row h <- row i * row h, tracking the sign through the i^k phase count.
void Tableau::rowsum(size_t h, size_t i) {
    int64_t phase = 2 * signs_[h] + 2 * signs_[i];
    uint64_t *xh = &xs_[h * words_];
    uint64_t *zh = &zs_[h * words_];
    const uint64_t *xi = &xs_[i * words_];
    const uint64_t *zi = &zs_[i * words_];
    for (size_t w = 0; w < words_; w++) {
        uint64_t x1 = xi[w];
        uint64_t z1 = zi[w];
        uint64_t x2 = xh[w];
        uint64_t z2 = zh[w];
        uint64_t plus = (x1 & z1 & ~x2 & z2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t minus = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2);
        phase += std::popcount(plus) - std::popcount(minus);
        xh[w] = x2 ^ x1;
        zh[w] = z2 ^ z1;
    }
    signs_[h] = static_cast<uint8_t>((((phase % 4) + 4) % 4) == 2);
}

void Tableau::set_row_zero(size_t row) {
    std::fill_n(&xs_[row * words_], words_, 0);
    std::fill_n(&zs_[row * words_], words_, 0);
    signs_[row] = 0;
}

void Tableau::copy_row(size_t dst, size_t src) {
    std::copy_n(&xs_[src * words_], words_, &xs_[dst * words_]);
    std::copy_n(&zs_[src * words_], words_, &zs_[dst * words_]);
    signs_[dst] = signs_[src];
}

bool Tableau::is_deterministic(size_t q) const {
    for (size_t p = n_; p < 2 * n_; p++) {
        if (xb(p, q)) {
            return false;
        }
    }
    return true;
}

template <typename F>
MeasureResult Tableau::measure_impl(size_t q, F &&choose) {
    size_t p = 2 * n_;
    for (size_t row = n_; row < 2 * n_; row++) {
        if (xb(row, q)) {
            p = row;
            break;
        }
    }
    if (p < 2 * n_) {
        for (size_t row = 0; row < 2 * n_; row++) {
            if (row != p && xb(row, q)) {
                rowsum(row, p);
            }
        }
        copy_row(p - n_, p);
        set_row_zero(p);
        zs_[p * words_ + (q >> 6)] |= uint64_t{1} << (q & 63);
        bool bit = choose();
        signs_[p] = bit;
        return {bit, true};
    }
    const size_t scratch = 2 * n_;
    set_row_zero(scratch);
    for (size_t row = 0; row < n_; row++) {
        if (xb(row, q)) {
            rowsum(scratch, row + n_);
        }
    }
    return {signs_[scratch] != 0, false};
}

MeasureResult Tableau::measure(size_t q, Rng &rng) {
    return measure_impl(q, [&] {
        return (rng() >> 63) != 0;
    });
}

MeasureResult Tableau::measure_forced(size_t q, bool outcome) {
    return measure_impl(q, [&] {
        return outcome;
    });
}

std::string Tableau::row_str(size_t row) const {
    std::string s(1, signs_[row] ? '-' : '+');
    for (size_t q = 0; q < n_; q++) {
        bool x = xb(row, q);
        bool z = zb(row, q);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

bool Tableau::rows_commute(size_t a, size_t b) const {
    int parity = 0;
    for (size_t w = 0; w < words_; w++) {
        uint64_t v = (xs_[a * words_ + w] & zs_[b * words_ + w]) ^ (zs_[a * words_ + w] & xs_[b * words_ + w]);
        parity ^= std::popcount(v) & 1;
    }
    return parity == 0;
}

bool Tableau::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (!rows_commute(n_ + i, n_ + j)) {
                return false;
            }
            if (i != j && !rows_commute(i, j)) {
                return false;
            }
            bool anti = !rows_commute(i, n_ + j);
            if (anti != (i == j)) {
                return false;
            }
        }
    }
    // Symplectic rank over GF(2).
    std::vector<std::vector<uint64_t>> m;
    for (size_t row = 0; row < 2 * n_; row++) {
        std::vector<uint64_t> v(2 * words_);
        std::copy_n(&xs_[row * words_], words_, v.begin());
        std::copy_n(&zs_[row * words_], words_, v.begin() + static_cast<std::ptrdiff_t>(words_));
        m.push_back(std::move(v));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < m.size(); col++) {
        size_t word = col < n_ ? (col >> 6) : words_ + ((col - n_) >> 6);
        unsigned bit = col < n_ ? (col & 63) : ((col - n_) & 63);
        size_t pivot = rank;
        while (pivot < m.size() && !((m[pivot][word] >> bit) & 1)) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < m.size(); r++) {
            if (r != rank && ((m[r][word] >> bit) & 1)) {
                for (size_t w = 0; w < m[r].size(); w++) {
                    m[r][w] ^= m[rank][w];
                }
            }
        }
        rank++;
    }
    return rank == 2 * n_;
}

}  // namespace canord
