// Copyright 2026 The cssft Authors
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

#include "cssft/sim/bitwise_gate.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>

#include "cssft/error.h"

namespace cssft {

BitwiseGate BitwiseGate::x_mask(size_t block, uint64_t mask) {
    BitwiseGate g;
    g.kind = Kind::XMask;
    g.blocks[0] = block;
    g.mask = mask;
    return g;
}

BitwiseGate BitwiseGate::z_mask(size_t block, uint64_t mask) {
    BitwiseGate g;
    g.kind = Kind::ZMask;
    g.blocks[0] = block;
    g.mask = mask;
    return g;
}

BitwiseGate BitwiseGate::h_all(size_t block) {
    BitwiseGate g;
    g.kind = Kind::HAll;
    g.blocks[0] = block;
    return g;
}

BitwiseGate BitwiseGate::phase(size_t block, double angle, uint64_t mask) {
    BitwiseGate g;
    g.kind = Kind::Phase;
    g.blocks[0] = block;
    g.angle = angle;
    g.mask = mask;
    return g;
}

BitwiseGate BitwiseGate::cx(size_t control, size_t target) {
    BitwiseGate g;
    g.kind = Kind::CX;
    g.blocks[0] = control;
    g.blocks[1] = target;
    return g;
}

BitwiseGate BitwiseGate::cz(size_t a, size_t b) {
    BitwiseGate g;
    g.kind = Kind::CZ;
    g.blocks[0] = a;
    g.blocks[1] = b;
    return g;
}

BitwiseGate BitwiseGate::ccz(size_t a, size_t b, size_t cat) {
    BitwiseGate g;
    g.kind = Kind::CCZ;
    g.blocks[0] = a;
    g.blocks[1] = b;
    g.blocks[2] = cat;
    return g;
}

BitwiseGate BitwiseGate::cphase(size_t a, size_t b, double angle) {
    BitwiseGate g;
    g.kind = Kind::CPhase;
    g.blocks[0] = a;
    g.blocks[1] = b;
    g.angle = angle;
    return g;
}

BitwiseGate BitwiseGate::ccphase(size_t a, size_t b, size_t c, double angle) {
    BitwiseGate g;
    g.kind = Kind::CCPhase;
    g.blocks[0] = a;
    g.blocks[1] = b;
    g.blocks[2] = c;
    g.angle = angle;
    return g;
}

size_t BitwiseGate::arity() const {
    switch (kind) {
        case Kind::XMask:
        case Kind::ZMask:
        case Kind::HAll:
        case Kind::Phase:
            return 1;
        case Kind::CX:
        case Kind::CZ:
        case Kind::CPhase:
            return 2;
        case Kind::CCZ:
        case Kind::CCPhase:
            return 3;
    }
    return 0;
}

std::string BitwiseGate::str() const {
    static const char *names[] = {"X_mask", "Z_mask", "H_all", "P", "CX", "CZ", "CCZ", "CP", "CCP"};
    char buf[160];
    std::string out = names[(int)kind];
    out += "(";
    for (size_t i = 0; i < arity(); i++) {
        out += (i ? "," : "") + std::to_string(blocks[i]);
    }
    if (kind == Kind::Phase || kind == Kind::CPhase || kind == Kind::CCPhase) {
        std::snprintf(buf, sizeof(buf), ";angle=%.12g", angle);
        out += buf;
    }
    if (kind == Kind::XMask || kind == Kind::ZMask) {
        std::snprintf(buf, sizeof(buf), ";mask=%llx", (unsigned long long)mask);
        out += buf;
    }
    return out + ")";
}

namespace {

uint64_t block_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

void check_blocks(const BitwiseGate &gate, const LogicalState &state) {
    size_t n = 0;
    for (size_t i = 0; i < gate.arity(); i++) {
        size_t b = gate.blocks[i];
        if (b >= state.num_blocks()) {
            fail(ErrorCode::InvalidArgument, "Gate " + gate.str() + " names a missing block.");
        }
        for (size_t j = 0; j < i; j++) {
            if (gate.blocks[j] == b) {
                fail(ErrorCode::InvalidArgument, "Gate " + gate.str() + " repeats a block.");
            }
        }
        if (i == 0) {
            n = state.blocks()[b].n;
        } else if (state.blocks()[b].n != n) {
            fail(ErrorCode::InvalidArgument, "Gate " + gate.str() + " spans blocks of different sizes.");
        }
    }
}

void apply_h_all(size_t block, LogicalState &state, uint64_t budget) {
    const BlockLayout &layout = state.blocks()[block];
    if (layout.is_reference()) {
        fail(ErrorCode::UnsupportedOnState, "Bitwise H is not defined on a reference register.");
    }
    size_t n = layout.n;
    size_t r = layout.invariant_rows.size();
    if (n - r > 24 || (uint64_t{1} << (n - r)) > budget) {
        fail(ErrorCode::DimensionTooLarge, "Bitwise H output exceeds the term budget.");
    }
    BinaryMatrix inv(0, n);
    for (uint64_t w : layout.invariant_rows) {
        inv.append_row(BitVector::from_uint64(w, n));
    }
    BinaryMatrix dual = null_space(inv);
    std::vector<uint64_t> dual_rows;
    for (const auto &row : dual.rows()) {
        dual_rows.push_back(row.size() ? row.data()[0] : 0);
    }

    struct CosetAmp {
        Amplitude amp;
        uint64_t count = 0;
    };
    std::map<Key, std::map<uint64_t, CosetAmp>> groups;
    for (const auto &t : state.terms()) {
        Key others = t.key;
        others[block] = 0;
        uint64_t rep = layout.reduce(t.key[block]);
        auto &slot = groups[others][rep];
        if (slot.count == 0) {
            slot.amp = t.amp;
        } else if (std::abs(slot.amp - t.amp) > 1e-9 * std::max(1.0, std::abs(slot.amp))) {
            fail(ErrorCode::UnsupportedOnState, "Bitwise H needs amplitudes that are constant on C0 cosets.");
        }
        slot.count++;
    }
    uint64_t coset_size = uint64_t{1} << r;
    double factor = std::pow(2.0, (double)r - (double)n / 2.0);
    LogicalState out(state.blocks());
    for (const auto &[others, cosets] : groups) {
        for (const auto &[rep, slot] : cosets) {
            if (slot.count != coset_size) {
                fail(ErrorCode::UnsupportedOnState, "Bitwise H needs full C0 cosets in the support.");
            }
        }
        uint64_t y = 0;
        uint64_t total = uint64_t{1} << dual_rows.size();
        for (uint64_t g = 0; g < total; g++) {
            if (g) {
                y ^= dual_rows[std::countr_zero(g)];
            }
            Amplitude acc = 0;
            for (const auto &[rep, slot] : cosets) {
                acc += (std::popcount(rep & y) & 1) ? -slot.amp : slot.amp;
            }
            if (std::abs(acc) > 1e-14) {
                Key key = others;
                key[block] = y;
                out.add_term(key, acc * factor);
            }
        }
    }
    out.canonicalize();
    state = std::move(out);
}

}  // namespace

void apply_in_place(const BitwiseGate &gate, LogicalState &state, uint64_t budget) {
    check_blocks(gate, state);
    size_t a = gate.blocks[0];
    size_t b = gate.blocks[1];
    size_t c = gate.blocks[2];
    uint64_t m = gate.mask & block_mask(state.blocks()[a].n);
    auto &terms = state.mutable_terms();
    switch (gate.kind) {
        case BitwiseGate::Kind::XMask:
            for (auto &t : terms) {
                t.key[a] ^= m;
            }
            return;
        case BitwiseGate::Kind::ZMask:
            for (auto &t : terms) {
                if (std::popcount(t.key[a] & m) & 1) {
                    t.amp = -t.amp;
                }
            }
            return;
        case BitwiseGate::Kind::HAll:
            apply_h_all(a, state, budget);
            return;
        case BitwiseGate::Kind::Phase:
            for (auto &t : terms) {
                t.amp *= phase_power(gate.angle, std::popcount(t.key[a] & m));
            }
            return;
        case BitwiseGate::Kind::CX:
            for (auto &t : terms) {
                t.key[b] ^= t.key[a];
            }
            return;
        case BitwiseGate::Kind::CZ:
            for (auto &t : terms) {
                if (std::popcount(t.key[a] & t.key[b]) & 1) {
                    t.amp = -t.amp;
                }
            }
            return;
        case BitwiseGate::Kind::CCZ:
            for (auto &t : terms) {
                if (std::popcount(t.key[a] & t.key[b] & t.key[c]) & 1) {
                    t.amp = -t.amp;
                }
            }
            return;
        case BitwiseGate::Kind::CPhase:
            for (auto &t : terms) {
                t.amp *= phase_power(gate.angle, std::popcount(t.key[a] & t.key[b]));
            }
            return;
        case BitwiseGate::Kind::CCPhase:
            for (auto &t : terms) {
                t.amp *= phase_power(gate.angle, std::popcount(t.key[a] & t.key[b] & t.key[c]));
            }
            return;
    }
}

LogicalState apply(const BitwiseGate &gate, const LogicalState &state, uint64_t budget) {
    LogicalState out = state;
    apply_in_place(gate, out, budget);
    return out;
}

}  // namespace cssft
