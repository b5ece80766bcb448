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

#include "cssft/registry.h"

#include "cssft/error.h"

namespace cssft {

namespace {

const char *BCH_W = "2^(m-1) BCH check-row weight";

CssCode derived(int p, int deletions, const CssOptions &options) {
    CssCode code = css_from_classical(extended_qr_code(p, options.max_dim), options);
    for (int i = 0; i < deletions; i++) {
        code = derive_smaller_code(code, 0, options);
    }
    return code;
}

}  // namespace

const std::vector<RegistryEntry> &registry() {
    static const std::vector<RegistryEntry> entries = {
        {"steane7", 7, 1, 3, 4, BCH_W, "bch m=3 delta=3 ([7,4,3] Hamming)"},
        {"hamming15", 15, 7, 3, 8, BCH_W, "bch m=4 delta=3 ([15,11,3] Hamming)"},
        {"rm15", 15, 1, 3, 8, "measured mean H~ row weight", "punctured Reed-Muller, m=4"},
        {"ext_hamming8", 8, 0, 4, 4, "minimum distance of the [8,4,4] code", "extended QR p=7"},
        {"golay24", 24, 0, 8, 8, "minimum distance of the [24,12,8] code", "extended QR p=23"},
        {"golay23", 23, 1, 7, 8, "minimum distance of the [24,12,8] code", "golay24 minus one H~ row"},
        {"qr48", 48, 0, 12, 12, "minimum distance of the [48,24,12] code", "extended QR p=47"},
        {"qr47", 47, 1, 11, 12, "minimum distance of the [48,24,12] code", "qr48 minus one H~ row"},
        {"qr80", 80, 0, 16, 16, "minimum distance of the [80,40,16] code", "extended QR p=79"},
        {"qr79", 79, 1, 15, 16, "minimum distance of the [80,40,16] code", "qr80 minus one H~ row"},
        {"qr104", 104, 0, 20, 20, "minimum distance of the [104,52,20] code", "extended QR p=103"},
        {"qr99", 99, 5, 15, 20, "minimum distance of the [104,52,20] code", "qr104 minus five H~ rows"},
        {"bch31_11", 31, 11, 5, 16, BCH_W, "bch m=5 delta=5"},
        {"bch31_1", 31, 1, 7, 16, BCH_W, "bch m=5 delta=7"},
        {"bch63_39", 63, 39, 5, 32, BCH_W, "bch m=6 delta=5"},
        {"bch63_27", 63, 27, 7, 32, BCH_W, "bch m=6 delta=7"},
        {"bch127_85", 127, 85, 7, 64, BCH_W, "bch m=7 delta=7"},
        {"bch127_43", 127, 43, 13, 64, BCH_W, "bch m=7 delta=13"},
        {"bch127_29", 127, 29, 15, 64, BCH_W, "bch m=7 delta=15"},
        {"bch255_143", 255, 143, 15, 128, BCH_W, "bch m=8 delta=15"},
    };
    return entries;
}

std::optional<RegistryEntry> find_registry_entry(const std::string &name) {
    std::string key = name == "bch127" ? "bch127_29" : name;
    for (const auto &e : registry()) {
        if (e.name == key) {
            return e;
        }
    }
    return std::nullopt;
}

CssCode build_registry_code(const std::string &name, const CssOptions &options) {
    auto entry = find_registry_entry(name);
    if (!entry) {
        fail(ErrorCode::InvalidArgument, "Unknown code name '" + name + "'.");
    }
    const std::string &key = entry->name;
    CssCode code;
    if (key == "steane7") {
        code = css_from_classical(bch_code(3, 3, options.max_dim), options);
    } else if (key == "hamming15") {
        code = css_from_classical(bch_code(4, 3, options.max_dim), options);
    } else if (key == "rm15") {
        code = quantum_reed_muller(4, options);
    } else if (key == "ext_hamming8") {
        code = derived(7, 0, options);
    } else if (key == "golay24") {
        code = derived(23, 0, options);
    } else if (key == "golay23") {
        code = derived(23, 1, options);
    } else if (key == "qr48") {
        code = derived(47, 0, options);
    } else if (key == "qr47") {
        code = derived(47, 1, options);
    } else if (key == "qr80") {
        code = derived(79, 0, options);
    } else if (key == "qr79") {
        code = derived(79, 1, options);
    } else if (key == "qr104") {
        code = derived(103, 0, options);
    } else if (key == "qr99") {
        code = derived(103, 5, options);
    } else {
        static const struct {
            const char *name;
            int m, delta;
        } bch[] = {{"bch31_11", 5, 5},   {"bch31_1", 5, 7},    {"bch63_39", 6, 5},   {"bch63_27", 6, 7},
                   {"bch127_85", 7, 7},  {"bch127_43", 7, 13}, {"bch127_29", 7, 15}, {"bch255_143", 8, 15}};
        for (const auto &b : bch) {
            if (key == b.name) {
                code = css_from_classical(bch_code(b.m, b.delta, options.max_dim), options);
            }
        }
    }
    if (code.n != static_cast<size_t>(entry->n) || code.k != static_cast<size_t>(entry->k)) {
        fail(
            ErrorCode::Internal, "Registry code '" + key + "' built as n=" + std::to_string(code.n) +
                                     ", k=" + std::to_string(code.k) + ".");
    }
    // The overhead weight follows the family rule, not the reduced basis.
    if (key.starts_with("qr") || key.starts_with("golay") || key == "ext_hamming8") {
        code.w = entry->w;
        code.w_source = entry->w_source;
    }
    code.notes.push_back("registry: " + key + " (" + entry->construction + ")");
    return code;
}

TableCode registry_table_code(const std::string &name) {
    auto entry = find_registry_entry(name);
    if (!entry) {
        fail(ErrorCode::InvalidArgument, "Unknown code name '" + name + "'.");
    }
    return {entry->name, entry->n, entry->k, entry->d, entry->w, entry->w_source};
}

}  // namespace cssft
