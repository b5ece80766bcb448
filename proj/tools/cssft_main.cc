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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cssft/cssft.h"

namespace {

constexpr int EXIT_USAGE = 64;

const char *EXIT_CODES =
    "Exit codes:\n"
    "   0  success, every requested check passed\n"
    "   1  invalid argument (unknown code name, bad option value)\n"
    "   2  invalid construction or model parameters\n"
    "   3  dimension too large for enumeration or simulation\n"
    "   4  code does not contain its dual\n"
    "   5  D~ D~^T is singular\n"
    "   6  coset weights are not constant mod w\n"
    "   7  code does not meet the lemma's conditions\n"
    "   8  operation unsupported on the simulated state\n"
    "   9  infeasible overhead parameters\n"
    "  10  file I/O error\n"
    "  11  parse error in a code file\n"
    "  12  a requested check failed (see the report)\n"
    "  13  internal error\n"
    "  64  command-line usage error\n";

struct Common {
    std::string format = "json";
    std::string out;
    size_t max_dim = 0;
    uint64_t coset_budget = 0;
    bool quiet = false;

    cssft_build_options options() const {
        return {max_dim, coset_budget};
    }
};

int report_error(int status) {
    std::fprintf(stderr, "error (%s): %s\n", cssft_status_name(status), cssft_last_error());
    return status;
}

// Writes the machine-readable report and the human summary. Returns the
// process exit code.
int emit(const Common &c, cssft_report *report) {
    std::string body;
    if (c.format == "csv") {
        body = cssft_report_csv(report);
        if (body.empty()) {
            body = cssft_report_json(report);
        }
    } else if (c.format == "text") {
        body = cssft_report_text(report);
    } else {
        body = cssft_report_json(report);
    }
    if (c.out.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
    } else {
        std::ofstream f(c.out, std::ios::binary);
        f << body;
        if (!f) {
            std::fprintf(stderr, "error (Io): cannot write '%s'\n", c.out.c_str());
            cssft_report_free(report);
            return CSSFT_IO;
        }
    }
    if (!c.quiet && c.format != "text") {
        std::fputs(cssft_report_text(report), stderr);
    }
    int code = cssft_report_passed(report) ? 0 : CSSFT_CHECK_FAILED;
    cssft_report_free(report);
    return code;
}

std::vector<int> parse_lemmas(const std::string &list) {
    std::vector<int> out;
    std::string cur;
    for (char ch : list + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                int v = std::stoi(cur);
                if (v < 1 || v > 5) {
                    throw CLI::ValidationError("--lemmas", "lemma numbers are 1..5");
                }
                out.push_back(v);
            }
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur.push_back(ch);
        } else if (ch != ' ') {
            throw CLI::ValidationError("--lemmas", "expected a comma-separated list such as 2,3,4");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fault-tolerant CSS code construction, verification and overhead analysis."};
    app.footer(EXIT_CODES);
    app.require_subcommand(1);
    app.set_version_flag("--version", cssft_version());

    Common common;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", common.format, "Report format on stdout")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", common.out, "Write the report to this file instead of stdout");
        sub->add_option("--max-dim", common.max_dim, "Enumeration limit (dimension) for exact searches");
        sub->add_option("--coset-budget", common.coset_budget, "Word budget for coset leader searches");
        sub->add_flag("--quiet", common.quiet, "Do not print the human summary on stderr");
        sub->footer(EXIT_CODES);
    };

    // build
    auto *build = app.add_subcommand("build", "Construct a code and write H~, D~, stabilizers and a certificate");
    std::string family;
    int m = 0, delta = 0, p = 0, derive = 0;
    std::string load_path, out_dir;
    build->add_option("family", family, "bch | rm | qr | a registry name");
    build->add_option("--m", m, "Field degree (bch) or RM order m (rm)");
    build->add_option("--delta", delta, "BCH designed distance");
    build->add_option("--p", p, "Prime for the extended QR code");
    build->add_option("--load", load_path, "Classical code file (C0 = C^perp)");
    build->add_option("--derive", derive, "Delete this many H~ rows ([[n-1,k+1]] steps)");
    build->add_option("--out-dir", out_dir, "Directory for the matrix and certificate files");
    add_common(build);

    // verify
    auto *verify = app.add_subcommand("verify", "Check the bitwise-gate lemmas on a code");
    std::string verify_code, lemma_list;
    int w = 0;
    bool l1 = false, l2 = false, l3 = false, l4 = false, l5 = false, stabilizers = false;
    verify->add_option("code", verify_code, "Registry name or code file")->required();
    verify->add_option("--lemmas", lemma_list, "Comma-separated lemma numbers, e.g. 2,3,4");
    verify->add_flag("--lemma1", l1, "Lemma 1 (needs --w)");
    verify->add_flag("--lemma2", l2, "Lemma 2");
    verify->add_flag("--lemma3", l3, "Lemma 3");
    verify->add_flag("--lemma4", l4, "Lemma 4");
    verify->add_flag("--lemma5", l5, "Lemma 5");
    verify->add_option("--w", w, "Weight modulus for lemma 1");
    verify->add_flag("--stabilizers", stabilizers, "Also check stabilizer invariance of the encoded basis");
    add_common(verify);

    // simulate-gadget
    auto *gadget = app.add_subcommand("simulate-gadget", "Simulate a gadget network on every measurement branch");
    std::string gadget_code, gadget_kind, variant, op = "x";
    std::vector<size_t> indices;
    uint64_t budget = 0;
    gadget->add_option("code", gadget_code, "Registry name or code file")->required();
    gadget->add_option("--gadget", gadget_kind,
                       "teleport | intra_block_cx | toffoli | switch_out | switch_in | merged_measure_recover")
        ->required();
    gadget->add_option("--indices", indices, "Logical positions (e.g. control,target)")->delimiter(',');
    gadget->add_option("--variant", variant, "Teleport variant: bell or one_bit");
    gadget->add_option("--op", op, "Merged measurement operator: x or z")->check(CLI::IsMember({"x", "z"}));
    gadget->add_option("--budget", budget, "Term budget per simulated state");
    add_common(gadget);

    // overhead
    auto *overhead = app.add_subcommand("overhead", "Failure probability, noise limits and scale-up table");
    std::vector<std::string> codes;
    bool table1 = false, compare = false;
    double kq = 0, kq_scale = 0, eps_ratio = 0, tolerance = 0;
    overhead->add_option("codes", codes, "Registry names or code files");
    overhead->add_flag("--table1", table1, "Use the seven reference codes");
    overhead->add_option("--kq", kq, "Algorithm size K*Q (default 2.15e12)");
    overhead->add_option("--kq-scale", kq_scale, "Multiply K*Q (6561 = 3^8 for thousand-digit factoring)");
    overhead->add_option("--epsilon-ratio", eps_ratio, "epsilon/gamma (default 1/n)");
    overhead->add_flag("--compare-paper", compare, "Check rows against the embedded published values");
    overhead->add_option("--tolerance", tolerance, "Relative tolerance for solved columns (default 0.4)");
    add_common(overhead);

    // bch-conjecture
    auto *conj = app.add_subcommand("bch-conjecture", "Check that dual-containing BCH codes have doubly-even duals");
    int m_min = 4, m_max = 7;
    uint64_t samples = 4096;
    conj->add_option("--m-min", m_min, "Smallest m")->capture_default_str();
    conj->add_option("--m-max", m_max, "Largest m (at most 8)")->capture_default_str();
    conj->add_option("--samples", samples, "Random codewords checked per code")->capture_default_str();
    add_common(conj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    cssft_build_options opts = common.options();
    cssft_report *report = nullptr;
    int status = CSSFT_OK;

    if (build->parsed()) {
        cssft_build_request r{};
        if (!load_path.empty()) {
            if (!family.empty()) {
                std::fprintf(stderr, "usage: give either a family or --load\n");
                return EXIT_USAGE;
            }
            r.family = "load";
        } else if (family == "bch" || family == "rm" || family == "qr") {
            r.family = family.c_str();
        } else if (!family.empty()) {
            r.family = "registry";
        } else {
            std::fprintf(stderr, "usage: build needs a family (bch, rm, qr, registry name) or --load\n");
            return EXIT_USAGE;
        }
        r.m = m;
        r.delta = delta;
        r.p = p;
        r.path = load_path.c_str();
        r.name = family.c_str();
        r.derive = derive;
        r.out_dir = out_dir.c_str();
        r.options = opts;
        status = cssft_build(&r, &report);
    } else if (verify->parsed()) {
        std::vector<int> lemmas;
        try {
            lemmas = parse_lemmas(lemma_list);
        } catch (const CLI::ParseError &e) {
            std::fprintf(stderr, "usage: %s\n", e.what());
            return EXIT_USAGE;
        }
        const bool flags[] = {l1, l2, l3, l4, l5};
        for (int i = 0; i < 5; i++) {
            if (flags[i]) {
                lemmas.push_back(i + 1);
            }
        }
        if (lemmas.empty()) {
            std::fprintf(stderr, "usage: verify needs --lemmas or a --lemmaN flag\n");
            return EXIT_USAGE;
        }
        cssft_code *code = nullptr;
        status = cssft_code_resolve(verify_code.c_str(), &opts, &code);
        if (status == CSSFT_OK) {
            status = cssft_verify(code, lemmas.data(), lemmas.size(), w, stabilizers ? 1 : 0, &report);
            cssft_code_free(code);
        }
    } else if (gadget->parsed()) {
        cssft_code *code = nullptr;
        status = cssft_code_resolve(gadget_code.c_str(), &opts, &code);
        if (status == CSSFT_OK) {
            status = cssft_simulate_gadget(
                code, gadget_kind.c_str(), indices.data(), indices.size(), variant.empty() ? nullptr : variant.c_str(),
                op.c_str(), budget, &report);
            cssft_code_free(code);
        }
    } else if (overhead->parsed()) {
        std::vector<std::string> names = codes;
        if (table1) {
            for (size_t i = 0; i < cssft_reference_table_size(); i++) {
                names.emplace_back(cssft_reference_table_name(i));
            }
        }
        std::vector<const char *> ptrs;
        for (const auto &n : names) {
            ptrs.push_back(n.c_str());
        }
        status = cssft_overhead_table(ptrs.data(), ptrs.size(), kq, kq_scale, eps_ratio, compare, tolerance, &report);
    } else if (conj->parsed()) {
        status = cssft_bch_conjecture(m_min, m_max, samples, &report);
    }

    if (status != CSSFT_OK) {
        return report_error(status);
    }
    return emit(common, report);
}
