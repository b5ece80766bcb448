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

#include "cssft/gf2/matrix_io.h"

#include <fstream>
#include <sstream>

#include "cssft/error.h"

namespace cssft {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

MatrixText parse_matrix_text(std::string_view text) {
    MatrixText out;
    size_t line_no = 0;
    size_t cols = SIZE_MAX;
    std::vector<BitVector> rows;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        line_no++;
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            out.comments.emplace_back(trim(line.substr(1)));
            continue;
        }
        BitVector row;
        try {
            row = BitVector::from_string(line);
        } catch (const Error &) {
            fail(ErrorCode::Parse, "Line " + std::to_string(line_no) + ": expected only '0' and '1'.");
        }
        if (cols == SIZE_MAX) {
            cols = row.size();
        } else if (row.size() != cols) {
            fail(ErrorCode::Parse, "Line " + std::to_string(line_no) + ": row length differs from earlier rows.");
        }
        rows.push_back(std::move(row));
    }
    out.matrix = BinaryMatrix(std::move(rows), cols == SIZE_MAX ? 0 : cols);
    return out;
}

std::string format_matrix_text(const BinaryMatrix &m, const std::vector<std::string> &comments) {
    std::string out;
    for (const auto &c : comments) {
        out += "# " + c + "\n";
    }
    out += m.str();
    return out;
}

MatrixText read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::Io, "Cannot open '" + path + "'.");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

void write_text_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path);
    if (!out) {
        fail(ErrorCode::Io, "Cannot write '" + path + "'.");
    }
    out << contents;
    if (!out) {
        fail(ErrorCode::Io, "Write to '" + path + "' failed.");
    }
}

}  // namespace cssft
