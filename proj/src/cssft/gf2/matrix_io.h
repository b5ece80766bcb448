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

#ifndef _CSSFT_GF2_MATRIX_IO_H
#define _CSSFT_GF2_MATRIX_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "cssft/gf2/binary_matrix.h"

namespace cssft {

/// A parsed matrix file: '#' lines are kept as comments (without the '#').
struct MatrixText {
    BinaryMatrix matrix;
    std::vector<std::string> comments;
};

/// Parses the text format: one row of '0'/'1' per line, '#' comment lines,
/// blank lines ignored.
MatrixText parse_matrix_text(std::string_view text);
std::string format_matrix_text(const BinaryMatrix &m, const std::vector<std::string> &comments = {});

MatrixText read_matrix_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &contents);

}  // namespace cssft

#endif
