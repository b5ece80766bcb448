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

#ifndef _CSSFT_REGISTRY_H
#define _CSSFT_REGISTRY_H

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cssft/css/css_code.h"
#include "cssft/overhead/table1.h"

namespace cssft {

/// A named code that can be built without external data.
struct RegistryEntry {
    std::string name;
    /// Nominal parameters.
    int n = 0;
    int k = 0;
    int d = 0;
    /// Mean H~ row weight used by the overhead model.
    double w = 0;
    std::string w_source;
    std::string construction;
};

const std::vector<RegistryEntry> &registry();
/// Also accepts the alias "bch127" for bch127_29.
std::optional<RegistryEntry> find_registry_entry(const std::string &name);

/// Builds a registry code. Throws InvalidArgument for unknown names.
CssCode build_registry_code(const std::string &name, const CssOptions &options = {});

/// Overhead parameters for a registry name, without building the code.
TableCode registry_table_code(const std::string &name);

}  // namespace cssft

#endif
