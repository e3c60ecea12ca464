// Copyright 2026 b2s authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "b2s/dataset.hpp"

namespace b2s {

/// Declared column kind of a CSV file; one kind per model family.
enum class ColumnKind { real_vector, binary, categorical, count };

ColumnKind kind_for_family(Family f);
std::string to_string(ColumnKind k);

/// autodetect: a first line that does not parse as data is taken as a header.
/// none: the first line must be data.
enum class HeaderMode { autodetect, none };

/// A CSV file parsed into a dataset. Rows are parsed strictly against the
/// declared kind; nothing is imputed.
struct DatasetFile {
  std::string path;
  ColumnKind kind = ColumnKind::real_vector;
  Dataset data;
  int rows = 0;
  int dimension = 0;  // columns for real_vector, inferred arity for categorical
  bool had_header = false;
};

/// Strict CSV load. Throws std::runtime_error naming the offending line on
/// parse failures, ragged rows, non-finite entries, wrong column counts,
/// and on empty files.
DatasetFile load_csv(const std::string& path, ColumnKind kind,
                     HeaderMode header = HeaderMode::autodetect);

/// Same parser over an in-memory buffer; `name` is used in diagnostics.
DatasetFile parse_csv(std::string_view text, const std::string& name,
                      ColumnKind kind, HeaderMode header = HeaderMode::autodetect);

/// Writes a dataset as CSV (no header). Reals use shortest round-trip
/// formatting, so load_csv(write_csv(D)) reproduces D exactly.
void write_csv(const std::string& path, const Dataset& data);

std::string format_csv(const Dataset& data);

}  // namespace b2s
