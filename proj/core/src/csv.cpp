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

#include "b2s/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace b2s {

ColumnKind kind_for_family(Family f) {
  switch (f) {
    case Family::gaussian: return ColumnKind::real_vector;
    case Family::bernoulli: return ColumnKind::binary;
    case Family::multinomial: return ColumnKind::categorical;
    case Family::poisson: return ColumnKind::count;
  }
  throw std::logic_error("unknown family");
}

std::string to_string(ColumnKind k) {
  switch (k) {
    case ColumnKind::real_vector: return "real-vector";
    case ColumnKind::binary: return "binary";
    case ColumnKind::categorical: return "categorical";
    case ColumnKind::count: return "count";
  }
  throw std::logic_error("unknown column kind");
}

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  throw std::runtime_error(name + ": line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_double(std::string_view field, double& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [end, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && end == last && !field.empty();
}

bool parse_int(std::string_view field, int& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [end, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && end == last && !field.empty();
}

struct IntRowSpec {
  const char* label;
  int min_value;
  int max_value;  // -1: unbounded above
};

IntRowSpec int_spec(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::binary: return {"binary value", 0, 1};
    case ColumnKind::categorical: return {"category index", 0, -1};
    case ColumnKind::count: return {"count", 0, -1};
    default: throw std::logic_error("not an integer kind");
  }
}

}  // namespace

DatasetFile parse_csv(std::string_view text, const std::string& name,
                      ColumnKind kind, HeaderMode header) {
  std::vector<std::pair<int, std::string_view>> lines;  // (1-based line number, content)
  {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t nl = text.find('\n', start);
      std::string_view raw = nl == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, nl - start);
      ++line_no;
      if (!trim(raw).empty()) lines.emplace_back(line_no, raw);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }
  if (lines.empty()) {
    throw std::runtime_error(name + ": empty file");
  }

  const bool numeric_kind = kind != ColumnKind::real_vector;
  int expected_cols = -1;
  Eigen::MatrixXd reals;
  std::vector<std::vector<double>> real_rows;
  std::vector<int> ints;

  bool had_header = false;
  std::size_t first_row = 0;
  auto row_parses = [&](std::string_view line) {
    const auto fields = split_fields(line);
    if (numeric_kind) {
      int v = 0;
      return fields.size() == 1 && parse_int(fields[0], v);
    }
    double v = 0.0;
    for (const auto& f : fields) {
      if (!parse_double(f, v)) return false;
    }
    return true;
  };
  if (header == HeaderMode::autodetect && !row_parses(lines[0].second)) {
    had_header = true;
    first_row = 1;
    if (lines.size() == 1) {
      throw std::runtime_error(name + ": no data rows after header");
    }
  }

  for (std::size_t r = first_row; r < lines.size(); ++r) {
    const auto [line_no, line] = lines[r];
    const auto fields = split_fields(line);

    if (numeric_kind) {
      if (fields.size() != 1) {
        fail(name, line_no, "expected a single " + to_string(kind) + " column, got " +
                                std::to_string(fields.size()) + " fields");
      }
      int v = 0;
      if (!parse_int(fields[0], v)) {
        fail(name, line_no, "cannot parse '" + std::string(fields[0]) + "' as an integer");
      }
      const IntRowSpec spec = int_spec(kind);
      if (v < spec.min_value || (spec.max_value >= 0 && v > spec.max_value)) {
        fail(name, line_no, std::string(spec.label) + " out of range: " + std::to_string(v));
      }
      ints.push_back(v);
      continue;
    }

    if (expected_cols < 0) {
      expected_cols = static_cast<int>(fields.size());
    } else if (static_cast<int>(fields.size()) != expected_cols) {
      fail(name, line_no, "ragged row: expected " + std::to_string(expected_cols) +
                              " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (!parse_double(fields[c], row[c])) {
        fail(name, line_no, "cannot parse '" + std::string(fields[c]) + "' as a real number");
      }
      if (!std::isfinite(row[c])) {
        fail(name, line_no, "non-finite value '" + std::string(fields[c]) + "'");
      }
    }
    real_rows.push_back(std::move(row));
  }

  DatasetFile out;
  out.path = name;
  out.kind = kind;
  out.had_header = had_header;
  switch (kind) {
    case ColumnKind::real_vector: {
      reals.resize(static_cast<int>(real_rows.size()), expected_cols);
      for (std::size_t i = 0; i < real_rows.size(); ++i) {
        for (int j = 0; j < expected_cols; ++j) {
          reals(static_cast<int>(i), j) = real_rows[i][static_cast<std::size_t>(j)];
        }
      }
      out.data = Dataset::gaussian(std::move(reals));
      break;
    }
    case ColumnKind::binary:
      out.data = Dataset::bernoulli(std::move(ints));
      break;
    case ColumnKind::categorical:
      out.data = Dataset::categorical(std::move(ints));
      break;
    case ColumnKind::count:
      out.data = Dataset::poisson(std::move(ints));
      break;
  }
  out.rows = out.data.size();
  out.dimension = out.data.dimension();
  if (out.rows == 0) {
    throw std::runtime_error(name + ": empty file");
  }
  return out;
}

DatasetFile load_csv(const std::string& path, ColumnKind kind, HeaderMode header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path, kind, header);
}

std::string format_csv(const Dataset& data) {
  std::string out;
  if (data.family() == Family::gaussian) {
    const auto& rows = data.real_rows();
    char buf[64];
    for (int i = 0; i < rows.rows(); ++i) {
      for (int j = 0; j < rows.cols(); ++j) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, rows(i, j));
        if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
        if (j > 0) out.push_back(',');
        out.append(buf, end);
      }
      out.push_back('\n');
    }
    return out;
  }
  for (int v : data.int_values()) {
    out += std::to_string(v);
    out.push_back('\n');
  }
  return out;
}

void write_csv(const std::string& path, const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  out << format_csv(data);
  if (!out) {
    throw std::runtime_error(path + ": write failed");
  }
}

}  // namespace b2s
