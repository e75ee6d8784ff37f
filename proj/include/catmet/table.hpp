// Copyright 2026 The Catmet Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catmet/errors.hpp"

// Column-oriented result tables with enough metadata to reproduce the run.
// CSV and JSON serializations round-trip losslessly: values are written
// with 17 significant digits, metadata as strings.

namespace catmet::table {

struct Metadata {
    std::string command;  // subcommand or routine that produced the table
    // Parameter name/value pairs in insertion order.
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<std::uint64_t> seed;
    std::string version;
    std::string timestamp;  // ISO-8601 UTC

    void set_param(std::string name, std::string value);
    const std::string* find_param(const std::string& name) const;
};

struct Column {
    std::string name;
    std::vector<double> values;
};

struct SweepTable {
    Metadata metadata;
    std::vector<Column> columns;

    void add_column(std::string name, std::vector<double> values);
    // Common row count; throws DimensionMismatch if columns disagree.
    std::size_t rows() const;
};

// ISO-8601 UTC timestamp; honors the SOURCE_DATE_EPOCH environment
// variable for reproducible output.
std::string current_timestamp();

// Scientific notation with 17 significant digits: every double
// round-trips exactly.
std::string format_real(double x);

void write_csv(const SweepTable& table, std::ostream& os);
void write_json(const SweepTable& table, std::ostream& os);

// Inverses of the writers. Throw Error on malformed input.
SweepTable read_csv(std::istream& is);
SweepTable read_json(std::istream& is);

}  // namespace catmet::table
