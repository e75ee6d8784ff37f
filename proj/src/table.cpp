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

#include "catmet/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace catmet::table {

namespace {

using ordered_json = nlohmann::ordered_json;

// RFC-4180 quoting, applied only when the field needs it.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

double parse_real(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw Error("table: malformed numeric value '" + s + "'");
    }
    return v;
}

}  // namespace

void Metadata::set_param(std::string name, std::string value) {
    for (auto& kv : parameters) {
        if (kv.first == name) {
            kv.second = std::move(value);
            return;
        }
    }
    parameters.emplace_back(std::move(name), std::move(value));
}

const std::string* Metadata::find_param(const std::string& name) const {
    for (const auto& kv : parameters) {
        if (kv.first == name) {
            return &kv.second;
        }
    }
    return nullptr;
}

void SweepTable::add_column(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != columns.front().values.size()) {
        throw DimensionMismatch(
            "add_column: column '" + name + "' has " +
            std::to_string(values.size()) + " rows, table has " +
            std::to_string(columns.front().values.size()));
    }
    columns.push_back({std::move(name), std::move(values)});
}

std::size_t SweepTable::rows() const {
    if (columns.empty()) {
        return 0;
    }
    const std::size_t n = columns.front().values.size();
    for (const auto& col : columns) {
        if (col.values.size() != n) {
            throw DimensionMismatch("table columns have unequal lengths");
        }
    }
    return n;
}

std::string current_timestamp() {
    std::time_t t = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::time(nullptr);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

void write_csv(const SweepTable& table, std::ostream& os) {
    const std::size_t n = table.rows();
    os << "# command: " << table.metadata.command << '\n';
    os << "# version: " << table.metadata.version << '\n';
    os << "# timestamp: " << table.metadata.timestamp << '\n';
    if (table.metadata.seed) {
        os << "# seed: " << *table.metadata.seed << '\n';
    }
    for (const auto& [key, value] : table.metadata.parameters) {
        os << "# param " << key << ": " << value << '\n';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << csv_field(table.columns[c].name);
    }
    os << '\n';
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? "," : "") << format_real(table.columns[c].values[r]);
        }
        os << '\n';
    }
}

SweepTable read_csv(std::istream& is) {
    SweepTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body.front() == ' ') {
                body.erase(0, 1);
            }
            const auto colon = body.find(": ");
            if (colon == std::string::npos) {
                continue;
            }
            const std::string key = body.substr(0, colon);
            const std::string value = body.substr(colon + 2);
            if (key == "command") {
                table.metadata.command = value;
            } else if (key == "version") {
                table.metadata.version = value;
            } else if (key == "timestamp") {
                table.metadata.timestamp = value;
            } else if (key == "seed") {
                table.metadata.seed = std::strtoull(value.c_str(), nullptr, 10);
            } else if (key.rfind("param ", 0) == 0) {
                table.metadata.set_param(key.substr(6), value);
            }
            continue;
        }
        if (!header_seen) {
            for (auto& name : split_csv_line(line)) {
                table.columns.push_back({std::move(name), {}});
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != table.columns.size()) {
            throw Error("table: row with " + std::to_string(fields.size()) +
                        " fields in a " +
                        std::to_string(table.columns.size()) +
                        "-column table");
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            table.columns[c].values.push_back(parse_real(fields[c]));
        }
    }
    if (!header_seen) {
        throw Error("table: CSV input has no header row");
    }
    return table;
}

void write_json(const SweepTable& table, std::ostream& os) {
    table.rows();
    ordered_json meta;
    meta["command"] = table.metadata.command;
    meta["version"] = table.metadata.version;
    meta["timestamp"] = table.metadata.timestamp;
    if (table.metadata.seed) {
        meta["seed"] = *table.metadata.seed;
    }
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : table.metadata.parameters) {
        params[key] = value;
    }
    meta["parameters"] = std::move(params);
    ordered_json cols = ordered_json::array();
    for (const auto& col : table.columns) {
        ordered_json jc;
        jc["name"] = col.name;
        jc["values"] = col.values;
        cols.push_back(std::move(jc));
    }
    ordered_json root;
    root["metadata"] = std::move(meta);
    root["columns"] = std::move(cols);
    os << root.dump(2) << '\n';
}

SweepTable read_json(std::istream& is) {
    SweepTable table;
    try {
        ordered_json root;
        is >> root;
        const auto& meta = root.at("metadata");
        table.metadata.command = meta.at("command").get<std::string>();
        table.metadata.version = meta.at("version").get<std::string>();
        table.metadata.timestamp = meta.at("timestamp").get<std::string>();
        if (meta.contains("seed")) {
            table.metadata.seed = meta.at("seed").get<std::uint64_t>();
        }
        if (meta.contains("parameters")) {
            for (const auto& [key, value] : meta.at("parameters").items()) {
                table.metadata.set_param(key, value.get<std::string>());
            }
        }
        for (const auto& jc : root.at("columns")) {
            table.columns.push_back(
                {jc.at("name").get<std::string>(),
                 jc.at("values").get<std::vector<double>>()});
        }
    } catch (const std::exception& e) {
        throw Error(std::string("table: malformed JSON: ") + e.what());
    }
    table.rows();
    return table;
}

}  // namespace catmet::table
