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

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "catmet/table.hpp"

namespace table = catmet::table;

namespace {

table::SweepTable sample_table() {
    table::SweepTable t;
    t.metadata.command = "overlap";
    t.metadata.version = "0.1.0";
    t.metadata.timestamp = "2026-02-03T04:05:06Z";
    t.metadata.seed = 123456789012345ULL;
    t.metadata.set_param("n", "120");
    t.metadata.set_param("mode", "exact");
    t.add_column("g", {0.0, 1e-3, 2e-3});
    // Values chosen to stress the formatter: subnormal-ish, negative,
    // non-representable decimal.
    t.add_column("value", {1.0, -6.3803608166783255e-05, 0.1});
    return t;
}

void check_equal(const table::SweepTable& a, const table::SweepTable& b) {
    CHECK(a.metadata.command == b.metadata.command);
    CHECK(a.metadata.version == b.metadata.version);
    CHECK(a.metadata.timestamp == b.metadata.timestamp);
    CHECK(a.metadata.seed == b.metadata.seed);
    REQUIRE(a.metadata.parameters.size() == b.metadata.parameters.size());
    for (std::size_t i = 0; i < a.metadata.parameters.size(); ++i) {
        CHECK(a.metadata.parameters[i] == b.metadata.parameters[i]);
    }
    REQUIRE(a.columns.size() == b.columns.size());
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
        CHECK(a.columns[c].name == b.columns[c].name);
        REQUIRE(a.columns[c].values.size() == b.columns[c].values.size());
        for (std::size_t r = 0; r < a.columns[c].values.size(); ++r) {
            // Bitwise equality: serialization must be lossless.
            CHECK(a.columns[c].values[r] == b.columns[c].values[r]);
        }
    }
}

}  // namespace

TEST_CASE("format_real round-trips every double") {
    for (const double x : {0.1, 1.0 / 3.0, -6.3803608166783255e-05, 1e300,
                           5e-324, -0.0, 123456789.123456789}) {
        CHECK(std::strtod(table::format_real(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("CSV serialization round-trips losslessly") {
    const auto t = sample_table();
    std::ostringstream os;
    table::write_csv(t, os);
    const std::string text = os.str();
    CHECK(text.find("# command: overlap") != std::string::npos);
    CHECK(text.find("# seed: 123456789012345") != std::string::npos);
    CHECK(text.find("# param n: 120") != std::string::npos);
    std::istringstream is(text);
    check_equal(t, table::read_csv(is));
}

TEST_CASE("JSON serialization round-trips losslessly") {
    const auto t = sample_table();
    std::ostringstream os;
    table::write_json(t, os);
    std::istringstream is(os.str());
    check_equal(t, table::read_json(is));
}

TEST_CASE("seed is optional in both formats") {
    auto t = sample_table();
    t.metadata.seed.reset();
    std::ostringstream cs, js;
    table::write_csv(t, cs);
    CHECK(cs.str().find("# seed") == std::string::npos);
    table::write_json(t, js);
    std::istringstream ci(cs.str()), ji(js.str());
    CHECK(!table::read_csv(ci).metadata.seed.has_value());
    CHECK(!table::read_json(ji).metadata.seed.has_value());
}

TEST_CASE("column names with delimiters survive CSV quoting") {
    table::SweepTable t;
    t.metadata.command = "x";
    t.metadata.version = "0.1.0";
    t.metadata.timestamp = "2026-01-01T00:00:00Z";
    t.add_column("a,b", {1.0});
    t.add_column("say \"hi\"", {2.0});
    std::ostringstream os;
    table::write_csv(t, os);
    std::istringstream is(os.str());
    const auto back = table::read_csv(is);
    REQUIRE(back.columns.size() == 2);
    CHECK(back.columns[0].name == "a,b");
    CHECK(back.columns[1].name == "say \"hi\"");
}

TEST_CASE("ragged tables are rejected") {
    table::SweepTable t;
    t.add_column("a", {1.0, 2.0});
    CHECK_THROWS_AS(t.add_column("b", {1.0}), catmet::DimensionMismatch);
    t.columns.push_back({"b", {1.0}});  // bypass the guarded path
    CHECK_THROWS_AS((void)t.rows(), catmet::DimensionMismatch);
}

TEST_CASE("metadata parameters keep insertion order and update in place") {
    table::Metadata m;
    m.set_param("b", "1");
    m.set_param("a", "2");
    m.set_param("b", "3");
    REQUIRE(m.parameters.size() == 2);
    CHECK(m.parameters[0].first == "b");
    CHECK(m.parameters[0].second == "3");
    CHECK(m.find_param("a") != nullptr);
    CHECK(*m.find_param("a") == "2");
    CHECK(m.find_param("zz") == nullptr);
}

TEST_CASE("timestamp honors SOURCE_DATE_EPOCH") {
    setenv("SOURCE_DATE_EPOCH", "0", 1);
    CHECK(table::current_timestamp() == "1970-01-01T00:00:00Z");
    setenv("SOURCE_DATE_EPOCH", "86461", 1);
    CHECK(table::current_timestamp() == "1970-01-02T00:01:01Z");
    unsetenv("SOURCE_DATE_EPOCH");
    // Live clock must at least be in the right era.
    CHECK(table::current_timestamp().substr(0, 2) == "20");
}

TEST_CASE("malformed inputs raise Error, not raw library exceptions") {
    {
        std::istringstream is("g,value\n1.0\n");  // wrong field count
        CHECK_THROWS_AS((void)table::read_csv(is), catmet::Error);
    }
    {
        std::istringstream is("g,value\n1.0,bogus\n");
        CHECK_THROWS_AS((void)table::read_csv(is), catmet::Error);
    }
    {
        std::istringstream is("");  // no header at all
        CHECK_THROWS_AS((void)table::read_csv(is), catmet::Error);
    }
    {
        std::istringstream is("{not json");
        CHECK_THROWS_AS((void)table::read_json(is), catmet::Error);
    }
    {
        std::istringstream is("{\"columns\": []}");  // metadata missing
        CHECK_THROWS_AS((void)table::read_json(is), catmet::Error);
    }
    {
        std::istringstream is(
            "{\"metadata\": {\"command\": \"x\", \"version\": \"v\", "
            "\"timestamp\": \"t\"}, \"columns\": "
            "[{\"name\": \"a\", \"values\": \"oops\"}]}");
        CHECK_THROWS_AS((void)table::read_json(is), catmet::Error);
    }
}
