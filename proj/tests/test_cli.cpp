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

// End-to-end drives of the CLI binary named by the CATMET_CLI environment
// variable. Each test parses the emitted table back through the table
// module, so the CLI surface and the serialization stay in lockstep.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "catmet/table.hpp"
#include "testutil.hpp"

using catmet::table::SweepTable;

namespace {

const double kPi = std::acos(-1.0);

bool cli_missing() {
    if (testutil::cli_path() == nullptr) {
        MESSAGE("CATMET_CLI not set; skipping CLI test");
        return true;
    }
    return false;
}

SweepTable parse_csv(const std::string& text) {
    std::istringstream is(text);
    return catmet::table::read_csv(is);
}

const std::vector<double>& column(const SweepTable& t,
                                  const std::string& name) {
    for (const auto& col : t.columns) {
        if (col.name == name) {
            return col.values;
        }
    }
    REQUIRE_MESSAGE(false, ("missing column " + name));
    static const std::vector<double> empty;
    return empty;
}

std::size_t first_negative(const std::vector<double>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0.0) {
            return i;
        }
    }
    return xs.size();
}

}  // namespace

TEST_CASE("cli: overlap sweep structure and fringe compression") {
    if (cli_missing()) return;
    const auto r =
        testutil::run_cli("overlap --n-list 30 120 --g-max 0.1 --points 400");
    REQUIRE(r.status == 0);
    const SweepTable t = parse_csv(r.out);
    CHECK(t.metadata.command == "overlap");
    CHECK(t.metadata.version == "0.1.0");
    CHECK(t.metadata.find_param("mode") != nullptr);
    CHECK(*t.metadata.find_param("mode") == "exact");
    REQUIRE(t.rows() == 400);
    CHECK(column(t, "g").front() == 0.0);
    CHECK(column(t, "overlap_N30").front() == 1.0);
    CHECK(column(t, "overlap_N120").front() == 1.0);
    // Larger photon number pushes the first sign change to smaller g.
    const std::size_t i120 = first_negative(column(t, "overlap_N120"));
    const std::size_t i30 = first_negative(column(t, "overlap_N30"));
    CHECK(i120 < i30);
    CHECK(i30 < 400);
}

TEST_CASE("cli: usage errors exit with status 2") {
    if (cli_missing()) return;
    CHECK(testutil::run_cli("overlap --n-list 30 --g-max 0").status == 2);
    CHECK(testutil::run_cli("overlap --bogus-flag 1").status == 2);
    CHECK(testutil::run_cli("").status == 2);  // subcommand required
    CHECK(testutil::run_cli("qfi --mode pure-cat").status == 2);  // no --n
    CHECK(testutil::run_cli(
              "estimate --n 120 --g 0.02 --trials 100 --reps 10 --seed 1")
              .status == 2);  // g beyond pi/(2N)
    CHECK(testutil::run_cli("meter --type gaussian --sigma 1 --n-list 4")
              .status == 2);  // no displacement request
    CHECK(testutil::run_cli("--version").status == 0);
}

TEST_CASE("cli: postselect probabilities are complementary, dip at pi/(2N)") {
    if (cli_missing()) return;
    const auto r = testutil::run_cli("postselect --preset fig1");
    REQUIRE(r.status == 0);
    const SweepTable t = parse_csv(r.out);
    REQUIRE(t.rows() == 500);
    CHECK(*t.metadata.find_param("preset") == "fig1");
    const auto& g = column(t, "g");
    CHECK(g.back() == doctest::Approx(0.25).epsilon(1e-15));
    for (const char* n : {"10", "30", "120"}) {
        const auto& plus = column(t, std::string("p_plus_N") + n);
        const auto& minus = column(t, std::string("p_minus_N") + n);
        for (std::size_t i = 0; i < plus.size(); ++i) {
            CHECK(plus[i] + minus[i] == 1.0);
        }
        CHECK(plus.front() == 1.0);
    }
    // Deepest survival dip for N = 120 sits at the first fringe minimum,
    // within one grid step of pi / (2 N) (the envelope pulls it slightly
    // below, by much less than a step).
    const auto& p120 = column(t, "p_plus_N120");
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < p120.size(); ++i) {
        if (p120[i] < p120[argmin]) {
            argmin = i;
        }
    }
    const double step = 0.25 / 499.0;
    CHECK(std::abs(g[argmin] - kPi / 240.0) <= step);
}

TEST_CASE("cli: qfi modes emit the documented closed-form values") {
    if (cli_missing()) return;
    {
        const auto r = testutil::run_cli("qfi --mode coherent-only --n 25");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        CHECK(*t.metadata.find_param("method") == "pure_fd");
        CHECK(std::abs(column(t, "fisher")[0] - 100.0) < 0.5);
    }
    {
        const auto r =
            testutil::run_cli("qfi --mode gaussian-meter --n 1 --sigma 1");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        CHECK(*t.metadata.find_param("method") == "closed_form");
        CHECK(column(t, "fisher")[0] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(column(t, "crb")[0] == doctest::Approx(2.0).epsilon(1e-12));
    }
    {
        const auto r = testutil::run_cli(
            "qfi --mode dephased --n 10 --phi2 0.01 --g 0.01");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        CHECK(*t.metadata.find_param("method") == "sld");
        CHECK(std::abs(column(t, "fisher")[0] - 7.326255555493671) <
              0.005 * 7.326255555493671);
    }
    {
        const auto r = testutil::run_cli(
            "qfi --mode postselect-cfi --n 120 --g 0.005");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        CHECK(*t.metadata.find_param("method") == "classical_binary");
        CHECK(column(t, "fisher")[0] ==
              doctest::Approx(57247.40811230238).epsilon(1e-9));
    }
}

TEST_CASE("cli: estimate preset is reproducible byte for byte") {
    if (cli_missing()) return;
    const std::string prefix = "SOURCE_DATE_EPOCH=0 ";
    const auto a = testutil::run_cli("estimate --preset fig3 --workers 1",
                                     prefix);
    const auto b = testutil::run_cli("estimate --preset fig3 --workers 1",
                                     prefix);
    const auto c = testutil::run_cli("estimate --preset fig3 --workers 3",
                                     prefix);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const SweepTable t = parse_csv(a.out);
    REQUIRE(t.metadata.seed.has_value());
    CHECK(*t.metadata.seed == 20120);
    CHECK(*t.metadata.find_param("model") == "smallg_cos2");
    CHECK(t.rows() == 1);
    CHECK(std::abs(column(t, "g_hat_mean")[0] - 0.005) < 1e-4);
    CHECK(column(t, "edge_count")[0] == 0.0);
}

TEST_CASE("cli: omitted seed still lands in the metadata") {
    if (cli_missing()) return;
    const auto r = testutil::run_cli(
        "estimate --n 120 --g 0.005 --trials 10 --reps 2");
    REQUIRE(r.status == 0);
    CHECK(parse_csv(r.out).metadata.seed.has_value());
}

TEST_CASE("cli: scaling sweep reports a Heisenberg-like slope") {
    if (cli_missing()) return;
    const auto r = testutil::run_cli(
        "scaling --n-list 25 50 100 200 --gn 0.785398163397448 "
        "--trials 4000 --reps 120 --seed 7");
    REQUIRE(r.status == 0);
    const SweepTable t = parse_csv(r.out);
    REQUIRE(t.rows() == 4);
    const std::string* slope = t.metadata.find_param("loglog_slope");
    REQUIRE(slope != nullptr);
    const double s = std::strtod(slope->c_str(), nullptr);
    CHECK(s > -1.15);
    CHECK(s < -0.85);
    CHECK(column(t, "g")[0] ==
          doctest::Approx(0.785398163397448 / 25.0).epsilon(1e-12));
}

TEST_CASE("cli: meter subcommand covers both pointer kinds") {
    if (cli_missing()) return;
    {
        const auto r = testutil::run_cli(
            "meter --type gaussian --sigma 1 --n-list 4 --criterion crb");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        CHECK(column(t, "d_min")[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
    {
        const auto r = testutil::run_cli(
            "meter --type plane --wavelength 1.5 --n-list 1 4 16 64 "
            "--first-zero");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        const double slope = testutil::loglog_slope(column(t, "n"),
                                                    column(t, "d_first_zero"));
        CHECK(std::abs(slope + 1.0) < 1e-12);
    }
    {
        const auto r = testutil::run_cli(
            "meter --type plane --wavelength 6.283185307179586 --n-list 1 "
            "--d 0.7853981633974483");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        CHECK(column(t, "phase")[0] ==
              doctest::Approx(kPi / 4.0).epsilon(1e-12));
        CHECK(column(t, "p_plus")[0] == doctest::Approx(0.5).epsilon(1e-12));
    }
    {
        const auto r = testutil::run_cli(
            "meter --type gaussian --sigma 0.5 --n-list 1 9 --d-max 2 "
            "--points 5");
        REQUIRE(r.status == 0);
        const SweepTable t = parse_csv(r.out);
        REQUIRE(t.rows() == 5);
        // overlap_N9 = overlap_N1^9 column by column.
        const auto& one = column(t, "overlap_N1");
        const auto& nine = column(t, "overlap_N9");
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(nine[i] == doctest::Approx(std::pow(one[i], 9.0))
                                 .epsilon(1e-12));
        }
    }
}

TEST_CASE("cli: --out writes the table to a file, --format json parses") {
    if (cli_missing()) return;
    const std::string path = "cli_out_test.tmp.csv";
    std::remove(path.c_str());
    const auto r = testutil::run_cli(
        "qfi --mode gaussian-meter --n 4 --sigma 2 --out " + path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    const SweepTable t = catmet::table::read_csv(f);
    CHECK(column(t, "fisher")[0] == doctest::Approx(0.25).epsilon(1e-12));
    std::remove(path.c_str());

    const auto j = testutil::run_cli(
        "qfi --mode gaussian-meter --n 4 --sigma 2 --format json");
    REQUIRE(j.status == 0);
    std::istringstream is(j.out);
    const SweepTable jt = catmet::table::read_json(is);
    CHECK(jt.metadata.command == "qfi");
    CHECK(column(jt, "fisher")[0] == doctest::Approx(0.25).epsilon(1e-12));
}
