#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "symmom/eigenform.hpp"

using namespace symmom;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

} // namespace

TEST_CASE("delta q-expansion") {
    auto series = delta_coefficients(2000);
    CHECK(series.raw[1] == 1);
    CHECK(series.raw[2] == -24);
    CHECK(series.raw[3] == 252);
    CHECK(series.raw[4] == -1472); // a(2)^2 - 2^11
    CHECK(series.raw[5] == 4830);
    CHECK(series.raw[1000] == parse_int128("-30328412970240000"));
    CHECK(series.lambda[1] == doctest::Approx(1.0));
    CHECK(series.lambda[2] == doctest::Approx(-24.0 / std::pow(2.0, 5.5)));
    CHECK_NOTHROW(validate(series));
}

TEST_CASE("ramanujan congruence mod 691") {
    auto series = delta_coefficients(1000);
    for (long n = 1; n <= 1000; ++n) {
        long sigma = 0;
        for (long m = 1; m <= n; ++m)
            if (n % m == 0) {
                long pw = 1;
                for (int t = 0; t < 11; ++t)
                    pw = (pw * m) % 691;
                sigma = (sigma + pw) % 691;
            }
        long lhs = static_cast<long>(((series.raw[n] % 691) + 691) % 691);
        CHECK(lhs == sigma);
    }
}

TEST_CASE("exact range bound") {
    CHECK_THROWS_AS(delta_coefficients(3'000'000), ExactRangeExceeded);
    CHECK_THROWS_AS(delta_coefficients(0), OutOfRange);
}

TEST_CASE("csv round trip") {
    auto series = delta_coefficients(200);
    auto path = temp_file("symmom_roundtrip.csv");
    save_coefficients(series, path);
    auto loaded = load_coefficients(path, 12);
    CHECK(loaded.length == series.length);
    CHECK(loaded.has_raw());
    for (long n = 1; n <= 200; ++n) {
        CHECK(loaded.raw[n] == series.raw[n]);
        CHECK(loaded.lambda[n] == series.lambda[n]);
    }
    fs::remove(path);
}

TEST_CASE("load rejects broken multiplicativity") {
    auto series = delta_coefficients(50);
    series.raw.clear(); // float-only path so a single lambda can be bent
    series.lambda[6] += 0.5;
    auto path = temp_file("symmom_badmult.csv");
    save_coefficients(series, path);
    CHECK_THROWS_WITH_AS(static_cast<void>(load_coefficients(path, 12)),
                         doctest::Contains("multiplicativity"), InvariantViolation);
    fs::remove(path);
}

TEST_CASE("load rejects a Deligne violation") {
    auto series = delta_coefficients(50);
    series.raw.clear();
    series.lambda[2] = 2.5;
    auto path = temp_file("symmom_baddeligne.csv");
    save_coefficients(series, path);
    CHECK_THROWS_WITH_AS(static_cast<void>(load_coefficients(path, 12)),
                         doctest::Contains("Deligne"), InvariantViolation);
    fs::remove(path);
}

TEST_CASE("load rejects malformed files") {
    auto path = temp_file("symmom_badformat.csv");
    std::ofstream(path) << "x,y\n1,2\n";
    CHECK_THROWS_AS(static_cast<void>(load_coefficients(path, 12)), FormatError);
    fs::remove(path);
}

TEST_CASE("satake angles") {
    auto series = delta_coefficients(100);
    auto angle = satake_angle(series, 2);
    CHECK(angle.theta == doctest::Approx(std::acos(series.lambda[2] / 2.0)));
    CHECK_FALSE(angle.degenerate);
    CHECK_THROWS_AS(satake_angle(series, 4), OutOfRange);   // not prime
    CHECK_THROWS_AS(satake_angle(series, 101), OutOfRange); // beyond N

    CoefficientSeries synth;
    synth.weight = 12;
    synth.label = "synthetic";
    synth.length = 3;
    synth.lambda = {0.0, 1.0, 0.0, 2.0};
    CHECK(satake_angle(synth, 2).theta == doctest::Approx(std::acos(0.0)));
    auto deg = satake_angle(synth, 3);
    CHECK(deg.theta == doctest::Approx(0.0));
    CHECK(deg.degenerate);
    synth.lambda[2] = 2.5;
    CHECK_THROWS_AS(satake_angle(synth, 2), OutOfRange);
}

TEST_CASE("int128 parsing and printing") {
    CHECK(to_string(parse_int128("-123456789012345678901234567890")) ==
          "-123456789012345678901234567890");
    CHECK(to_string(Int128(0)) == "0");
    CHECK_THROWS_AS(parse_int128("12x"), FormatError);
    CHECK_THROWS_AS(parse_int128(""), FormatError);
}
