#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <doctest.h>

#include "pam/dataset_io.hpp"
#include "pam/units.hpp"

using namespace pam;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pam_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& body) {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << body;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("well-formed curve file") {
    TempDir tmp;
    const auto p = write_file(tmp.path, "dsmp.csv",
                              "pressure_bar,contraction_ratio,force_N\n"
                              "3,0.0,701.2\n"
                              "3,0.1,420.5\n"
                              "5,0.05,1100\n");
    const auto ds = load_curve_csv(p);
    CHECK(ds.muscle_id == "dsmp");
    REQUIRE(ds.samples.size() == 3);
    CHECK(ds.samples[0].pressure_pa == 3.0e5);
    CHECK(ds.samples[0].force_n == 701.2);
    CHECK(ds.samples[1].eps == 0.1);
    CHECK(ds.samples[2].row == 4);
}

TEST_CASE("crlf endings are accepted") {
    TempDir tmp;
    const auto p = write_file(tmp.path, "crlf.csv",
                              "pressure_bar,contraction_ratio,force_N\r\n"
                              "2,0.1,300\r\n");
    CHECK(load_curve_csv(p).samples.size() == 1);
}

TEST_CASE("renamed header is a schema error naming the expectation") {
    TempDir tmp;
    const auto p = write_file(tmp.path, "bad.csv", "P,eps,F\n1,0.1,2\n");
    try {
        load_curve_csv(p);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("pressure_bar,contraction_ratio,force_N") !=
              std::string::npos);
    }
}

TEST_CASE("invalid rows are rejected with their row number") {
    TempDir tmp;
    auto expect_mentions_row = [&](const std::string& body, const char* needle) {
        const auto p = write_file(tmp.path, "x.csv", body);
        try {
            load_curve_csv(p);
            FAIL("expected IoError for ", needle);
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    const std::string header = "pressure_bar,contraction_ratio,force_N\n";
    expect_mentions_row(header + "3,-0.1,100\n", "row 2");
    expect_mentions_row(header + "3,0.1,100\n3,abc,100\n", "row 3");
    expect_mentions_row(header + "0,0.1,100\n", "row 2");
    expect_mentions_row(header + "3,0.1,100\n3,0.1,250\n", "duplicate");
    expect_mentions_row(header + "3,0.1\n", "3 columns");
    expect_mentions_row(header, "no data rows");
}

TEST_CASE("sweep csv format and determinism") {
    const std::vector<SweepRow> rows{
        {6.0, -0.5, 2.5e5, 1.5e5, Feasibility::feasible},
        {6.0, 0.5, 1.217e5, 3.833e5, Feasibility::clipped_infeasible},
    };
    const std::string text = format_sweep_csv(rows);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line ==
          "stiffness_Nm_per_rad,theta_deg,p1_minus_p2_bar,p1_plus_p2_bar,p1_bar,p2_bar,feasible");
    std::getline(in, line);
    CHECK(line == "6,-28.6478898,1,4,2.5,1.5,feasible");
    std::getline(in, line);
    CHECK(line.find("clipped_infeasible") != std::string::npos);

    TempDir tmp;
    write_sweep_csv(rows, tmp.path / "a.csv");
    write_sweep_csv(rows, tmp.path / "b.csv");
    CHECK(read_file(tmp.path / "a.csv") == read_file(tmp.path / "b.csv")); // byte-identical
    CHECK(read_file(tmp.path / "a.csv") == text);
}

TEST_CASE("empty sweep table writes a header-only file") {
    TempDir tmp;
    write_sweep_csv({}, tmp.path / "empty.csv");
    CHECK(read_file(tmp.path / "empty.csv") ==
          "stiffness_Nm_per_rad,theta_deg,p1_minus_p2_bar,p1_plus_p2_bar,p1_bar,p2_bar,feasible\n");
}

TEST_CASE("written sweep values survive a parse round trip at 9 significant digits") {
    std::vector<SweepRow> rows;
    for (int i = 0; i < 40; ++i)
        rows.push_back({6.0 + i * 0.1, -1.0 + i * 0.05, (0.3 + 0.11 * i) * 1e5,
                        (4.9 - 0.07 * i) * 1e5, Feasibility::feasible});

    std::istringstream in(format_sweep_csv(rows));
    std::string line;
    std::getline(in, line); // header
    std::size_t i = 0;
    while (std::getline(in, line)) {
        REQUIRE(i < rows.size());
        double k, th, diff, sum, p1, p2;
        char tag[40];
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%39s", &k, &th, &diff, &sum, &p1,
                            &p2, tag) == 7);
        CHECK(std::abs(k - rows[i].stiffness) <= 1e-8 * std::abs(rows[i].stiffness));
        CHECK(std::abs(th - rows[i].theta * units::rad_to_deg) <=
              1e-8 * std::abs(rows[i].theta * units::rad_to_deg));
        CHECK(std::abs(p1 * 1e5 - rows[i].p1) <= 1e-8 * rows[i].p1);
        CHECK(std::abs(p2 * 1e5 - rows[i].p2) <= 1e-8 * rows[i].p2);
        CHECK(std::abs((diff + sum) / 2.0 * 1e5 - rows[i].p1) <= 1e-7 * rows[i].p1);
        ++i;
    }
    CHECK(i == rows.size());
}
