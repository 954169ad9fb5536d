#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "tiso/output.hpp"

using doctest::Approx;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tiso::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> lines;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            lines.push_back(line);
    return lines;
}

std::string meta_value(const std::string& csv, const std::string& key) {
    std::istringstream in(csv);
    std::string line;
    const std::string prefix = "# " + key + "=";
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0)
            return line.substr(prefix.size());
    return {};
}

/// Row of the CSV whose first cell is `first`.
std::vector<std::string> row_starting(const std::string& csv, const std::string& first) {
    for (const auto& line : data_lines(csv)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (line.ends_with(','))
            cells.emplace_back();
        if (!cells.empty() && cells[0] == first)
            return cells;
    }
    return {};
}

} // namespace

TEST_CASE("number formatting") {
    CHECK(tiso::format_number(std::sqrt(2.0)) == "1.41421356");
    CHECK(tiso::format_number(1234567891234.0) == "1.23456789e+12");
    CHECK(tiso::round_printed(std::sqrt(2.0)) == 1.41421356);
}

TEST_CASE("critical") {
    auto r = run({"critical", "--spin", "0"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "spin,eta_c");
    CHECK(lines[1] == "0,1.41421356");
    CHECK(meta_value(r.out, "param.spin") == "0");
    CHECK(meta_value(r.out, "constants_fingerprint").size() == 16);

    r = run({"critical", "--spin", "1", "--numeric"});
    REQUIRE(r.code == 0);
    const auto cells = row_starting(r.out, "1");
    REQUIRE(cells.size() == 4);
    CHECK(std::abs(std::stod(cells[3])) < 1e-6);
    CHECK(std::stod(cells[2]) == Approx(std::sqrt(5.0)).epsilon(1e-8));

    CHECK(run({"critical", "--spin", "-1"}).code == 2);
    CHECK(run({"critical", "--spin", "1/3"}).code == 2);
    CHECK(run({"critical"}).code == 2);
    CHECK(run({"critical", "--spin", "1/2", "--numeric"}).code == 3);
}

TEST_CASE("angular") {
    auto r = run({"angular", "--eta", "1.4142", "--spin", "0", "--normalize", "rutherford90"});
    REQUIRE(r.code == 0);
    auto cells = row_starting(r.out, "90");
    REQUIRE(cells.size() == 2);
    CHECK(std::stod(cells[1]) == Approx(4.0).epsilon(1e-9));
    CHECK(data_lines(r.out).size() == 358);

    r = run({"angular", "--eta", "1.4142", "--spin", "0", "--normalize", "rutherford90", "--incoherent"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(row_starting(r.out, "90")[1]) == Approx(2.0).epsilon(1e-9));

    r = run({"angular", "--system", "alpha-alpha", "--energy", "397"});
    REQUIRE(r.code == 0);
    CHECK(data_lines(r.out)[0] == "theta_deg,sigma_fm2_per_sr,sigma_barn_per_sr");
    CHECK(std::stod(meta_value(r.out, "param.a_fm")) == Approx(7.2542292).epsilon(1e-7));
    cells = row_starting(r.out, "90");
    const double a = 7.25422921914358;
    CHECK(std::stod(cells[2]) == Approx(4 * a * a / 100).epsilon(1e-3));

    CHECK(run({"angular", "--eta", "1.4", "--spin", "0", "--theta-min", "0"}).code == 2);
    CHECK(run({"angular", "--eta", "1.4", "--spin", "0", "--theta-max", "180"}).code == 2);
    CHECK(run({"angular", "--eta", "1.4", "--spin", "1/2", "--stat", "boson"}).code == 2);
    CHECK(run({"angular", "--spin", "0"}).code == 2);
    CHECK(run({"angular", "--system", "carbon", "--energy", "1"}).code == 2);
}

TEST_CASE("table") {
    const auto r = run({"table"});
    REQUIRE(r.code == 0);
    const auto d = row_starting(r.out, "d-d");
    REQUIRE(d.size() == 13);
    CHECK(d[12] == "sigma90_inconsistent");
    const auto alpha = row_starting(r.out, "alpha-alpha");
    REQUIRE(alpha.size() >= 12);
    CHECK(alpha[6] == "true");
    CHECK(std::stod(alpha[2]) == Approx(400).epsilon(0.05));
    CHECK(!meta_value(r.out, "note.barrier_radius").empty());
}

TEST_CASE("plateau, sweep, hardsphere") {
    auto r = run({"plateau", "--spin", "0", "--eta-critical", "--epsilon", "0.05"});
    REQUIRE(r.code == 0);
    auto cells = row_starting(r.out, "0.05");
    REQUIRE(cells.size() == 6);
    CHECK(std::stod(cells[1]) <= 66);
    CHECK(std::stod(cells[2]) >= 114);

    r = run({"plateau", "--kr", "1.5", "--spin", "0"});
    REQUIRE(r.code == 0);

    r = run({"sweep", "--spin", "0", "--delta", "0.05"});
    REQUIRE(r.code == 0);
    CHECK(meta_value(r.out, "classification") == "min,flat,max");
    CHECK(std::stod(meta_value(r.out, "energy_shift_first_order")) == Approx(0.1));
    CHECK(run({"sweep", "--spin", "0", "--delta", "0.7"}).code == 2);

    r = run({"hardsphere", "--critical-scan", "0.2", "3", "--spin", "0", "--stat", "boson"});
    REQUIRE(r.code == 0);
    cells = row_starting(r.out, "0");
    REQUIRE(cells.size() == 3);
    CHECK(std::abs(std::stod(cells[2]) - 1.5) < 0.5);

    r = run({"hardsphere", "--critical-scan", "0.2", "3", "--spin", "1/2", "--stat", "fermion"});
    REQUIRE(r.code == 0);
    CHECK(row_starting(r.out, "1/2")[2] == "none");

    r = run({"hardsphere", "--kr", "1.5"});
    REQUIRE(r.code == 0);
    CHECK(data_lines(r.out)[0] == "theta_deg,sigma_over_r2");

    CHECK(run({"hardsphere"}).code == 2);
    CHECK(run({"hardsphere", "--critical-scan", "3", "0.2"}).code == 2);
}

TEST_CASE("JSON and CSV agree; output is deterministic") {
    const std::vector<std::string> base{"angular", "--eta", "2.3", "--spin", "1", "--theta-step", "5"};
    auto json_args = base;
    json_args.insert(json_args.begin(), {"--format", "json"});
    const auto csv = run(base);
    const auto js = run(json_args);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    CHECK(run(base).out == csv.out);
    CHECK(run(json_args).out == js.out);

    const auto doc = json::parse(js.out);
    CHECK(doc.contains("metadata"));
    CHECK(doc.contains("params"));
    CHECK(doc["params"]["eta"] == 2.3);
    const auto& rows = doc["data"]["rows"];
    const auto lines = data_lines(csv.out);
    REQUIRE(rows.size() + 1 == lines.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::stringstream ss(lines[i + 1]);
        std::string theta, fm2, barn;
        std::getline(ss, theta, ',');
        std::getline(ss, fm2, ',');
        std::getline(ss, barn, ',');
        CHECK(std::stod(theta) == rows[i]["theta_deg"].get<double>());
        CHECK(std::stod(fm2) == rows[i]["sigma_fm2_per_sr"].get<double>());
        CHECK(std::stod(barn) == rows[i]["sigma_barn_per_sr"].get<double>());
    }
}

TEST_CASE("catalog file and constants override") {
    const std::string path = "test_cli_catalog.txt";
    {
        std::ofstream f(path);
        f << "c12 6 12 0\n";
    }
    auto r = run({"--catalog", path, "table"});
    REQUIRE(r.code == 0);
    const auto c12 = row_starting(r.out, "c12-c12");
    REQUIRE(c12.size() == 13);
    CHECK(c12[6] == "false");

    r = run({"--catalog", path, "kinematics", "--system", "c12-c12", "--energy", "1000"});
    REQUIRE(r.code == 0);
    CHECK(run({"--catalog", "does-not-exist.txt", "table"}).code == 2);
    std::remove(path.c_str());

    const std::string cpath = "test_cli_constants.txt";
    {
        std::ofstream f(cpath);
        f << "r0 1.2\n";
    }
    const auto standard = run({"table"});
    setenv("MOTT_TI_CONSTANTS", cpath.c_str(), 1);
    const auto custom = run({"table"});
    unsetenv("MOTT_TI_CONSTANTS");
    std::remove(cpath.c_str());
    REQUIRE(custom.code == 0);
    CHECK(meta_value(custom.out, "constants.r0_fm") == "1.2");
    CHECK(meta_value(custom.out, "constants_fingerprint") != meta_value(standard.out, "constants_fingerprint"));
}
