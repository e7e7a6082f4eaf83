#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef HYPERHARM_CLI_PATH
#error "HYPERHARM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd =
        std::string(HYPERHARM_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval subcommands print 15-digit values") {
    auto r = run("eval legendre --nu 2 --x 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-0.125\n");

    r = run("eval hyper-assoc --nu 1 --mu 1.4142135624 --lambda 0.5 "
            "--branch plus --x 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    r = run("eval hyp2f1 --alpha 1 --beta 2 --gamma 2 --z 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run("eval bessel --kind J --sigma 0 --x 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 17) == "0.765197686557967");

    r = run("eval assoc --nu 2 --mu 1 --x 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 7) == "1.29903");

    r = run("eval hyper --nu 1 --lambda 0 --x 0.3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.3\n");
}

TEST_CASE("eval mode matches the library value") {
    const auto r = run(
        "eval mode --system hs --dim 4 --chain 1,1 --m 0 --k 1 --kind J "
        "--point 2,1.0,1.2,0.5 --t 0");
    CHECK(r.exit_code == 0);
    std::istringstream iss(r.out);
    double re = 0.0, im = 1.0;
    iss >> re >> im;
    CHECK(std::abs(re - 0.079357649870448230125) < 1e-12);
    CHECK(im == 0.0);
}

TEST_CASE("domain violations exit with the usage code") {
    auto r = run("eval hyper-assoc --nu 1 --mu 1.4 --lambda 0.5 --x 2");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("-1 < x < 1") != std::string::npos);

    r = run("eval bessel --kind J --sigma 1 --x 45");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("x <= 30") != std::string::npos);

    r = run("eval legendre --x 0.5");  // missing --nu
    CHECK(r.exit_code == 2);
}

TEST_CASE("table command emits the two-branch CSV") {
    const std::string path = "fig0_test.csv";
    const auto r = run("table --preset fig0 --q 1 --s 1 --count 51 --out " + path);
    REQUIRE(r.exit_code == 0);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,value_plus,value_minus");
    std::vector<std::array<double, 3>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::array<double, 3> row{};
        std::istringstream ls(line);
        std::string cell;
        for (int c = 0; c < 3; ++c) {
            REQUIRE(std::getline(ls, cell, ','));
            row[c] = std::stod(cell);
        }
        rows.push_back(row);
    }
    REQUIRE(rows.size() == 51);
    // midpoint row exists for odd counts and carries the normalized value
    CHECK(std::abs(rows[25][1] - 1.0) < 1e-12);
    CHECK(std::abs(rows[25][2] - 1.0) < 1e-12);
    // symmetric about pi/2
    for (std::size_t i = 0; i < rows.size() / 2; ++i) {
        CHECK(std::abs(rows[i][1] - rows[rows.size() - 1 - i][1]) < 1e-10);
        CHECK(std::abs(rows[i][2] - rows[rows.size() - 1 - i][2]) < 1e-10);
    }
    // grows toward the interval ends
    CHECK(std::abs(rows.front()[1]) > std::abs(rows[25][1]));
    std::remove(path.c_str());
}

TEST_CASE("verify legendre --erratum-check reports the control pair") {
    const auto r = run("verify legendre --erratum-check --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("reports").at("uncorrected").at("pass") == false);
    CHECK(j.at("reports").at("uncorrected").at("max_residual").get<double>() >
          0.1);
    CHECK(j.at("reports").at("corrected").at("pass") == true);
}

TEST_CASE("verify coords --dims runs the restricted sweep") {
    const auto r = run("verify coords --dims 2..4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("round trips N=2..4") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}
