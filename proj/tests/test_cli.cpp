// End-to-end tests of the command-line tool through popen; the binary path
// comes in through the SPINCOH_CLI_PATH compile definition.
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spincoh/entanglement.hpp"
#include "spincoh/helstrom.hpp"
#include "spincoh/io.hpp"
#include "spincoh/majorana.hpp"
#include "spincoh/states.hpp"

using spincoh::cplx;
using spincoh::SpinMagnitude;

namespace {

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(SPINCOH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        out.push_back(line);
    return out;
}

std::string fmt_complex(cplx z) {
    std::string s = spincoh::format_sig(z.real());
    if (z.imag() >= 0.0)
        s += "+";
    return s + spincoh::format_sig(z.imag()) + "i";
}

std::string tmp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sweep emits the documented CSV and matches the library") {
    int code = -1;
    std::string out = run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 3", code);
    CHECK(code == 0);
    auto lines = lines_of(out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "# r2 default 0.5");
    CHECK(lines[1] == "two_s,z,r2,von_neumann,linear");
    for (int t = 1; t <= 3; ++t) {
        SpinMagnitude s(t);
        std::string want = std::to_string(t) + ",1,0.5," +
                           spincoh::format_sig(spincoh::entanglement_of_output(s, cplx(1, 0), 0.5)) +
                           "," +
                           spincoh::format_sig(spincoh::linear_entropy_of_output(s, cplx(1, 0), 0.5));
        CHECK(lines[1 + t] == want);
    }

    // reruns are byte-identical
    int code2 = -1;
    std::string again = run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 3", code2);
    CHECK(code2 == 0);
    CHECK(again == out);

    // an explicit --r2 drops the default comment
    std::string explicit_r2 =
        run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 2 --r2 0.3", code);
    CHECK(code == 0);
    CHECK(lines_of(explicit_r2)[0] == "two_s,z,r2,von_neumann,linear");
}

TEST_CASE("sweep json format round-trips the same numbers") {
    int code = -1;
    std::string out = run_cli(
        "sweep --z-min 0.5 --z-max 1.5 --z-steps 2 --two-s-max 2 --format json", code);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[0]["two_s"] == 1);
    CHECK(j[0]["z"] == 0.5);
    CHECK(j[0]["r2"] == 0.5);
    double want = spincoh::entanglement_of_output(SpinMagnitude(1), cplx(0.5, 0), 0.5);
    CHECK(j[0]["von_neumann"].get<double>() == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("usage problems exit 2, help exits 0") {
    int code = -1;
    run_cli("sweep --z-min 1", code);  // missing required flags
    CHECK(code == 2);
    run_cli("no-such-command", code);
    CHECK(code == 2);
    run_cli("sweep --z-min 2 --z-max 1 --z-steps 2 --two-s-max 2", code);  // z order
    CHECK(code == 2);
    run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 2 --r2 1.5", code);
    CHECK(code == 2);
    run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 2 --format yaml", code);
    CHECK(code == 2);
    run_cli("--help", code);
    CHECK(code == 0);
    run_cli("helstrom --beta 1x --two-s-max 2", code);  // bad complex literal
    CHECK(code == 2);
}

TEST_CASE("r2scan table with argmax trailer") {
    int code = -1;
    std::string out = run_cli("r2scan --z 1 --two-s 2 --steps 11", code);
    CHECK(code == 0);
    auto lines = lines_of(out);
    REQUIRE(lines.size() == 13);
    CHECK(lines[0] == "r2,von_neumann,linear");
    CHECK(lines.back() == "# argmax_r2 = 0.5");
    SpinMagnitude s(2);
    std::string mid = "0.5," +
                      spincoh::format_sig(spincoh::entanglement_of_output(s, cplx(1, 0), 0.5)) +
                      "," +
                      spincoh::format_sig(spincoh::linear_entropy_of_output(s, cplx(1, 0), 0.5));
    CHECK(lines[6] == mid);

    run_cli("r2scan --z 1 --two-s 2 --steps 1", code);
    CHECK(code == 2);
}

TEST_CASE("helstrom table matches the closed form row by row") {
    int code = -1;
    std::string out = run_cli("helstrom --alpha 0 --beta 0.5,1 --two-s-max 3", code);
    CHECK(code == 0);
    auto lines = lines_of(out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "two_s,beta,p_a,p_error");
    std::size_t idx = 1;
    for (int t = 1; t <= 3; ++t)
        for (const cplx beta : {cplx(0.5, 0), cplx(1, 0)}) {
            double pe = spincoh::error_probability_closed_form(SpinMagnitude(t), cplx(0, 0),
                                                               beta, 0.5);
            std::string want = std::to_string(t) + "," + fmt_complex(beta) + ",0.5," +
                               spincoh::format_sig(pe);
            CHECK(lines[idx++] == want);
        }

    // purely imaginary literals parse and print consistently
    std::string imag = run_cli("helstrom --alpha -1.5 --beta 2i --two-s-max 1", code);
    CHECK(code == 0);
    CHECK(lines_of(imag)[1].rfind("1,0+2i,0.5,", 0) == 0);
}

TEST_CASE("measurement basis export feeds the constellation command") {
    const std::string states_path = tmp_path("spincoh_test_states.json");
    int code = -1;
    run_cli("helstrom --alpha 0 --beta 1 --two-s-max 6 --emit-states " + states_path, code);
    CHECK(code == 0);

    std::ifstream f(states_path);
    REQUIRE(f.good());
    nlohmann::json j = nlohmann::json::parse(f);
    REQUIRE(j.contains("e_a"));
    REQUIRE(j.contains("e_b"));
    CHECK(j["e_a"]["dim"] == 7);
    CHECK(j["e_a"]["amps"].size() == 7);

    std::string out = run_cli("majorana --state-file " + states_path, code);
    CHECK(code == 0);
    nlohmann::json con = nlohmann::json::parse(out);
    for (const char* key : {"e_a", "e_b"}) {
        REQUIRE(con.contains(key));
        CHECK(con[key]["two_s"] == 6);
        int total = static_cast<int>(con[key]["points"].size()) +
                    con[key]["north_multiplicity"].get<int>();
        CHECK(total == 6);
    }

    // identical states leave no measurement basis to export: numeric failure, not usage
    run_cli("helstrom --alpha 1 --beta 1 --two-s-max 4 --emit-states " + states_path, code);
    CHECK(code == 1);
}

TEST_CASE("majorana input modes and validation") {
    int code = -1;
    std::string out = run_cli("majorana --coherent 4,0.2+0.9i", code);
    CHECK(code == 0);
    nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j["two_s"] == 4);
    CHECK(j["north_multiplicity"] == 0);
    REQUIRE(j["points"].size() == 4);
    Eigen::Vector3d want = spincoh::sphere_from_plane(-1.0 / std::conj(cplx(0.2, 0.9)));
    for (const auto& pt : j["points"]) {
        Eigen::Vector3d p(pt[0].get<double>(), pt[1].get<double>(), pt[2].get<double>());
        CHECK((p - want).norm() < 1e-5);
    }

    std::string sup = run_cli("majorana --superpose 1,1,1,8", code);
    CHECK(code == 0);
    nlohmann::json js = nlohmann::json::parse(sup);
    CHECK(js["two_s"] == 8);
    CHECK(static_cast<int>(js["points"].size()) + js["north_multiplicity"].get<int>() == 8);

    run_cli("majorana", code);  // no source
    CHECK(code == 2);
    run_cli("majorana --coherent 4,1 --superpose 1,1,1,4", code);  // two sources
    CHECK(code == 2);
    run_cli("majorana --state-file /nonexistent/path.json", code);
    CHECK(code == 2);

    // well-formed JSON that is not a valid state is a numeric failure
    const std::string bad_path = tmp_path("spincoh_test_bad_state.json");
    std::ofstream bad(bad_path);
    bad << "{\"label\": \"no amps here\"}\n";
    bad.close();
    run_cli("majorana --state-file " + bad_path, code);
    CHECK(code == 1);
}

TEST_CASE("limit column matches the overlap series") {
    int code = -1;
    std::string out = run_cli("limit --alpha 1 --two-s-list 20,200", code);
    CHECK(code == 0);
    auto lines = lines_of(out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "two_s,overlap");
    CHECK(lines[1] == "20," + spincoh::format_sig(spincoh::limit_overlap(
                                  cplx(1, 0), SpinMagnitude(20))));
    CHECK(lines[2] == "200," + spincoh::format_sig(spincoh::limit_overlap(
                                   cplx(1, 0), SpinMagnitude(200))));

    run_cli("limit --alpha 1 --two-s-list 0", code);
    CHECK(code == 2);
}

TEST_CASE("curvature row carries the inverse-spin reference") {
    int code = -1;
    std::string out = run_cli("curvature --two-s 2", code);
    CHECK(code == 0);
    auto lines = lines_of(out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "two_s,k,k_reference");
    std::stringstream row(lines[1]);
    std::string field;
    std::getline(row, field, ',');
    CHECK(field == "2");
    std::getline(row, field, ',');
    CHECK(std::stod(field) == doctest::Approx(0.5).epsilon(0.01));
    std::getline(row, field, ',');
    CHECK(field == "0.5");
}

TEST_CASE("--meta adds only comment lines") {
    int code = -1;
    std::string plain = run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 2", code);
    CHECK(code == 0);
    std::string meta =
        run_cli("sweep --z-min 1 --z-max 1 --z-steps 1 --two-s-max 2 --meta", code);
    CHECK(code == 0);

    auto strip = [](const std::string& text) {
        std::string kept;
        for (const auto& line : lines_of(text))
            if (line.empty() || line[0] != '#')
                kept += line + "\n";
        return kept;
    };
    CHECK(strip(plain) == strip(meta));
    auto mlines = lines_of(meta);
    CHECK(mlines[0] == "# tool: spincoh");
    CHECK(mlines[1] == "# command: sweep");
    CHECK(mlines[2].rfind("# parameters: ", 0) == 0);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string out_path = tmp_path("spincoh_test_sweep.csv");
    int code = -1;
    std::string stdout_text =
        run_cli("sweep --z-min 0.5 --z-max 1 --z-steps 2 --two-s-max 2", code);
    CHECK(code == 0);
    run_cli("sweep --z-min 0.5 --z-max 1 --z-steps 2 --two-s-max 2 --out " + out_path, code);
    CHECK(code == 0);
    std::ifstream f(out_path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == stdout_text);
}

TEST_CASE("state serialization round trip and validation") {
    auto st = spincoh::spin_coherent(SpinMagnitude(5), cplx(0.4, -0.7));
    auto back = spincoh::state_from_json(spincoh::state_to_json(st));
    REQUIRE(back.dim() == st.dim());
    for (int n = 0; n < st.dim(); ++n)
        CHECK(std::abs(back.amps(n) - st.amps(n)) < 1e-15);
    CHECK(back.label == st.label);

    CHECK_THROWS_AS(spincoh::state_from_json("{\"amps\": [[1,0]]}"), std::invalid_argument);
    CHECK_THROWS_AS(spincoh::state_from_json("{\"dim\": 2, \"amps\": [[1,0]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        spincoh::state_from_json("{\"dim\": 1, \"amps\": [[0,0]]}"),
        std::invalid_argument);

    CHECK(spincoh::format_sig(0.5) == "0.5");
    CHECK(spincoh::format_sig(1.0) == "1");
    CHECK(spincoh::format_sig(0.1234567890123456) == "0.123456789012");
}

}  // TEST_SUITE
