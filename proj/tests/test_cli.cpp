#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "qmetric/job.hpp"

using namespace qmetric;
using nlohmann::json;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(QMETRIC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string job(const char* name) {
    return std::string(QMETRIC_JOBS_DIR) + "/" + name;
}

json strip_timing(json report) {
    report.erase("timing");
    return report;
}

} // namespace

TEST_CASE("job parsing validates schema, mode and payloads") {
    CHECK_THROWS_AS(cli::parse_job("/nonexistent/job.json"), ParseError);
    CHECK_THROWS_AS(cli::parse_job_json(json::object()), ParseError);
    CHECK_THROWS_AS(cli::parse_job_json({{"schema", 2}, {"mode", "exact"}}), ParseError);
    CHECK_THROWS_AS(cli::parse_job_json({{"schema", 1}, {"mode", "bogus"}}), ParseError);
    CHECK_THROWS_AS(cli::parse_job_json({{"schema", 1}, {"mode", "exact"}}), ParseError);

    json bad_matrix = {{"schema", 1}, {"mode", "exact"},
                       {"matrix", json::array({json::array({1.0})})}};
    CHECK_THROWS_AS(cli::parse_job_json(bad_matrix), ParseError);

    cli::JobSpec spec = cli::parse_job(job("exact_2x2.json"));
    CHECK(spec.mode == cli::Mode::Exact);
    CHECK(spec.matrix.dim() == 2);

    spec = cli::parse_job(job("model_two_by_two.json"));
    CHECK(spec.mode == cli::Mode::Model);
    CHECK(spec.model == "two_by_two");

    spec = cli::parse_job(job("perturb_cubic.json"));
    CHECK(spec.mode == cli::Mode::Perturb);
    CHECK(spec.options.order == 3);
    CHECK(spec.options.fock_dim == 60);
}

TEST_CASE("matrix JSON round trip is bit exact") {
    ComplexMatrix m(3);
    m(0, 0) = Complex(1.0 / 3.0, -2.0 / 7.0);
    m(1, 2) = Complex(0.1, 1e-17);
    m(2, 1) = Complex(-3.14159265358979312, 0.577215664901532861);
    json j = cli::matrix_to_json(m);
    std::string text = j.dump();
    ComplexMatrix back = cli::matrix_from_json(json::parse(text));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(m(i, k) == back(i, k));
}

TEST_CASE("exit-status contract") {
    CHECK(run_cli(job("exact_2x2.json")) == 0);
    CHECK(run_cli(job("model_two_by_two.json")) == 0);
    // defective Jordan block: numerical-failure class
    int code = run_cli(job("exact_defective.json"));
    CHECK((code == 2 || code == 3));
    // missing file / malformed input
    CHECK(run_cli("/nonexistent/job.json") == 2);
    CHECK(run_cli(job("exact_2x2.json") + " --format bogus") == 2);
}

TEST_CASE("reports are deterministic modulo timing") {
    std::string out1 = "/tmp/qmetric_report_1.json";
    std::string out2 = "/tmp/qmetric_report_2.json";
    CHECK(run_cli(job("exact_2x2.json") + " --out " + out1) == 0);
    CHECK(run_cli(job("exact_2x2.json") + " --out " + out2) == 0);
    json r1, r2;
    std::ifstream(out1) >> r1;
    std::ifstream(out2) >> r2;
    CHECK(strip_timing(r1) == strip_timing(r2));
    CHECK(r1["status"] == "pass");

    // Re-reading the emitted q matrix reproduces the entries bit-exactly.
    ComplexMatrix q1 = cli::matrix_from_json(r1["q"]["matrix"]);
    json again = cli::matrix_to_json(q1);
    CHECK(again == r1["q"]["matrix"]);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("in-process run covers the three modes") {
    cli::JobSpec spec = cli::parse_job(job("exact_2x2.json"));
    cli::MetricReport rep = cli::run(spec);
    CHECK(rep.ok);
    CHECK(rep.q["character"] == "positive_definite");

    spec = cli::parse_job(job("model_two_by_two.json"));
    rep = cli::run(spec);
    CHECK(rep.ok);
    CHECK(rep.q["branch"] == "real");

    spec = cli::parse_job(job("perturb_cubic.json"));
    spec.options.fock_dim = 40;  // keep the unit test quick
    rep = cli::run(spec);
    CHECK(rep.ok);
    CHECK(rep.q["operator_series"].size() == 4);
    CHECK(rep.q["energy_series"][2].get<std::string>().find("/8") != std::string::npos);
}
