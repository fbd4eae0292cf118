#ifndef QMETRIC_JOB_HPP
#define QMETRIC_JOB_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qmetric/complex_matrix.hpp"
#include "qmetric/models.hpp"

namespace qmetric::cli {

enum class Mode { Exact, Model, Perturb };

struct JobOptions {
    int order = 3;
    int fock_dim = 60;
    double tol_class = -1.0;  // < 0: scale-relative default 1e-8 ||H||_max
    double tol_check = -1.0;  // < 0: per-check defaults from the contract
    std::string format = "json";
};

struct JobSpec {
    Mode mode = Mode::Exact;

    // exact mode
    ComplexMatrix matrix;
    ComplexMatrix s_matrix;
    bool has_s = false;

    // model / perturb modes
    std::string model;
    models::TwoByTwoParams two_by_two;
    models::ShiftedCubicParams shifted;
    int ho_dim = 20;

    JobOptions options;
    nlohmann::json echo;
};

JobSpec parse_job(const std::string& path);
JobSpec parse_job_json(const nlohmann::json& j);

struct CheckResult {
    std::string name;
    double value = 0;
    double threshold = 0;
    bool pass = false;
};

struct MetricReport {
    nlohmann::json job_echo;
    nlohmann::json q;  // matrix entries and/or operator-series text
    std::vector<CheckResult> checks;
    bool ok = false;
    double wall_seconds = 0;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Dispatches on job.mode and always runs the verification suite on the
// metric it produces.  Module errors propagate as qmetric::Error.
MetricReport run(const JobSpec& job);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

} // namespace qmetric::cli

#endif
