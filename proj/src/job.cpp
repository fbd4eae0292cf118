#include "qmetric/job.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qmetric/fock.hpp"
#include "qmetric/linalg.hpp"
#include "qmetric/perturbation.hpp"
#include "qmetric/spectral.hpp"

namespace qmetric::cli {

using nlohmann::json;

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix: expected a non-empty array of rows");
    const int n = static_cast<int>(j.size());
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw ParseError("matrix: row " + std::to_string(i) + " is not length " +
                             std::to_string(n));
        for (int k = 0; k < n; ++k) {
            const json& e = j[i][k];
            if (!e.is_array() || e.size() != 2)
                throw ParseError("matrix: entry (" + std::to_string(i) + "," +
                                 std::to_string(k) + ") must be a [re, im] pair");
            m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (!m.is_finite()) throw ValidationError("matrix: non-finite entries");
    return m;
}

namespace {

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw ParseError(std::string("missing numeric field \"") + field + "\"");
    return j[field].get<double>();
}

} // namespace

JobSpec parse_job_json(const json& j) {
    if (!j.is_object()) throw ParseError("job: expected a JSON object");
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw ParseError("job: missing or unsupported \"schema\" (expected 1)");
    if (!j.contains("mode") || !j["mode"].is_string())
        throw ParseError("job: missing string field \"mode\"");

    JobSpec spec;
    spec.echo = j;
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "exact")
        spec.mode = Mode::Exact;
    else if (mode == "model")
        spec.mode = Mode::Model;
    else if (mode == "perturb")
        spec.mode = Mode::Perturb;
    else
        throw ParseError("job: unknown mode \"" + mode + "\"");

    if (j.contains("options")) {
        const json& o = j["options"];
        if (o.contains("order")) spec.options.order = o["order"].get<int>();
        if (o.contains("fock_dim")) spec.options.fock_dim = o["fock_dim"].get<int>();
        if (o.contains("tol_class")) spec.options.tol_class = o["tol_class"].get<double>();
        if (o.contains("tol_check")) spec.options.tol_check = o["tol_check"].get<double>();
        if (o.contains("format")) spec.options.format = o["format"].get<std::string>();
    }
    if (spec.options.order < 1) throw ValidationError("options.order must be positive");
    if (spec.options.fock_dim < 1) throw ValidationError("options.fock_dim must be positive");
    if (spec.options.format != "json" && spec.options.format != "text")
        throw ValidationError("options.format must be \"json\" or \"text\"");

    switch (spec.mode) {
        case Mode::Exact: {
            if (!j.contains("matrix")) throw ParseError("exact job: missing \"matrix\"");
            spec.matrix = matrix_from_json(j["matrix"]);
            if (j.contains("s_matrix")) {
                spec.s_matrix = matrix_from_json(j["s_matrix"]);
                if (spec.s_matrix.dim() != spec.matrix.dim())
                    throw ValidationError("s_matrix dimension does not match matrix");
                spec.has_s = true;
            }
            break;
        }
        case Mode::Model: {
            if (!j.contains("model") || !j["model"].is_string())
                throw ParseError("model job: missing string field \"model\"");
            spec.model = j["model"].get<std::string>();
            const json params = j.value("params", json::object());
            if (spec.model == "two_by_two") {
                spec.two_by_two.r = require_number(params, "r");
                spec.two_by_two.s = require_number(params, "s");
                spec.two_by_two.t = require_number(params, "t");
                spec.two_by_two.theta = require_number(params, "theta");
                spec.two_by_two.phi = require_number(params, "phi");
            } else if (spec.model == "harmonic_oscillator") {
                spec.ho_dim = params.value("fock_dim", 20);
                if (spec.ho_dim < 1) throw ValidationError("fock_dim must be positive");
            } else if (spec.model == "shifted_cubic") {
                spec.shifted.alpha = require_number(params, "alpha");
                spec.shifted.epsilon = require_number(params, "epsilon");
            } else {
                throw ParseError("model job: unknown model \"" + spec.model + "\"");
            }
            break;
        }
        case Mode::Perturb: {
            spec.model = j.value("model", "cubic");
            if (spec.model != "cubic")
                throw ParseError("perturb job: unknown model \"" + spec.model + "\"");
            break;
        }
    }
    return spec;
}

JobSpec parse_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open job file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_job_json(j);
}

namespace {

void add_check(MetricReport& rep, const std::string& name, double value, double threshold) {
    rep.checks.push_back({name, value, threshold, value <= threshold});
}

void add_flag(MetricReport& rep, const std::string& name, bool pass) {
    rep.checks.push_back({name, pass ? 0.0 : 1.0, 0.5, pass});
}

void run_exact(const JobSpec& job, MetricReport& rep) {
    const ComplexMatrix& h = job.matrix;
    double tol = job.options.tol_class > 0 ? job.options.tol_class
                                           : default_classification_tol(h);
    SpectralData sd = classify_spectrum(eigendecompose(h, tol), tol);
    MetricResult metric = metric_from_eigenbasis(sd);

    double scale = std::max(1.0, h.max_norm() * metric.q.max_norm());
    double tc = job.options.tol_check;
    add_check(rep, "hermiticity_asymmetry", metric.residuals.hermiticity,
              tc > 0 ? tc : 1e-8 * std::max(1.0, metric.q.max_norm()));
    add_check(rep, "intertwining", metric.residuals.intertwining,
              tc > 0 ? tc : 1e-9 * scale);
    add_check(rep, "gram", metric.residuals.gram, tc > 0 ? tc : 1e-10 * scale);
    if (metric.character == SpectralCharacter::PositiveDefinite) {
        std::vector<double> ev = hermitian_eigenvalues(metric.q);
        add_flag(rep, "positive_definite", ev.front() > 0);
    }
    if (job.has_s)
        add_check(rep, "pseudo_hermiticity", verify_pseudo_hermiticity(h, job.s_matrix),
                  tc > 0 ? tc : 1e-10 * std::max(1.0, h.max_norm()));

    json q;
    q["matrix"] = matrix_to_json(metric.q);
    q["character"] = metric.character == SpectralCharacter::PositiveDefinite
                         ? "positive_definite"
                         : "indefinite_pairing";
    json evs = json::array();
    for (const Complex& e : sd.eigenvalues) evs.push_back(json::array({e.real(), e.imag()}));
    q["eigenvalues"] = evs;
    rep.q = q;
}

void run_model(const JobSpec& job, MetricReport& rep) {
    double tc = job.options.tol_check;
    if (job.model == "two_by_two") {
        auto b = models::two_by_two_bundle(job.two_by_two);
        ComplexVector evs = {b.e_first, b.e_second};
        double tol = job.options.tol_class > 0 ? job.options.tol_class
                                               : default_classification_tol(b.h);
        SpectralData sd = classify_spectrum(
            spectral_from_basis(b.h, evs, b.eigenvectors, tol), tol);
        MetricResult metric = metric_from_eigenbasis(sd);

        add_check(rep, "closed_form_match",
                  (metric.q - b.q_closed_form).max_norm(), tc > 0 ? tc : 1e-12);
        add_check(rep, "gram", metric.residuals.gram, tc > 0 ? tc : 1e-12);
        add_check(rep, "intertwining", metric.residuals.intertwining, tc > 0 ? tc : 1e-12);
        auto sym = models::two_by_two_symmetry_checks(b);
        add_check(rep, "pseudo_hermiticity", sym.pseudo_hermiticity, tc > 0 ? tc : 1e-12);
        add_check(rep, "pt_invariance", sym.pt_invariance, tc > 0 ? tc : 1e-12);
        add_check(rep, "singlet_doublet", sym.singlet_doublet, tc > 0 ? tc : 1e-12);
        add_check(rep, "q0_normalization", sym.q0_normalization, tc > 0 ? tc : 1e-12);
        add_check(rep, "k_annihilation", sym.k_annihilation, tc > 0 ? tc : 1e-12);

        json q;
        q["matrix"] = matrix_to_json(metric.q);
        q["branch"] = b.branch == models::Branch::RealSpectrum ? "real" : "complex_pair";
        rep.q = q;
    } else if (job.model == "harmonic_oscillator") {
        auto b = models::harmonic_oscillator_bundle(job.ho_dim);
        add_flag(rep, "q_is_identity", b.q_is_identity);
        add_flag(rep, "generator_relation", b.generator_relation_exact);
        add_flag(rep, "k_annihilates_reference", b.k_annihilates_reference);
        json q;
        json diag = json::array();
        for (const Rational& w : b.q_diagonal) diag.push_back(rational_to_string(w));
        q["diagonal_exact"] = diag;
        rep.q = q;
    } else if (job.model == "shifted_cubic") {
        auto b = models::shifted_cubic_bundle(job.shifted, job.options.fock_dim,
                                              job.options.order);
        add_check(rep, "similarity_identity", b.similarity_residual, tc > 0 ? tc : 1e-10);
        add_check(rep, "perturbed_gram", models::shifted_gram_residual(b, 8),
                  tc > 0 ? tc : 1e-6);
        json q;
        q["matrix"] = matrix_to_json(b.q_numeric);
        rep.q = q;
    }
}

void run_perturb(const JobSpec& job, MetricReport& rep) {
    const int order = job.options.order;
    const int fock_dim = job.options.fock_dim;
    auto v = models::cubic_perturbation();
    PerturbationSeries series = compute_series(v, order);
    OperatorSeries rinv = invert_series(series.r);
    OperatorSeries q = metric_series(rinv);

    bool gauge_ok = true, herm_ok = true, odd_zero = true, even_real = true;
    for (int i = 1; i <= order; ++i) {
        if (!weyl::diagonal_part(series.r.at(i)).is_zero()) gauge_ok = false;
        if (!(weyl::adjoint(q.at(i)) == q.at(i))) herm_ok = false;
        if (i % 2 == 1 && !series.energies.at(i).is_zero()) odd_zero = false;
        if (i % 2 == 0 && !series.energies.at(i).has_real_coefficients()) even_real = false;
    }
    add_flag(rep, "gauge_zero_diagonal", gauge_ok);
    add_flag(rep, "metric_hermitian_per_order", herm_ok);
    add_flag(rep, "odd_energy_vanishes", odd_zero);
    add_flag(rep, "even_energy_real", even_real);

    ComplexVector levels(fock_dim + 1);
    for (int n = 0; n <= fock_dim; ++n) levels[n] = Complex(n);
    ComplexMatrix h0 = ComplexMatrix::diagonal(levels);
    ComplexMatrix v_mat = to_fock_matrix(v, fock_dim);
    int n_max = std::min(10, fock_dim - 3 * order);
    double cross = cross_validate(series.r, h0, v_mat, fock_dim, n_max, order);
    double tc = job.options.tol_check;
    add_check(rep, "cross_validate", cross, tc > 0 ? tc : 1e-8);

    json q_json;
    json orders = json::array();
    for (int k = 0; k <= order; ++k) orders.push_back(q.at(k).to_string());
    q_json["operator_series"] = orders;
    json energies = json::array();
    for (int k = 0; k <= order; ++k) energies.push_back(series.energies.at(k).to_string());
    q_json["energy_series"] = energies;
    rep.q = q_json;
}

} // namespace

MetricReport run(const JobSpec& job) {
    MetricReport rep;
    rep.job_echo = job.echo;
    auto start = std::chrono::steady_clock::now();
    switch (job.mode) {
        case Mode::Exact:
            run_exact(job, rep);
            break;
        case Mode::Model:
            run_model(job, rep);
            break;
        case Mode::Perturb:
            run_perturb(job, rep);
            break;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.pass; });
    return rep;
}

nlohmann::json MetricReport::to_json() const {
    json j;
    j["schema"] = 1;
    j["job"] = job_echo;
    j["q"] = q;
    json checks_json = json::array();
    for (const CheckResult& c : checks) {
        json cj;
        cj["name"] = c.name;
        cj["value"] = c.value;
        cj["threshold"] = c.threshold;
        cj["pass"] = c.pass;
        checks_json.push_back(cj);
    }
    j["checks"] = checks_json;
    j["status"] = ok ? "pass" : "fail";
    j["timing"] = {{"wall_seconds", wall_seconds}};
    return j;
}

std::string MetricReport::to_text() const {
    std::ostringstream os;
    os << "status: " << (ok ? "pass" : "fail") << "\n";
    for (const CheckResult& c : checks)
        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << " = " << c.value
           << " (threshold " << c.threshold << ")\n";
    os << "q: " << q.dump(2) << "\n";
    return os.str();
}

} // namespace qmetric::cli
