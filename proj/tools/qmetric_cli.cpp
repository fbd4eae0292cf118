#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmetric/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"qmetric: metric-operator construction for pseudo-Hermitian Hamiltonians"};

    std::string job_path;
    std::string mode_override, format_override, out_path;
    int order = -1, fock_dim = -1;
    double tol_class = -1, tol_check = -1;

    app.add_option("job", job_path, "job file (JSON)")->required();
    app.add_option("--mode", mode_override, "override job mode: exact|model|perturb");
    app.add_option("--order", order, "perturbation order");
    app.add_option("--fock-dim", fock_dim, "Fock truncation N");
    app.add_option("--tol-class", tol_class, "spectrum classification tolerance");
    app.add_option("--tol-check", tol_check, "residual pass threshold override");
    app.add_option("--format", format_override, "report format: json|text");
    app.add_option("--out", out_path, "write the report to PATH instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        qmetric::cli::JobSpec job = qmetric::cli::parse_job(job_path);
        if (!mode_override.empty()) {
            nlohmann::json patched = job.echo;
            patched["mode"] = mode_override;
            job = qmetric::cli::parse_job_json(patched);
        }
        if (order > 0) job.options.order = order;
        if (fock_dim > 0) job.options.fock_dim = fock_dim;
        if (tol_class > 0) job.options.tol_class = tol_class;
        if (tol_check > 0) job.options.tol_check = tol_check;
        if (!format_override.empty()) job.options.format = format_override;
        if (job.options.format != "json" && job.options.format != "text")
            throw qmetric::ValidationError("--format must be \"json\" or \"text\"");

        qmetric::cli::MetricReport report = qmetric::cli::run(job);
        std::string rendered = job.options.format == "text"
                                   ? report.to_text()
                                   : report.to_json().dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return static_cast<int>(qmetric::ExitCode::InputError);
            }
            out << rendered;
        }
        return report.ok ? static_cast<int>(qmetric::ExitCode::Ok)
                         : static_cast<int>(qmetric::ExitCode::CheckFailure);
    } catch (const qmetric::Error& e) {
        nlohmann::json err;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(qmetric::ExitCode::NumericalFailure);
    }
}
