#ifndef QMETRIC_ERRORS_HPP
#define QMETRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmetric {

// Process exit codes used by the CLI.
enum class ExitCode : int {
    Ok = 0,
    CheckFailure = 1,
    InputError = 2,
    NumericalFailure = 3,
};

// Base for all domain errors. `code()` is the machine-readable name that
// shows up in reports; `exit_code()` maps onto the CLI exit-status contract.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what, ExitCode exit_code)
        : std::runtime_error(what), code_(std::move(code)), exit_(exit_code) {}

    const std::string& code() const { return code_; }
    ExitCode exit_code() const { return exit_; }

private:
    std::string code_;
    ExitCode exit_;
};

#define QMETRIC_DEFINE_ERROR(Name, Exit)                                   \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what)                             \
            : Error(#Name, what, Exit) {}                                  \
    }

QMETRIC_DEFINE_ERROR(DegenerateSpectrum, ExitCode::NumericalFailure);
QMETRIC_DEFINE_ERROR(NumericalFailure, ExitCode::NumericalFailure);
QMETRIC_DEFINE_ERROR(UnpairedComplexEigenvalue, ExitCode::NumericalFailure);
QMETRIC_DEFINE_ERROR(SingularBasis, ExitCode::NumericalFailure);
QMETRIC_DEFINE_ERROR(SingularS, ExitCode::NumericalFailure);
QMETRIC_DEFINE_ERROR(DegenerateParameters, ExitCode::InputError);
QMETRIC_DEFINE_ERROR(NotDiagonal, ExitCode::InputError);
QMETRIC_DEFINE_ERROR(DiagonalObstruction, ExitCode::NumericalFailure);
QMETRIC_DEFINE_ERROR(NotUnitLeading, ExitCode::InputError);
QMETRIC_DEFINE_ERROR(GuardBandViolation, ExitCode::InputError);
QMETRIC_DEFINE_ERROR(ZeroScale, ExitCode::InputError);
QMETRIC_DEFINE_ERROR(ParseError, ExitCode::InputError);
QMETRIC_DEFINE_ERROR(ValidationError, ExitCode::InputError);

#undef QMETRIC_DEFINE_ERROR

} // namespace qmetric

#endif
