#pragma once

#include <stdexcept>
#include <string>

namespace twpa {

/// Root finder or Newton iteration exhausted its budget.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expansion point has |alpha_tilde| below threshold; linear inductance diverges.
struct DegenerateExpansion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Netlist text could not be tokenized or a token is malformed. Carries the line number.
struct SyntaxError : std::runtime_error {
    SyntaxError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_number(line) {}
    int line_number;
};

/// Netlist is well-formed text but violates a structural invariant.
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// TwpaDesign carries a non-positive element value or out-of-range coupling.
struct InvalidDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coupling coefficient is zero; flux current mapping undefined.
struct ZeroCoupling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear system factorization failed (floating subcircuit, exact degeneracy).
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Newton Jacobian factorization failed inside the harmonic balance loop.
struct SingularJacobian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Transient step size control collapsed or the guard on circuit size tripped.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Time series too short for the requested spectral extraction.
struct InsufficientLength : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace twpa
