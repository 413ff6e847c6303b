#ifndef SPINRWA_ERRORS_HPP
#define SPINRWA_ERRORS_HPP

#include <stdexcept>

namespace spinrwa {

/// Field configuration cannot support the rotating-frame construction
/// (omega1 <= 0, or the effective precession frequency vanishes).
struct DegenerateField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A state vector required to be normalized is not.
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integrator step too coarse to resolve the fastest phase in the problem.
struct StepTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request for a built-in scenario id that does not exist.
struct UnknownScenario : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// File could not be opened or written; message carries the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spinrwa

#endif // SPINRWA_ERRORS_HPP
