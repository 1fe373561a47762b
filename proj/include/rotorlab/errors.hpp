#pragma once

#include <stdexcept>
#include <string>

namespace rotorlab {

// Precondition / contract breach (out-of-range label, point outside box, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Signed-coordinate overflow; the walk ran far beyond the supported scale.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded run loop hit its step cap before reaching its stop condition.
struct CapExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (CLI flags, config file, rule spec).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckpointError : std::runtime_error {
    enum class Kind { VersionMismatch, Corrupt, DimensionMismatch };
    Kind kind;
    CheckpointError(Kind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

}  // namespace rotorlab
