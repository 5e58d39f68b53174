#pragma once

#include <stdexcept>
#include <string>

namespace wavelab {

/// Invalid user input: grid parameters, state parameters, scenario files.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller handed an object in the wrong form (e.g. a momentum-space
/// wavefunction to a position-space operation).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// NaN/Inf amplitudes, negative variances, lost normalization.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written; message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wavelab
