#pragma once

#include <stdexcept>
#include <string>

namespace mvroute {

/// Argument outside the mathematical domain of an operation (bad level, radix mismatch, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Back-bias outside the legal window of the transistor flavor.
class IllegalBiasError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A stage whose overdrive is not positive: the device cannot pull the swing.
class NonFunctionalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed netlist text or structurally invalid netlist.
class NetlistError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown key, bad unit or out-of-range value in a run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mvroute
