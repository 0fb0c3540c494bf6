#pragma once

#include <stdexcept>
#include <string>

namespace toral {

// Every error carries the name of the module that raised it so the CLI can
// report provenance.
class Error : public std::runtime_error {
  public:
    Error(std::string module, std::string const & what)
        : std::runtime_error("[" + module + "] " + what), module_(std::move(module)) {}
    std::string const & module() const { return module_; }

  private:
    std::string module_;
};

// Malformed or inconsistent user input (exit status 2).
class InputError : public Error {
  public:
    using Error::Error;
};

// A documented precondition of an operation does not hold for the given values.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// An exact self-check failed. Signals a bug or a forged certificate (exit status 1).
class VerificationError : public Error {
  public:
    using Error::Error;
};

} // namespace toral
