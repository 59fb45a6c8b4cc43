#ifndef FCL_ERRORS_HPP
#define FCL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcl {

// Process exit codes shared by every CLI subcommand.
enum class ExitCode : int {
    ok = 0,
    failure = 1,
    validation = 2,
    degeneracy = 3,
    cap_exceeded = 4,
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, ExitCode code = ExitCode::failure)
        : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

// Malformed input: bad curve, wrong class, not on the grid, bad list.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what, ExitCode::validation) {}
};

// Non-transverse configuration (shared vertex, tangency, collinear overlap).
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& what) : Error(what, ExitCode::degeneracy) {}
};

class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error(what, ExitCode::cap_exceeded) {}
};

// A lifted window that cannot hold one full elevation.
class SizingError : public Error {
public:
    explicit SizingError(const std::string& what) : Error(what, ExitCode::validation) {}
};

// A documented invariant of a profile or level set does not hold.
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error(what, ExitCode::validation) {}
};

class SequencingError : public Error {
public:
    explicit SequencingError(const std::string& what) : Error(what, ExitCode::failure) {}
};

}  // namespace fcl

#endif  // FCL_ERRORS_HPP
