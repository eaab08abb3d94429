#pragma once

#include <stdexcept>
#include <string>

namespace extorder {

/// Bad or inconsistent input: schema violations, failed axiom validation,
/// precondition violations.  CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check between two independent computation paths failed.  Always
/// indicates an implementation bug (or a misread theorem).  CLI exit code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Outcome of a verification sweep.  Failing verdicts carry a witness
/// description instead of throwing, so fuzzed inputs stay debuggable.
struct Verdict {
    bool ok = true;
    std::string message;

    static Verdict pass() { return {true, {}}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

} // namespace extorder
