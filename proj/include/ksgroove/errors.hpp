#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ksgroove {

// Base class for everything this library throws. Physics outcomes
// (blowup, solver stagnation during a run) are returned as data, not
// thrown; exceptions are reserved for contract violations and I/O.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& what) : Error(what) {}
};

// Domain fails the admissibility condition. Carries the violated
// condition as text so callers can report it verbatim.
class InadmissibleDomainError : public Error {
public:
    InadmissibleDomainError(double width, std::string condition)
        : Error("inadmissible domain: " + condition +
                " (width_B = " + std::to_string(width) + ")"),
          width_b(width),
          violated_condition(std::move(condition)) {}

    double width_b;
    std::string violated_condition;
};

class InvalidInitialDataError : public Error {
public:
    explicit InvalidInitialDataError(const std::string& what) : Error(what) {}
};

class FitDomainError : public Error {
public:
    explicit FitDomainError(const std::string& what) : Error(what) {}
};

class CorruptCheckpointError : public Error {
public:
    explicit CorruptCheckpointError(const std::string& what) : Error(what) {}
};

// Config validation collects every violated invariant before failing.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<std::string> violations_)
        : Error(join(violations_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid config:";
        for (const auto& item : v) {
            s += "\n  - " + item;
        }
        return s;
    }
};

}  // namespace ksgroove
