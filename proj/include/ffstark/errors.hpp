#pragma once

#include <stdexcept>
#include <string>

namespace ffstark {

// Invalid input or configuration (CLI exit code 2).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation exceeded a configured search or size bound (CLI exit code 3).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An identity that is supposed to hold unconditionally failed on a concrete
// instance.  Never swallowed: the verdict machinery reports these (exit code 1).
class identity_failure : public std::runtime_error {
public:
    explicit identity_failure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ffstark
