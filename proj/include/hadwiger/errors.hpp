#pragma once

#include <stdexcept>
#include <string>

namespace hadwiger {

// A call contract was violated (bad vertex id, non-edge, malformed partition, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested formula or construction does not apply to the input
// (e.g. the improved bound with m < n, or delta2 of an edgeless graph).
class not_applicable_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input exceeds a documented solver limit. Carries the best certified
// lower bound found before giving up, when one is known.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what, int lower_bound = -1)
        : std::runtime_error(what), lower_bound_(lower_bound)
    {
    }

    bool has_lower_bound() const { return lower_bound_ >= 0; }
    int lower_bound() const { return lower_bound_; }

private:
    int lower_bound_;
};

// Rejected text input; line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

} // namespace hadwiger
