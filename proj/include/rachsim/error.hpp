#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rachsim {

/// Invalid configuration value: reserved PRACH index, bad scenario key, etc.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No palette value fits some vertex during greedy assignment.
class AssignmentInfeasible : public std::runtime_error {
public:
    AssignmentInfeasible(int vertex, const std::string& what)
        : std::runtime_error(what), vertex_(vertex) {}
    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

/// Malformed measurement input. `row()` is the 1-based line number in the file
/// (the header is line 1).
class IngestError : public std::runtime_error {
public:
    IngestError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

}  // namespace rachsim
