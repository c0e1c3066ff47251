#pragma once

#include <stdexcept>
#include <string>

namespace hypercert {

// Dimension mismatches and violated operation preconditions.
class contract_error : public std::invalid_argument {
public:
    explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// Exact-enumeration budget exceeded (e.g. clique search on too many vertices).
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Numeric refinement could not reach the requested width within the retry cap.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files / serialized data.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hypercert
