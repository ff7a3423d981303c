#pragma once

#include <stdexcept>
#include <string>

namespace treepack {

/// Raised for malformed graphs, bad parameters, and out-of-range queries.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal algorithm breaks its own contract.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace treepack
