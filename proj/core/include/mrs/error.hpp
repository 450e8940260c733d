#pragma once

#include <stdexcept>
#include <string>

namespace mrs {

/// Malformed or inconsistent input data (bad files, mismatched field
/// counts, non-finite samples).  The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant.  The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mrs
