#pragma once

#include <stdexcept>
#include <string>

namespace ontorec {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data, bad arguments, dangling references.
struct DataError : Error {
    using Error::Error;
};

// A referenced entity, topic or record does not exist.
struct NotFoundError : DataError {
    using DataError::DataError;
};

// Operation invoked in an invalid state (e.g. untrained classifier).
struct StateError : Error {
    using Error::Error;
};

}  // namespace ontorec
