#pragma once

#include <stdexcept>
#include <string>

namespace oilspec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad dimensions, wrong stage, unreadable files.
class InputError : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed on otherwise valid input (non-convergence, singular system).
class ComputeError : public Error {
public:
    using Error::Error;
};

}  // namespace oilspec
