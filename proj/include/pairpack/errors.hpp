#pragma once

#include <stdexcept>
#include <string>

namespace pairpack {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Measure parameters are outside the range where the kernel construction is certified.
class NotAdmissible : public Error {
public:
    using Error::Error;
};

/// Operation called for the wrong parameter regime (e.g. c3 = 0 on a c3 > 0 path).
class InvalidRegime : public Error {
public:
    using Error::Error;
};

class DegenerateRoots : public Error {
public:
    using Error::Error;
};

class IllConditioned : public Error {
public:
    using Error::Error;
};

/// Closed form evaluated exactly at one of its removable singularities.
class RemovablePoint : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& content,
               const std::string& why)
        : Error(path + ":" + std::to_string(line) + ": " + why + " ('" + content + "')"),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

class EmptyWindow : public Error {
public:
    using Error::Error;
};

}  // namespace pairpack
