#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flair {

// Base of every error raised by the library. The CLI maps Error to exit
// code 1 and ParseError to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidEpsilon : public Error {
public:
    explicit InvalidEpsilon(double value)
        : Error("epsilon must be a finite value > 0, got " + std::to_string(value)) {}
};

class NonFiniteSample : public Error {
public:
    NonFiniteSample() : Error("sample fields must be finite") {}
};

class NonMonotonicTimestamp : public Error {
public:
    NonMonotonicTimestamp(double incoming, double last)
        : Error("timestamp " + std::to_string(incoming) +
                " is not greater than last timestamp " + std::to_string(last)) {}
};

class EmptyModel : public Error {
public:
    EmptyModel() : Error("read on a model with no inserted samples") {}
};

class TimestampBeforeHistory : public Error {
public:
    TimestampBeforeHistory(double t, double first)
        : Error("read at t=" + std::to_string(t) + " precedes first history timestamp " +
                std::to_string(first)) {}
};

class TooFewSamples : public Error {
public:
    explicit TooFewSamples(const std::string& what) : Error(what) {}
};

class EmptyWindow : public Error {
public:
    EmptyWindow() : Error("stay extraction on an empty window") {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class TraceTooShort : public Error {
public:
    explicit TraceTooShort(const std::string& what) : Error(what) {}
};

class DegeneratePath : public Error {
public:
    DegeneratePath() : Error("trace path length is shorter than the requested spacing") {}
};

class InvalidTrace : public Error {
public:
    explicit InvalidTrace(const std::string& what) : Error(what) {}
};

class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

class EmptyCdf : public Error {
public:
    EmptyCdf() : Error("drift CDF is empty") {}
};

// Malformed external input (model files, CSV streams). Carries the 1-based
// line number and the byte offset within that line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t offset, const std::string& what)
        : Error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " +
                what),
          line_(line),
          offset_(offset) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

}  // namespace flair
