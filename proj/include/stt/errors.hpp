#pragma once

#include <stdexcept>
#include <string>

namespace stt {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& msg) : Error("NotACocycle: " + msg) {}
};

struct MultiplierMismatch : Error {
    explicit MultiplierMismatch(const std::string& msg) : Error("MultiplierMismatch: " + msg) {}
};

struct ParityViolation : Error {
    explicit ParityViolation(const std::string& msg) : Error("ParityViolation: " + msg) {}
};

struct BadReduction : Error {
    long long p;
    explicit BadReduction(long long p_)
        : Error("BadReduction: p = " + std::to_string(p_)), p(p_) {}
};

struct ParseError : Error {
    long long line;
    ParseError(const std::string& msg, long long line_)
        : Error("ParseError (line " + std::to_string(line_) + "): " + msg), line(line_) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& msg) : Error("InvariantViolation: " + msg) {}
};

struct NotAHomomorphism : Error {
    explicit NotAHomomorphism(const std::string& msg) : Error("NotAHomomorphism: " + msg) {}
};

struct BadPrime : Error {
    explicit BadPrime(long long p) : Error("BadPrime: p = " + std::to_string(p)) {}
};

struct EmptySample : Error {
    EmptySample() : Error("EmptySample: sample list is empty") {}
};

struct MissingClassLabels : Error {
    explicit MissingClassLabels(const std::string& msg) : Error("MissingClassLabels: " + msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch: " + msg) {}
};

} // namespace stt
