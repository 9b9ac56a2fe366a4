#ifndef TALEX_ERRORS_HPP
#define TALEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace talex {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- field / ring arithmetic ---
struct DescriptorMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct EvaluateAtZero : Error {
    using Error::Error;
};
struct DivisorZero : Error {
    using Error::Error;
};
struct ZeroInput : Error {
    using Error::Error;
};

// --- matrices / homology ---
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ChainConditionViolated : Error {
    using Error::Error;
};

// --- words, presentations, parsing ---
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct DTooSmall : Error {
    using Error::Error;
};
struct NTooSmall : Error {
    using Error::Error;
};

// Raised with 1-based line/column where the presentation text broke.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};
struct UnknownGenerator : Error {
    std::string name;
    explicit UnknownGenerator(const std::string& name_)
        : Error("unknown generator '" + name_ + "'"), name(name_) {}
};
struct DuplicateGenerator : Error {
    std::string name;
    explicit DuplicateGenerator(const std::string& name_)
        : Error("duplicate generator '" + name_ + "'"), name(name_) {}
};

// --- twisted setups and reports ---
struct InvalidSetup : Error {
    using Error::Error;
};
struct WeightMismatch : Error {
    using Error::Error;
};
struct UnknownBuilder : Error {
    using Error::Error;
};

}  // namespace talex

#endif
