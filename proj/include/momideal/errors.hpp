// Structured error types thrown across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace momideal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poly
struct ZeroPolynomial : Error { using Error::Error; };
struct EmptyDivisorList : Error { using Error::Error; };
struct ZeroDivisor : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// linalg
struct DimensionMismatch : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };

// measure
struct NonpositiveDensity : Error { using Error::Error; };
struct DuplicateAtom : Error { using Error::Error; };
struct DensitySumNotOne : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// relations
struct DegreeTooHigh : Error { using Error::Error; };
struct MissingLeadingMonomial : Error { using Error::Error; };

// variety
struct NoUnivariateMember : Error { using Error::Error; };
struct IrrationalRoots : Error {
    explicit IrrationalRoots(std::string factor_text)
        : Error("no rational root in square-free factor: " + factor_text),
          factor(std::move(factor_text)) {}
    std::string factor;
};

// shift
struct NonpositiveAtomCoordinate : Error { using Error::Error; };
struct OrderExceeded : Error { using Error::Error; };

// text formats
struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace momideal
