#pragma once

#include <stdexcept>
#include <string>

namespace smatrix {

// Base class for every error the toolkit raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct IllConditionedError : Error { using Error::Error; };
struct SizeCapError : Error { using Error::Error; };
struct NotPrimeError : Error { using Error::Error; };
struct ResidueClassError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

// Raised by the matrix text reader; carries a 1-based position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

}  // namespace smatrix
