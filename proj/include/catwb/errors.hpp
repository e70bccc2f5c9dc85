#pragma once

#include <stdexcept>
#include <string>

namespace catwb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };
struct UnsupportedType : Error { using Error::Error; };
struct ClassificationError : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };
struct MissingTable : Error { using Error::Error; };

struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, unsigned long long estimate, unsigned long long cap)
        : Error(what + ": estimated size " + std::to_string(estimate) + " exceeds cap " +
                std::to_string(cap)),
          estimate(estimate), cap(cap) {}
    unsigned long long estimate;
    unsigned long long cap;
};

} // namespace catwb
