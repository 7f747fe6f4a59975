#ifndef SKEWPF_ERRORS_HPP
#define SKEWPF_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace skewpf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Thrown when an exact enumeration would exceed the configured bound.
// `count` holds the exact number of states that would have been visited.
struct TooLargeError : Error {
    mpz_class count;
    unsigned long long bound;
    TooLargeError(mpz_class count_, unsigned long long bound_)
        : Error("enumeration size " + count_.get_str() + " exceeds bound " +
                std::to_string(bound_)),
          count(std::move(count_)),
          bound(bound_) {}
};

struct NotEulerianError : Error {
    NotEulerianError() : Error("graph has a vertex of odd degree") {}
};

struct NotCompatibleError : Error {
    explicit NotCompatibleError(const std::string& what) : Error(what) {}
};

struct NotTwoRegularError : Error {
    NotTwoRegularError() : Error("edge subset does not induce a 2-regular subgraph") {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

struct OrderMismatchError : Error {
    explicit OrderMismatchError(const std::string& what) : Error(what) {}
};

struct LabelMismatchError : Error {
    explicit LabelMismatchError(const std::string& what) : Error(what) {}
};

struct SizeMismatchError : Error {
    explicit SizeMismatchError(const std::string& what) : Error(what) {}
};

struct InvalidPartitionError : Error {
    InvalidPartitionError() : Error("parts of a partition must be weakly decreasing and positive") {}
};

struct NotEulerianFragmentError : Error {
    explicit NotEulerianFragmentError(const std::string& what) : Error(what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace skewpf

#endif
