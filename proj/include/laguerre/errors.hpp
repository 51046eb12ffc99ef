#ifndef LAGUERRE_ERRORS_HPP
#define LAGUERRE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace laguerre {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (permutation, history, pattern literal, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// Input parsed but violates the invariants of its type.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class UnknownStatistic : public Error {
public:
    explicit UnknownStatistic(const std::string& id)
        : Error("unknown statistic: " + id), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

// Raised when a construction that is proven to succeed on valid input fails.
// Seeing one of these means the implementation (or the input validation) has a bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class SlotIndexOutOfRange : public InternalInconsistency {
public:
    using InternalInconsistency::InternalInconsistency;
};

class PlacementImpossible : public InternalInconsistency {
public:
    using InternalInconsistency::InternalInconsistency;
};

class ArcMismatch : public InternalInconsistency {
public:
    using InternalInconsistency::InternalInconsistency;
};

class NegativePDegree : public InternalInconsistency {
public:
    using InternalInconsistency::InternalInconsistency;
};

}  // namespace laguerre

#endif  // LAGUERRE_ERRORS_HPP
