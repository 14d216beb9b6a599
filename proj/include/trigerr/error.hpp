// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace trigerr {

namespace detail {

/// Shortest round-trip text for a double, independent of the locale.
inline std::string to_text(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

}  // namespace detail

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible range, or a function is not a
/// member of the class it was declared to belong to.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Sequence lengths or orders that do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An infinite series could not be truncated to the requested tolerance.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, double achieved_bound)
        : Error(what), achieved_bound_(achieved_bound) {}

    [[nodiscard]] double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// A hypothesis of an evaluator (e.g. convexity of a sequence) failed.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what,
                               std::optional<std::int64_t> index = std::nullopt)
        : Error(what), index_(index) {}

    [[nodiscard]] std::optional<std::int64_t> index() const noexcept { return index_; }

private:
    std::optional<std::int64_t> index_;
};

/// Adaptive quadrature did not reach the requested relative error.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double error_estimate)
        : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

    [[nodiscard]] double estimate() const noexcept { return estimate_; }
    [[nodiscard]] double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

/// Input for which the requested object does not exist (e.g. normalizing a
/// zero kernel).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

}  // namespace trigerr
