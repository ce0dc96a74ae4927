#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ybt {

using Rational = mpq_class;
using Complex = std::complex<double>;

enum class Backend { rational, complex64 };

/// Default verdict tolerance for the complex64 backend. Rational verdicts are exact.
inline constexpr double kDefaultTolerance = 1e-9;

std::string_view to_string(Backend b);
Backend backend_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Errors. Every failure the library reports derives from ybt::Error.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class BackendMismatch : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    NotInvertible(std::size_t rank, std::size_t side);
    std::size_t rank() const noexcept { return rank_; }
    std::size_t side() const noexcept { return side_; }

private:
    std::size_t rank_;
    std::size_t side_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------

/// Field element of either backend. Arithmetic across backends throws
/// BackendMismatch instead of coercing.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational v);                       // NOLINT(google-explicit-constructor)
    Scalar(Complex v) : value_(v) {}          // NOLINT(google-explicit-constructor)

    Backend backend() const noexcept {
        return std::holds_alternative<Rational>(value_) ? Backend::rational : Backend::complex64;
    }
    const Rational& rational() const;
    Complex complex() const;

    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;

    /// "p/q" or "p" for rationals; "re,im" for complex.
    std::string to_string() const;

private:
    std::variant<Rational, Complex> value_;
};

/// Parses "p/q", "p", or a finite decimal such as "-1.25" into an exact rational.
Rational parse_rational(std::string_view text);
/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

/// Size of a difference: exact rational for the rational backend, a double otherwise.
class Magnitude {
public:
    Magnitude() : value_(Rational(0)) {}
    explicit Magnitude(Rational v) : value_(std::move(v)) {}
    explicit Magnitude(double v) : value_(v) {}

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const { return std::get<Rational>(value_); }
    double approx() const;

    /// Exact zero for rationals; strictly below tol otherwise.
    bool passes(double tol = kDefaultTolerance) const;
    bool is_zero() const;

    std::string to_string() const;

    static Magnitude max(const Magnitude& a, const Magnitude& b);

private:
    std::variant<Rational, double> value_;
};

}  // namespace ybt
