#pragma once

#include "ybt/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ybt {

/// Dense square matrix acting on V^{(x)legs}, dim V = site_dim.
///
/// Entries are row-major over the lexicographic multi-index basis
/// (i_1 ... i_legs), leftmost index slowest. legs == 0 is a 1x1 scalar.
/// All entries share one backend. Values are immutable once built; every
/// operation returns a new Operator.
class Operator {
public:
    using RationalData = std::vector<Rational>;
    using ComplexData = std::vector<Complex>;

    Operator(int site_dim, int legs, RationalData entries);
    Operator(int site_dim, int legs, ComplexData entries);

    static Operator identity(int site_dim, int legs, Backend backend = Backend::rational);
    static Operator zero(int site_dim, int legs, Backend backend = Backend::rational);
    static Operator diagonal(int site_dim, int legs, std::span<const Rational> diag);
    /// Rational operator from nested rows; row count must equal site_dim^legs.
    static Operator from_rows(int site_dim, int legs,
                              std::initializer_list<std::initializer_list<Rational>> rows);

    int site_dim() const noexcept { return site_dim_; }
    int legs() const noexcept { return legs_; }
    /// Side length site_dim^legs.
    std::size_t side() const noexcept { return side_; }
    Backend backend() const noexcept {
        return std::holds_alternative<RationalData>(data_) ? Backend::rational
                                                           : Backend::complex64;
    }

    Scalar at(std::size_t row, std::size_t col) const;

    const RationalData& rational() const;
    const ComplexData& complex() const;

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), data_);
    }

    Operator operator*(const Operator& o) const;
    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator scaled(const Scalar& s) const;

    /// Exact entrywise equality (bitwise for complex). Use residual() for tolerances.
    bool operator==(const Operator& o) const;

    /// Same site_dim, legs and backend.
    bool same_shape(const Operator& o) const noexcept;

    std::string describe() const;

private:
    int site_dim_;
    int legs_;
    std::size_t side_;
    std::variant<RationalData, ComplexData> data_;
};

/// side = site_dim^legs, throwing ShapeError on overflow or bad arguments.
std::size_t operator_side(int site_dim, int legs);

/// Throws ShapeError/BackendMismatch unless a and b can be combined entrywise.
void require_same_shape(const Operator& a, const Operator& b, std::string_view context);
void require_legs(const Operator& x, int legs, std::string_view context);

}  // namespace ybt
