#include "ybt/operator.hpp"

#include "dense.hpp"

#include <cstdint>
#include <functional>
#include <limits>

namespace ybt {

std::size_t operator_side(int site_dim, int legs) {
    if (site_dim < 1) throw ShapeError("site_dim must be positive, got " + std::to_string(site_dim));
    if (legs < 0) throw ShapeError("legs must be non-negative, got " + std::to_string(legs));
    std::size_t side = 1;
    for (int i = 0; i < legs; ++i) {
        if (side > std::numeric_limits<std::uint32_t>::max() / static_cast<std::size_t>(site_dim))
            throw ShapeError("operator side overflows");
        side *= static_cast<std::size_t>(site_dim);
    }
    return side;
}

void require_same_shape(const Operator& a, const Operator& b, std::string_view context) {
    if (a.backend() != b.backend())
        throw BackendMismatch(std::string(context) + ": backend mismatch (" +
                              std::string(to_string(a.backend())) + " vs " +
                              std::string(to_string(b.backend())) + ")");
    if (a.site_dim() != b.site_dim())
        throw ShapeError(std::string(context) + ": site_dim mismatch (" +
                         std::to_string(a.site_dim()) + " vs " + std::to_string(b.site_dim()) + ")");
    if (a.legs() != b.legs())
        throw ShapeError(std::string(context) + ": leg count mismatch (" +
                         std::to_string(a.legs()) + " vs " + std::to_string(b.legs()) + ")");
}

void require_legs(const Operator& x, int legs, std::string_view context) {
    if (x.legs() != legs)
        throw ShapeError(std::string(context) + ": expected " + std::to_string(legs) +
                         " legs, got " + std::to_string(x.legs()));
}

namespace {

template <class Data>
void check_size(const Data& d, std::size_t side) {
    if (d.size() != side * side)
        throw ShapeError("entry count " + std::to_string(d.size()) + " does not match " +
                         std::to_string(side) + "x" + std::to_string(side));
}

}  // namespace

Operator::Operator(int site_dim, int legs, RationalData entries)
    : site_dim_(site_dim), legs_(legs), side_(operator_side(site_dim, legs)) {
    check_size(entries, side_);
    for (auto& e : entries) e.canonicalize();
    data_ = std::move(entries);
}

Operator::Operator(int site_dim, int legs, ComplexData entries)
    : site_dim_(site_dim), legs_(legs), side_(operator_side(site_dim, legs)) {
    check_size(entries, side_);
    data_ = std::move(entries);
}

Operator Operator::identity(int site_dim, int legs, Backend backend) {
    const auto side = operator_side(site_dim, legs);
    if (backend == Backend::rational) return {site_dim, legs, dense::identity<Rational>(side)};
    return {site_dim, legs, dense::identity<Complex>(side)};
}

Operator Operator::zero(int site_dim, int legs, Backend backend) {
    const auto side = operator_side(site_dim, legs);
    if (backend == Backend::rational) return {site_dim, legs, RationalData(side * side)};
    return {site_dim, legs, ComplexData(side * side)};
}

Operator Operator::diagonal(int site_dim, int legs, std::span<const Rational> diag) {
    const auto side = operator_side(site_dim, legs);
    if (diag.size() != side) throw ShapeError("diagonal length does not match operator side");
    RationalData d(side * side);
    for (std::size_t i = 0; i < side; ++i) d[i * side + i] = diag[i];
    return {site_dim, legs, std::move(d)};
}

Operator Operator::from_rows(int site_dim, int legs,
                             std::initializer_list<std::initializer_list<Rational>> rows) {
    const auto side = operator_side(site_dim, legs);
    if (rows.size() != side) throw ShapeError("row count does not match operator side");
    RationalData d;
    d.reserve(side * side);
    for (const auto& row : rows) {
        if (row.size() != side) throw ShapeError("row length does not match operator side");
        d.insert(d.end(), row.begin(), row.end());
    }
    return {site_dim, legs, std::move(d)};
}

Scalar Operator::at(std::size_t row, std::size_t col) const {
    if (row >= side_ || col >= side_) throw ShapeError("entry index out of range");
    return visit([&](const auto& d) { return Scalar(d[row * side_ + col]); });
}

const Operator::RationalData& Operator::rational() const {
    if (auto* d = std::get_if<RationalData>(&data_)) return *d;
    throw BackendMismatch("operator uses the complex64 backend, rational expected");
}

const Operator::ComplexData& Operator::complex() const {
    if (auto* d = std::get_if<ComplexData>(&data_)) return *d;
    throw BackendMismatch("operator uses the rational backend, complex64 expected");
}

Operator Operator::operator*(const Operator& o) const {
    require_same_shape(*this, o, "operator product");
    if (backend() == Backend::rational)
        return {site_dim_, legs_, dense::multiply(rational(), o.rational(), side_)};
    return {site_dim_, legs_, dense::multiply(complex(), o.complex(), side_)};
}

namespace {

template <class T, class Op>
std::vector<T> zip(const std::vector<T>& a, const std::vector<T>& b, Op op) {
    std::vector<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
}

}  // namespace

Operator Operator::operator+(const Operator& o) const {
    require_same_shape(*this, o, "operator sum");
    if (backend() == Backend::rational)
        return {site_dim_, legs_,
                zip(rational(), o.rational(), [](const Rational& x, const Rational& y) {
                    return Rational(x + y);
                })};
    return {site_dim_, legs_, zip(complex(), o.complex(), std::plus<>{})};
}

Operator Operator::operator-(const Operator& o) const {
    require_same_shape(*this, o, "operator difference");
    if (backend() == Backend::rational)
        return {site_dim_, legs_,
                zip(rational(), o.rational(), [](const Rational& x, const Rational& y) {
                    return Rational(x - y);
                })};
    return {site_dim_, legs_, zip(complex(), o.complex(), std::minus<>{})};
}

Operator Operator::scaled(const Scalar& s) const {
    if (s.backend() != backend()) throw BackendMismatch("scaling by a scalar of another backend");
    if (backend() == Backend::rational) {
        RationalData d = rational();
        for (auto& e : d) e *= s.rational();
        return {site_dim_, legs_, std::move(d)};
    }
    ComplexData d = complex();
    for (auto& e : d) e *= s.complex();
    return {site_dim_, legs_, std::move(d)};
}

bool Operator::operator==(const Operator& o) const {
    return same_shape(o) && data_ == o.data_;
}

bool Operator::same_shape(const Operator& o) const noexcept {
    return site_dim_ == o.site_dim_ && legs_ == o.legs_ && backend() == o.backend();
}

std::string Operator::describe() const {
    return std::string(to_string(backend())) + " operator, site_dim " + std::to_string(site_dim_) +
           ", " + std::to_string(legs_) + " legs";
}

}  // namespace ybt
