#include "ybt/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace ybt {

std::string_view to_string(Backend b) {
    return b == Backend::rational ? "rational" : "complex64";
}

Backend backend_from_string(std::string_view s) {
    if (s == "rational") return Backend::rational;
    if (s == "complex64") return Backend::complex64;
    throw ParseError("unknown scalar backend \"" + std::string(s) + "\"");
}

NotInvertible::NotInvertible(std::size_t rank, std::size_t side)
    : Error("not invertible: rank " + std::to_string(rank) + " of " + std::to_string(side)),
      rank_(rank),
      side_(side) {}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
    negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    return s;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    std::string_view body = strip_sign(text, negative);
    Rational value;

    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational \"" + original + "\"");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in \"" + original + "\"");
        value = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw ParseError("malformed decimal \"" + original + "\"");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        value = Rational(digits, scale);
    } else {
        if (!all_digits(body)) throw ParseError("malformed rational \"" + original + "\"");
        value = Rational(mpz_class(std::string(body), 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------

Scalar::Scalar(Rational v) : value_(std::move(v)) {
    std::get<Rational>(value_).canonicalize();
}

const Rational& Scalar::rational() const {
    if (auto* q = std::get_if<Rational>(&value_)) return *q;
    throw BackendMismatch("expected a rational scalar, got complex64");
}

Complex Scalar::complex() const {
    if (auto* c = std::get_if<Complex>(&value_)) return *c;
    throw BackendMismatch("expected a complex64 scalar, got rational");
}

bool Scalar::is_zero() const {
    if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
    return std::get<Complex>(value_) == Complex{};
}

namespace {

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
    if (a.backend() != b.backend())
        throw BackendMismatch("mixed-backend scalar arithmetic");
    if (a.backend() == Backend::rational) return Scalar(Rational(op(a.rational(), b.rational())));
    return Scalar(Complex(op(a.complex(), b.complex())));
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    return binary(*this, o, [](const auto& x, const auto& y) { return x + y; });
}
Scalar Scalar::operator-(const Scalar& o) const {
    return binary(*this, o, [](const auto& x, const auto& y) { return x - y; });
}
Scalar Scalar::operator*(const Scalar& o) const {
    return binary(*this, o, [](const auto& x, const auto& y) { return x * y; });
}
Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw Error("division by zero scalar");
    return binary(*this, o, [](const auto& x, const auto& y) { return x / y; });
}
Scalar Scalar::operator-() const {
    if (backend() == Backend::rational) return Scalar(Rational(-rational()));
    return Scalar(-complex());
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() != o.backend()) return false;
    if (backend() == Backend::rational) return rational() == o.rational();
    return complex() == o.complex();
}

std::string Scalar::to_string() const {
    if (backend() == Backend::rational) return format_rational(rational());
    auto c = complex();
    return format_double(c.real()) + "," + format_double(c.imag());
}

// ---------------------------------------------------------------------------

double Magnitude::approx() const {
    if (auto* q = std::get_if<Rational>(&value_)) return q->get_d();
    return std::get<double>(value_);
}

bool Magnitude::passes(double tol) const {
    if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
    return std::get<double>(value_) < tol;
}

bool Magnitude::is_zero() const {
    if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
    return std::get<double>(value_) == 0.0;
}

std::string Magnitude::to_string() const {
    if (auto* q = std::get_if<Rational>(&value_)) return format_rational(*q);
    return format_double(std::get<double>(value_));
}

Magnitude Magnitude::max(const Magnitude& a, const Magnitude& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() >= b.exact() ? a : b;
    if (a.is_exact() != b.is_exact())
        throw BackendMismatch("cannot compare exact and approximate magnitudes");
    return a.approx() >= b.approx() ? a : b;
}

}  // namespace ybt
