#include "ybt/tensor.hpp"

#include "dense.hpp"
#include "ybt/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ybt {

LegPermutation::LegPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw ShapeError("leg permutation is not a bijection of {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

LegPermutation LegPermutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = k + 1;
    return LegPermutation(std::move(images));
}

LegPermutation LegPermutation::transposition(int n, int i, int j) {
    auto images = identity(n).images_;
    if (i < 1 || j < 1 || i > n || j > n) throw ShapeError("transposition leg out of range");
    std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
    return LegPermutation(std::move(images));
}

LegPermutation LegPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k)
        inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
    return LegPermutation(std::move(inv));
}

LegPermutation LegPermutation::after(const LegPermutation& other) const {
    if (other.size() != size()) throw ShapeError("composing permutations of different sizes");
    std::vector<int> out(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) out[k] = (*this)(other.images_[k]);
    return LegPermutation(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
std::vector<T> kron_data(const std::vector<T>& a, std::size_t sa, const std::vector<T>& b,
                         std::size_t sb) {
    const std::size_t side = sa * sb;
    std::vector<T> out(side * side, T(0));
    for (std::size_t i = 0; i < sa; ++i)
        for (std::size_t j = 0; j < sa; ++j) {
            const T& aij = a[i * sa + j];
            if (dense::is_zero(aij)) continue;
            for (std::size_t k = 0; k < sb; ++k)
                for (std::size_t l = 0; l < sb; ++l) {
                    const T& bkl = b[k * sb + l];
                    if (dense::is_zero(bkl)) continue;
                    out[(i * sb + k) * side + (j * sb + l)] = aij * bkl;
                }
        }
    return out;
}

/// Linear index of basis vector (i_1..i_n) after moving digit k to slot sigma(k).
std::vector<std::size_t> permuted_indices(int site_dim, const LegPermutation& sigma) {
    const int n = sigma.size();
    const std::size_t side = operator_side(site_dim, n);
    const auto N = static_cast<std::size_t>(site_dim);
    // weight of slot s (1-based) in the row-major multi-index
    std::vector<std::size_t> weight(static_cast<std::size_t>(n) + 1, 1);
    for (int s = n - 1; s >= 1; --s)
        weight[static_cast<std::size_t>(s)] = weight[static_cast<std::size_t>(s) + 1] * N;
    std::vector<std::size_t> map(side);
    for (std::size_t idx = 0; idx < side; ++idx) {
        std::size_t rest = idx;
        std::size_t target = 0;
        for (int k = n; k >= 1; --k) {
            const std::size_t digit = rest % N;
            rest /= N;
            target += digit * weight[static_cast<std::size_t>(sigma(k))];
        }
        map[idx] = target;
    }
    return map;
}

template <class T>
std::vector<T> permute_data(const std::vector<T>& x, std::size_t side,
                            const std::vector<std::size_t>& map) {
    std::vector<T> out(side * side, T(0));
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) out[map[i] * side + map[j]] = x[i * side + j];
    return out;
}

}  // namespace

Operator kron(const Operator& a, const Operator& b) {
    if (a.backend() != b.backend()) throw BackendMismatch("kron: backend mismatch");
    if (a.site_dim() != b.site_dim()) throw ShapeError("kron: site_dim mismatch");
    const int legs = a.legs() + b.legs();
    if (a.backend() == Backend::rational)
        return {a.site_dim(), legs, kron_data(a.rational(), a.side(), b.rational(), b.side())};
    return {a.site_dim(), legs, kron_data(a.complex(), a.side(), b.complex(), b.side())};
}

Operator leg_permute(const Operator& x, const LegPermutation& sigma) {
    if (sigma.size() != x.legs())
        throw ShapeError("leg_permute: permutation of size " + std::to_string(sigma.size()) +
                         " applied to " + std::to_string(x.legs()) + "-leg operator");
    if (sigma == LegPermutation::identity(x.legs())) return x;
    const auto map = permuted_indices(x.site_dim(), sigma);
    return x.visit([&](const auto& d) {
        return Operator(x.site_dim(), x.legs(), permute_data(d, x.side(), map));
    });
}

Operator embed(const Operator& x, std::span<const int> slots, int total_legs) {
    if (static_cast<int>(slots.size()) != x.legs())
        throw ShapeError("embed: " + std::to_string(slots.size()) + " slots for a " +
                         std::to_string(x.legs()) + "-leg operator");
    if (total_legs < x.legs()) throw ShapeError("embed: total_legs smaller than operator legs");
    std::vector<bool> used(static_cast<std::size_t>(total_legs) + 1, false);
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(total_legs));
    for (int s : slots) {
        if (s < 1 || s > total_legs)
            throw ShapeError("embed: slot " + std::to_string(s) + " out of range 1.." +
                             std::to_string(total_legs));
        if (used[static_cast<std::size_t>(s)])
            throw ShapeError("embed: repeated slot " + std::to_string(s));
        used[static_cast<std::size_t>(s)] = true;
        images.push_back(s);
    }
    for (int s = 1; s <= total_legs; ++s)
        if (!used[static_cast<std::size_t>(s)]) images.push_back(s);
    const Operator padded =
        total_legs == x.legs()
            ? x
            : kron(x, Operator::identity(x.site_dim(), total_legs - x.legs(), x.backend()));
    return leg_permute(padded, LegPermutation(std::move(images)));
}

Operator embed(const Operator& x, std::initializer_list<int> slots, int total_legs) {
    return embed(x, std::span<const int>(slots.begin(), slots.size()), total_legs);
}

namespace {

// Partial-pivot Gauss-Jordan; pivots below `eps * max|entry|` count as zero.
bool complex_inverse(const std::vector<Complex>& a, std::size_t side, std::vector<Complex>& out,
                     std::size_t& rank) {
    std::vector<Complex> m = a;
    out = dense::identity<Complex>(side);
    double scale = 0.0;
    for (const auto& v : m) scale = std::max(scale, std::abs(v));
    const double eps = 1e-13 * std::max(scale, 1e-300);
    rank = 0;
    bool singular = false;
    for (std::size_t col = 0; col < side; ++col) {
        std::size_t best = col;
        for (std::size_t i = col; i < side; ++i)
            if (std::abs(m[i * side + col]) > std::abs(m[best * side + col])) best = i;
        if (std::abs(m[best * side + col]) <= eps) {
            singular = true;
            continue;
        }
        ++rank;
        if (best != col)
            for (std::size_t j = 0; j < side; ++j) {
                std::swap(m[col * side + j], m[best * side + j]);
                std::swap(out[col * side + j], out[best * side + j]);
            }
        const Complex inv = 1.0 / m[col * side + col];
        for (std::size_t j = 0; j < side; ++j) {
            m[col * side + j] *= inv;
            out[col * side + j] *= inv;
        }
        for (std::size_t i = 0; i < side; ++i) {
            if (i == col) continue;
            const Complex f = m[i * side + col];
            if (f == Complex{}) continue;
            for (std::size_t j = 0; j < side; ++j) {
                m[i * side + j] -= f * m[col * side + j];
                out[i * side + j] -= f * out[col * side + j];
            }
        }
    }
    return !singular;
}

Complex complex_determinant(std::vector<Complex> m, std::size_t side) {
    Complex det = 1.0;
    for (std::size_t col = 0; col < side; ++col) {
        std::size_t best = col;
        for (std::size_t i = col; i < side; ++i)
            if (std::abs(m[i * side + col]) > std::abs(m[best * side + col])) best = i;
        if (m[best * side + col] == Complex{}) return 0.0;
        if (best != col) {
            for (std::size_t j = 0; j < side; ++j) std::swap(m[col * side + j], m[best * side + j]);
            det = -det;
        }
        det *= m[col * side + col];
        for (std::size_t i = col + 1; i < side; ++i) {
            const Complex f = m[i * side + col] / m[col * side + col];
            for (std::size_t j = col; j < side; ++j) m[i * side + j] -= f * m[col * side + j];
        }
    }
    return det;
}

}  // namespace

Operator invert(const Operator& x) {
    std::size_t rank = 0;
    if (x.backend() == Backend::rational) {
        std::vector<Rational> out;
        if (!fraction_free_inverse(x.rational(), x.side(), out, rank))
            throw NotInvertible(rank, x.side());
        return {x.site_dim(), x.legs(), std::move(out)};
    }
    std::vector<Complex> out;
    if (!complex_inverse(x.complex(), x.side(), out, rank)) throw NotInvertible(rank, x.side());
    return {x.site_dim(), x.legs(), std::move(out)};
}

Magnitude residual(const Operator& x, const Operator& y) {
    require_same_shape(x, y, "residual");
    if (x.backend() == Backend::rational) {
        const auto& a = x.rational();
        const auto& b = y.rational();
        Rational best = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rational d = abs(a[i] - b[i]);
            if (d > best) best = d;
        }
        return Magnitude(best);
    }
    const auto& a = x.complex();
    const auto& b = y.complex();
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
    return Magnitude(best);
}

Operator product(std::initializer_list<const Operator*> factors) {
    if (factors.size() == 0) throw ShapeError("product of no factors");
    auto it = factors.begin();
    Operator acc = **it;
    for (++it; it != factors.end(); ++it) acc = acc * **it;
    return acc;
}

Scalar determinant(const Operator& x) {
    if (x.backend() == Backend::rational) return Scalar(bareiss_determinant(x.rational(), x.side()));
    return Scalar(complex_determinant(x.complex(), x.side()));
}

bool is_invertible(const Operator& x) {
    if (x.backend() == Backend::rational) return !determinant(x).is_zero();
    std::vector<Complex> out;
    std::size_t rank = 0;
    return complex_inverse(x.complex(), x.side(), out, rank);
}

Operator swap_operator(int site_dim, Backend backend) {
    const auto N = static_cast<std::size_t>(site_dim);
    const std::size_t side = N * N;
    std::vector<Rational> d(side * side);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) d[(i * N + j) * side + (j * N + i)] = 1;
    Operator p(site_dim, 2, std::move(d));
    if (backend == Backend::rational) return p;
    std::vector<Complex> c(side * side);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.rational()[k].get_d();
    return {site_dim, 2, std::move(c)};
}

}  // namespace ybt
