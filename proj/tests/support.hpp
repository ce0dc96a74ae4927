#pragma once
// Test-only generators and brute-force oracles. Nothing here calls into the
// tensor kernels under test: index bookkeeping is redone with plain loops.

#include "ybt/operator.hpp"
#include "ybt/report.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ybt::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline Operator random_operator(Rng& rng, int site_dim, int legs, int span = 5) {
    const std::size_t side = operator_side(site_dim, legs);
    Operator::RationalData d(side * side);
    for (auto& x : d) {
        x = small_rational(rng, span);
        x.canonicalize();
    }
    return {site_dim, legs, std::move(d)};
}

inline Operator random_sparse_operator(Rng& rng, int site_dim, int legs, double density = 0.3) {
    const std::size_t side = operator_side(site_dim, legs);
    std::bernoulli_distribution keep(density);
    Operator::RationalData d(side * side);
    for (auto& x : d)
        if (keep(rng)) {
            x = small_rational(rng);
            x.canonicalize();
        }
    return {site_dim, legs, std::move(d)};
}

inline Operator random_complex(Rng& rng, int site_dim, int legs) {
    const std::size_t side = operator_side(site_dim, legs);
    std::normal_distribution<double> g;
    Operator::ComplexData d(side * side);
    for (auto& x : d) x = {g(rng), g(rng)};
    return {site_dim, legs, std::move(d)};
}

// Determinant by cofactor expansion along the first row (tiny sides only).
inline Rational cofactor_det(const std::vector<Rational>& a, std::size_t side) {
    if (side == 0) return 1;
    if (side == 1) return a[0];
    Rational total = 0;
    for (std::size_t c = 0; c < side; ++c) {
        if (a[c] == 0) continue;
        std::vector<Rational> minor;
        for (std::size_t i = 1; i < side; ++i)
            for (std::size_t k = 0; k < side; ++k)
                if (k != c) minor.push_back(a[i * side + k]);
        const Rational sub = a[c] * cofactor_det(minor, side - 1);
        total += (c % 2 == 0) ? sub : Rational(-sub);
    }
    return total;
}

// Random invertible rational operator: rejection on the cofactor determinant.
inline Operator random_invertible(Rng& rng, int site_dim, int legs) {
    for (;;) {
        Operator x = random_operator(rng, site_dim, legs);
        if (x.side() > 8) return x;  // caller must check
        if (cofactor_det(x.rational(), x.side()) != 0) return x;
    }
}

// Multi-index digits of a flat basis index, leftmost slowest.
inline std::vector<int> digits(std::size_t index, int site_dim, int legs) {
    std::vector<int> out(static_cast<std::size_t>(legs));
    for (int k = legs - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(site_dim));
        index /= static_cast<std::size_t>(site_dim);
    }
    return out;
}

inline std::size_t flatten(const std::vector<int>& d, int site_dim) {
    std::size_t out = 0;
    for (int x : d) out = out * static_cast<std::size_t>(site_dim) + static_cast<std::size_t>(x);
    return out;
}

// x placed on `slots` (1-based) of `total` legs, identity elsewhere:
// <i|X|j> = <i_slots|x|j_slots> * prod_{other legs} delta(i_l, j_l).
inline Operator oracle_embed(const Operator& x, const std::vector<int>& slots, int total) {
    const int N = x.site_dim();
    const std::size_t side = operator_side(N, total);
    Operator::RationalData d(side * side);
    for (std::size_t i = 0; i < side; ++i) {
        const auto di = digits(i, N, total);
        for (std::size_t j = 0; j < side; ++j) {
            const auto dj = digits(j, N, total);
            bool ok = true;
            for (int l = 1; l <= total && ok; ++l) {
                bool used = false;
                for (int s : slots) used = used || s == l;
                if (!used && di[l - 1] != dj[l - 1]) ok = false;
            }
            if (!ok) continue;
            std::vector<int> si, sj;
            for (int s : slots) {
                si.push_back(di[s - 1]);
                sj.push_back(dj[s - 1]);
            }
            d[i * side + j] = x.rational()[flatten(si, N) * x.side() + flatten(sj, N)];
        }
    }
    return {N, total, std::move(d)};
}

inline Operator oracle_kron(const Operator& a, const Operator& b) {
    const std::size_t sa = a.side(), sb = b.side(), side = sa * sb;
    Operator::RationalData d(side * side);
    for (std::size_t i1 = 0; i1 < sa; ++i1)
        for (std::size_t j1 = 0; j1 < sa; ++j1)
            for (std::size_t i2 = 0; i2 < sb; ++i2)
                for (std::size_t j2 = 0; j2 < sb; ++j2)
                    d[(i1 * sb + i2) * side + (j1 * sb + j2)] =
                        a.rational()[i1 * sa + j1] * b.rational()[i2 * sb + j2];
    return {a.site_dim(), a.legs() + b.legs(), std::move(d)};
}

inline Operator oracle_mul(const Operator& a, const Operator& b) {
    const std::size_t s = a.side();
    Operator::RationalData d(s * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t j = 0; j < s; ++j) d[i * s + j] += a.rational()[i * s + k] * b.rational()[k * s + j];
    return {a.site_dim(), a.legs(), std::move(d)};
}

inline bool all_pass(const CheckReport& r) {
    for (const auto& e : r.entries())
        if (!e.value.passes(r.tolerance())) return false;
    return true;
}

}  // namespace ybt::testing
