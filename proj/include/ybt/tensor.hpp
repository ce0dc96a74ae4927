#pragma once

#include "ybt/operator.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace ybt {

/// Bijection of {1..n}; image(k) is the slot that tensor factor k moves to.
class LegPermutation {
public:
    /// Throws ShapeError unless `images` is a bijection of {1..size}.
    explicit LegPermutation(std::vector<int> images);
    LegPermutation(std::initializer_list<int> images)
        : LegPermutation(std::vector<int>(images)) {}

    static LegPermutation identity(int n);
    /// Exchanges legs i and j (1-based).
    static LegPermutation transposition(int n, int i, int j);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    LegPermutation inverse() const;
    /// (this o other)(k) = this(other(k)).
    LegPermutation after(const LegPermutation& other) const;

    bool operator==(const LegPermutation&) const = default;

private:
    std::vector<int> images_;
};

/// Kronecker product; `a` occupies the leading legs.
Operator kron(const Operator& a, const Operator& b);

/// X_{s_1 ... s_n}: tensor factor k of x is moved to leg sigma(k).
/// As matrices this is P_sigma x P_sigma^{-1}.
Operator leg_permute(const Operator& x, const LegPermutation& sigma);

/// Places x on the listed legs (factor k on slots[k], 1-based), identity on the rest.
Operator embed(const Operator& x, std::span<const int> slots, int total_legs);
Operator embed(const Operator& x, std::initializer_list<int> slots, int total_legs);

/// Exact inverse (rational) or partial-pivot inverse (complex). Throws NotInvertible.
Operator invert(const Operator& x);

/// Max |x - y| over entries.
Magnitude residual(const Operator& x, const Operator& y);

/// Product a_0 * a_1 * ... in the given order.
Operator product(std::initializer_list<const Operator*> factors);

/// Exact determinant on the rational backend (Bareiss); LU for complex.
Scalar determinant(const Operator& x);

bool is_invertible(const Operator& x);

/// The two-leg swap P on V (x) V.
Operator swap_operator(int site_dim, Backend backend = Backend::rational);

}  // namespace ybt
