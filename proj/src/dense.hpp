#pragma once

// Backend-generic dense kernels shared by the tensor_core translation units.

#include "ybt/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace ybt::dense {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Complex& c) { return c == Complex{}; }

template <class T>
std::vector<T> identity(std::size_t side) {
    std::vector<T> out(side * side, T(0));
    for (std::size_t i = 0; i < side; ++i) out[i * side + i] = T(1);
    return out;
}

/// Column indices of the nonzero entries in each row.
template <class T>
std::vector<std::vector<std::size_t>> row_support(const std::vector<T>& a, std::size_t side) {
    std::vector<std::vector<std::size_t>> support(side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            if (!is_zero(a[i * side + j])) support[i].push_back(j);
    return support;
}

template <class T>
std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t side) {
    std::vector<T> out(side * side, T(0));
    const auto b_support = row_support(b, side);
    for (std::size_t i = 0; i < side; ++i) {
        T* row = out.data() + i * side;
        for (std::size_t k = 0; k < side; ++k) {
            const T& aik = a[i * side + k];
            if (is_zero(aik)) continue;
            const T* brow = b.data() + k * side;
            for (std::size_t j : b_support[k]) row[j] += aik * brow[j];
        }
    }
    return out;
}

inline double abs_value(const Complex& c) { return std::abs(c); }

}  // namespace ybt::dense
