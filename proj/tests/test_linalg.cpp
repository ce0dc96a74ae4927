#include "support.hpp"
#include "ybt/linalg.hpp"

#include <doctest.h>

using namespace ybt;
using namespace ybt::testing;

namespace {

// Rank by plain rational Gaussian elimination (oracle for ExactEchelon).
std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("ExactEchelon rank and kernel against an independent elimination") {
    Rng rng(99);
    std::uniform_int_distribution<int> rows_d(1, 7), cols_d(1, 8), val(-3, 3);
    std::bernoulli_distribution sparse(0.5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = static_cast<std::size_t>(rows_d(rng));
        const std::size_t cols = static_cast<std::size_t>(cols_d(rng));
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
        for (auto& row : a)
            for (auto& x : row)
                if (sparse(rng)) x = val(rng);
        // duplicate a row now and then to force dependence
        if (rows > 1 && t % 3 == 0) a[rows - 1] = a[0];

        ExactEchelon e(cols);
        for (const auto& row : a) e.insert_dense(row);
        const std::size_t rank = oracle_rank(a);
        CHECK(e.rank() == rank);
        const auto kernel = e.kernel();
        CHECK(kernel.size() == cols - rank);
        for (const auto& v : kernel)
            for (const auto& row : a) {
                Rational dot = 0;
                for (std::size_t k = 0; k < cols; ++k) dot += row[k] * v[k];
                CHECK(dot == 0);
            }
        // kernel vectors are primitive integers
        for (const auto& v : kernel)
            for (const auto& x : v) CHECK(x.get_den() == 1);
        for (const auto& row : a) CHECK(e.in_span_dense(row));
    }
}

TEST_CASE("ExactEchelon sparse forms sum duplicate columns") {
    ExactEchelon e(3);
    CHECK(e.insert({{0, Rational(1)}, {0, Rational(1)}, {2, Rational(-1)}}));
    CHECK_FALSE(e.insert({{0, Rational(1)}, {2, Rational(-1, 2)}}));
    CHECK(e.in_span({{0, Rational(4)}, {2, Rational(-2)}}));
    CHECK_FALSE(e.in_span({{1, Rational(1)}}));
    CHECK_FALSE(e.insert({}));
    CHECK(e.kernel().size() == 2);
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
        const std::size_t side = 1 + static_cast<std::size_t>(t % 5);
        std::vector<Rational> a(side * side);
        for (auto& x : a) {
            x = small_rational(rng, 3);
            x.canonicalize();
        }
        if (t % 7 == 0 && side > 1)
            for (std::size_t k = 0; k < side; ++k) a[side + k] = a[k] * 2;
        CHECK(bareiss_determinant(a, side) == cofactor_det(a, side));
        std::vector<Rational> inv;
        std::size_t rank = 0;
        const bool ok = fraction_free_inverse(a, side, inv, rank);
        CHECK(ok == (cofactor_det(a, side) != 0));
        if (ok) {
            for (std::size_t i = 0; i < side; ++i)
                for (std::size_t j = 0; j < side; ++j) {
                    Rational s = 0;
                    for (std::size_t k = 0; k < side; ++k) s += a[i * side + k] * inv[k * side + j];
                    CHECK(s == (i == j ? 1 : 0));
                }
        } else {
            CHECK(rank < side);
        }
    }
}
