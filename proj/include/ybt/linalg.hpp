#pragma once

#include "ybt/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ybt {

/// Sparse linear form: (column, coefficient) pairs, any order, duplicates summed.
using SparseForm = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental fraction-free Gauss-Jordan elimination over the integers.
///
/// Rows are scaled to primitive integer vectors on insertion and kept fully
/// reduced: a pivot column appears in exactly one stored row. This gives exact
/// ranks, span-membership tests and kernel bases for the large sparse systems
/// produced by vectorized commutation conditions.
class ExactEchelon {
public:
    explicit ExactEchelon(std::size_t columns);

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds a row; returns true if it was independent of the stored rows.
    bool insert(const SparseForm& row);
    bool insert_dense(const std::vector<Rational>& row);

    /// True when `row` lies in the span of the stored rows.
    bool in_span(const SparseForm& row) const;
    bool in_span_dense(const std::vector<Rational>& row) const;

    /// Basis of {x : row . x = 0 for every stored row}, each vector scaled to
    /// primitive integers with a positive entry at its free column.
    std::vector<std::vector<Rational>> kernel() const;

private:
    struct Entry {
        std::uint32_t col;
        mpz_class val;
    };
    using Row = std::vector<Entry>;

    Row normalize(const SparseForm& row) const;
    Row reduce(Row row) const;
    static void make_primitive(Row& row);
    static Row combine(const mpz_class& a, const Row& x, const mpz_class& b, const Row& y);
    static const mpz_class* find(const Row& row, std::uint32_t col);

    std::size_t columns_;
    std::vector<Row> rows_;
    std::vector<std::uint32_t> pivot_of_row_;
    std::vector<std::int64_t> row_of_col_;
};

/// Dense rational helpers (row-major, side x side).
Rational bareiss_determinant(const std::vector<Rational>& a, std::size_t side);

/// Fraction-free inverse. Returns false and sets `rank` when singular.
bool fraction_free_inverse(const std::vector<Rational>& a, std::size_t side,
                           std::vector<Rational>& out, std::size_t& rank);

}  // namespace ybt
