#include "ybt/linalg.hpp"

#include <algorithm>
#include <map>

namespace ybt {

ExactEchelon::ExactEchelon(std::size_t columns) : columns_(columns), row_of_col_(columns, -1) {}

// Clears denominators, merges duplicate columns and drops zeros.
ExactEchelon::Row ExactEchelon::normalize(const SparseForm& row) const {
    std::map<std::size_t, Rational> merged;
    for (const auto& [col, val] : row) {
        if (col >= columns_) throw ShapeError("linear form column out of range");
        merged[col] += val;
    }
    mpz_class lcm = 1;
    for (const auto& [col, val] : merged)
        if (sgn(val) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), val.get_den_mpz_t());
    Row out;
    out.reserve(merged.size());
    for (const auto& [col, val] : merged) {
        if (sgn(val) == 0) continue;
        mpz_class scaled = val.get_num() * (lcm / val.get_den());
        out.push_back({static_cast<std::uint32_t>(col), std::move(scaled)});
    }
    make_primitive(out);
    return out;
}

void ExactEchelon::make_primitive(Row& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.val.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().val) < 0) g = -g;
    if (g != 1)
        for (auto& e : row) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, merged by column.
ExactEchelon::Row ExactEchelon::combine(const mpz_class& a, const Row& x, const mpz_class& b,
                                        const Row& y) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
            out.push_back({x[i].col, a * x[i].val});
            ++i;
        } else if (i == x.size() || y[j].col < x[i].col) {
            out.push_back({y[j].col, -(b * y[j].val)});
            ++j;
        } else {
            mpz_class v = a * x[i].val - b * y[j].val;
            if (sgn(v) != 0) out.push_back({x[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

const mpz_class* ExactEchelon::find(const Row& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry& e, std::uint32_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->val : nullptr;
}

// Stored rows hold no pivot column other than their own, so eliminating one
// pivot never reintroduces another.
ExactEchelon::Row ExactEchelon::reduce(Row row) const {
    std::vector<std::uint32_t> pivots;
    for (const auto& e : row)
        if (row_of_col_[e.col] >= 0) pivots.push_back(e.col);
    for (auto col : pivots) {
        const mpz_class* coeff = find(row, col);
        if (coeff == nullptr) continue;
        const Row& pivot_row = rows_[static_cast<std::size_t>(row_of_col_[col])];
        const mpz_class& p = *find(pivot_row, col);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), coeff->get_mpz_t());
        mpz_class a = p / g;
        mpz_class b = *coeff / g;
        row = combine(a, row, b, pivot_row);
        make_primitive(row);
    }
    return row;
}

bool ExactEchelon::insert(const SparseForm& form) {
    Row row = reduce(normalize(form));
    if (row.empty()) return false;
    const std::uint32_t pivot = row.front().col;
    const mpz_class p = row.front().val;
    for (auto& other : rows_) {
        const mpz_class* coeff = find(other, pivot);
        if (coeff == nullptr) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), coeff->get_mpz_t());
        mpz_class b = *coeff / g;
        other = combine(p / g, other, b, row);
        make_primitive(other);
    }
    row_of_col_[pivot] = static_cast<std::int64_t>(rows_.size());
    pivot_of_row_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
}

namespace {

SparseForm to_sparse(const std::vector<Rational>& dense) {
    SparseForm out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
    return out;
}

}  // namespace

bool ExactEchelon::insert_dense(const std::vector<Rational>& row) {
    if (row.size() != columns_) throw ShapeError("dense row length does not match column count");
    return insert(to_sparse(row));
}

bool ExactEchelon::in_span(const SparseForm& form) const {
    return reduce(normalize(form)).empty();
}

bool ExactEchelon::in_span_dense(const std::vector<Rational>& row) const {
    if (row.size() != columns_) throw ShapeError("dense row length does not match column count");
    return in_span(to_sparse(row));
}

std::vector<std::vector<Rational>> ExactEchelon::kernel() const {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns_; ++free) {
        if (row_of_col_[free] >= 0) continue;
        // x_free = L, x_pivot = -L * a_free / p with L the lcm of the pivots involved.
        mpz_class lcm = 1;
        std::vector<std::pair<std::size_t, const mpz_class*>> hits;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const mpz_class* a = find(rows_[r], static_cast<std::uint32_t>(free));
            if (a == nullptr) continue;
            hits.emplace_back(r, a);
            const mpz_class& p = *find(rows_[r], pivot_of_row_[r]);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get_mpz_t());
        }
        std::vector<Rational> x(columns_);
        x[free] = Rational(lcm);
        mpz_class g = lcm;
        for (const auto& [r, a] : hits) {
            const mpz_class& p = *find(rows_[r], pivot_of_row_[r]);
            mpz_class v = -(*a) * (lcm / p);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            x[pivot_of_row_[r]] = Rational(v);
        }
        if (g != 1 && g != 0)
            for (auto& e : x)
                if (sgn(e) != 0) e = Rational(e.get_num() / g);
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------------------

namespace {

/// Row-scales a rational matrix to integers; returns the per-row scale factors.
std::vector<mpz_class> integer_rows(const std::vector<Rational>& a, std::size_t side,
                                    std::vector<mpz_class>& out) {
    out.assign(side * side, 0);
    std::vector<mpz_class> scale(side, 1);
    for (std::size_t i = 0; i < side; ++i) {
        mpz_class& l = scale[i];
        for (std::size_t j = 0; j < side; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i * side + j].get_den_mpz_t());
        for (std::size_t j = 0; j < side; ++j) {
            const Rational& v = a[i * side + j];
            out[i * side + j] = v.get_num() * (l / v.get_den());
        }
    }
    return scale;
}

}  // namespace

Rational bareiss_determinant(const std::vector<Rational>& a, std::size_t side) {
    if (side == 0) return Rational(1);
    std::vector<mpz_class> m;
    auto scale = integer_rows(a, side, m);
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < side; ++k) {
        if (m[k * side + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < side && m[swap * side + k] == 0) ++swap;
            if (swap == side) return Rational(0);
            for (std::size_t j = 0; j < side; ++j) std::swap(m[k * side + j], m[swap * side + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < side; ++i) {
            for (std::size_t j = k + 1; j < side; ++j) {
                mpz_class v = m[i * side + j] * m[k * side + k] - m[i * side + k] * m[k * side + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i * side + j] = std::move(v);
            }
            m[i * side + k] = 0;
        }
        prev = m[k * side + k];
    }
    mpz_class denom = 1;
    for (const auto& s : scale) denom *= s;
    Rational det(m[side * side - 1] * sign, denom);
    det.canonicalize();
    return det;
}

bool fraction_free_inverse(const std::vector<Rational>& a, std::size_t side,
                           std::vector<Rational>& out, std::size_t& rank) {
    // Gauss-Jordan on [B | I] with B = D*A integral; rows stay primitive integer vectors.
    std::vector<mpz_class> b;
    auto scale = integer_rows(a, side, b);
    const std::size_t width = 2 * side;
    std::vector<std::vector<mpz_class>> rows(side, std::vector<mpz_class>(width, 0));
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) rows[i][j] = b[i * side + j];
        rows[i][side + i] = 1;
    }
    auto primitive = [&](std::vector<mpz_class>& row) {
        mpz_class g = 0;
        for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g > 1)
            for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    };

    rank = 0;
    std::vector<std::size_t> pivot_col_of_row;
    for (std::size_t col = 0; col < side; ++col) {
        std::size_t pick = rank;
        while (pick < side && rows[pick][col] == 0) ++pick;
        if (pick == side) continue;
        std::swap(rows[rank], rows[pick]);
        auto& piv = rows[rank];
        for (std::size_t i = 0; i < side; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), piv[col].get_mpz_t(), rows[i][col].get_mpz_t());
            mpz_class x = piv[col] / g;
            mpz_class y = rows[i][col] / g;
            for (std::size_t j = 0; j < width; ++j) rows[i][j] = x * rows[i][j] - y * piv[j];
            primitive(rows[i]);
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    if (rank < side) return false;

    // Row i is now [p_i e_i | y_i], so (D A)^{-1} has row i = y_i / p_i and
    // A^{-1} = (D A)^{-1} D scales column j by d_j.
    out.assign(side * side, Rational(0));
    for (std::size_t i = 0; i < side; ++i) {
        const mpz_class& p = rows[i][i];
        for (std::size_t j = 0; j < side; ++j) {
            Rational v(rows[i][side + j] * scale[j], p);
            v.canonicalize();
            out[i * side + j] = std::move(v);
        }
    }
    return true;
}

}  // namespace ybt
