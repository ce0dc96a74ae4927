#include "ybt/subspace.hpp"

#include "ybt/linalg.hpp"
#include "ybt/tensor.hpp"
#include "ybt/ybe.hpp"

#include <algorithm>
#include <random>

namespace ybt {

SubspaceBasis::SubspaceBasis(int site_dim, int legs, std::vector<Operator> basis)
    : site_dim_(site_dim), legs_(legs), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
        if (b.site_dim() != site_dim_ || b.legs() != legs_)
            throw ShapeError("subspace basis element has the wrong shape");
        if (b.backend() != Backend::rational)
            throw BackendMismatch("subspace bases are exact (rational backend only)");
    }
    if (rank() != basis_.size()) throw Error("subspace basis elements are linearly dependent");
}

std::size_t SubspaceBasis::rank() const {
    const std::size_t side = operator_side(site_dim_, legs_);
    ExactEchelon echelon(side * side);
    for (const auto& b : basis_) echelon.insert_dense(b.rational());
    return echelon.rank();
}

bool SubspaceBasis::contains(const Operator& x) const {
    if (x.site_dim() != site_dim_ || x.legs() != legs_)
        throw ShapeError("subspace membership: operator has the wrong shape");
    const std::size_t side = operator_side(site_dim_, legs_);
    ExactEchelon echelon(side * side);
    for (const auto& b : basis_) echelon.insert_dense(b.rational());
    return echelon.in_span_dense(x.rational());
}

Operator SubspaceBasis::combination(const std::vector<Rational>& coefficients) const {
    if (coefficients.size() != basis_.size())
        throw ShapeError("combination: coefficient count does not match dimension");
    Operator acc = Operator::zero(site_dim_, legs_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (sgn(coefficients[i]) != 0) acc = acc + basis_[i].scaled(Scalar(coefficients[i]));
    return acc;
}

namespace {

std::vector<Operator> adjacent_braids(const Operator& r, int n) {
    const Operator braid = braid_matrix(r);
    std::vector<Operator> out;
    for (int i = 1; i < n; ++i) out.push_back(embed(braid, {i, i + 1}, n));
    return out;
}

void check_solver_input(const Operator& r, int n, int min_n, const SolverLimits& limits,
                        std::string_view context) {
    require_legs(r, 2, context);
    if (r.backend() != Backend::rational)
        throw BackendMismatch(std::string(context) + ": exact solving needs the rational backend");
    if (n < min_n)
        throw ShapeError(std::string(context) + ": n must be at least " + std::to_string(min_n));
    const std::size_t side = operator_side(r.site_dim(), n);
    if (side > limits.max_side)
        throw CapExceeded(std::string(context) + ": operator side " + std::to_string(side) +
                          " exceeds the cap " + std::to_string(limits.max_side));
}

// Kernel of Omega -> A_i Omega - Omega B_i over all i, Omega flattened row-major.
SubspaceBasis solve_commutation(int site_dim, int n, const std::vector<Operator>& left,
                                const std::vector<Operator>& right) {
    const std::size_t side = operator_side(site_dim, n);
    ExactEchelon echelon(side * side);
    for (std::size_t p = 0; p < left.size(); ++p) {
        const auto& a = left[p].rational();
        const auto& b = right[p].rational();
        std::vector<std::vector<std::size_t>> a_rows(side), b_cols(side);
        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t j = 0; j < side; ++j) {
                if (sgn(a[i * side + j]) != 0) a_rows[i].push_back(j);
                if (sgn(b[i * side + j]) != 0) b_cols[j].push_back(i);
            }
        SparseForm eq;
        for (std::size_t r = 0; r < side; ++r)
            for (std::size_t c = 0; c < side; ++c) {
                eq.clear();
                for (std::size_t k : a_rows[r]) eq.emplace_back(k * side + c, a[r * side + k]);
                for (std::size_t k : b_cols[c]) eq.emplace_back(r * side + k, -b[k * side + c]);
                echelon.insert(eq);
            }
    }
    std::vector<Operator> basis;
    for (auto& v : echelon.kernel()) basis.emplace_back(site_dim, n, std::move(v));
    return SubspaceBasis(site_dim, n, std::move(basis));
}

}  // namespace

SubspaceBasis r_symmetric_space(const Operator& r, int n, SolverLimits limits) {
    check_solver_input(r, n, 1, limits, "r_symmetric_space");
    const auto braids = adjacent_braids(r, n);
    return solve_commutation(r.site_dim(), n, braids, braids);
}

SubspaceBasis intertwiner_space(const Operator& r, const Operator& r_tilde, int n,
                                SolverLimits limits) {
    check_solver_input(r, n, 2, limits, "intertwiner_space");
    require_same_shape(r, r_tilde, "intertwiner_space");
    return solve_commutation(r.site_dim(), n, adjacent_braids(r, n), adjacent_braids(r_tilde, n));
}

CheckReport braid_intertwine_residual(const Operator& r, const Operator& r_tilde,
                                      const Operator& omega, double tol) {
    require_legs(r, 2, "braid_intertwine_residual (R)");
    require_same_shape(r, r_tilde, "braid_intertwine_residual");
    const int n = omega.legs();
    if (n < 2) throw ShapeError("braid_intertwine_residual: omega needs at least 2 legs");
    if (omega.site_dim() != r.site_dim() || omega.backend() != r.backend())
        throw ShapeError("braid_intertwine_residual: omega does not match R");
    CheckReport report(tol);
    for (int i = 1; i < n; ++i) {
        const Operator ri = embed(r, {i, i + 1}, n);
        const Operator rti = embed(r_tilde, {i, i + 1}, n);
        const Operator swapped = leg_permute(omega, LegPermutation::transposition(n, i, i + 1));
        report.add("position_" + std::to_string(i), residual(ri * omega, swapped * rti));
    }
    return report;
}

bool is_r_symmetric(const Operator& r, const Operator& z, double tol) {
    require_legs(r, 2, "is_r_symmetric");
    if (z.site_dim() != r.site_dim() || z.backend() != r.backend())
        throw ShapeError("is_r_symmetric: operator does not match R");
    for (const auto& b : adjacent_braids(r, z.legs()))
        if (!residual(b * z, z * b).passes(tol)) return false;
    return true;
}

bool verify_intertwiners(const SubspaceBasis& basis, const Operator& r, const Operator& r_tilde) {
    for (const auto& omega : basis.basis()) {
        if (omega.legs() < 2) continue;
        if (!braid_intertwine_residual(r, r_tilde, omega).verdict()) return false;
    }
    return true;
}

CertificateSearch invertible_certificate(const SubspaceBasis& basis, int budget,
                                         std::uint64_t seed) {
    CertificateSearch search;
    if (basis.dimension() == 0 || budget < 1) return search;
    std::mt19937_64 rng(seed);
    std::vector<Rational> coeffs(basis.dimension());
    for (int attempt = 1; attempt <= budget; ++attempt) {
        search.attempts = attempt;
        if (attempt == 1) {
            for (auto& c : coeffs) c = 1;
        } else {
            const std::uint64_t range = 9ULL << std::min((attempt - 2) / 10, 40);
            bool all_zero = true;
            for (auto& c : coeffs) {
                const auto draw = static_cast<long>(rng() % (2 * range + 1));
                c = draw - static_cast<long>(range);
                all_zero = all_zero && draw == static_cast<long>(range);
            }
            if (all_zero) continue;
        }
        Operator candidate = basis.combination(coeffs);
        if (!determinant(candidate).is_zero()) {
            search.certificate = Certificate{coeffs, std::move(candidate), attempt};
            return search;
        }
    }
    return search;
}

}  // namespace ybt
