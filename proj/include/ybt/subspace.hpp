#pragma once

#include "ybt/operator.hpp"
#include "ybt/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ybt {

/// Exact basis of a linear space of n-leg operators (rational backend).
class SubspaceBasis {
public:
    SubspaceBasis(int site_dim, int legs, std::vector<Operator> basis);

    int site_dim() const noexcept { return site_dim_; }
    int legs() const noexcept { return legs_; }
    Backend backend() const noexcept { return Backend::rational; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<Operator>& basis() const noexcept { return basis_; }

    /// Exact span membership.
    bool contains(const Operator& x) const;
    /// Exact rank of the stored elements (equals dimension() for a valid basis).
    std::size_t rank() const;

    Operator combination(const std::vector<Rational>& coefficients) const;

private:
    int site_dim_;
    int legs_;
    std::vector<Operator> basis_;
};

struct SolverLimits {
    /// Largest operator side site_dim^n the solver accepts.
    std::size_t max_side = 64;
};

/// {z : Rhat_{i,i+1} z = z Rhat_{i,i+1}, 0 < i < n}, Rhat = P R embedded at (i, i+1).
SubspaceBasis r_symmetric_space(const Operator& r, int n, SolverLimits limits = {});

/// {Omega : R_{i,i+1} Omega = tau_{i,i+1}(Omega) Rt_{i,i+1}, 0 < i < n}.
SubspaceBasis intertwiner_space(const Operator& r, const Operator& r_tilde, int n,
                                SolverLimits limits = {});

/// One residual per position i: R_{i,i+1} Omega - tau_{i,i+1}(Omega) Rt_{i,i+1}.
CheckReport braid_intertwine_residual(const Operator& r, const Operator& r_tilde,
                                      const Operator& omega, double tol = kDefaultTolerance);

/// True when z commutes with every adjacent braid matrix of r.
bool is_r_symmetric(const Operator& r, const Operator& z, double tol = kDefaultTolerance);

/// Re-checks every basis element against the defining equations by direct
/// operator products (independent of the vectorized solve).
bool verify_intertwiners(const SubspaceBasis& basis, const Operator& r, const Operator& r_tilde);

struct Certificate {
    std::vector<Rational> coefficients;
    Operator element;
    int attempts;
};

struct CertificateSearch {
    std::optional<Certificate> certificate;
    int attempts = 0;
};

/// Searches for an invertible element of span(basis).
///
/// Attempt 1 is the all-ones combination; later attempts draw integer
/// coefficients uniformly from [-9, 9], doubling the range every 10 attempts.
/// Exhausting the budget is not a proof that no invertible element exists.
CertificateSearch invertible_certificate(const SubspaceBasis& basis, int budget,
                                         std::uint64_t seed);

}  // namespace ybt
