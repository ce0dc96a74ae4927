#pragma once

#include "ybt/operator.hpp"

#include <map>
#include <utility>

namespace ybt {

/// Default bound on the legs of any fused operator.
inline constexpr int kDefaultMaxLegs = 6;

/// Components F^{m,n} on m+n legs, addressed by (m, n).
///
/// F^{m,0} and F^{0,n} are the identity on m (resp. n) legs whenever they are
/// not stored explicitly.
class ComponentMap {
public:
    ComponentMap(int site_dim, Backend backend = Backend::rational)
        : site_dim_(site_dim), backend_(backend) {}

    int site_dim() const noexcept { return site_dim_; }
    Backend backend() const noexcept { return backend_; }

    /// Throws ShapeError if the operator does not sit on m+n legs of this space.
    void set(int m, int n, Operator op);
    bool has(int m, int n) const;
    /// Throws Error("missing component") for absent (m, n) with m, n > 0.
    Operator at(int m, int n) const;

    const std::map<std::pair<int, int>, Operator>& entries() const noexcept { return entries_; }

private:
    int site_dim_;
    Backend backend_;
    std::map<std::pair<int, int>, Operator> entries_;
};

/// Omega^n by n; Omega^0 and Omega^1 are identities when absent.
class OmegaFamily {
public:
    OmegaFamily(int site_dim, Backend backend = Backend::rational)
        : site_dim_(site_dim), backend_(backend) {}

    void set(int n, Operator omega);
    Operator at(int n) const;
    int site_dim() const noexcept { return site_dim_; }

private:
    int site_dim_;
    Backend backend_;
    std::map<int, Operator> omegas_;
};

/// Fused matrix on m+n legs:
/// (R_{1n'} ... R_{11'}) (R_{2n'} ... R_{21'}) ... (R_{mn'} ... R_{m1'}), j' = leg m+j.
/// Identity when m*n = 0. Refuses above max_legs.
Operator fuse_r(const Operator& r, int m, int n, int max_legs = kDefaultMaxLegs);

/// Omega^n = F^{1,n-1} (e^1 (x) F^{1,n-2}) ... (e^{n-2} (x) F^{1,1}).
Operator omega_recursive(const ComponentMap& components, int n);

/// F^{m,n} = Omega^{m+n} (Omega^m (x) Omega^n)^{-1}.
Operator f_components_from_omega(const OmegaFamily& omegas, int m, int n);

/// All components with m, n >= 0 and m+n <= max_total, via f_components_from_omega.
ComponentMap components_from_omegas(const OmegaFamily& omegas, int max_total);

/// F^{m+n,k} (F^{m,n} (x) e^k) - F^{m,n+k} (e^m (x) F^{n,k}) on m+n+k legs.
Magnitude te1_residual(const ComponentMap& components, int m, int n, int k);

/// fuse_r(apply_twist(r, f), m, n).
Operator r_fused_from_twist(const Operator& r, const Operator& f, int m, int n,
                            int max_legs = kDefaultMaxLegs);

/// tau(F^{n,m})^{-1} R^{m,n} F^{m,n}, tau moving the n-group ahead of the m-group.
/// Compared against r_fused_from_twist for twists that extend to the fused level.
Operator fused_twist_conjugate(const Operator& r, const ComponentMap& components, int m, int n,
                               int max_legs = kDefaultMaxLegs);

/// Exchanges leg groups: the first `first` legs move behind the remaining `second`.
Operator swap_leg_groups(const Operator& x, int first, int second);

}  // namespace ybt
