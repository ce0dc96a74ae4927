#include "ybt/fusion.hpp"

#include "ybt/tensor.hpp"
#include "ybt/twist.hpp"
#include "ybt/ybe.hpp"

namespace ybt {

void ComponentMap::set(int m, int n, Operator op) {
    if (m < 0 || n < 0) throw ShapeError("component indices must be non-negative");
    if (op.site_dim() != site_dim_ || op.legs() != m + n)
        throw ShapeError("component F^{" + std::to_string(m) + "," + std::to_string(n) +
                         "} must act on " + std::to_string(m + n) + " legs of site_dim " +
                         std::to_string(site_dim_));
    if (op.backend() != backend_) throw BackendMismatch("component backend mismatch");
    entries_.insert_or_assign({m, n}, std::move(op));
}

bool ComponentMap::has(int m, int n) const {
    return entries_.contains({m, n}) || m == 0 || n == 0;
}

Operator ComponentMap::at(int m, int n) const {
    if (auto it = entries_.find({m, n}); it != entries_.end()) return it->second;
    if (m == 0 || n == 0) return Operator::identity(site_dim_, m + n, backend_);
    throw Error("missing component F^{" + std::to_string(m) + "," + std::to_string(n) + "}");
}

void OmegaFamily::set(int n, Operator omega) {
    if (n < 0 || omega.legs() != n || omega.site_dim() != site_dim_)
        throw ShapeError("Omega^" + std::to_string(n) + " has the wrong shape");
    if (omega.backend() != backend_) throw BackendMismatch("Omega backend mismatch");
    omegas_.insert_or_assign(n, std::move(omega));
}

Operator OmegaFamily::at(int n) const {
    if (auto it = omegas_.find(n); it != omegas_.end()) return it->second;
    if (n == 0 || n == 1) return Operator::identity(site_dim_, n, backend_);
    throw Error("missing Omega^" + std::to_string(n));
}

namespace {

void check_max_legs(int legs, int max_legs, std::string_view context) {
    if (legs > max_legs)
        throw CapExceeded(std::string(context) + ": " + std::to_string(legs) +
                          " legs exceeds the limit of " + std::to_string(max_legs));
}

}  // namespace

Operator fuse_r(const Operator& r, int m, int n, int max_legs) {
    require_legs(r, 2, "fuse_r");
    if (m < 0 || n < 0) throw ShapeError("fuse_r: negative group size");
    const int total = m + n;
    check_max_legs(total, max_legs, "fuse_r");
    Operator acc = Operator::identity(r.site_dim(), total, r.backend());
    if (m == 0 || n == 0) return acc;
    for (int i = 1; i <= m; ++i)
        for (int j = n; j >= 1; --j) acc = acc * embed(r, {i, m + j}, total);
    return acc;
}

Operator omega_recursive(const ComponentMap& components, int n) {
    if (n < 0) throw ShapeError("omega_recursive: negative n");
    const int N = components.site_dim();
    Operator acc = Operator::identity(N, n, components.backend());
    for (int j = 0; j + 2 <= n; ++j) {
        const Operator f = components.at(1, n - 1 - j);
        acc = acc * embed(f, leg_range(j + 1, n - j), n);
    }
    return acc;
}

Operator f_components_from_omega(const OmegaFamily& omegas, int m, int n) {
    if (m < 0 || n < 0) throw ShapeError("f_components_from_omega: negative index");
    const Operator top = omegas.at(m + n);
    if (!is_invertible(top)) {
        invert(top);  // throws NotInvertible with the rank
    }
    return top * invert(kron(omegas.at(m), omegas.at(n)));
}

ComponentMap components_from_omegas(const OmegaFamily& omegas, int max_total) {
    ComponentMap out(omegas.site_dim(), omegas.at(0).backend());
    for (int total = 0; total <= max_total; ++total)
        for (int m = 0; m <= total; ++m) out.set(m, total - m, f_components_from_omega(omegas, m, total - m));
    return out;
}

Magnitude te1_residual(const ComponentMap& components, int m, int n, int k) {
    if (m < 0 || n < 0 || k < 0) throw ShapeError("te1_residual: negative index");
    const int N = components.site_dim();
    const Backend b = components.backend();
    const Operator lhs =
        components.at(m + n, k) * kron(components.at(m, n), Operator::identity(N, k, b));
    const Operator rhs =
        components.at(m, n + k) * kron(Operator::identity(N, m, b), components.at(n, k));
    return residual(lhs, rhs);
}

Operator r_fused_from_twist(const Operator& r, const Operator& f, int m, int n, int max_legs) {
    return fuse_r(apply_twist(r, f), m, n, max_legs);
}

Operator swap_leg_groups(const Operator& x, int first, int second) {
    if (first < 0 || second < 0 || first + second != x.legs())
        throw ShapeError("swap_leg_groups: group sizes do not match the operator");
    std::vector<int> images;
    for (int k = 1; k <= first; ++k) images.push_back(second + k);
    for (int k = 1; k <= second; ++k) images.push_back(k);
    return leg_permute(x, LegPermutation(std::move(images)));
}

Operator fused_twist_conjugate(const Operator& r, const ComponentMap& components, int m, int n,
                               int max_legs) {
    const Operator fused = fuse_r(r, m, n, max_legs);
    const Operator tau_fnm = swap_leg_groups(components.at(n, m), n, m);
    return invert(tau_fnm) * fused * components.at(m, n);
}

}  // namespace ybt
