#include "ybt/ybe.hpp"

#include "ybt/tensor.hpp"

namespace ybt {

RMatrix::RMatrix(Operator op) : op_(std::move(op)) { require_legs(op_, 2, "RMatrix"); }

RMatrix RMatrix::verify(Operator op, double tol) {
    RMatrix r(std::move(op));
    r.verified_ = ybe_residual(r.op_).passes(tol);
    return r;
}

Magnitude ybe_residual(const Operator& r) {
    require_legs(r, 2, "ybe_residual");
    const Operator r12 = embed(r, {1, 2}, 3);
    const Operator r13 = embed(r, {1, 3}, 3);
    const Operator r23 = embed(r, {2, 3}, 3);
    return residual(r12 * r13 * r23, r23 * r13 * r12);
}

Operator braid_matrix(const Operator& r) {
    require_legs(r, 2, "braid_matrix");
    return swap_operator(r.site_dim(), r.backend()) * r;
}

Magnitude braid_relation_residual(const Operator& braid) {
    require_legs(braid, 2, "braid_relation_residual");
    const Operator b1 = embed(braid, {1, 2}, 3);
    const Operator b2 = embed(braid, {2, 3}, 3);
    return residual(b1 * b2 * b1, b2 * b1 * b2);
}

std::vector<int> leg_range(int first, int count) {
    std::vector<int> legs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) legs[static_cast<std::size_t>(i)] = first + i;
    return legs;
}

namespace {

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

Magnitude mixed_ybe_residual(const Operator& r_mn, const Operator& r_mk, const Operator& r_nk,
                             int m, int n, int k) {
    if (m < 0 || n < 0 || k < 0) throw ShapeError("mixed_ybe_residual: negative group size");
    require_legs(r_mn, m + n, "mixed_ybe_residual (R^{m,n})");
    require_legs(r_mk, m + k, "mixed_ybe_residual (R^{m,k})");
    require_legs(r_nk, n + k, "mixed_ybe_residual (R^{n,k})");
    if (r_mn.site_dim() != r_mk.site_dim() || r_mk.site_dim() != r_nk.site_dim())
        throw ShapeError("mixed_ybe_residual: site_dim mismatch");
    const int total = m + n + k;
    const auto g1 = leg_range(1, m);
    const auto g2 = leg_range(m + 1, n);
    const auto g3 = leg_range(m + n + 1, k);
    const Operator a = embed(r_mn, concat(g1, g2), total);
    const Operator b = embed(r_mk, concat(g1, g3), total);
    const Operator c = embed(r_nk, concat(g2, g3), total);
    return residual(a * b * c, c * b * a);
}

Magnitude rtt_residual(const Operator& r, const Operator& t) {
    require_legs(r, 2, "rtt_residual (R)");
    require_legs(t, 2, "rtt_residual (T)");
    require_same_shape(r, t, "rtt_residual");
    const Operator r12 = embed(r, {1, 2}, 3);
    const Operator t13 = embed(t, {1, 3}, 3);
    const Operator t23 = embed(t, {2, 3}, 3);
    return residual(r12 * t13 * t23, t23 * t13 * r12);
}

}  // namespace ybt
