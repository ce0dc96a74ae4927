#include "ybt/factorized.hpp"

#include "ybt/tensor.hpp"
#include "ybt/ybe.hpp"

namespace ybt {

namespace {

struct ThreeLeg {
    Operator f12, f13, f23;
    explicit ThreeLeg(const Operator& f)
        : f12(embed(f, {1, 2}, 3)), f13(embed(f, {1, 3}, 3)), f23(embed(f, {2, 3}, 3)) {}
};

void check_r_f(const Operator& r, const Operator& f, std::string_view context) {
    require_legs(r, 2, context);
    require_legs(f, 2, context);
    require_same_shape(r, f, context);
}

}  // namespace

CheckReport check_split_A(const Operator& r, const Operator& f, double tol) {
    check_r_f(r, f, "check_split_A");
    const ThreeLeg F(f);
    const Operator r12 = embed(r, {1, 2}, 3);
    const Operator r23 = embed(r, {2, 3}, 3);
    CheckReport report(tol);
    report.add("split11", residual(r23 * F.f13 * F.f12, F.f12 * F.f13 * r23));
    report.add("split12", residual(r12 * F.f23 * F.f13, F.f13 * F.f23 * r12));
    report.add("split13", residual(F.f12 * F.f23, F.f23 * F.f12));
    return report;
}

CheckReport check_split_B(const Operator& r, const Operator& f, double tol) {
    check_r_f(r, f, "check_split_B");
    const ThreeLeg F(f);
    const Operator rt12 = embed(apply_twist(r, f), {1, 2}, 3);
    const Operator r23 = embed(r, {2, 3}, 3);
    CheckReport report(tol);
    report.add("split21", residual(r23 * F.f12 * F.f13, F.f13 * F.f12 * r23));
    report.add("split22", residual(rt12 * F.f13 * F.f23, F.f23 * F.f13 * rt12));
    return report;
}

PairConstruction pair_from_split_A(const Operator& f, double tol) {
    require_legs(f, 2, "pair_from_split_A");
    const ThreeLeg F(f);
    Operator g = F.f13 * F.f23 * F.f12;
    CheckReport diagnostics(tol);
    diagnostics.add("g_candidates", residual(g, F.f13 * F.f12 * F.f23));
    if (!diagnostics.verdict())
        diagnostics.warn("F12 and F23 do not commute; F13 F23 F12 and F13 F12 F23 differ");
    return {TwistPair(f, std::move(g)), std::move(diagnostics)};
}

PairConstruction pair_from_split_A(const Operator& r, const Operator& f, double tol) {
    PairConstruction out = pair_from_split_A(f, tol);
    const CheckReport split = check_split_A(r, f, tol);
    for (const auto& e : split.entries()) {
        if (e.name == "split13") continue;  // same content as g_candidates
        out.diagnostics.add(e.name, e.value);
    }
    if (!split.verdict()) out.diagnostics.warn("F does not satisfy the regime-A conditions for R");
    return out;
}

PairConstruction pair_from_split_B(const Operator& r, const Operator& f, double tol) {
    CheckReport diagnostics = check_split_B(r, f, tol);
    if (!diagnostics.verdict())
        diagnostics.warn("F does not satisfy the regime-B conditions for R");
    const ThreeLeg F(f);
    return {TwistPair(f, F.f12 * F.f13 * F.f23), std::move(diagnostics)};
}

namespace {

enum class Order { descending, ascending };

// Row i contributes F_{i,j} for j over i+1..n in the given order.
Operator omega_product(const Operator& f, int n, Order order, std::string_view context) {
    require_legs(f, 2, context);
    if (n < 2) throw ShapeError(std::string(context) + ": n must be at least 2");
    Operator acc = Operator::identity(f.site_dim(), n, f.backend());
    for (int i = 1; i < n; ++i) {
        if (order == Order::descending)
            for (int j = n; j > i; --j) acc = acc * embed(f, {i, j}, n);
        else
            for (int j = i + 1; j <= n; ++j) acc = acc * embed(f, {i, j}, n);
    }
    return acc;
}

}  // namespace

Operator omega_split_A(const Operator& f, int n) {
    return omega_product(f, n, Order::descending, "omega_split_A");
}

Operator omega_split_B(const Operator& f, int n) {
    return omega_product(f, n, Order::ascending, "omega_split_B");
}

ComponentMap split_A_components(const Operator& f, int max_total) {
    ComponentMap out(f.site_dim(), f.backend());
    for (int total = 0; total <= max_total; ++total)
        for (int m = 0; m <= total; ++m) out.set(m, total - m, fuse_r(f, m, total - m, max_total));
    return out;
}

ComponentMap split_B_row_components(const Operator& f, int k_max) {
    require_legs(f, 2, "split_B_row_components");
    ComponentMap out(f.site_dim(), f.backend());
    for (int k = 1; k <= k_max; ++k) {
        Operator acc = Operator::identity(f.site_dim(), k + 1, f.backend());
        for (int j = 2; j <= k + 1; ++j) acc = acc * embed(f, {1, j}, k + 1);
        out.set(1, k, std::move(acc));
    }
    return out;
}

}  // namespace ybt
