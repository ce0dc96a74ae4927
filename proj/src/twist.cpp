#include "ybt/twist.hpp"

#include "ybt/subspace.hpp"
#include "ybt/tensor.hpp"
#include "ybt/ybe.hpp"

namespace ybt {

namespace {

const LegPermutation kSwap12{2, 1};

void check_pair_shapes(const Operator& f, const Operator& g) {
    require_legs(f, 2, "twist pair F");
    require_legs(g, 3, "twist pair G");
    if (f.site_dim() != g.site_dim()) throw ShapeError("twist pair: F and G site_dim differ");
    if (f.backend() != g.backend()) throw BackendMismatch("twist pair: F and G backends differ");
}

void check_against_r(const Operator& r, const TwistPair& pair, std::string_view context) {
    require_legs(r, 2, context);
    if (r.site_dim() != pair.site_dim())
        throw ShapeError(std::string(context) + ": R and pair site_dim differ");
    if (r.backend() != pair.backend())
        throw BackendMismatch(std::string(context) + ": R and pair backends differ");
}

}  // namespace

TwistPair::TwistPair(Operator f, Operator g)
    : f_(std::move(f)), g_(std::move(g)), f_inv_(f_), g_inv_(g_) {
    check_pair_shapes(f_, g_);
    f_inv_ = invert(f_);
    g_inv_ = invert(g_);
}

TwistPair::TwistPair(Operator f, Operator g, Operator f_inv, Operator g_inv)
    : f_(std::move(f)), g_(std::move(g)), f_inv_(std::move(f_inv)), g_inv_(std::move(g_inv)) {}

TwistPair TwistPair::identity(int site_dim, Backend backend) {
    Operator f = Operator::identity(site_dim, 2, backend);
    Operator g = Operator::identity(site_dim, 3, backend);
    return TwistPair(f, g, f, g);
}

Operator TwistPair::phi() const { return g_ * embed(f_inv_, {1, 2}, 3); }

Operator TwistPair::psi() const { return g_ * embed(f_inv_, {2, 3}, 3); }

Operator apply_twist(const Operator& r, const Operator& f) {
    require_legs(r, 2, "apply_twist (R)");
    require_legs(f, 2, "apply_twist (F)");
    require_same_shape(r, f, "apply_twist");
    return invert(leg_permute(f, kSwap12)) * r * f;
}

CheckReport check_pair(const Operator& r, const TwistPair& pair, double tol) {
    check_against_r(r, pair, "check_pair");
    CheckReport report(tol);

    const Operator phi = pair.phi();
    const Operator psi = pair.psi();
    const Operator r12 = embed(r, {1, 2}, 3);
    const Operator r23 = embed(r, {2, 3}, 3);

    report.add("ybe_base", ybe_residual(r), false);
    report.add("cond1",
               residual(phi * embed(pair.f(), {1, 2}, 3), psi * embed(pair.f(), {2, 3}, 3)), false,
               "holds by construction: Phi F12 = G = Psi F23");
    report.add("cond2", residual(r12 * phi, leg_permute(phi, {2, 1, 3}) * r12));
    report.add("cond3", residual(r23 * psi, leg_permute(psi, {1, 3, 2}) * r23));
    report.add("aux", aux_identity_residual(r, pair), false);
    report.add("ybe_twisted", ybe_residual(apply_twist(r, pair.f())), false);

    if (!report.passes("ybe_base")) report.warn("base R-matrix does not satisfy YBE");
    return report;
}

Magnitude aux_identity_residual(const Operator& r, const TwistPair& pair) {
    check_against_r(r, pair, "aux_identity_residual");
    const Operator rt = apply_twist(r, pair.f());
    const Operator f12 = embed(pair.f(), {1, 2}, 3);
    const Operator f12_inv = embed(pair.f_inverse(), {1, 2}, 3);
    const Operator psi312_inv = leg_permute(invert(pair.psi()), {3, 1, 2});
    const Operator lhs = f12_inv * psi312_inv * embed(r, {1, 3}, 3) * embed(r, {2, 3}, 3) *
                         pair.phi() * f12;
    return residual(lhs, embed(rt, {1, 3}, 3) * embed(rt, {2, 3}, 3));
}

TwistPair compose_pairs(const TwistPair& first, const TwistPair& second) {
    if (first.site_dim() != second.site_dim() || first.backend() != second.backend())
        throw ShapeError("compose_pairs: pairs act on different spaces");
    return TwistPair(first.f() * second.f(), first.g() * second.g(),
                     second.f_inverse() * first.f_inverse(), second.g_inverse() * first.g_inverse());
}

TwistPair invert_pair(const TwistPair& pair) {
    return TwistPair(pair.f_inv_, pair.g_inv_, pair.f_, pair.g_);
}

TwistPair gauge_transform(const TwistPair& pair, const Operator& u1, const Operator& u2,
                          const Operator& u3) {
    require_legs(u1, 1, "gauge_transform (u1)");
    require_legs(u2, 2, "gauge_transform (u2)");
    require_legs(u3, 3, "gauge_transform (u3)");
    const Operator u11 = kron(u1, u1);
    const Operator u111 = kron(u11, u1);
    // invert() throws NotInvertible for singular gauge elements
    const Operator u1_inv = invert(u1);
    const Operator u2_inv = invert(u2);
    const Operator u3_inv = invert(u3);
    const Operator u11_inv = kron(u1_inv, u1_inv);
    const Operator u111_inv = kron(u11_inv, u1_inv);
    return TwistPair(u2 * pair.f() * u11, u3 * pair.g() * u111,
                     u11_inv * pair.f_inverse() * u2_inv, u111_inv * pair.g_inverse() * u3_inv);
}

std::vector<std::string> gauge_warnings(const Operator& r, const Operator& u2, const Operator& u3,
                                        double tol) {
    std::vector<std::string> warnings;
    if (!is_r_symmetric(r, u2, tol))
        warnings.emplace_back("u2 is not R-symmetric; the twisted matrix may change beyond similarity");
    if (!is_r_symmetric(r, u3, tol)) warnings.emplace_back("u3 is not R-symmetric");
    return warnings;
}

}  // namespace ybt
