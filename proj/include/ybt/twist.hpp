#pragma once

#include "ybt/operator.hpp"
#include "ybt/report.hpp"

#include <string>
#include <vector>

namespace ybt {

/// Twisting datum (F, G): F on two legs, G on three, both invertible.
///
/// The derived three-tensors are Phi = G F12^{-1} and Psi = G F23^{-1}, so
/// Phi F12 = G = Psi F23 holds by construction and only the two
/// R-exchange conditions need checking.
class TwistPair {
public:
    /// Throws ShapeError on bad shapes and NotInvertible when f or g is singular.
    TwistPair(Operator f, Operator g);

    static TwistPair identity(int site_dim, Backend backend = Backend::rational);

    const Operator& f() const noexcept { return f_; }
    const Operator& g() const noexcept { return g_; }
    const Operator& f_inverse() const noexcept { return f_inv_; }
    const Operator& g_inverse() const noexcept { return g_inv_; }

    int site_dim() const noexcept { return f_.site_dim(); }
    Backend backend() const noexcept { return f_.backend(); }

    Operator phi() const;
    Operator psi() const;

    bool operator==(const TwistPair& o) const { return f_ == o.f_ && g_ == o.g_; }

private:
    TwistPair(Operator f, Operator g, Operator f_inv, Operator g_inv);

    Operator f_;
    Operator g_;
    Operator f_inv_;
    Operator g_inv_;

    friend TwistPair invert_pair(const TwistPair& pair);
    friend TwistPair compose_pairs(const TwistPair& first, const TwistPair& second);
    friend TwistPair gauge_transform(const TwistPair& pair, const Operator& u1, const Operator& u2,
                                     const Operator& u3);
};

/// F21^{-1} R F.
Operator apply_twist(const Operator& r, const Operator& f);

/// Residuals, in order: ybe_base, cond1, cond2, cond3, aux, ybe_twisted.
/// Only cond2 (R12 Phi123 = Phi213 R12) and cond3 (R23 Psi123 = Psi132 R23)
/// gate the verdict; a base R failing YBE is reported, not rejected.
CheckReport check_pair(const Operator& r, const TwistPair& pair, double tol = kDefaultTolerance);

/// F12^{-1} Psi312^{-1} R13 R23 Phi123 F12 - Rt13 Rt23 with Rt the twisted matrix.
Magnitude aux_identity_residual(const Operator& r, const TwistPair& pair);

/// (F F', G G'); `second` is read relative to the matrix twisted by `first`.
TwistPair compose_pairs(const TwistPair& first, const TwistPair& second);

/// (F^{-1}, G^{-1}).
TwistPair invert_pair(const TwistPair& pair);

/// (u2 F (u1 x u1), u3 G (u1 x u1 x u1)).
TwistPair gauge_transform(const TwistPair& pair, const Operator& u1, const Operator& u2,
                          const Operator& u3);

/// Warnings for gauge elements that are not R-symmetric. The similarity
/// post-condition on the twisted matrix needs u2 R-symmetric only.
std::vector<std::string> gauge_warnings(const Operator& r, const Operator& u2, const Operator& u3,
                                        double tol = kDefaultTolerance);

}  // namespace ybt
