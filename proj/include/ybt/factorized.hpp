#pragma once

#include "ybt/fusion.hpp"
#include "ybt/operator.hpp"
#include "ybt/report.hpp"
#include "ybt/twist.hpp"

namespace ybt {

// Twists whose universal element factorizes over the coproduct. Two regimes:
//
//   A:  R23 F13 F12 = F12 F13 R23,  R12 F23 F13 = F13 F23 R12,  F12 F23 = F23 F12
//   B:  R23 F12 F13 = F13 F12 R23,  Rt12 F13 F23 = F23 F13 Rt12,  Rt = F21^{-1} R F
//
// Each regime manufactures a full twisting pair and closed-form global
// intertwiners Omega^n from F alone.

/// Residuals split11, split12, split13.
CheckReport check_split_A(const Operator& r, const Operator& f, double tol = kDefaultTolerance);

/// Residuals split21, split22.
CheckReport check_split_B(const Operator& r, const Operator& f, double tol = kDefaultTolerance);

/// A pair built from F, with diagnostics. Construction never refuses on failed
/// factorization conditions; they show up in `diagnostics` instead.
struct PairConstruction {
    TwistPair pair;
    CheckReport diagnostics;
};

/// G = F13 F23 F12. Diagnostics hold "g_candidates", the difference to F13 F12 F23.
PairConstruction pair_from_split_A(const Operator& f, double tol = kDefaultTolerance);
/// As above, plus the check_split_A residuals against r.
PairConstruction pair_from_split_A(const Operator& r, const Operator& f,
                                   double tol = kDefaultTolerance);

/// G = F12 F13 F23, plus the check_split_B residuals against r.
PairConstruction pair_from_split_B(const Operator& r, const Operator& f,
                                   double tol = kDefaultTolerance);

/// (F_{1n} ... F_{12}) (F_{2n} ... F_{23}) ... (F_{n-1,n}).
Operator omega_split_A(const Operator& f, int n);

/// (F_{12} ... F_{1n}) (F_{23} ... F_{2n}) ... (F_{n-1,n}).
Operator omega_split_B(const Operator& f, int n);

/// Regime-A components F^{m,n}: the fused product of F in the same order as R^{m,n}.
ComponentMap split_A_components(const Operator& f, int max_total);

/// Regime-B first-row components F^{1,k} = F_{12} F_{13} ... F_{1,k+1}, 1 <= k <= k_max.
ComponentMap split_B_row_components(const Operator& f, int k_max);

}  // namespace ybt
