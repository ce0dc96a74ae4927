#pragma once

#include "ybt/operator.hpp"

#include <vector>

namespace ybt {

/// Two-leg R-matrix with an advisory "checked" flag. Consumers never rely on
/// the flag; each operation validates its own inputs.
class RMatrix {
public:
    explicit RMatrix(Operator op);

    /// Runs the YBE check and records the outcome.
    static RMatrix verify(Operator op, double tol = kDefaultTolerance);

    const Operator& op() const noexcept { return op_; }
    bool verified() const noexcept { return verified_; }

private:
    Operator op_;
    bool verified_ = false;
};

/// R12 R13 R23 - R23 R13 R12 on three legs.
Magnitude ybe_residual(const Operator& r);

/// P * r.
Operator braid_matrix(const Operator& r);

/// B1 B2 B1 - B2 B1 B2 for a two-leg braid matrix B.
Magnitude braid_relation_residual(const Operator& braid);

/// R^{m,n}_{12} R^{m,k}_{13} R^{n,k}_{23} - R^{n,k}_{23} R^{m,k}_{13} R^{m,n}_{12}
/// on m+n+k legs; block subscripts name the three consecutive leg groups.
Magnitude mixed_ybe_residual(const Operator& r_mn, const Operator& r_mk, const Operator& r_nk,
                             int m, int n, int k);

/// R12 T13 T23 - T23 T13 R12 with T13 = embed(t, {1,3}, 3).
Magnitude rtt_residual(const Operator& r, const Operator& t);

/// Legs first..first+count-1 (1-based).
std::vector<int> leg_range(int first, int count);

}  // namespace ybt
