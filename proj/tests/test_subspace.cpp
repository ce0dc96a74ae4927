#include "support.hpp"
#include "ybt/catalog.hpp"
#include "ybt/factorized.hpp"
#include "ybt/subspace.hpp"
#include "ybt/tensor.hpp"
#include "ybt/twist.hpp"
#include "ybt/ybe.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ybt;
using namespace ybt::testing;

namespace {

// Commutant of S_n on (C^N)^{(x)n}: one basis matrix per S_n-orbit of index
// word pairs (i, j). Counted by brute force via sorted pair multisets.
std::size_t orbit_count(int N, int n) {
    std::set<std::vector<std::pair<int, int>>> orbits;
    const std::size_t side = operator_side(N, n);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            const auto di = digits(i, N, n), dj = digits(j, N, n);
            std::vector<std::pair<int, int>> w;
            for (int k = 0; k < n; ++k) w.emplace_back(di[static_cast<std::size_t>(k)], dj[static_cast<std::size_t>(k)]);
            std::sort(w.begin(), w.end());
            orbits.insert(w);
        }
    return orbits.size();
}

// Sum over two-row partitions (a, b) of n of (a - b + 1)^2.
std::size_t schur_weyl_sl2(int n) {
    std::size_t total = 0;
    for (int b = 0; 2 * b <= n; ++b) {
        const int a = n - b;
        total += static_cast<std::size_t>((a - b + 1) * (a - b + 1));
    }
    return total;
}

Rational trace(const Operator& x) {
    Rational t = 0;
    for (std::size_t i = 0; i < x.side(); ++i) t += x.rational()[i * x.side() + i];
    return t;
}

}  // namespace

TEST_CASE("oracles agree with each other") {
    CHECK(schur_weyl_sl2(2) == 10);
    CHECK(schur_weyl_sl2(3) == 20);
    CHECK(schur_weyl_sl2(4) == 35);
    for (int n = 1; n <= 4; ++n) CHECK(orbit_count(2, n) == schur_weyl_sl2(n));
}

TEST_CASE("R-symmetric spaces of the identity match Schur-Weyl") {
    const Operator ident = Operator::identity(2, 2);
    for (int n = 2; n <= 4; ++n) {
        const auto basis = r_symmetric_space(ident, n);
        CHECK(basis.dimension() == orbit_count(2, n));
        CHECK(basis.rank() == basis.dimension());
        CHECK(verify_intertwiners(basis, ident, ident));
    }
    CHECK(r_symmetric_space(Operator::identity(3, 2), 2).dimension() == orbit_count(3, 2));
    CHECK(r_symmetric_space(ident, 1).dimension() == 4);
}

TEST_CASE("R-symmetric spaces of the swap are the full space") {
    for (int n = 1; n <= 3; ++n) {
        const auto basis = r_symmetric_space(swap_operator(2), n);
        std::size_t full = 1;
        for (int k = 0; k < 2 * n; ++k) full *= 2;
        CHECK(basis.dimension() == full);
    }
}

TEST_CASE("R-symmetric space of six_vertex") {
    const auto sv = catalog::get("six_vertex");
    const auto basis = r_symmetric_space(sv.r, 3);
    CHECK(verify_intertwiners(basis, sv.r, sv.r));
    for (const auto& z : basis.basis()) CHECK(is_r_symmetric(sv.r, z));
    // the braid matrix itself and the identity are R-symmetric
    const auto b2 = r_symmetric_space(sv.r, 2);
    CHECK(b2.contains(braid_matrix(sv.r)));
    CHECK(b2.contains(Operator::identity(2, 2)));
    Rng rng(1);
    CHECK_FALSE(b2.contains(random_invertible(rng, 2, 2)));
}

TEST_CASE("intertwiner spaces") {
    for (const auto& name : catalog::list()) {
        const Operator r = catalog::get(name).r;
        const auto same = intertwiner_space(r, r, 2);
        const auto sym = r_symmetric_space(r, 2);
        CHECK(same.dimension() == sym.dimension());
        for (const auto& z : sym.basis()) CHECK(same.contains(z));
    }
    const auto j = catalog::get("jordanian");
    const Operator rt = apply_twist(j.r, j.twist->f());
    const auto sp = intertwiner_space(j.r, rt, 3);
    CHECK(sp.contains(omega_split_B(j.twist->f(), 3)));
    CHECK(sp.contains(j.twist->g()));
    CHECK(verify_intertwiners(sp, j.r, rt));
    CHECK_THROWS_AS(intertwiner_space(j.r, rt, 1), ShapeError);
    CHECK_THROWS_AS(intertwiner_space(j.r, rt, 7), CapExceeded);
    Rng rng(3);
    CHECK_THROWS_AS(r_symmetric_space(random_complex(rng, 2, 2), 2), BackendMismatch);
}

TEST_CASE("braid_intertwine_residual") {
    Rng rng(53);
    const Operator r = catalog::six_vertex(Rational(3, 2));
    for (int t = 0; t < 100; ++t) {
        const Operator f = random_invertible(rng, 2, 2);
        CHECK(all_pass(braid_intertwine_residual(r, apply_twist(r, f), f)));
    }
    for (const auto& name : catalog::list()) {
        const auto e = catalog::get(name);
        if (!e.twist) continue;
        const auto rep = braid_intertwine_residual(e.r, apply_twist(e.r, e.twist->f()), e.twist->g());
        CHECK(rep.entries().size() == 2);
        CHECK(all_pass(rep));
    }
    const auto sv = catalog::get("six_vertex");
    const auto bad = braid_intertwine_residual(sv.r, apply_twist(sv.r, sv.twist->f()), Operator::identity(2, 3));
    CHECK_FALSE(bad.verdict());
}

TEST_CASE("certificates") {
    const SubspaceBasis just_i(2, 2, {Operator::identity(2, 2)});
    const auto c = invertible_certificate(just_i, 5, 1);
    REQUIRE(c.certificate);
    CHECK(c.certificate->coefficients == std::vector<Rational>{1});
    CHECK(c.certificate->attempts == 1);

    // strictly upper-triangular span: nilpotent, never invertible
    std::vector<Operator> upper;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            Operator::RationalData d(16);
            d[i * 4 + j] = 1;
            upper.emplace_back(2, 2, std::move(d));
        }
    const auto none = invertible_certificate(SubspaceBasis(2, 2, upper), 40, 9);
    CHECK_FALSE(none.certificate);
    CHECK(none.attempts == 40);
    CHECK_FALSE(invertible_certificate(SubspaceBasis(2, 2, {}), 10, 0).certificate);

    // identity vs swap at n = 2: braid matrices P and I have different traces,
    // so no invertible intertwiner exists and the search must come back empty
    const Operator ident = Operator::identity(2, 2), p = swap_operator(2);
    CHECK(trace(braid_matrix(ident)) != trace(braid_matrix(p)));
    const auto sp = intertwiner_space(ident, p, 2);
    CHECK(sp.dimension() > 0);
    const auto s = invertible_certificate(sp, 50, 7);
    CHECK_FALSE(s.certificate);
    CHECK(s.attempts == 50);

    // every twist pipeline admits a certificate quickly, at n = 2 and 3
    for (const auto& name : catalog::list()) {
        const auto e = catalog::get(name);
        if (!e.twist) continue;
        const Operator rt = apply_twist(e.r, e.twist->f());
        for (int n = 2; n <= 3; ++n) {
            const auto found = invertible_certificate(intertwiner_space(e.r, rt, n), 50, 7);
            REQUIRE(found.certificate);
            CHECK(found.certificate->attempts <= 5);
            CHECK(is_invertible(found.certificate->element));
            CHECK(all_pass(braid_intertwine_residual(e.r, rt, found.certificate->element)));
        }
    }
}

TEST_CASE("certificate search is reproducible per seed") {
    const auto sp = intertwiner_space(Operator::identity(2, 2), swap_operator(2), 2);
    const auto a = invertible_certificate(r_symmetric_space(catalog::six_vertex(Rational(3, 2)), 2), 50, 123);
    const auto b = invertible_certificate(r_symmetric_space(catalog::six_vertex(Rational(3, 2)), 2), 50, 123);
    REQUIRE(a.certificate);
    REQUIRE(b.certificate);
    CHECK(a.certificate->coefficients == b.certificate->coefficients);
    CHECK(invertible_certificate(sp, 20, 5).attempts == invertible_certificate(sp, 20, 5).attempts);
}

TEST_CASE("SubspaceBasis invariants") {
    CHECK_THROWS_AS(SubspaceBasis(2, 1, {Operator::identity(2, 1), Operator::identity(2, 1).scaled(Scalar(Rational(2)))}),
                    Error);
    CHECK_THROWS_AS(SubspaceBasis(2, 1, {Operator::identity(2, 2)}), ShapeError);
    const SubspaceBasis b(2, 1, {Operator::identity(2, 1)});
    CHECK(b.combination({Rational(3)}) == Operator::identity(2, 1).scaled(Scalar(Rational(3))));
}
