#include <gtest/gtest.h>

#include <random>

#include "ncsys/ncs.hpp"
#include "test_util.hpp"

using namespace ncsys;
using ncsys::testing::poly;
using ncsys::testing::z;

namespace {

Automorphism quadratic(const Ring& r, int alpha = 1) { return Automorphism(alpha, {poly(r, {{1, {0, 0}, 1}})}); }

DiffOp der(const SeriesVector& v) { return DiffOp(Derivation(v)); }

} // namespace

TEST(BuildOmega, Identity)
{
    Ring r(2, false, 4, 3);
    const NcsSystem sys = build_omega(Automorphism::identity(r, 1));
    EXPECT_TRUE(op_equal(sys.f, TDiffOp::identity(r)));
    EXPECT_TRUE(op_equal(sys.g, TDiffOp::identity(r)));
    EXPECT_TRUE(sys.d.total().is_zero());
    EXPECT_TRUE(sys.h.total().is_zero());
    EXPECT_TRUE(sys.m.total().is_zero());
    EXPECT_TRUE(all_passed(verify_ncs(sys)));
}

TEST(BuildOmega, QuadraticFirstCoefficients)
{
    Ring r(1, true, 5, 3);
    const NcsSystem sys = build_omega(quadratic(r));
    const DiffOp zz = der({z(r) * z(r)});
    EXPECT_TRUE(op_equal(sys.s_op(1), zz));
    EXPECT_TRUE(op_equal(sys.lambda_op(1), zz));
    // f(-t) z = z - t z²
    EXPECT_EQ(apply_op(sys.f.negate_t(), z(r)), quadratic(r).F()[0]);
    EXPECT_EQ(sys.h.t_precision(), 2);
}

TEST(BuildOmega, RoutesAgree)
{
    Ring r(2, false, 4, 3);
    std::mt19937_64 rng(2);
    const Automorphism F = random_automorphism(r, 1, Profile::general, rng);
    const NcsSystem a = build_omega(F, BplusRoute::auxiliary);
    const NcsSystem b = build_omega(F, BplusRoute::recursive);
    EXPECT_TRUE(op_equal(a.f, b.f));
    EXPECT_TRUE(op_equal(a.g, b.g));
}

class NcsProperties : public ::testing::TestWithParam<int> {};

TEST_P(NcsProperties, AxiomsHold)
{
    const int alpha = GetParam() % 2 + 1;
    Ring r(GetParam() % 3 + 1, GetParam() % 4 < 2, 6, 4);
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(GetParam()));
    const NcsSystem sys = build_omega(random_automorphism(r, alpha, Profile::general, rng));
    for (const auto& rep : verify_ncs(sys)) {
        EXPECT_TRUE(rep.passed) << rep.check << " " << rep.counterexample;
    }
}

TEST_P(NcsProperties, CorrespondenceAndHomomorphism)
{
    Ring r(GetParam() % 2 + 1, GetParam() % 4 >= 2, 5, 4);
    std::mt19937_64 rng(1100 + static_cast<std::uint64_t>(GetParam()));
    const Automorphism F = random_automorphism(r, GetParam() % 2 + 1, Profile::general, rng);
    const NcsSystem sys = build_omega(F);
    const NcsfFamilies fam = solve_pi(4);
    for (const auto& rep : correspondence_check(sys, fam, 4)) {
        EXPECT_TRUE(rep.passed) << rep.check << " " << rep.counterexample;
    }
    for (int m = 1; m <= 4; ++m) {
        EXPECT_TRUE(op_equal(specialize(NSymElem::lambda(4, m), sys), sys.lambda_op(m)));
        EXPECT_TRUE(op_equal(specialize(omega_lambda(fam.Psi(m)), sys), sys.xi_op(m)));
    }
    EXPECT_TRUE(op_equal(specialize(NSymElem::one(4), sys), DiffOp::identity(r)));
    const NSymElem P = NSymElem::word(4, {1}) - NSymElem::word(4, {2}, 3);
    const NSymElem Q = NSymElem::word(4, {1, 1}) + NSymElem::word(4, {2});
    EXPECT_TRUE(op_equal(specialize(P * Q, sys), specialize(P, sys) * specialize(Q, sys)));
    EXPECT_THROW(specialize(NSymElem::word(6, {5}), sys), PreconditionError);
}

TEST_P(NcsProperties, GroupHomomorphism)
{
    Ring r(GetParam() % 2 + 1, GetParam() % 3 == 0, 6, 4);
    std::mt19937_64 rng(1200 + static_cast<std::uint64_t>(GetParam()));
    const Automorphism U = random_automorphism(r, 1, Profile::general, rng);
    const Automorphism V = random_automorphism(r, 1, Profile::general, rng);
    for (const auto& rep : group_hom_check(U, V)) {
        EXPECT_TRUE(rep.passed) << rep.check << " " << rep.counterexample;
    }
    EXPECT_TRUE(op_equal(build_g(compose(U, Automorphism::identity(r, 1))), build_g(U)));
    EXPECT_TRUE(op_equal(build_g(U) * build_g(invert(U)), TDiffOp::identity(r)));
}

TEST_P(NcsProperties, HopfActionChecks)
{
    Ring r(GetParam() % 3 + 1, GetParam() % 2 == 0, 6, 4);
    std::mt19937_64 rng(1300 + static_cast<std::uint64_t>(GetParam()));
    const NcsSystem sys = build_omega(random_automorphism(r, 1, Profile::general, rng));
    for (const auto& rep : action_hopf_checks(sys, rng, 3)) {
        EXPECT_TRUE(rep.passed) << rep.check << " " << rep.counterexample;
    }
    const TruncSeries u = random_series(r, 3, 3, rng);
    const TruncSeries v = random_series(r, 3, 3, rng);
    EXPECT_EQ(sys.s_op(0).apply(u * v), u * v);
}

TEST_P(NcsProperties, GradingEquivalence)
{
    Ring r(GetParam() % 2 + 1, GetParam() % 3 == 0, 6, 4);
    std::mt19937_64 rng(1400 + static_cast<std::uint64_t>(GetParam()));
    const Automorphism G = random_automorphism(r, 2, Profile::graded, rng);
    EXPECT_TRUE(graded_check(G));
    const Automorphism F = random_automorphism(r, 2, Profile::general, rng);
    EXPECT_EQ(graded_check(F), is_graded_form(F));
}

INSTANTIATE_TEST_SUITE_P(Random, NcsProperties, ::testing::Range(0, 8));

TEST(VerifyNcs, TamperedHFailsUE3)
{
    Ring r(2, false, 5, 3);
    std::mt19937_64 rng(5);
    NcsSystem sys = build_omega(random_automorphism(r, 1, Profile::general, rng));
    sys.h = sys.h + TDiffOp::from_derivation(Derivation(identity_vector(r)));
    const auto reports = verify_ncs(sys);
    for (const auto& rep : reports) {
        if (rep.check.rfind("UE-3", 0) == 0) {
            EXPECT_FALSE(rep.passed);
            EXPECT_NE(rep.counterexample.find("on "), std::string::npos);
        } else {
            EXPECT_TRUE(rep.passed) << rep.check;
        }
    }
}

TEST(Specialize, Families)
{
    Ring r(2, false, 5, 3);
    std::mt19937_64 rng(6);
    const NcsSystem sys = build_omega(random_automorphism(r, 2, Profile::general, rng));
    const NcsfFamilies fam = solve_pi(3);
    for (int m = 1; m <= 3; ++m) {
        EXPECT_TRUE(op_equal(specialize(fam.S(m), sys), sys.s_op(m)));
        EXPECT_TRUE(op_equal(specialize(fam.Phi(m), sys), sys.phi_op(m)));
        EXPECT_TRUE(op_equal(specialize(fam.Psi(m), sys), sys.psi_op(m)));
        EXPECT_TRUE(op_equal(specialize(fam.Xi(m), sys), sys.xi_op(m)));
    }
}

TEST(CmSequence, Examples)
{
    Ring r(1, true, 8, 0);
    const auto C = cm_sequence({z(r) * z(r)}, 5);
    for (int m = 1; m <= 5; ++m) {
        EXPECT_EQ(C[static_cast<std::size_t>(m - 1)][0],
                  TruncSeries::monomial(r, 0, Word(static_cast<std::size_t>(m + 1), 0), Rational(1 << (m - 1))));
    }
    Ring r2(2, true, 6, 0);
    const SeriesVector H{TruncSeries(r2), z(r2, 0) * z(r2, 0)};
    const auto C2 = cm_sequence(H, 4);
    EXPECT_EQ(C2[0], H);
    for (int m = 2; m <= 4; ++m) {
        EXPECT_EQ(C2[static_cast<std::size_t>(m - 1)], zero_vector(r2));
    }
    Ring rt(1, true, 4, 2);
    EXPECT_THROW(cm_sequence({poly(rt, {{1, {0, 0}, 1}})}, 2), PreconditionError);
}

TEST(Jacobian, Examples)
{
    Ring r(1, true, 4, 0);
    const auto J = jacobian({z(r) * z(r)});
    EXPECT_EQ(J[0][0], poly(r, {{0, {0}, 2}}));
    Ring r2(2, true, 4, 0);
    const auto J2 = jacobian({TruncSeries(r2), z(r2, 0) * z(r2, 0)});
    EXPECT_TRUE(J2[0][0].is_zero());
    EXPECT_TRUE(J2[0][1].is_zero());
    EXPECT_EQ(J2[1][0], poly(r2, {{0, {0}, 2}}));
    EXPECT_TRUE(J2[1][1].is_zero());
    EXPECT_THROW(jacobian({TruncSeries(Ring(2, false, 3, 0)), TruncSeries(Ring(2, false, 3, 0))}), PreconditionError);
}

TEST(CmSequence, JacobianRouteAndBuildOmega)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 4; ++trial) {
        Ring r(trial % 2 + 1, true, 7, 5);
        const Automorphism F = random_automorphism(r, 2, Profile::linear_in_t, rng);
        SeriesVector H;
        for (const auto& c : F.H()) {
            H.push_back(c.t_slice(1));
        }
        const auto C = cm_sequence(H, 5);
        const auto J = jacobian(H);
        SeriesVector v = H;
        for (int m = 1; m <= 5; ++m) {
            EXPECT_EQ(C[static_cast<std::size_t>(m - 1)], v);
            SeriesVector next;
            for (std::size_t i = 0; i < v.size(); ++i) {
                TruncSeries s(r);
                for (std::size_t j = 0; j < v.size(); ++j) {
                    s += J[i][j] * v[j];
                }
                next.push_back(s);
            }
            v = next;
        }
        const NcsSystem sys = build_omega(F);
        const SpecialPsiXi special = psi_xi_special(F, 4);
        for (int m = 1; m <= 4; ++m) {
            EXPECT_TRUE(op_equal(special.psi[static_cast<std::size_t>(m - 1)], sys.psi_op(m)));
            EXPECT_TRUE(op_equal(special.xi[static_cast<std::size_t>(m - 1)], sys.xi_op(m)));
        }
    }
    Ring r(2, true, 5, 3);
    EXPECT_THROW(psi_xi_special(Automorphism(1, {poly(r, {{2, {0}, 1}}), TruncSeries(r)}), 2), PreconditionError);
}

TEST(GradedCheck, Examples)
{
    Ring r(1, true, 6, 3);
    EXPECT_TRUE(graded_check(quadratic(r, 2)));
    const Automorphism cubic(2, {poly(r, {{1, {0, 0, 0}, 1}})});
    EXPECT_FALSE(graded_check(cubic));
    EXPECT_FALSE(is_graded_form(cubic));
    EXPECT_THROW(graded_check(quadratic(r, 1)), PreconditionError);
}

TEST(HopfAction, LeibnizOnZ)
{
    Ring r(1, true, 5, 3);
    const NcsSystem sys = build_omega(quadratic(r));
    const DiffOp psi1 = sys.psi_op(1);
    EXPECT_EQ(psi1.apply(z(r) * z(r)), psi1.apply(z(r)) * z(r) + z(r) * psi1.apply(z(r)));
}

TEST(Separate, Examples)
{
    SeparationBudget budget;
    budget.attempts = 20;
    const SeparationResult res = separate(NSymElem::lambda(1, 1), budget);
    ASSERT_TRUE(res.witness.has_value());
    const auto& w = *res.witness;
    const DiffOp image = specialize(NSymElem::lambda(1, 1), build_f(w.F));
    EXPECT_EQ(image.apply(TruncSeries::monomial(w.F.ring(), 0, w.u)), w.value);
    EXPECT_FALSE(w.value.is_zero());
    EXPECT_THROW(separate(NSymElem(2), budget), PreconditionError);

    Ring r(1, true, 3, 1);
    const NcsSystem sys = build_omega(quadratic(r, 2));
    EXPECT_EQ(specialize(NSymElem::lambda(1, 1), sys).apply(z(r)), z(r) * z(r));
}
