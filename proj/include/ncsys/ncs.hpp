#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncsys/autgroup.hpp"
#include "ncsys/diffop.hpp"
#include "ncsys/nsym.hpp"

namespace ncsys {

// Ω_{F_t} = (f, g, d, h, m). Coefficient conventions:
//   f(t) = Σ t^k λ_k,  g(t) = Σ t^k s_k,  d(t) = Σ t^k φ_k / k,
//   h(t) = Σ t^{k-1} ψ_k,  m(t) = Σ t^{k-1} ξ_k.
// h and m are exact through t^{N_t - 1} only.
struct NcsSystem {
    TDiffOp f;
    TDiffOp g;
    TDiffOp d;
    TDiffOp h;
    TDiffOp m;

    const Ring& ring() const { return f.ring(); }
    DiffOp lambda_op(int k) const { return f.coefficient(k); }
    DiffOp s_op(int k) const { return g.coefficient(k); }
    DiffOp phi_op(int k) const { return Rational(k) * d.coefficient(k); }
    DiffOp psi_op(int k) const { return h.coefficient(k - 1); }
    DiffOp xi_op(int k) const { return m.coefficient(k - 1); }
    // Image of the named NCSF family ("Lambda", "S", "Phi", "Psi", "Xi").
    DiffOp family_op(const std::string& name, int k) const;
};

// Σ_k c^k/k! B₊(δ, ..., δ) with k copies of δ, for k <= N_t. With
// δ = [H_t ∂/∂z] and c = -1 this is the operator u ↦ u(F_t) = f(-t).
TDiffOp taylor_operator(const Derivation& delta, const Rational& c, BplusRoute route);

// f(t) alone; cheaper than the full system.
TDiffOp build_f(const Automorphism& F, BplusRoute route = BplusRoute::auxiliary);
// g(t) alone.
TDiffOp build_g(const Automorphism& F, BplusRoute route = BplusRoute::auxiliary);
NcsSystem build_omega(const Automorphism& F, BplusRoute route = BplusRoute::auxiliary);

struct Report {
    std::string check;
    bool passed = true;
    std::string counterexample;
};

bool all_passed(const std::vector<Report>& reports);

// Renders the first monomial on which two operators differ, with both images.
std::string describe_difference(const DiffOp& lhs, const DiffOp& rhs, MonoIndex m);
Report compare_ops(const std::string& check, const DiffOp& lhs, const DiffOp& rhs);
Report compare_ops(const std::string& check, const TDiffOp& lhs, const TDiffOp& rhs);

// UE-0 .. UE-4.
std::vector<Report> verify_ncs(const NcsSystem& sys);

// Λ_m ↦ λ_m extended multiplicatively; needs weight(P) <= N_t.
DiffOp specialize(const NSymElem& P, const NcsSystem& sys);
DiffOp specialize(const NSymElem& P, const TDiffOp& f);

// Images of S_m, Ψ_m, Φ_m, Ξ_m for m <= max_m against the system's coefficients.
std::vector<Report> correspondence_check(const NcsSystem& sys, const NcsfFamilies& fam, int max_m);

// C_1 = H, C_m = [C_{m-1} ∂/∂z] H.
std::vector<SeriesVector> cm_sequence(const SeriesVector& H, int count);

// F_t = z - tH with H t-free.
bool is_linear_in_t(const Automorphism& F);
struct SpecialPsiXi {
    std::vector<DiffOp> psi; // psi[k-1] = [C_k ∂/∂z]
    std::vector<DiffOp> xi;  // xi[k-1] = [N_[k] ∂/∂z]
};
SpecialPsiXi psi_xi_special(const Automorphism& F, int count);

// (i, j) entry ∂H_i/∂z_j; commutative rings only.
std::vector<std::vector<TruncSeries>> jacobian(const SeriesVector& H);

// g^{U∘V} = g^U g^V and g^{U^{-1}} = (g^U)^{-1}.
std::vector<Report> group_hom_check(const Automorphism& U, const Automorphism& V);

// Every λ_m sends z-homogeneous monomials of degree d to degree m + d. Needs alpha >= 2.
bool graded_check(const Automorphism& F);

// Divided-powers action of the s- and λ-families and Leibniz for ψ, ξ, φ,
// on `samples` random pairs (u, v).
std::vector<Report> action_hopf_checks(const NcsSystem& sys, std::mt19937_64& rng, int samples);

// Sparse random t-free series of z-degree in [1, max_degree].
TruncSeries random_series(const Ring& ring, int max_degree, int max_terms, std::mt19937_64& rng);

struct SeparationBudget {
    int max_n = 3;
    int attempts = 200;
    std::uint64_t seed = 20240531;
    bool commutative = false;
};

struct SeparationWitness {
    Automorphism F;
    Word u;
    TruncSeries value;
};

struct SeparationResult {
    std::optional<SeparationWitness> witness;
    int attempts_used = 0;
    int max_n_tried = 0;
};

// Randomized search for F with specialize(P, F) != 0; alpha = 2,
// N_t = weight(P), N_z = 2 weight(P) + 1. Attempts count per n.
SeparationResult separate(const NSymElem& P, const SeparationBudget& budget);

} // namespace ncsys
