// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "ncsys/ncs.hpp"

using namespace ncsys;

namespace {

constexpr std::uint64_t kSeed = 20240531;

struct Outcome {
    bool passed = true;
    std::string detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
    void require(const std::vector<Report>& reports, const std::string& where)
    {
        for (const auto& r : reports) {
            require(r.passed, where + ": " + r.check + " " + r.counterexample);
        }
    }
};

struct Config {
    bool commutative;
    int alpha;
    std::string name() const
    {
        return std::string(commutative ? "comm" : "noncomm") + "/alpha=" + std::to_string(alpha);
    }
};

const std::vector<Config> kConfigs{{true, 1}, {true, 2}, {false, 1}, {false, 2}};

// n cycles through 1..3 across trials.
Ring trial_ring(const Config& c, int trial, int nz, int nt) { return Ring(trial % 3 + 1, c.commutative, nz, nt); }

Outcome catalan()
{
    Outcome o;
    Ring r(1, true, 9, 8);
    const Automorphism F(1, {TruncSeries::monomial(r, 1, {0, 0})});
    const SeriesVector M = inverse_shift(F);
    // Oracle: G = z + tG² by plain iteration on series.
    TruncSeries G = TruncSeries::variable(r, 0);
    for (int pass = 0; pass < 9; ++pass) {
        G = TruncSeries::variable(r, 0) + (G * G).shift_t(1);
    }
    o.require(M[0] == G - TruncSeries::variable(r, 0), "M differs from the quadratic fixed point");
    const long expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 1; k <= 8; ++k) {
        o.require(M[0].coeff(k, Word(static_cast<std::size_t>(k + 1), 0)) == expected[k - 1],
                  "coefficient of t^" + std::to_string(k));
    }
    o.require(compose(F, invert(F)) == Automorphism::identity(r, 1), "F∘F^-1 != id");
    return o;
}

Outcome ncs_axioms()
{
    Outcome o;
    for (const auto& c : kConfigs) {
        for (int trial = 0; trial < 20; ++trial) {
            const Ring r = trial_ring(c, trial, 6, 4);
            std::mt19937_64 rng(kSeed + 1000 * static_cast<std::uint64_t>(c.alpha) + 100 * c.commutative +
                                static_cast<std::uint64_t>(trial));
            const Automorphism F = random_automorphism(r, c.alpha, Profile::general, rng);
            o.require(verify_ncs(build_omega(F)), c.name() + " trial " + std::to_string(trial));
        }
    }
    return o;
}

Outcome correspondence()
{
    Outcome o;
    const NcsfFamilies fam = solve_pi(4);
    for (const auto& c : kConfigs) {
        for (int trial = 0; trial < 10; ++trial) {
            const Ring r = trial_ring(c, trial, 6, 4);
            std::mt19937_64 rng(kSeed + 2000 + 10 * static_cast<std::uint64_t>(c.alpha) + 5 * c.commutative +
                                static_cast<std::uint64_t>(trial) * 31);
            const NcsSystem sys = build_omega(random_automorphism(r, c.alpha, Profile::general, rng));
            o.require(correspondence_check(sys, fam, 4), c.name() + " trial " + std::to_string(trial));
        }
    }
    return o;
}

// p_m in the e-basis from Newton's identities, on plain maps.
std::vector<std::map<std::vector<int>, Rational>> newton(int count)
{
    std::vector<std::map<std::vector<int>, Rational>> p(static_cast<std::size_t>(count) + 1);
    for (int m = 1; m <= count; ++m) {
        auto& acc = p[static_cast<std::size_t>(m)];
        for (int i = 1; i < m; ++i) {
            for (const auto& [mono, c] : p[static_cast<std::size_t>(m - i)]) {
                std::vector<int> x = mono;
                x.push_back(i);
                std::sort(x.begin(), x.end());
                acc[x] += (i % 2 == 1 ? c : -c);
            }
        }
        acc[{m}] += Rational(m % 2 == 1 ? m : -m);
        std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
    }
    return p;
}

Outcome ncsf_tables()
{
    Outcome o;
    const NcsfFamilies fam = solve_pi(6);
    for (const auto& f : pi_identity_failures(fam)) {
        o.require(false, f);
    }
    const auto p = newton(6);
    for (int m = 1; m <= 6; ++m) {
        const ClassicalSymPoly got = abelianize(fam.Psi(m));
        std::map<std::vector<int>, Rational> as_map(got.terms.begin(), got.terms.end());
        o.require(as_map == p[static_cast<std::size_t>(m)], "abelianize(Psi_" + std::to_string(m) + ") != p_m");
    }
    return o;
}

Outcome omega_relations()
{
    Outcome o;
    const NcsfFamilies fam = solve_pi(6);
    for (int m = 1; m <= 6; ++m) {
        const std::string k = std::to_string(m);
        o.require(omega_lambda(fam.S(m)) == fam.S(m), "ω(S_" + k + ")");
        o.require(omega_lambda(fam.Phi(m)) == fam.Phi(m), "ω(Φ_" + k + ")");
        o.require(omega_lambda(fam.Psi(m)) == fam.Xi(m), "ω(Ψ_" + k + ")");
    }
    for (int trial = 0; trial < 5; ++trial) {
        const Ring r(trial % 2 + 1, trial % 3 == 0, 7, 6);
        std::mt19937_64 rng(kSeed + 5000 + static_cast<std::uint64_t>(trial));
        const NcsSystem sys = build_omega(random_automorphism(r, 2, Profile::general, rng));
        for (int m = 1; m <= 6; ++m) {
            const Report rep = compare_ops("S(ω(Ψ_" + std::to_string(m) + ")) = ξ",
                                           specialize(omega_lambda(fam.Psi(m)), sys), sys.xi_op(m));
            o.require(rep.passed, "trial " + std::to_string(trial) + " " + rep.check + " " + rep.counterexample);
        }
    }
    return o;
}

Outcome dlog_bijection()
{
    Outcome o;
    for (const auto& c : kConfigs) {
        for (int trial = 0; trial < 20; ++trial) {
            const Ring r = trial_ring(c, trial, 6, 4);
            std::mt19937_64 rng(kSeed + 6000 + 10 * static_cast<std::uint64_t>(c.alpha) + 5 * c.commutative +
                                static_cast<std::uint64_t>(trial) * 17);
            const Automorphism F = random_automorphism(r, c.alpha, Profile::general, rng);
            o.require(exp_derivation(dlog(F)) == F, c.name() + " exp∘dlog trial " + std::to_string(trial));
            const DLog d(c.alpha, random_automorphism(r, c.alpha, Profile::general, rng).H());
            o.require(dlog(exp_derivation(d)) == d, c.name() + " dlog∘exp trial " + std::to_string(trial));
        }
    }
    return o;
}

Outcome group_iso()
{
    Outcome o;
    for (int trial = 0; trial < 10; ++trial) {
        const Config& c = kConfigs[static_cast<std::size_t>(trial) % kConfigs.size()];
        const Ring r = trial_ring(c, trial, 6, 4);
        std::mt19937_64 rng(kSeed + 7000 + static_cast<std::uint64_t>(trial));
        const Automorphism U = random_automorphism(r, c.alpha, Profile::general, rng);
        const Automorphism V = random_automorphism(r, c.alpha, Profile::general, rng);
        o.require(group_hom_check(U, V), c.name() + " pair " + std::to_string(trial));
        // Substitution oracle: g^{U∘V} u = u((U∘V)^{-1}).
        const TruncSeries u = random_series(r, 3, 3, rng);
        const TDiffOp prod = build_g(U) * build_g(V);
        o.require(apply_op(prod, u) == substitute(u, invert(compose(U, V)).F()), "substitution oracle");
    }
    return o;
}

Outcome grading()
{
    Outcome o;
    int graded = 0;
    int non_graded = 0;
    std::mt19937_64 rng(kSeed + 8000);
    for (int trial = 0; graded < 20 || non_graded < 20; ++trial) {
        const Ring r(trial % 3 + 1, trial % 2 == 0, 6, 4);
        const bool want_graded = graded < 20 && (trial % 2 == 0 || non_graded >= 20);
        const Automorphism F = random_automorphism(r, 2, want_graded ? Profile::graded : Profile::general, rng);
        const bool form = is_graded_form(F);
        if (!want_graded && form) {
            continue;
        }
        (form ? graded : non_graded) += 1;
        o.require(graded_check(F) == form, "trial " + std::to_string(trial));
    }
    return o;
}

Outcome special_form()
{
    Outcome o;
    std::mt19937_64 rng(kSeed + 9000);
    for (int trial = 0; trial < 10; ++trial) {
        const Ring r(trial % 3 + 1, true, 8, 1);
        const Automorphism F = random_automorphism(r, 2, Profile::linear_in_t, rng);
        SeriesVector H;
        for (const auto& c : F.H()) {
            H.push_back(c.t_slice(1));
        }
        const auto C = cm_sequence(H, 5);
        const auto J = jacobian(H);
        SeriesVector v = H;
        for (int m = 1; m <= 5; ++m) {
            o.require(C[static_cast<std::size_t>(m - 1)] == v, "C_" + std::to_string(m) + " vs (JH)^{m-1}H");
            SeriesVector next;
            for (std::size_t i = 0; i < v.size(); ++i) {
                TruncSeries s(r);
                for (std::size_t j = 0; j < v.size(); ++j) {
                    s += J[i][j] * v[j];
                }
                next.push_back(s);
            }
            v = std::move(next);
        }
    }
    for (int trial = 0; trial < 5; ++trial) {
        const int n = trial % 2 + 2;
        const Ring r(n, trial % 3 != 0, 6, 4);
        const Automorphism F = random_automorphism(r, 1 + trial % 2, Profile::strictly_triangular, rng);
        const NcsSystem sys = build_omega(F);
        const SpecialPsiXi special = psi_xi_special(F, 4);
        for (int m = 1; m <= 4; ++m) {
            const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            o.require(op_equal(special.psi[static_cast<std::size_t>(m - 1)], sys.psi_op(m)), where + " ψ special");
            o.require(op_equal(special.xi[static_cast<std::size_t>(m - 1)], sys.xi_op(m)), where + " ξ special");
            if (m >= n) {
                o.require(sys.psi_op(m).is_zero(), where + " ψ_m != 0");
            }
        }
    }
    return o;
}

Outcome separation()
{
    Outcome o;
    const NcsfFamilies fam = solve_pi(3);
    const std::vector<std::pair<std::string, NSymElem>> targets{
        {"Λ1", NSymElem::lambda(1, 1)},
        {"Λ2", NSymElem::lambda(2, 2)},
        {"Ψ3", fam.Psi(3)},
        {"S2·Λ1", fam.S(2) * fam.Lambda(1)},
        {"Λ1Λ2 − Λ2Λ1", NSymElem::word(3, {1, 2}) - NSymElem::word(3, {2, 1})},
    };
    SeparationBudget budget;
    budget.max_n = 3;
    budget.attempts = 200;
    budget.seed = kSeed;
    budget.commutative = false;
    std::ostringstream summary;
    for (const auto& [name, P] : targets) {
        const SeparationResult res = separate(P.with_max_weight(P.weight()), budget);
        if (!res.witness) {
            o.require(false, name + " inconclusive after " + std::to_string(res.attempts_used) + " attempts");
            continue;
        }
        const auto& w = *res.witness;
        const DiffOp image = specialize(P.with_max_weight(P.weight()), build_f(w.F));
        o.require(!w.value.is_zero() &&
                      image.apply(TruncSeries::monomial(w.F.ring(), 0, w.u)) == w.value,
                  name + " witness does not reproduce");
        summary << name << "@n=" << w.F.ring().n() << " ";
    }
    if (o.passed) {
        o.detail = summary.str();
    }
    return o;
}

Outcome dual_route()
{
    Outcome o;
    std::mt19937_64 rng(kSeed + 11000);
    for (int trial = 0; trial < 50; ++trial) {
        const Ring r(trial % 3 + 1, trial % 2 == 0, 5, 2);
        const int m = trial % 4 + 1;
        std::vector<Derivation> deltas;
        for (int i = 0; i < m; ++i) {
            SeriesVector u;
            for (int j = 0; j < r.n(); ++j) {
                TruncSeries s = random_series(r, 2, 2, rng);
                if (draw(rng, 0, 1) == 1) {
                    s = s.shift_t(1);
                }
                u.push_back(s);
            }
            deltas.emplace_back(std::move(u));
        }
        const DiffOp rec = bplus(deltas, BplusRoute::recursive);
        const DiffOp aux = bplus(deltas, BplusRoute::auxiliary);
        const auto diff = first_difference(rec, aux);
        o.require(!diff, "trial " + std::to_string(trial) + " m=" + std::to_string(m) +
                             (diff ? " " + describe_difference(rec, aux, *diff) : ""));
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Catalan inversion", 1, catalan},
        {2, "NCS axioms UE-0..UE-4", 60, ncs_axioms},
        {3, "specialization correspondence", 60, correspondence},
        {4, "NCSF tables and Newton oracle", 10, ncsf_tables},
        {5, "omega_Lambda relations", 30, omega_relations},
        {6, "D-Log bijection", 30, dlog_bijection},
        {7, "group isomorphism", 60, group_iso},
        {8, "grading equivalence", 30, grading},
        {9, "special form C_m and nilpotent psi", 30, special_form},
        {10, "separation witnesses", 120, separation},
        {11, "dual-route B+", 30, dual_route},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool ok = out.passed && in_time;
        all = all && ok;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << std::fixed << std::setprecision(3) << secs << " s, limit " << c.limit_seconds << " s)";
        if (!in_time) {
            std::cout << "  over time limit";
        }
        if (!out.detail.empty()) {
            std::cout << "  " << out.detail;
        }
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
