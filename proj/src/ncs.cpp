#include "ncsys/ncs.hpp"

#include <algorithm>
#include <sstream>

namespace ncsys {

namespace {

SeriesVector negated(SeriesVector v)
{
    for (auto& c : v) {
        c = -c;
    }
    return v;
}

SeriesVector t_derivative(const SeriesVector& v)
{
    SeriesVector out;
    out.reserve(v.size());
    for (const auto& c : v) {
        out.push_back(ncsys::t_derivative(c));
    }
    return out;
}

std::string word_text(const Ring& ring, MonoIndex m)
{
    return TruncSeries::monomial(ring, 0, ring.word(m)).to_string();
}

} // namespace

DiffOp NcsSystem::family_op(const std::string& name, int k) const
{
    if (name == "Lambda") {
        return lambda_op(k);
    }
    if (name == "S") {
        return s_op(k);
    }
    if (name == "Phi") {
        return phi_op(k);
    }
    if (name == "Psi") {
        return psi_op(k);
    }
    if (name == "Xi") {
        return xi_op(k);
    }
    throw PreconditionError("unknown NCSF family '" + name + "'");
}

TDiffOp taylor_operator(const Derivation& delta, const Rational& c, BplusRoute route)
{
    const Ring& ring = delta.ring();
    DiffOp total = DiffOp::identity(ring);
    Rational scale = 1;
    std::vector<Derivation> copies;
    for (int k = 1; k <= ring.max_t_degree(); ++k) {
        scale *= c;
        scale /= k;
        copies.push_back(delta);
        total = total + scale * bplus(copies, route);
    }
    return TDiffOp(total);
}

TDiffOp build_f(const Automorphism& F, BplusRoute route)
{
    return taylor_operator(Derivation(F.H()), -1, route).negate_t();
}

TDiffOp build_g(const Automorphism& F, BplusRoute route)
{
    return taylor_operator(Derivation(inverse_shift(F)), 1, route);
}

NcsSystem build_omega(const Automorphism& F, BplusRoute route)
{
    const SeriesVector M = inverse_shift(F);
    const SeriesVector G = Automorphism(F.alpha(), negated(M)).F();
    TDiffOp f = taylor_operator(Derivation(F.H()), -1, route).negate_t();
    TDiffOp g = taylor_operator(Derivation(M), 1, route);
    TDiffOp d = TDiffOp::from_derivation(Derivation(negated(dlog(F).a())));
    TDiffOp h = TDiffOp::from_derivation(Derivation(substitute(t_derivative(M), F.F())));
    TDiffOp m = TDiffOp::from_derivation(Derivation(substitute(t_derivative(F.H()), G)));
    return NcsSystem{std::move(f), std::move(g), std::move(d), std::move(h), std::move(m)};
}

bool all_passed(const std::vector<Report>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
}

std::string describe_difference(const DiffOp& lhs, const DiffOp& rhs, MonoIndex m)
{
    const Ring& ring = lhs.ring();
    const int p = std::min(lhs.t_precision(), rhs.t_precision());
    std::ostringstream os;
    os << "on " << word_text(ring, m) << ": lhs = " << lhs.column(m).with_t_precision(p).to_string()
       << ", rhs = " << rhs.column(m).with_t_precision(p).to_string();
    return os.str();
}

Report compare_ops(const std::string& check, const DiffOp& lhs, const DiffOp& rhs)
{
    Report r{check, true, ""};
    if (auto m = first_difference(lhs, rhs)) {
        r.passed = false;
        r.counterexample = describe_difference(lhs, rhs, *m);
    }
    return r;
}

Report compare_ops(const std::string& check, const TDiffOp& lhs, const TDiffOp& rhs)
{
    return compare_ops(check, lhs.total(), rhs.total());
}

std::vector<Report> verify_ncs(const NcsSystem& sys)
{
    const Ring& ring = sys.ring();
    const TDiffOp one = TDiffOp::identity(ring);
    const TDiffOp f_neg = sys.f.negate_t();
    const TDiffOp dg = sys.g.d_dt();
    std::vector<Report> out;
    out.push_back(compare_ops("UE-0 f(0) = 1", sys.f.coefficient(0), DiffOp::identity(ring)));
    out.push_back(compare_ops("UE-1 f(-t)g(t) = 1", f_neg * sys.g, one));
    out.push_back(compare_ops("UE-1 g(t)f(-t) = 1", sys.g * f_neg, one));
    out.push_back(compare_ops("UE-2 exp d(t) = g(t)", exp_tdiffop(sys.d), sys.g));
    out.push_back(compare_ops("UE-3 dg/dt = g(t)h(t)", dg, sys.g * sys.h));
    out.push_back(compare_ops("UE-4 dg/dt = m(t)g(t)", dg, sys.m * sys.g));
    return out;
}

DiffOp specialize(const NSymElem& P, const TDiffOp& f)
{
    const Ring& ring = f.ring();
    if (P.weight() > f.t_precision()) {
        throw PreconditionError("specialize: weight " + std::to_string(P.weight()) + " exceeds N_t = " +
                                std::to_string(f.t_precision()));
    }
    std::map<int, DiffOp> images;
    DiffOp out = DiffOp::zero(ring);
    for (const auto& [w, c] : P.terms()) {
        DiffOp term = DiffOp::identity(ring);
        for (int letter : w) {
            auto it = images.find(letter);
            if (it == images.end()) {
                it = images.emplace(letter, f.coefficient(letter)).first;
            }
            term = term * it->second;
        }
        out = out + c * term;
    }
    return out;
}

DiffOp specialize(const NSymElem& P, const NcsSystem& sys) { return specialize(P, sys.f); }

std::vector<Report> correspondence_check(const NcsSystem& sys, const NcsfFamilies& fam, int max_m)
{
    std::vector<Report> out;
    // h and m carry one t-power less.
    const int top = std::min(max_m, sys.ring().max_t_degree());
    for (const std::string name : {"S", "Psi", "Phi", "Xi"}) {
        for (int k = 1; k <= top; ++k) {
            if ((name == "Psi" || name == "Xi") && k - 1 > sys.h.t_precision()) {
                continue;
            }
            out.push_back(compare_ops("S(" + name + "_" + std::to_string(k) + ")", specialize(fam.family(name, k), sys),
                                      sys.family_op(name, k)));
        }
    }
    return out;
}

std::vector<SeriesVector> cm_sequence(const SeriesVector& H, int count)
{
    if (H.empty()) {
        throw PreconditionError("cm_sequence: empty H");
    }
    for (const auto& c : H) {
        if (std::any_of(c.terms().begin(), c.terms().end(), [](const SeriesTerm& x) { return x.t != 0; })) {
            throw PreconditionError("cm_sequence: H must be t-free");
        }
    }
    std::vector<SeriesVector> out;
    if (count < 1) {
        return out;
    }
    out.push_back(H);
    for (int k = 2; k <= count; ++k) {
        const Derivation delta(out.back());
        SeriesVector next;
        next.reserve(H.size());
        for (const auto& c : H) {
            next.push_back(delta.apply(c));
        }
        out.push_back(std::move(next));
    }
    return out;
}

bool is_linear_in_t(const Automorphism& F)
{
    for (const auto& c : F.H()) {
        for (const auto& term : c.terms()) {
            if (term.t != 1) {
                return false;
            }
        }
    }
    return true;
}

SpecialPsiXi psi_xi_special(const Automorphism& F, int count)
{
    if (!is_linear_in_t(F)) {
        throw PreconditionError("psi_xi_special: F must have the form z - tH(z)");
    }
    SeriesVector H;
    for (const auto& c : F.H()) {
        H.push_back(c.t_slice(1));
    }
    const SeriesVector M = inverse_shift(F);
    SpecialPsiXi out;
    const auto C = cm_sequence(H, count);
    for (int k = 1; k <= count; ++k) {
        out.psi.emplace_back(Derivation(C[static_cast<std::size_t>(k - 1)]));
        SeriesVector N;
        for (const auto& c : M) {
            N.push_back(c.t_slice(k));
        }
        out.xi.emplace_back(Derivation(std::move(N)));
    }
    return out;
}

std::vector<std::vector<TruncSeries>> jacobian(const SeriesVector& H)
{
    if (H.empty()) {
        throw PreconditionError("jacobian: empty H");
    }
    const Ring& ring = H.front().ring();
    if (!ring.commutative()) {
        throw PreconditionError("jacobian: commutative rings only");
    }
    std::vector<std::vector<TruncSeries>> J(H.size());
    for (int j = 0; j < ring.n(); ++j) {
        SeriesVector unit = zero_vector(ring);
        unit[static_cast<std::size_t>(j)] = TruncSeries::constant(ring, 1);
        const Derivation partial(std::move(unit));
        for (std::size_t i = 0; i < H.size(); ++i) {
            J[i].push_back(partial.apply(H[i]));
        }
    }
    return J;
}

std::vector<Report> group_hom_check(const Automorphism& U, const Automorphism& V)
{
    const TDiffOp gU = build_g(U);
    const TDiffOp gV = build_g(V);
    std::vector<Report> out;
    out.push_back(compare_ops("g^{U∘V} = g^U g^V", build_g(compose(U, V)), gU * gV));
    out.push_back(compare_ops("g^{U^-1} = (g^U)^-1", build_g(invert(U)), inverse_tdiffop(gU)));
    return out;
}

bool graded_check(const Automorphism& F)
{
    if (F.alpha() < 2) {
        throw PreconditionError("graded_check: needs alpha >= 2");
    }
    const Ring& ring = F.ring();
    const TDiffOp f = build_f(F);
    for (int k = 1; k <= f.t_precision(); ++k) {
        const DiffOp lambda = f.coefficient(k);
        for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
            for (const auto& term : lambda.column(m).terms()) {
                if (ring.degree(term.mono) != ring.degree(m) + k) {
                    return false;
                }
            }
        }
    }
    return true;
}

TruncSeries random_series(const Ring& ring, int max_degree, int max_terms, std::mt19937_64& rng)
{
    const int top = std::min(max_degree, ring.max_z_degree());
    std::vector<SeriesTerm> terms;
    const int count = draw(rng, 1, max_terms);
    for (int k = 0; k < count; ++k) {
        Word w(static_cast<std::size_t>(draw(rng, 1, top)));
        for (auto& letter : w) {
            letter = draw(rng, 0, ring.n() - 1);
        }
        terms.push_back({0, ring.index_of(w), draw_coeff(rng)});
    }
    return TruncSeries::from_terms(ring, std::move(terms));
}

std::vector<Report> action_hopf_checks(const NcsSystem& sys, std::mt19937_64& rng, int samples)
{
    const Ring& ring = sys.ring();
    const int Nt = ring.max_t_degree();
    const int half = std::max(1, ring.max_z_degree() / 2);
    std::vector<Report> out;
    auto fail = [](Report& r, const std::string& what) {
        if (r.passed) {
            r.passed = false;
            r.counterexample = what;
        }
    };
    Report s_report{"divided powers: s_k(uv) = Σ s_i(u)s_j(v)", true, ""};
    Report l_report{"divided powers: λ_k(uv) = Σ λ_i(u)λ_j(v)", true, ""};
    Report leibniz{"Leibniz: ψ_k, ξ_k, φ_k are derivations", true, ""};
    for (int sample = 0; sample < samples; ++sample) {
        const TruncSeries u = random_series(ring, half, 3, rng);
        const TruncSeries v = random_series(ring, half, 3, rng);
        const TruncSeries uv = u * v;
        for (int k = 0; k <= Nt; ++k) {
            for (const bool is_s : {true, false}) {
                auto op = [&](int i) { return is_s ? sys.s_op(i) : sys.lambda_op(i); };
                TruncSeries rhs(ring);
                for (int i = 0; i <= k; ++i) {
                    rhs += op(i).apply(u) * op(k - i).apply(v);
                }
                const TruncSeries lhs = op(k).apply(uv);
                if (!(lhs == rhs)) {
                    fail(is_s ? s_report : l_report, "k = " + std::to_string(k) + ", u = " + u.to_string() +
                                                         ", v = " + v.to_string());
                }
            }
        }
        for (int k = 1; k <= Nt; ++k) {
            std::vector<std::pair<std::string, DiffOp>> ops{{"φ", sys.phi_op(k)}};
            if (k - 1 <= sys.h.t_precision()) {
                ops.emplace_back("ψ", sys.psi_op(k));
                ops.emplace_back("ξ", sys.xi_op(k));
            }
            for (const auto& [name, op] : ops) {
                if (!(op.apply(uv) == op.apply(u) * v + u * op.apply(v))) {
                    fail(leibniz, name + "_" + std::to_string(k) + " on u = " + u.to_string() + ", v = " + v.to_string());
                }
            }
        }
    }
    out.push_back(std::move(s_report));
    out.push_back(std::move(l_report));
    out.push_back(std::move(leibniz));
    return out;
}

SeparationResult separate(const NSymElem& P, const SeparationBudget& budget)
{
    if (P.is_zero()) {
        throw PreconditionError("separate: P must be nonzero");
    }
    const int w = std::max(1, P.weight());
    const int alpha = 2;
    SeparationResult result;
    for (int n = 1; n <= budget.max_n; ++n) {
        const Ring ring(n, budget.commutative, alpha * w + 1, w);
        result.max_n_tried = n;
        for (int attempt = 0; attempt < budget.attempts; ++attempt) {
            ++result.attempts_used;
            std::mt19937_64 rng(budget.seed + static_cast<std::uint64_t>(n) * 1'000'003ULL +
                                static_cast<std::uint64_t>(attempt));
            const Profile profile = attempt % 2 == 0 ? Profile::general : Profile::linear_in_t;
            Automorphism F = random_automorphism(ring, alpha, profile, rng);
            const DiffOp image = specialize(P, build_f(F));
            for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
                if (!image.column(m).is_zero()) {
                    result.witness = SeparationWitness{std::move(F), ring.word(m), image.column(m)};
                    return result;
                }
            }
        }
    }
    return result;
}

} // namespace ncsys
