#include "ncsys/autgroup.hpp"

#include <algorithm>

namespace ncsys {

namespace {

void require_group_element(const SeriesVector& v, int alpha, const char* what)
{
    if (v.empty()) {
        throw PreconditionError(std::string(what) + ": empty coefficient vector");
    }
    require_series_vector(v.front().ring(), v, what);
    if (alpha < 1) {
        throw PreconditionError(std::string(what) + ": alpha must be >= 1");
    }
    const Orders o = orders(v);
    if (o.z_order < alpha) {
        throw PreconditionError(std::string(what) + ": z-order " + std::to_string(o.z_order) + " below alpha " +
                                std::to_string(alpha));
    }
    if (o.t_order < 1) {
        throw PreconditionError(std::string(what) + ": t-order must be >= 1 (nonzero t^0 part)");
    }
}

SeriesVector add(SeriesVector a, const SeriesVector& b, int sign)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sign > 0) {
            a[i] += b[i];
        } else {
            a[i] -= b[i];
        }
    }
    return a;
}

// e^{[a ∂/∂z]} z - z.
SeriesVector exp_shift(const SeriesVector& a)
{
    const Ring& ring = a.front().ring();
    const Derivation delta(a);
    SeriesVector sum = zero_vector(ring);
    SeriesVector power = identity_vector(ring);
    for (int m = 1; m <= ring.max_t_degree(); ++m) {
        for (std::size_t i = 0; i < power.size(); ++i) {
            power[i] = delta.apply(power[i]) * Rational(1, m);
            sum[i] += power[i];
        }
    }
    return sum;
}

} // namespace

Automorphism::Automorphism(int alpha, SeriesVector H) : alpha_(alpha), H_(std::move(H))
{
    require_group_element(H_, alpha_, "automorphism");
}

Automorphism Automorphism::identity(const Ring& ring, int alpha) { return Automorphism(alpha, zero_vector(ring)); }

SeriesVector Automorphism::F() const { return add(identity_vector(ring()), H_, -1); }

DLog::DLog(int alpha, SeriesVector a) : alpha_(alpha), a_(std::move(a)) { require_group_element(a_, alpha_, "D-Log"); }

Automorphism compose(const Automorphism& U, const Automorphism& V)
{
    require_same_ring(U.ring(), V.ring(), "compose");
    if (U.alpha() != V.alpha()) {
        throw ContextMismatch("compose: alpha mismatch");
    }
    return Automorphism(U.alpha(), add(V.H(), substitute(U.H(), V.F()), 1));
}

SeriesVector inverse_shift(const Automorphism& F)
{
    const Ring& ring = F.ring();
    SeriesVector M = zero_vector(ring);
    for (int pass = 0; pass < ring.max_t_degree(); ++pass) {
        M = substitute(F.H(), add(identity_vector(ring), M, 1));
    }
    return M;
}

Automorphism invert(const Automorphism& F)
{
    SeriesVector M = inverse_shift(F);
    for (auto& c : M) {
        c = -c;
    }
    return Automorphism(F.alpha(), std::move(M));
}

DLog dlog(const Automorphism& F)
{
    const Ring& ring = F.ring();
    SeriesVector a = zero_vector(ring);
    SeriesVector target = F.H();
    for (auto& c : target) {
        c = -c;
    }
    for (int pass = 0; pass < ring.max_t_degree(); ++pass) {
        a = add(a, add(target, exp_shift(a), -1), 1);
    }
    return DLog(F.alpha(), std::move(a));
}

Automorphism exp_derivation(const DLog& d)
{
    SeriesVector H = exp_shift(d.a());
    for (auto& c : H) {
        c = -c;
    }
    return Automorphism(d.alpha(), std::move(H));
}

bool is_graded_form(const Automorphism& F)
{
    const Ring& ring = F.ring();
    for (const auto& c : F.H()) {
        for (const auto& term : c.terms()) {
            if (ring.degree(term.mono) != term.t + 1) {
                return false;
            }
        }
    }
    return true;
}

Profile parse_profile(const std::string& name)
{
    if (name == "general") {
        return Profile::general;
    }
    if (name == "linear_in_t") {
        return Profile::linear_in_t;
    }
    if (name == "strictly_triangular") {
        return Profile::strictly_triangular;
    }
    if (name == "graded") {
        return Profile::graded;
    }
    throw PreconditionError("unknown profile '" + name + "'");
}

std::string to_string(Profile p)
{
    switch (p) {
    case Profile::general:
        return "general";
    case Profile::linear_in_t:
        return "linear_in_t";
    case Profile::strictly_triangular:
        return "strictly_triangular";
    case Profile::graded:
        return "graded";
    }
    return "general";
}

int draw(std::mt19937_64& rng, int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng() % span);
}

Rational draw_coeff(std::mt19937_64& rng)
{
    static constexpr int kValues[] = {-2, -1, 1, 2};
    return kValues[draw(rng, 0, 3)];
}

Automorphism random_automorphism(const Ring& ring, int alpha, Profile profile, std::mt19937_64& rng)
{
    const int n = ring.n();
    const int Nz = ring.max_z_degree();
    const int Nt = ring.max_t_degree();
    if (alpha < 1) {
        throw PreconditionError("random_automorphism: alpha must be >= 1");
    }
    if (Nt < 1) {
        throw PreconditionError("random_automorphism: needs N_t >= 1");
    }
    if (alpha > Nz) {
        throw PreconditionError("random_automorphism: alpha exceeds N_z");
    }
    if (profile == Profile::strictly_triangular && n < 2) {
        throw PreconditionError("strictly_triangular profile with n = 1 only admits the identity");
    }
    if (profile == Profile::graded && std::max(1, alpha - 1) + 1 > Nz) {
        throw PreconditionError("graded profile needs a t^m slice of degree m + 1 <= N_z");
    }
    const int top_z = std::min(Nz, alpha + 2);
    SeriesVector H = zero_vector(ring);
    for (int i = 0; i < n; ++i) {
        if (profile == Profile::strictly_triangular && i == 0) {
            continue;
        }
        const int letters = profile == Profile::strictly_triangular ? i : n;
        const int count = draw(rng, 1, 3);
        std::vector<SeriesTerm> terms;
        for (int k = 0; k < count; ++k) {
            int t = 1;
            int degree = 0;
            switch (profile) {
            case Profile::general:
                t = draw(rng, 1, std::min(Nt, 2));
                degree = draw(rng, alpha, top_z);
                break;
            case Profile::linear_in_t:
            case Profile::strictly_triangular:
                degree = draw(rng, alpha, top_z);
                break;
            case Profile::graded: {
                const int lo = std::max(1, alpha - 1);
                const int hi = std::min({Nt, Nz - 1, lo + 1});
                t = draw(rng, lo, hi);
                degree = t + 1;
                break;
            }
            }
            Word w(static_cast<std::size_t>(degree));
            for (auto& letter : w) {
                letter = draw(rng, 0, letters - 1);
            }
            terms.push_back({t, ring.index_of(w), draw_coeff(rng)});
        }
        H[static_cast<std::size_t>(i)] = TruncSeries::from_terms(ring, std::move(terms));
    }
    return Automorphism(alpha, std::move(H));
}

} // namespace ncsys
