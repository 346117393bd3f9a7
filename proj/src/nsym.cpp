#include "ncsys/nsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ncsys {

namespace {

constexpr const char* kMinus = "−";

// " + c·X" style joining shared by the renderers.
void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body)
{
    const bool negative = sgn(c) < 0;
    if (first) {
        if (negative) {
            os << kMinus;
        }
    } else {
        os << (negative ? std::string(" ") + kMinus + " " : std::string(" + "));
    }
    const Rational a = abs(c);
    if (body.empty()) {
        os << to_string(a);
    } else if (a == 1) {
        os << body;
    } else if (is_integer(a)) {
        os << to_string(a) << body;
    } else {
        os << to_string(a) << "·" << body;
    }
}

} // namespace

int weight(const LambdaWord& w) { return std::accumulate(w.begin(), w.end(), 0); }

bool WeightLexLess::operator()(const LambdaWord& a, const LambdaWord& b) const
{
    const int wa = weight(a);
    const int wb = weight(b);
    if (wa != wb) {
        return wa < wb;
    }
    return a < b;
}

// ---------------------------------------------------------------------------
// NSymElem

NSymElem::NSymElem(int max_weight) : max_weight_(max_weight)
{
    if (max_weight < 0) {
        throw PreconditionError("NSym truncation weight must be >= 0");
    }
}

NSymElem NSymElem::one(int max_weight) { return word(max_weight, {}); }

NSymElem NSymElem::lambda(int max_weight, int m) { return word(max_weight, {m}); }

NSymElem NSymElem::word(int max_weight, const LambdaWord& w, const Rational& c)
{
    NSymElem e(max_weight);
    e.add_term(w, c);
    return e;
}

void NSymElem::add_term(const LambdaWord& w, const Rational& c)
{
    for (int m : w) {
        if (m < 1) {
            throw PreconditionError("Λ indices must be >= 1");
        }
    }
    if (ncsys::weight(w) > max_weight_ || sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Rational NSymElem::coeff(const LambdaWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int NSymElem::weight() const { return terms_.empty() ? -1 : ncsys::weight(terms_.rbegin()->first); }

bool NSymElem::is_homogeneous(int w) const
{
    return std::all_of(terms_.begin(), terms_.end(), [w](const auto& kv) { return ncsys::weight(kv.first) == w; });
}

NSymElem NSymElem::homogeneous_part(int w) const
{
    NSymElem out(max_weight_);
    for (const auto& [word, c] : terms_) {
        if (ncsys::weight(word) == w) {
            out.terms_.emplace(word, c);
        }
    }
    return out;
}

NSymElem NSymElem::with_max_weight(int max_weight) const
{
    NSymElem out(max_weight);
    for (const auto& [word, c] : terms_) {
        out.add_term(word, c);
    }
    return out;
}

std::string NSymElem::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [word, c] : terms_) {
        std::string body;
        for (std::size_t i = 0; i < word.size(); ++i) {
            body += (i ? "·Λ" : "Λ") + std::to_string(word[i]);
        }
        append_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

NSymElem& NSymElem::operator+=(const NSymElem& other)
{
    for (const auto& [w, c] : other.terms_) {
        add_term(w, c);
    }
    return *this;
}

NSymElem& NSymElem::operator-=(const NSymElem& other)
{
    for (const auto& [w, c] : other.terms_) {
        add_term(w, -c);
    }
    return *this;
}

NSymElem& NSymElem::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) {
        x *= c;
    }
    return *this;
}

NSymElem operator*(const NSymElem& a, const NSymElem& b)
{
    NSymElem out(std::min(a.max_weight_, b.max_weight_));
    for (const auto& [wa, ca] : a.terms_) {
        const int weight_a = weight(wa);
        for (const auto& [wb, cb] : b.terms_) {
            if (weight_a + weight(wb) > out.max_weight_) {
                break;
            }
            LambdaWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

NSymElem omega_lambda(const NSymElem& P)
{
    NSymElem out(P.max_weight());
    for (const auto& [w, c] : P.terms()) {
        out.add_term(LambdaWord(w.rbegin(), w.rend()), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// NSymGenFn

NSymGenFn::NSymGenFn(int max_weight) : coeffs_(static_cast<std::size_t>(max_weight) + 1, NSymElem(max_weight)) {}

NSymGenFn NSymGenFn::one(int max_weight)
{
    NSymGenFn f(max_weight);
    f[0] = NSymElem::one(max_weight);
    return f;
}

NSymGenFn NSymGenFn::lambda(int max_weight)
{
    NSymGenFn f = one(max_weight);
    for (int m = 1; m <= max_weight; ++m) {
        f[m] = NSymElem::lambda(max_weight, m);
    }
    return f;
}

NSymGenFn NSymGenFn::negate_t() const
{
    NSymGenFn f = *this;
    for (int m = 1; m <= max_weight(); m += 2) {
        f[m] *= Rational(-1);
    }
    return f;
}

NSymGenFn NSymGenFn::d_dt() const
{
    NSymGenFn f(max_weight());
    for (int m = 1; m <= max_weight(); ++m) {
        f[m - 1] = Rational(m) * (*this)[m];
    }
    return f;
}

NSymGenFn operator+(const NSymGenFn& a, const NSymGenFn& b)
{
    NSymGenFn f = a;
    for (int m = 0; m <= a.max_weight(); ++m) {
        f[m] += b[m];
    }
    return f;
}

NSymGenFn operator-(const NSymGenFn& a, const NSymGenFn& b) { return a + Rational(-1) * b; }

NSymGenFn operator*(const Rational& c, const NSymGenFn& a)
{
    NSymGenFn f = a;
    for (auto& x : f.coeffs_) {
        x *= c;
    }
    return f;
}

NSymGenFn operator*(const NSymGenFn& a, const NSymGenFn& b)
{
    NSymGenFn f(a.max_weight());
    for (int i = 0; i <= a.max_weight(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.max_weight(); ++j) {
            f[i + j] += a[i] * b[j];
        }
    }
    return f;
}

NSymGenFn NSymGenFn::inverse() const
{
    if (!((*this)[0] == NSymElem::one(max_weight()))) {
        throw PreconditionError("inverse: constant term must be 1");
    }
    // x_m = -Σ_{i=1}^m c_i x_{m-i}
    NSymGenFn x = one(max_weight());
    for (int m = 1; m <= max_weight(); ++m) {
        NSymElem acc(max_weight());
        for (int i = 1; i <= m; ++i) {
            acc -= (*this)[i] * x[m - i];
        }
        x[m] = acc;
    }
    return x;
}

NSymGenFn NSymGenFn::log() const
{
    if (!((*this)[0] == NSymElem::one(max_weight()))) {
        throw PreconditionError("log: constant term must be 1");
    }
    const NSymGenFn X = *this - one(max_weight());
    NSymGenFn sum(max_weight());
    NSymGenFn power = X;
    for (int k = 1; k <= max_weight(); ++k) {
        sum = sum + Rational(k % 2 == 1 ? 1 : -1, k) * power;
        power = power * X;
    }
    return sum;
}

NSymGenFn NSymGenFn::exp() const
{
    if (!(*this)[0].is_zero()) {
        throw PreconditionError("exp: constant term must vanish");
    }
    NSymGenFn sum = one(max_weight());
    NSymGenFn power = sum;
    for (int k = 1; k <= max_weight(); ++k) {
        power = Rational(1, k) * (power * *this);
        sum = sum + power;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Π

NSymElem NcsfFamilies::family(const std::string& name, int m) const
{
    if (m < 1 || m > max_weight()) {
        throw PreconditionError("family index out of range");
    }
    if (name == "Lambda") {
        return Lambda(m);
    }
    if (name == "S") {
        return S(m);
    }
    if (name == "Phi") {
        return Phi(m);
    }
    if (name == "Psi") {
        return Psi(m);
    }
    if (name == "Xi") {
        return Xi(m);
    }
    throw PreconditionError("unknown NCSF family '" + name + "'");
}

NcsfFamilies solve_pi(int max_weight)
{
    if (max_weight < 0) {
        throw PreconditionError("solve_pi: N_w must be >= 0");
    }
    const NSymGenFn lam = NSymGenFn::lambda(max_weight);
    const NSymGenFn lam_neg = lam.negate_t();
    const NSymGenFn sigma = lam_neg.inverse();
    const NSymGenFn dsigma = sigma.d_dt();
    return NcsfFamilies{lam, sigma, sigma.log(), lam_neg * dsigma, dsigma * lam_neg};
}

std::vector<std::string> pi_identity_failures(const NcsfFamilies& fam)
{
    std::vector<std::string> failures;
    const int N = fam.max_weight();
    const NSymGenFn one = NSymGenFn::one(N);
    const NSymGenFn lam_neg = fam.lambda_t.negate_t();
    if (!(fam.lambda_t[0] == NSymElem::one(N))) {
        failures.push_back("f(0) = 1");
    }
    if (!(lam_neg * fam.sigma_t == one) || !(fam.sigma_t * lam_neg == one)) {
        failures.push_back("λ(-t)σ(t) = σ(t)λ(-t) = 1");
    }
    if (!(fam.phi_t.exp() == fam.sigma_t)) {
        failures.push_back("exp Φ(t) = σ(t)");
    }
    // t-derivatives are exact only through t^{N-1}.
    auto truncated = [N](NSymGenFn f) {
        if (N >= 1) {
            f[N] = NSymElem(N);
        }
        return f;
    };
    const NSymGenFn dsigma = truncated(fam.sigma_t.d_dt());
    if (!(truncated(fam.sigma_t * fam.psi_t) == dsigma)) {
        failures.push_back("σ'(t) = σ(t)ψ(t)");
    }
    if (!(truncated(fam.xi_t * fam.sigma_t) == dsigma)) {
        failures.push_back("σ'(t) = ξ(t)σ(t)");
    }
    return failures;
}

// ---------------------------------------------------------------------------
// Ψ basis and Hopf structure

PsiBasis::PsiBasis(int max_weight) : max_weight_(max_weight), families_(solve_pi(max_weight)) {}

const NSymElem& PsiBasis::psi_word(const LambdaWord& c) const
{
    if (auto it = cache_.find(c); it != cache_.end()) {
        return it->second;
    }
    NSymElem value = NSymElem::one(max_weight_);
    if (!c.empty()) {
        const LambdaWord head(c.begin(), c.end() - 1);
        value = psi_word(head) * families_.Psi(c.back());
    }
    return cache_.emplace(c, std::move(value)).first->second;
}

PsiExpansion PsiBasis::to_psi_basis(const NSymElem& P) const
{
    if (P.weight() > max_weight_) {
        throw PreconditionError("to_psi_basis: weight exceeds the basis truncation");
    }
    // Ψ_c = (Π (-1)^{c_i - 1} c_i) Λ_c + (words refining c), so peeling the
    // shortest remaining word terminates.
    PsiExpansion out;
    NSymElem rest = P.with_max_weight(max_weight_);
    while (!rest.is_zero()) {
        auto pick = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
            if (it->first.size() < pick->first.size()) {
                pick = it;
            }
        }
        const LambdaWord c = pick->first;
        Rational lead = 1;
        for (int part : c) {
            lead *= (part % 2 == 1 ? part : -part);
        }
        const Rational x = pick->second / lead;
        out[c] += x;
        rest -= x * psi_word(c);
    }
    return out;
}

NSymElem PsiBasis::from_psi_basis(const PsiExpansion& x) const
{
    NSymElem out(max_weight_);
    for (const auto& [c, coeff] : x) {
        out += coeff * psi_word(c);
    }
    return out;
}

TensorElem PsiBasis::coproduct(const NSymElem& P) const
{
    // Δ(Ψ_c) = Σ_{S ⊆ positions} Ψ_{c|S} ⊗ Ψ_{c|S^c}
    std::map<std::pair<LambdaWord, LambdaWord>, Rational> in_psi;
    for (const auto& [c, coeff] : to_psi_basis(P)) {
        const std::size_t k = c.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            LambdaWord left;
            LambdaWord right;
            for (std::size_t i = 0; i < k; ++i) {
                ((mask >> i) & 1U ? left : right).push_back(c[i]);
            }
            in_psi[{left, right}] += coeff;
        }
    }
    TensorElem out;
    for (const auto& [pair, coeff] : in_psi) {
        if (sgn(coeff) == 0) {
            continue;
        }
        for (const auto& [wa, ca] : psi_word(pair.first).terms()) {
            for (const auto& [wb, cb] : psi_word(pair.second).terms()) {
                out.terms[{wa, wb}] += coeff * ca * cb;
            }
        }
    }
    std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

Rational PsiBasis::counit(const NSymElem& P) const { return P.coeff({}); }

NSymElem PsiBasis::antipode(const NSymElem& P) const
{
    PsiExpansion x;
    for (const auto& [c, coeff] : to_psi_basis(P)) {
        x[LambdaWord(c.rbegin(), c.rend())] += (c.size() % 2 == 0 ? coeff : -coeff);
    }
    return from_psi_basis(x);
}

TensorElem tensor(const NSymElem& a, const NSymElem& b)
{
    TensorElem out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            out.terms[{wa, wb}] += ca * cb;
        }
    }
    return out;
}

NSymElem multiply_tensor(const TensorElem& x, int max_weight)
{
    NSymElem out(max_weight);
    for (const auto& [pair, c] : x.terms) {
        LambdaWord w = pair.first;
        w.insert(w.end(), pair.second.begin(), pair.second.end());
        out.add_term(w, c);
    }
    return out;
}

std::string TensorElem::to_string() const
{
    if (terms.empty()) {
        return "0";
    }
    auto render = [](const LambdaWord& w) {
        if (w.empty()) {
            return std::string("1");
        }
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            s += (i ? "·Λ" : "Λ") + std::to_string(w[i]);
        }
        return s;
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [pair, c] : terms) {
        append_term(os, first, c, render(pair.first) + "⊗" + render(pair.second));
        first = false;
    }
    return os.str();
}

ClassicalSymPoly abelianize(const NSymElem& P)
{
    ClassicalSymPoly out;
    for (const auto& [w, c] : P.terms()) {
        std::vector<int> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        out.terms[sorted] += c;
    }
    std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

std::string ClassicalSymPoly::to_string() const
{
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        std::string body;
        for (std::size_t i = 0; i < mono.size();) {
            std::size_t j = i;
            while (j < mono.size() && mono[j] == mono[i]) {
                ++j;
            }
            body += (body.empty() ? "e" : "·e") + std::to_string(mono[i]);
            if (j - i > 1) {
                body += "^" + std::to_string(j - i);
            }
            i = j;
        }
        append_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

} // namespace ncsys
