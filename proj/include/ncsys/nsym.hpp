#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsys/rational.hpp"

namespace ncsys {

// A word Λ_{m1} Λ_{m2} ... stored as (m1, m2, ...), every index >= 1.
using LambdaWord = std::vector<int>;

int weight(const LambdaWord& w);

// Weight first, then lexicographic.
struct WeightLexLess {
    bool operator()(const LambdaWord& a, const LambdaWord& b) const;
};

// Element of NSym = Q<Λ_1, Λ_2, ...> truncated at weight N_w.
class NSymElem {
public:
    using TermMap = std::map<LambdaWord, Rational, WeightLexLess>;

    explicit NSymElem(int max_weight);
    static NSymElem one(int max_weight);
    static NSymElem lambda(int max_weight, int m);
    static NSymElem word(int max_weight, const LambdaWord& w, const Rational& c = 1);

    int max_weight() const { return max_weight_; }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const LambdaWord& w) const;
    bool is_zero() const { return terms_.empty(); }
    // Largest weight among terms, -1 for zero.
    int weight() const;
    bool is_homogeneous(int w) const;
    NSymElem homogeneous_part(int w) const;
    NSymElem with_max_weight(int max_weight) const;

    void add_term(const LambdaWord& w, const Rational& c);

    // "Λ1·Λ1 − Λ2"; "0" for zero, "1" for the empty word.
    std::string to_string() const;

    NSymElem& operator+=(const NSymElem& other);
    NSymElem& operator-=(const NSymElem& other);
    NSymElem& operator*=(const Rational& c);

    friend NSymElem operator+(NSymElem a, const NSymElem& b) { return a += b; }
    friend NSymElem operator-(NSymElem a, const NSymElem& b) { return a -= b; }
    friend NSymElem operator-(NSymElem a) { return a *= Rational(-1); }
    friend NSymElem operator*(NSymElem a, const Rational& c) { return a *= c; }
    friend NSymElem operator*(const Rational& c, NSymElem a) { return a *= c; }
    friend NSymElem operator*(const NSymElem& a, const NSymElem& b);
    friend bool operator==(const NSymElem& a, const NSymElem& b) { return a.terms_ == b.terms_; }

private:
    int max_weight_;
    TermMap terms_;
};

// The anti-involution fixing every Λ_m: reverses each word.
NSymElem omega_lambda(const NSymElem& P);

// Σ_m t^m c_m with c_m in NSym, truncated at t^{N_w}.
class NSymGenFn {
public:
    explicit NSymGenFn(int max_weight);
    static NSymGenFn one(int max_weight);
    // Σ_{m>=0} t^m Λ_m with Λ_0 = 1.
    static NSymGenFn lambda(int max_weight);

    int max_weight() const { return static_cast<int>(coeffs_.size()) - 1; }
    const NSymElem& operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    NSymElem& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }

    NSymGenFn negate_t() const;
    NSymGenFn d_dt() const;
    // Requires a unit constant term.
    NSymGenFn inverse() const;
    NSymGenFn log() const;
    // Requires a zero constant term.
    NSymGenFn exp() const;

    friend NSymGenFn operator+(const NSymGenFn& a, const NSymGenFn& b);
    friend NSymGenFn operator-(const NSymGenFn& a, const NSymGenFn& b);
    friend NSymGenFn operator*(const Rational& c, const NSymGenFn& a);
    friend NSymGenFn operator*(const NSymGenFn& a, const NSymGenFn& b);
    friend bool operator==(const NSymGenFn& a, const NSymGenFn& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<NSymElem> coeffs_;
};

// The NCS system Π = (λ, σ, Φ(t), ψ(t), ξ(t)) over NSym. Φ(t) = Σ t^m Φ_m / m,
// ψ(t) = Σ t^{m-1} Ψ_m, ξ(t) = Σ t^{m-1} Ξ_m.
struct NcsfFamilies {
    NSymGenFn lambda_t;
    NSymGenFn sigma_t;
    NSymGenFn phi_t;
    NSymGenFn psi_t;
    NSymGenFn xi_t;

    int max_weight() const { return lambda_t.max_weight(); }
    NSymElem Lambda(int m) const { return lambda_t[m]; }
    NSymElem S(int m) const { return sigma_t[m]; }
    NSymElem Phi(int m) const { return Rational(m) * phi_t[m]; }
    NSymElem Psi(int m) const { return psi_t[m - 1]; }
    NSymElem Xi(int m) const { return xi_t[m - 1]; }
    // Family by letter: "Lambda", "S", "Phi", "Psi", "Xi".
    NSymElem family(const std::string& name, int m) const;
};

NcsfFamilies solve_pi(int max_weight);

// Each identity of Π re-substituted into NSym[[t]]; empty when all hold.
std::vector<std::string> pi_identity_failures(const NcsfFamilies& fam);

using PsiExpansion = std::map<LambdaWord, Rational, WeightLexLess>;

struct TensorElem {
    std::map<std::pair<LambdaWord, LambdaWord>, Rational> terms;
    friend bool operator==(const TensorElem&, const TensorElem&) = default;
    std::string to_string() const;
};

// Conversions between the Λ word basis and the Ψ word basis, and the Hopf
// structure in which every Ψ_m is primitive.
class PsiBasis {
public:
    explicit PsiBasis(int max_weight);

    int max_weight() const { return max_weight_; }
    // Ψ_{c1} Ψ_{c2} ... expanded in Λ words.
    const NSymElem& psi_word(const LambdaWord& c) const;

    PsiExpansion to_psi_basis(const NSymElem& P) const;
    NSymElem from_psi_basis(const PsiExpansion& x) const;

    TensorElem coproduct(const NSymElem& P) const;
    Rational counit(const NSymElem& P) const;
    NSymElem antipode(const NSymElem& P) const;

private:
    int max_weight_;
    NcsfFamilies families_;
    mutable std::map<LambdaWord, NSymElem, WeightLexLess> cache_;
};

// Tensor helpers for Hopf axioms.
TensorElem tensor(const NSymElem& a, const NSymElem& b);
// Multiplication map a ⊗ b ↦ a·b, extended linearly.
NSymElem multiply_tensor(const TensorElem& x, int max_weight);

// Commutative polynomial in e_1, e_2, ...; a monomial is the sorted multiset of indices.
struct ClassicalSymPoly {
    std::map<std::vector<int>, Rational, WeightLexLess> terms;
    friend bool operator==(const ClassicalSymPoly&, const ClassicalSymPoly&) = default;
    std::string to_string() const;
};

// Λ_m ↦ e_m.
ClassicalSymPoly abelianize(const NSymElem& P);

} // namespace ncsys
