#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ncsys/series.hpp"

namespace ncsys {

namespace detail {

// Image of every basis monomial under a K[[t]]-linear operator.
struct ActionTable {
    std::vector<TruncSeries> columns;
    int t_precision = 0;
};

} // namespace detail

// The derivation [u ∂/∂z] = Σ_i [u_i ∂/∂z_i]: a K[[t]]-derivation sending z_i to
// u_i. On a word it replaces each occurrence of z_i in place by u_i, so in the
// noncommutative case [u ∂/∂z_i](z_j z_i) = z_j u, not u z_j.
//
// The basis action is computed at construction.
class Derivation {
public:
    explicit Derivation(SeriesVector coeffs);
    static Derivation zero(const Ring& ring);

    const Ring& ring() const { return coeffs_.front().ring(); }
    const SeriesVector& coeffs() const { return coeffs_; }
    const TruncSeries& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    int t_precision() const { return table_->t_precision; }

    TruncSeries apply(const TruncSeries& u) const;
    const TruncSeries& column(MonoIndex m) const { return table_->columns[m]; }

    // Every coefficient has z-order >= alpha, i.e. the derivation raises
    // z-degree by at least alpha - 1.
    bool in_der_alpha(int alpha) const;
    bool is_zero() const;

private:
    SeriesVector coeffs_;
    std::shared_ptr<const detail::ActionTable> table_;
};

TruncSeries apply_derivation(const Derivation& delta, const TruncSeries& u);

// phi ▷ delta: the derivation whose coefficients are phi applied to delta's.
Derivation triangle(const Derivation& phi, const Derivation& delta);

// K[[t]]-linear differential operator: c·id + Σ scalar·(δ_1 ∘ ... ∘ δ_k).
//
// The basis-action table is the normal form and decides equality. Composition
// words are kept for display while their count stays below
// kMaxSymbolicTerms; operators built directly from an action (or whose word
// expansion would grow past the cap) are non-symbolic.
class DiffOp {
public:
    static constexpr std::size_t kMaxSymbolicTerms = 2048;

    struct Term {
        Rational scalar;
        std::vector<std::shared_ptr<const Derivation>> word;
    };

    static DiffOp identity(const Ring& ring, const Rational& c = 1);
    static DiffOp zero(const Ring& ring);
    explicit DiffOp(const Derivation& delta);
    explicit DiffOp(std::shared_ptr<const Derivation> delta);
    // Word lists must be nonempty and share the ring.
    static DiffOp from_words(const Ring& ring, const Rational& identity, std::vector<Term> terms);
    static DiffOp from_action(const Ring& ring, std::vector<TruncSeries> columns, int t_precision);

    const Ring& ring() const { return ring_; }
    bool symbolic() const { return symbolic_; }
    const Rational& identity_scalar() const { return identity_; }
    const std::vector<Term>& terms() const { return terms_; }
    int t_precision() const { return table_->t_precision; }

    const TruncSeries& column(MonoIndex m) const { return table_->columns[m]; }
    TruncSeries apply(const TruncSeries& u) const;

    bool is_zero() const;
    // No column carries a positive power of t.
    bool is_t_free() const;
    DiffOp with_t_precision(int p) const;

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a);
    friend DiffOp operator*(const Rational& c, const DiffOp& a);
    // Composition: (a * b) u = a(b(u)).
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend DiffOp evaluate_words(const DiffOp& op);

private:
    DiffOp(Ring ring, Rational identity, std::vector<Term> terms, bool symbolic,
           std::shared_ptr<const detail::ActionTable> table);

    Ring ring_;
    Rational identity_;
    std::vector<Term> terms_;
    bool symbolic_ = true;
    std::shared_ptr<const detail::ActionTable> table_;
};

TruncSeries apply_op(const DiffOp& op, const TruncSeries& u);

// Rebuilds an operator's action from its composition words alone. Only
// meaningful for symbolic operators; used to cross-check the cached table.
DiffOp evaluate_words(const DiffOp& op);

enum class BplusRoute {
    // B+(δ1,...,δm) = δ1 B+(δ2,...,δm) - Σ_i B+(δ2,...,δ1 ▷ δi,...,δm); symbolic result.
    recursive,
    // Each δi replaces a distinct z-occurrence of the input, the replaced
    // positions being frozen against later replacements; action-only result.
    auxiliary,
};

DiffOp bplus(std::span<const Derivation> deltas, BplusRoute route);

// Truncated operator equality: same action on every monomial of degree <= N_z,
// compared through the smaller t-precision.
bool op_equal(const DiffOp& a, const DiffOp& b);
std::optional<MonoIndex> first_difference(const DiffOp& a, const DiffOp& b);

// Operator-valued t-series Σ_k t^k Φ_k with t-free coefficients Φ_k. Holds both
// the coefficient view and the total K[[t]]-linear action; products and
// equality use the total action.
class TDiffOp {
public:
    explicit TDiffOp(DiffOp total);
    static TDiffOp from_coefficients(const Ring& ring, std::map<int, DiffOp> coefficients, int t_precision);
    // t-dependent derivation split by t-power.
    static TDiffOp from_derivation(const Derivation& delta_t);
    static TDiffOp identity(const Ring& ring);
    static TDiffOp zero(const Ring& ring);

    const Ring& ring() const { return total_.ring(); }
    int t_precision() const { return total_.t_precision(); }
    const DiffOp& total() const { return total_; }
    const std::map<int, DiffOp>& coefficients() const { return coefficients_; }
    // Coefficient of t^k; the zero operator when absent. Throws when k exceeds
    // the precision.
    DiffOp coefficient(int k) const;

    // t -> -t.
    TDiffOp negate_t() const;
    TDiffOp d_dt() const;
    TDiffOp with_t_precision(int p) const;

    friend TDiffOp operator+(const TDiffOp& a, const TDiffOp& b) { return TDiffOp(a.total_ + b.total_); }
    friend TDiffOp operator-(const TDiffOp& a, const TDiffOp& b) { return TDiffOp(a.total_ - b.total_); }
    friend TDiffOp operator*(const Rational& c, const TDiffOp& a);
    friend TDiffOp operator*(const TDiffOp& a, const TDiffOp& b) { return TDiffOp(a.total_ * b.total_); }

private:
    TDiffOp(DiffOp total, std::map<int, DiffOp> coefficients);

    DiffOp total_;
    std::map<int, DiffOp> coefficients_;
};

TruncSeries apply_op(const TDiffOp& op, const TruncSeries& u);

bool op_equal(const TDiffOp& a, const TDiffOp& b);
std::optional<MonoIndex> first_difference(const TDiffOp& a, const TDiffOp& b);

// exp(D) for D with vanishing t^0 coefficient.
TDiffOp exp_tdiffop(const TDiffOp& D);
// log(G) for G with identity t^0 coefficient.
TDiffOp log_tdiffop(const TDiffOp& G);
// Multiplicative inverse of G with identity t^0 coefficient.
TDiffOp inverse_tdiffop(const TDiffOp& G);

} // namespace ncsys
