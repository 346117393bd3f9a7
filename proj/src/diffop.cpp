#include "ncsys/diffop.hpp"

#include <algorithm>
#include <bit>

namespace ncsys {

namespace {

using detail::ActionTable;
using detail::TermBuffer;

// Σ_{(t,w,c) in u} c t^k table(w).
TruncSeries apply_table(const Ring& ring, const ActionTable& table, const TruncSeries& u)
{
    require_same_ring(ring, u.ring(), "operator application");
    const int p = std::min(table.t_precision, u.t_precision());
    TermBuffer buf(p);
    for (const auto& term : u.terms()) {
        if (term.t > p) {
            break;
        }
        for (const auto& x : table.columns[term.mono].terms()) {
            if (term.t + x.t > p) {
                break;
            }
            buf.add_product(term.t + x.t, x.mono, term.coeff, x.coeff);
        }
    }
    return detail::make_series(ring, buf.finish(), p);
}

std::shared_ptr<const ActionTable> identity_table(const Ring& ring, const Rational& c)
{
    auto table = std::make_shared<ActionTable>();
    table->t_precision = ring.max_t_degree();
    table->columns.reserve(ring.basis_size());
    for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
        std::vector<SeriesTerm> terms;
        if (sgn(c) != 0) {
            terms.push_back({0, m, c});
        }
        table->columns.push_back(detail::make_series(ring, std::move(terms), table->t_precision));
    }
    return table;
}

std::shared_ptr<const ActionTable> derivation_table(const Ring& ring, const SeriesVector& coeffs)
{
    auto table = std::make_shared<ActionTable>();
    int p = ring.max_t_degree();
    for (const auto& c : coeffs) {
        p = std::min(p, c.t_precision());
    }
    table->t_precision = p;
    table->columns.reserve(ring.basis_size());
    for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
        const Word& w = ring.word(m);
        const std::span<const int> letters(w);
        TermBuffer buf(p);
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const MonoIndex prefix = ring.index_of(letters.subspan(0, pos));
            const MonoIndex suffix = ring.index_of(letters.subspan(pos + 1));
            for (const auto& term : coeffs[static_cast<std::size_t>(w[pos])].terms()) {
                const MonoIndex left = ring.mul(prefix, term.mono);
                if (left == kNoMonomial) {
                    continue;
                }
                buf.add(term.t, ring.mul(left, suffix), term.coeff);
            }
        }
        table->columns.push_back(detail::make_series(ring, buf.finish(), p));
    }
    return table;
}

std::shared_ptr<const ActionTable> compose_tables(const Ring& ring, const ActionTable& a, const ActionTable& b)
{
    auto table = std::make_shared<ActionTable>();
    table->t_precision = std::min(a.t_precision, b.t_precision);
    table->columns.reserve(b.columns.size());
    for (const auto& col : b.columns) {
        table->columns.push_back(apply_table(ring, a, col).with_t_precision(table->t_precision));
    }
    return table;
}

std::shared_ptr<const ActionTable> combine_tables(const ActionTable& a, const Rational& ca, const ActionTable& b,
                                                  const Rational& cb)
{
    auto table = std::make_shared<ActionTable>();
    table->t_precision = std::min(a.t_precision, b.t_precision);
    table->columns.reserve(a.columns.size());
    for (std::size_t m = 0; m < a.columns.size(); ++m) {
        TruncSeries col = a.columns[m] * ca;
        col += b.columns[m] * cb;
        table->columns.push_back(std::move(col));
    }
    return table;
}

std::vector<DiffOp::Term> scaled_terms(const std::vector<DiffOp::Term>& terms, const Rational& c)
{
    std::vector<DiffOp::Term> out;
    if (sgn(c) == 0) {
        return out;
    }
    out.reserve(terms.size());
    for (const auto& term : terms) {
        out.push_back({term.scalar * c, term.word});
    }
    return out;
}

DiffOp bplus_recursive(const std::vector<std::shared_ptr<const Derivation>>& deltas)
{
    if (deltas.size() == 1) {
        return DiffOp(deltas.front());
    }
    const auto& first = *deltas.front();
    std::vector<std::shared_ptr<const Derivation>> rest(deltas.begin() + 1, deltas.end());
    DiffOp result = DiffOp(deltas.front()) * bplus_recursive(rest);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        auto collapsed = rest;
        collapsed[i] = std::make_shared<const Derivation>(triangle(first, *rest[i]));
        result = result - bplus_recursive(collapsed);
    }
    return result;
}

// B₊(δ, ..., δ) with m copies: m! times the sum over m-subsets of positions.
DiffOp bplus_auxiliary_power(const Derivation& delta, std::size_t m)
{
    const Ring& ring = delta.ring();
    const int p = std::min(ring.max_t_degree(), delta.t_precision());
    Rational factorial = 1;
    for (std::size_t k = 2; k <= m; ++k) {
        factorial *= static_cast<unsigned long>(k);
    }
    const TruncSeries one = TruncSeries::constant(ring, 1).with_t_precision(p);
    std::vector<TruncSeries> columns;
    columns.reserve(ring.basis_size());
    for (MonoIndex mono = 0; mono < ring.basis_size(); ++mono) {
        const Word& w = ring.word(mono);
        if (w.size() < m) {
            columns.emplace_back(detail::make_series(ring, {}, p));
            continue;
        }
        std::vector<std::optional<TruncSeries>> partial(m + 1);
        partial[0] = one;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const std::size_t remaining_after = w.size() - pos - 1;
            const TruncSeries z = TruncSeries::variable(ring, w[pos]);
            std::vector<std::optional<TruncSeries>> next(m + 1);
            auto accumulate = [&](std::size_t used, TruncSeries value) {
                if (next[used]) {
                    *next[used] += value;
                } else {
                    next[used] = std::move(value);
                }
            };
            for (std::size_t used = 0; used <= m; ++used) {
                if (!partial[used]) {
                    continue;
                }
                if (m - used <= remaining_after) {
                    accumulate(used, *partial[used] * z);
                }
                if (used < m && m - used - 1 <= remaining_after) {
                    accumulate(used + 1, *partial[used] * delta.coeff(w[pos]));
                }
            }
            partial = std::move(next);
        }
        columns.push_back(partial[m] ? (*partial[m] * factorial).with_t_precision(p)
                                     : detail::make_series(ring, {}, p));
    }
    return DiffOp::from_action(ring, std::move(columns), p);
}

DiffOp bplus_auxiliary(std::span<const Derivation> deltas)
{
    const bool identical = std::all_of(deltas.begin(), deltas.end(),
                                       [&](const Derivation& d) { return d.coeffs() == deltas.front().coeffs(); });
    if (identical) {
        return bplus_auxiliary_power(deltas.front(), deltas.size());
    }
    const Ring& ring = deltas.front().ring();
    const std::size_t m = deltas.size();
    if (m > 16) {
        throw PreconditionError("bplus: at most 16 derivations on the auxiliary route");
    }
    int p = ring.max_t_degree();
    for (const auto& d : deltas) {
        p = std::min(p, d.t_precision());
    }
    const std::size_t full = (std::size_t{1} << m) - 1;
    const TruncSeries one = TruncSeries::constant(ring, 1).with_t_precision(p);

    std::vector<TruncSeries> columns;
    columns.reserve(ring.basis_size());
    for (MonoIndex mono = 0; mono < ring.basis_size(); ++mono) {
        const Word& w = ring.word(mono);
        if (w.size() < m) {
            columns.emplace_back(detail::make_series(ring, {}, p));
            continue;
        }
        // partial[mask]: the prefix processed so far with the derivations in
        // mask already substituted at distinct positions.
        std::vector<std::optional<TruncSeries>> partial(full + 1);
        partial[0] = one;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const int letter = w[pos];
            const std::size_t remaining_after = w.size() - pos - 1;
            const TruncSeries z = TruncSeries::variable(ring, letter);
            std::vector<std::optional<TruncSeries>> next(full + 1);
            auto accumulate = [&](std::size_t mask, TruncSeries value) {
                if (next[mask]) {
                    *next[mask] += value;
                } else {
                    next[mask] = std::move(value);
                }
            };
            for (std::size_t mask = 0; mask <= full; ++mask) {
                if (!partial[mask]) {
                    continue;
                }
                const auto used = static_cast<std::size_t>(std::popcount(mask));
                if (m - used <= remaining_after) {
                    accumulate(mask, *partial[mask] * z);
                }
                for (std::size_t i = 0; i < m; ++i) {
                    if ((mask >> i) & 1U) {
                        continue;
                    }
                    if (m - used - 1 > remaining_after) {
                        continue;
                    }
                    accumulate(mask | (std::size_t{1} << i), *partial[mask] * deltas[i].coeff(letter));
                }
            }
            partial = std::move(next);
        }
        columns.push_back(partial[full] ? partial[full]->with_t_precision(p) : detail::make_series(ring, {}, p));
    }
    return DiffOp::from_action(ring, std::move(columns), p);
}

} // namespace

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(SeriesVector coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw PreconditionError("derivation needs at least one coefficient");
    }
    const Ring& ring = coeffs_.front().ring();
    require_series_vector(ring, coeffs_, "derivation");
    table_ = derivation_table(ring, coeffs_);
}

Derivation Derivation::zero(const Ring& ring) { return Derivation(zero_vector(ring)); }

TruncSeries Derivation::apply(const TruncSeries& u) const { return apply_table(ring(), *table_, u); }

bool Derivation::in_der_alpha(int alpha) const { return orders(coeffs_).z_order >= alpha; }

bool Derivation::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

TruncSeries apply_derivation(const Derivation& delta, const TruncSeries& u) { return delta.apply(u); }

Derivation triangle(const Derivation& phi, const Derivation& delta)
{
    require_same_ring(phi.ring(), delta.ring(), "triangle");
    SeriesVector coeffs;
    coeffs.reserve(delta.coeffs().size());
    for (const auto& c : delta.coeffs()) {
        coeffs.push_back(phi.apply(c));
    }
    return Derivation(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// DiffOp

DiffOp::DiffOp(Ring ring, Rational identity, std::vector<Term> terms, bool symbolic,
               std::shared_ptr<const ActionTable> table)
    : ring_(std::move(ring)), identity_(std::move(identity)), terms_(std::move(terms)), symbolic_(symbolic),
      table_(std::move(table))
{
    if (!symbolic_) {
        identity_ = 0;
        terms_.clear();
    }
}

DiffOp DiffOp::identity(const Ring& ring, const Rational& c) { return DiffOp(ring, c, {}, true, identity_table(ring, c)); }

DiffOp DiffOp::zero(const Ring& ring) { return identity(ring, 0); }

DiffOp::DiffOp(const Derivation& delta) : DiffOp(std::make_shared<const Derivation>(delta)) {}

DiffOp::DiffOp(std::shared_ptr<const Derivation> delta) : ring_(delta->ring()), identity_(0)
{
    Rational one(1);
    auto table = std::make_shared<ActionTable>();
    table->t_precision = delta->t_precision();
    for (MonoIndex m = 0; m < ring_.basis_size(); ++m) {
        table->columns.push_back(delta->column(m));
    }
    table_ = std::move(table);
    terms_.push_back({one, {std::move(delta)}});
}

DiffOp DiffOp::from_words(const Ring& ring, const Rational& identity, std::vector<Term> terms)
{
    for (const auto& term : terms) {
        if (term.word.empty()) {
            throw PreconditionError("composition words must be nonempty");
        }
        for (const auto& d : term.word) {
            require_same_ring(ring, d->ring(), "operator word");
        }
    }
    return evaluate_words(DiffOp(ring, identity, std::move(terms), true, nullptr));
}

DiffOp DiffOp::from_action(const Ring& ring, std::vector<TruncSeries> columns, int t_precision)
{
    if (columns.size() != ring.basis_size()) {
        throw PreconditionError("action table size does not match the monomial basis");
    }
    auto table = std::make_shared<ActionTable>();
    table->t_precision = std::min(t_precision, ring.max_t_degree());
    for (auto& col : columns) {
        require_same_ring(ring, col.ring(), "action table");
        col = col.with_t_precision(table->t_precision);
    }
    table->columns = std::move(columns);
    return DiffOp(ring, 0, {}, false, std::move(table));
}

TruncSeries DiffOp::apply(const TruncSeries& u) const { return apply_table(ring_, *table_, u); }

bool DiffOp::is_zero() const
{
    return std::all_of(table_->columns.begin(), table_->columns.end(),
                       [](const TruncSeries& s) { return s.is_zero(); });
}

bool DiffOp::is_t_free() const
{
    for (const auto& col : table_->columns) {
        for (const auto& term : col.terms()) {
            if (term.t > 0) {
                return false;
            }
        }
    }
    return true;
}

DiffOp DiffOp::with_t_precision(int p) const
{
    if (p >= t_precision()) {
        return *this;
    }
    auto table = std::make_shared<ActionTable>();
    table->t_precision = p;
    for (const auto& col : table_->columns) {
        table->columns.push_back(col.with_t_precision(p));
    }
    return DiffOp(ring_, identity_, terms_, symbolic_, std::move(table));
}

DiffOp operator+(const DiffOp& a, const DiffOp& b)
{
    require_same_ring(a.ring_, b.ring_, "operator sum");
    const bool symbolic = a.symbolic_ && b.symbolic_ && a.terms_.size() + b.terms_.size() <= DiffOp::kMaxSymbolicTerms;
    std::vector<DiffOp::Term> terms;
    if (symbolic) {
        terms = a.terms_;
        terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    }
    return DiffOp(a.ring_, a.identity_ + b.identity_, std::move(terms), symbolic,
                  combine_tables(*a.table_, 1, *b.table_, 1));
}

DiffOp operator-(const DiffOp& a) { return Rational(-1) * a; }

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator*(const Rational& c, const DiffOp& a)
{
    return DiffOp(a.ring_, a.identity_ * c, scaled_terms(a.terms_, c), a.symbolic_,
                  combine_tables(*a.table_, c, *a.table_, 0));
}

DiffOp operator*(const DiffOp& a, const DiffOp& b)
{
    require_same_ring(a.ring_, b.ring_, "operator composition");
    bool symbolic = a.symbolic_ && b.symbolic_ &&
                    a.terms_.size() * b.terms_.size() + a.terms_.size() + b.terms_.size() <= DiffOp::kMaxSymbolicTerms;
    std::vector<DiffOp::Term> terms;
    if (symbolic) {
        // (a0 + Σ A)(b0 + Σ B) = a0 b0 + a0 Σ B + b0 Σ A + Σ A B
        terms = scaled_terms(b.terms_, a.identity_);
        auto from_a = scaled_terms(a.terms_, b.identity_);
        terms.insert(terms.end(), from_a.begin(), from_a.end());
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                DiffOp::Term term{x.scalar * y.scalar, x.word};
                term.word.insert(term.word.end(), y.word.begin(), y.word.end());
                terms.push_back(std::move(term));
            }
        }
    }
    return DiffOp(a.ring_, a.identity_ * b.identity_, std::move(terms), symbolic,
                  compose_tables(a.ring_, *a.table_, *b.table_));
}

TruncSeries apply_op(const DiffOp& op, const TruncSeries& u) { return op.apply(u); }

DiffOp evaluate_words(const DiffOp& op)
{
    if (!op.symbolic()) {
        throw PreconditionError("evaluate_words: operator has no composition words");
    }
    const Ring& ring = op.ring();
    int p = ring.max_t_degree();
    for (const auto& term : op.terms()) {
        for (const auto& d : term.word) {
            p = std::min(p, d->t_precision());
        }
    }
    std::vector<TruncSeries> columns;
    columns.reserve(ring.basis_size());
    for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
        const TruncSeries basis = detail::make_series(ring, {{0, m, Rational(1)}}, p);
        TruncSeries col = basis * op.identity_scalar();
        for (const auto& term : op.terms()) {
            TruncSeries v = basis;
            for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
                v = (*it)->apply(v);
            }
            col += v * term.scalar;
        }
        columns.push_back(std::move(col));
    }
    auto table = std::make_shared<ActionTable>();
    table->t_precision = p;
    table->columns = std::move(columns);
    return DiffOp(ring, op.identity_scalar(), op.terms(), true, std::move(table));
}

DiffOp bplus(std::span<const Derivation> deltas, BplusRoute route)
{
    if (deltas.empty()) {
        throw PreconditionError("bplus needs at least one derivation");
    }
    for (const auto& d : deltas) {
        require_same_ring(deltas.front().ring(), d.ring(), "bplus");
    }
    if (route == BplusRoute::auxiliary) {
        return bplus_auxiliary(deltas);
    }
    std::vector<std::shared_ptr<const Derivation>> shared;
    shared.reserve(deltas.size());
    for (const auto& d : deltas) {
        shared.push_back(std::make_shared<const Derivation>(d));
    }
    return bplus_recursive(shared);
}

std::optional<MonoIndex> first_difference(const DiffOp& a, const DiffOp& b)
{
    require_same_ring(a.ring(), b.ring(), "operator comparison");
    for (MonoIndex m = 0; m < a.ring().basis_size(); ++m) {
        if (!(a.column(m) == b.column(m))) {
            return m;
        }
    }
    return std::nullopt;
}

bool op_equal(const DiffOp& a, const DiffOp& b) { return !first_difference(a, b).has_value(); }

// ---------------------------------------------------------------------------
// TDiffOp

namespace {

std::map<int, DiffOp> split_by_t(const DiffOp& total)
{
    const Ring& ring = total.ring();
    std::map<int, std::vector<std::vector<SeriesTerm>>> slices;
    for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
        for (const auto& term : total.column(m).terms()) {
            auto& cols = slices[term.t];
            if (cols.empty()) {
                cols.resize(ring.basis_size());
            }
            cols[m].push_back({0, term.mono, term.coeff});
        }
    }
    std::map<int, DiffOp> out;
    for (auto& [k, cols] : slices) {
        std::vector<TruncSeries> columns;
        columns.reserve(cols.size());
        for (auto& c : cols) {
            columns.push_back(detail::make_series(ring, std::move(c), ring.max_t_degree()));
        }
        out.emplace(k, DiffOp::from_action(ring, std::move(columns), ring.max_t_degree()));
    }
    return out;
}

} // namespace

TDiffOp::TDiffOp(DiffOp total, std::map<int, DiffOp> coefficients)
    : total_(std::move(total)), coefficients_(std::move(coefficients))
{
}

TDiffOp::TDiffOp(DiffOp total) : total_(std::move(total)), coefficients_(split_by_t(total_)) {}

TDiffOp TDiffOp::from_coefficients(const Ring& ring, std::map<int, DiffOp> coefficients, int t_precision)
{
    const int p = std::min(t_precision, ring.max_t_degree());
    std::vector<TermBuffer> bufs(ring.basis_size(), TermBuffer(p));
    std::map<int, DiffOp> kept;
    for (auto& [k, op] : coefficients) {
        require_same_ring(ring, op.ring(), "t-series operator");
        if (k < 0) {
            throw PreconditionError("negative t-power in operator series");
        }
        if (!op.is_t_free()) {
            throw PreconditionError("operator series coefficients must be t-free");
        }
        if (k > p || op.is_zero()) {
            continue;
        }
        for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
            for (const auto& term : op.column(m).terms()) {
                bufs[m].add(k, term.mono, term.coeff);
            }
        }
        kept.emplace(k, std::move(op));
    }
    std::vector<TruncSeries> columns;
    columns.reserve(ring.basis_size());
    for (auto& buf : bufs) {
        columns.push_back(detail::make_series(ring, buf.finish(), p));
    }
    return TDiffOp(DiffOp::from_action(ring, std::move(columns), p), std::move(kept));
}

TDiffOp TDiffOp::from_derivation(const Derivation& delta_t)
{
    const Ring& ring = delta_t.ring();
    std::map<int, DiffOp> coefficients;
    for (int k = 0; k <= delta_t.t_precision(); ++k) {
        SeriesVector slice;
        bool nonzero = false;
        for (const auto& c : delta_t.coeffs()) {
            slice.push_back(c.t_slice(k));
            nonzero = nonzero || !slice.back().is_zero();
        }
        if (nonzero) {
            coefficients.emplace(k, DiffOp(Derivation(std::move(slice))));
        }
    }
    return from_coefficients(ring, std::move(coefficients), delta_t.t_precision());
}

TDiffOp TDiffOp::identity(const Ring& ring)
{
    std::map<int, DiffOp> c;
    c.emplace(0, DiffOp::identity(ring));
    return from_coefficients(ring, std::move(c), ring.max_t_degree());
}

TDiffOp TDiffOp::zero(const Ring& ring) { return from_coefficients(ring, {}, ring.max_t_degree()); }

DiffOp TDiffOp::coefficient(int k) const
{
    if (k > t_precision()) {
        throw PreconditionError("coefficient t^" + std::to_string(k) + " beyond operator precision t^" +
                                std::to_string(t_precision()));
    }
    if (auto it = coefficients_.find(k); it != coefficients_.end()) {
        return it->second;
    }
    return DiffOp::zero(ring());
}

TDiffOp TDiffOp::negate_t() const
{
    std::map<int, DiffOp> c;
    for (const auto& [k, op] : coefficients_) {
        c.emplace(k, k % 2 == 0 ? op : -op);
    }
    return from_coefficients(ring(), std::move(c), t_precision());
}

TDiffOp TDiffOp::d_dt() const
{
    std::map<int, DiffOp> c;
    for (const auto& [k, op] : coefficients_) {
        if (k > 0) {
            c.emplace(k - 1, Rational(k) * op);
        }
    }
    return from_coefficients(ring(), std::move(c), t_precision() - 1);
}

TDiffOp TDiffOp::with_t_precision(int p) const
{
    std::map<int, DiffOp> c;
    for (const auto& [k, op] : coefficients_) {
        if (k <= p) {
            c.emplace(k, op);
        }
    }
    return TDiffOp(total_.with_t_precision(p), std::move(c));
}

TDiffOp operator*(const Rational& c, const TDiffOp& a)
{
    std::map<int, DiffOp> coeffs;
    for (const auto& [k, op] : a.coefficients_) {
        coeffs.emplace(k, c * op);
    }
    return TDiffOp::from_coefficients(a.ring(), std::move(coeffs), a.t_precision());
}

TruncSeries apply_op(const TDiffOp& op, const TruncSeries& u) { return op.total().apply(u); }

std::optional<MonoIndex> first_difference(const TDiffOp& a, const TDiffOp& b)
{
    return first_difference(a.total(), b.total());
}

bool op_equal(const TDiffOp& a, const TDiffOp& b) { return op_equal(a.total(), b.total()); }

namespace {

void require_identity_constant(const TDiffOp& G, const char* what)
{
    if (!op_equal(G.coefficient(0), DiffOp::identity(G.ring()))) {
        throw PreconditionError(std::string(what) + ": t^0 coefficient must be the identity");
    }
}

} // namespace

TDiffOp exp_tdiffop(const TDiffOp& D)
{
    if (!D.coefficient(0).is_zero()) {
        throw PreconditionError("exp: t^0 coefficient must vanish");
    }
    const Ring& ring = D.ring();
    TDiffOp sum = TDiffOp::identity(ring).with_t_precision(D.t_precision());
    TDiffOp power = sum;
    for (int k = 1; k <= D.t_precision(); ++k) {
        power = Rational(1, k) * (power * D);
        sum = sum + power;
    }
    return sum;
}

TDiffOp log_tdiffop(const TDiffOp& G)
{
    require_identity_constant(G, "log");
    const Ring& ring = G.ring();
    const TDiffOp X = G - TDiffOp::identity(ring);
    TDiffOp sum = TDiffOp::zero(ring).with_t_precision(G.t_precision());
    TDiffOp power = X;
    for (int k = 1; k <= G.t_precision(); ++k) {
        const Rational c(k % 2 == 1 ? 1 : -1, k);
        sum = sum + c * power;
        power = power * X;
    }
    return sum;
}

TDiffOp inverse_tdiffop(const TDiffOp& G)
{
    require_identity_constant(G, "inverse");
    const Ring& ring = G.ring();
    const TDiffOp Y = TDiffOp::identity(ring) - G;
    TDiffOp sum = TDiffOp::identity(ring).with_t_precision(G.t_precision());
    TDiffOp power = sum;
    for (int k = 1; k <= G.t_precision(); ++k) {
        power = power * Y;
        sum = sum + power;
    }
    return sum;
}

} // namespace ncsys
