#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ncsys/rational.hpp"
#include "ncsys/ring.hpp"

namespace ncsys {

struct SeriesTerm {
    int t;
    MonoIndex mono;
    Rational coeff;
};

class TruncSeries;

namespace detail {
// Builds a series from already canonical terms.
TruncSeries make_series(const Ring& ring, std::vector<SeriesTerm> canonical, int t_precision);
} // namespace detail

// Exact element of K[[t]]<<z>> truncated at (max_z, max_t).
//
// Terms are kept sorted by (t, monomial index), i.e. by (t-power, z-degree,
// lexicographic word), with no zero coefficients. t_precision() is the highest
// t-power whose coefficient is known exactly; it equals max_t except after
// t-differentiation, and no term is stored above it. Equality compares
// coefficients through the smaller of the two precisions.
class TruncSeries {
public:
    explicit TruncSeries(Ring ring);

    static TruncSeries constant(const Ring& ring, const Rational& c);
    static TruncSeries variable(const Ring& ring, int i);
    static TruncSeries monomial(const Ring& ring, int t_power, const Word& word, const Rational& c = 1);
    // Unsorted terms with possible repeats; merged and truncated here.
    static TruncSeries from_terms(const Ring& ring, std::vector<SeriesTerm> terms, int t_precision = -1);

    const Ring& ring() const { return ring_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int t_precision() const { return t_precision_; }

    Rational coeff(int t_power, const Word& word) const;
    // Coefficient of t^k, as a t-free series.
    TruncSeries t_slice(int k) const;
    // Multiply by t^k.
    TruncSeries shift_t(int k) const;
    TruncSeries with_t_precision(int p) const;
    // Drops every term of z-degree other than d.
    TruncSeries z_homogeneous_part(int d) const;
    bool has_z_constant_term() const;

    std::string to_string() const;

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const Rational& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    friend TruncSeries detail::make_series(const Ring&, std::vector<SeriesTerm>, int);

    Ring ring_;
    int t_precision_;
    std::vector<SeriesTerm> terms_;
};

// n series over one ring; used for H_t, M_t, a_t, derivation coefficients.
using SeriesVector = std::vector<TruncSeries>;

// Throws ContextMismatch unless v has ring.n() components over ring.
void require_series_vector(const Ring& ring, const SeriesVector& v, const char* what);
SeriesVector zero_vector(const Ring& ring);
SeriesVector identity_vector(const Ring& ring);

// u(F_1, ..., F_n): every z_i occurrence replaced in place by F_i.
TruncSeries substitute(const TruncSeries& u, const SeriesVector& F);
SeriesVector substitute(const SeriesVector& u, const SeriesVector& F);

// Termwise d/dt; the result is exact through t^(p-1) for input precision p.
TruncSeries t_derivative(const TruncSeries& u);

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

struct Orders {
    int z_order;
    int t_order;
    friend bool operator==(const Orders&, const Orders&) = default;
};

// Minimal z- and t-degree over nonzero terms; (inf, inf) for zero.
Orders orders(const TruncSeries& u);
// Minimum over components.
Orders orders(const SeriesVector& v);

namespace detail {

// Accumulates unsorted terms; finish() sorts, merges and drops zeros.
class TermBuffer {
public:
    explicit TermBuffer(int t_limit) : t_limit_(t_limit) {}
    void add(int t, MonoIndex mono, Rational c)
    {
        if (t <= t_limit_ && mono != kNoMonomial) {
            terms_.push_back({t, mono, std::move(c)});
        }
    }
    void add_product(int t, MonoIndex mono, const Rational& a, const Rational& b)
    {
        if (t <= t_limit_ && mono != kNoMonomial) {
            terms_.push_back({t, mono, a * b});
        }
    }
    std::vector<SeriesTerm> finish();
    std::size_t size() const { return terms_.size(); }

private:
    int t_limit_;
    std::vector<SeriesTerm> terms_;
};

} // namespace detail

} // namespace ncsys
