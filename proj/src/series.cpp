#include "ncsys/series.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ncsys {

namespace detail {

std::vector<SeriesTerm> TermBuffer::finish()
{
    std::sort(terms_.begin(), terms_.end(), [](const SeriesTerm& a, const SeriesTerm& b) {
        return a.t != b.t ? a.t < b.t : a.mono < b.mono;
    });
    std::vector<SeriesTerm> out;
    out.reserve(terms_.size());
    for (auto& term : terms_) {
        if (!out.empty() && out.back().t == term.t && out.back().mono == term.mono) {
            out.back().coeff += term.coeff;
            continue;
        }
        if (!out.empty() && sgn(out.back().coeff) == 0) {
            out.pop_back();
        }
        out.push_back(std::move(term));
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) {
        out.pop_back();
    }
    terms_.clear();
    return out;
}

TruncSeries make_series(const Ring& ring, std::vector<SeriesTerm> canonical, int t_precision)
{
    TruncSeries s(ring);
    s.t_precision_ = t_precision;
    s.terms_ = std::move(canonical);
    return s;
}

} // namespace detail

namespace {

bool key_less(const SeriesTerm& a, const SeriesTerm& b) { return a.t != b.t ? a.t < b.t : a.mono < b.mono; }

// Merges two canonical term lists, scaling the second by sign.
std::vector<SeriesTerm> merge_terms(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b, int sign,
                                    int t_limit)
{
    std::vector<SeriesTerm> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    auto push_b = [&](const SeriesTerm& term) {
        if (sign > 0) {
            out.push_back(term);
        } else {
            out.push_back({term.t, term.mono, -term.coeff});
        }
    };
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && key_less(*ia, *ib))) {
            if (ia->t <= t_limit) {
                out.push_back(*ia);
            }
            ++ia;
        } else if (ia == a.end() || key_less(*ib, *ia)) {
            if (ib->t <= t_limit) {
                push_b(*ib);
            }
            ++ib;
        } else {
            if (ia->t <= t_limit) {
                Rational c = sign > 0 ? Rational(ia->coeff + ib->coeff) : Rational(ia->coeff - ib->coeff);
                if (sgn(c) != 0) {
                    out.push_back({ia->t, ia->mono, std::move(c)});
                }
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

std::string variable_name(const Ring& ring, int i)
{
    return ring.n() == 1 ? std::string("z") : "z" + std::to_string(i + 1);
}

std::string render_word(const Ring& ring, const Word& w)
{
    std::string out;
    std::size_t p = 0;
    while (p < w.size()) {
        std::size_t q = p;
        while (q < w.size() && w[q] == w[p]) {
            ++q;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += variable_name(ring, w[p]);
        if (q - p > 1) {
            out += "^" + std::to_string(q - p);
        }
        p = q;
    }
    return out;
}

} // namespace

TruncSeries::TruncSeries(Ring ring) : ring_(std::move(ring)), t_precision_(ring_.max_t_degree()) {}

TruncSeries TruncSeries::constant(const Ring& ring, const Rational& c)
{
    TruncSeries s(ring);
    if (sgn(c) != 0) {
        s.terms_.push_back({0, ring.one(), c});
    }
    return s;
}

TruncSeries TruncSeries::variable(const Ring& ring, int i)
{
    TruncSeries s(ring);
    s.terms_.push_back({0, ring.variable(i), Rational(1)});
    return s;
}

TruncSeries TruncSeries::monomial(const Ring& ring, int t_power, const Word& word, const Rational& c)
{
    if (t_power < 0) {
        throw PreconditionError("negative t-power");
    }
    TruncSeries s(ring);
    const MonoIndex m = ring.index_of(word);
    if (sgn(c) != 0 && m != kNoMonomial && t_power <= ring.max_t_degree()) {
        s.terms_.push_back({t_power, m, c});
    }
    return s;
}

TruncSeries TruncSeries::from_terms(const Ring& ring, std::vector<SeriesTerm> terms, int t_precision)
{
    const int p = t_precision < 0 ? ring.max_t_degree() : std::min(t_precision, ring.max_t_degree());
    detail::TermBuffer buf(p);
    for (auto& term : terms) {
        if (term.t < 0) {
            throw PreconditionError("negative t-power");
        }
        if (term.mono != kNoMonomial && term.mono >= ring.basis_size()) {
            throw PreconditionError("monomial index out of range");
        }
        buf.add(term.t, term.mono, std::move(term.coeff));
    }
    return detail::make_series(ring, buf.finish(), p);
}

Rational TruncSeries::coeff(int t_power, const Word& word) const
{
    const MonoIndex m = ring_.index_of(word);
    if (m == kNoMonomial) {
        return 0;
    }
    SeriesTerm key{t_power, m, Rational(0)};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
    if (it != terms_.end() && it->t == t_power && it->mono == m) {
        return it->coeff;
    }
    return 0;
}

TruncSeries TruncSeries::t_slice(int k) const
{
    TruncSeries s(ring_);
    for (const auto& term : terms_) {
        if (term.t == k) {
            s.terms_.push_back({0, term.mono, term.coeff});
        }
    }
    return s;
}

TruncSeries TruncSeries::shift_t(int k) const
{
    TruncSeries s(ring_);
    s.t_precision_ = t_precision_;
    for (const auto& term : terms_) {
        if (term.t + k <= t_precision_) {
            s.terms_.push_back({term.t + k, term.mono, term.coeff});
        }
    }
    return s;
}

TruncSeries TruncSeries::with_t_precision(int p) const
{
    TruncSeries s(ring_);
    s.t_precision_ = std::min(p, ring_.max_t_degree());
    for (const auto& term : terms_) {
        if (term.t <= s.t_precision_) {
            s.terms_.push_back(term);
        }
    }
    return s;
}

TruncSeries TruncSeries::z_homogeneous_part(int d) const
{
    TruncSeries s(ring_);
    s.t_precision_ = t_precision_;
    for (const auto& term : terms_) {
        if (ring_.degree(term.mono) == d) {
            s.terms_.push_back(term);
        }
    }
    return s;
}

bool TruncSeries::has_z_constant_term() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const SeriesTerm& term) { return term.mono == 0; });
}

std::string TruncSeries::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& term : terms_) {
        const bool negative = sgn(term.coeff) < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const Rational mag = abs(term.coeff);
        std::string tpart;
        if (term.t == 1) {
            tpart = "t";
        } else if (term.t > 1) {
            tpart = "t^" + std::to_string(term.t);
        }
        const std::string zpart = render_word(ring_, ring_.word(term.mono));
        std::string body = tpart;
        if (!tpart.empty() && !zpart.empty()) {
            body += "*";
        }
        body += zpart;

        if (body.empty()) {
            out += ncsys::to_string(mag);
        } else if (mag == 1) {
            out += body;
        } else if (is_integer(mag) && !tpart.empty()) {
            out += ncsys::to_string(mag) + body;
        } else {
            out += ncsys::to_string(mag) + "*" + body;
        }
    }
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other)
{
    require_same_ring(ring_, other.ring_, "series addition");
    t_precision_ = std::min(t_precision_, other.t_precision_);
    terms_ = merge_terms(terms_, other.terms_, +1, t_precision_);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other)
{
    require_same_ring(ring_, other.ring_, "series subtraction");
    t_precision_ = std::min(t_precision_, other.t_precision_);
    terms_ = merge_terms(terms_, other.terms_, -1, t_precision_);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.coeff *= c;
    }
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    require_same_ring(a.ring_, b.ring_, "series product");
    const int p = std::min(a.t_precision_, b.t_precision_);
    const Ring& ring = a.ring_;
    detail::TermBuffer buf(p);
    for (const auto& x : a.terms_) {
        if (x.t > p) {
            break;
        }
        for (const auto& y : b.terms_) {
            if (x.t + y.t > p) {
                break;
            }
            buf.add_product(x.t + y.t, ring.mul(x.mono, y.mono), x.coeff, y.coeff);
        }
    }
    return detail::make_series(ring, buf.finish(), p);
}

bool operator==(const TruncSeries& a, const TruncSeries& b)
{
    if (!(a.ring_ == b.ring_)) {
        return false;
    }
    const int p = std::min(a.t_precision_, b.t_precision_);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (true) {
        const bool end_a = ia == a.terms_.end() || ia->t > p;
        const bool end_b = ib == b.terms_.end() || ib->t > p;
        if (end_a || end_b) {
            return end_a && end_b;
        }
        if (ia->t != ib->t || ia->mono != ib->mono || ia->coeff != ib->coeff) {
            return false;
        }
        ++ia;
        ++ib;
    }
}

void require_series_vector(const Ring& ring, const SeriesVector& v, const char* what)
{
    if (static_cast<int>(v.size()) != ring.n()) {
        throw ContextMismatch(std::string(what) + ": expected " + std::to_string(ring.n()) + " components, got " +
                              std::to_string(v.size()));
    }
    for (const auto& s : v) {
        require_same_ring(ring, s.ring(), what);
    }
}

SeriesVector zero_vector(const Ring& ring) { return SeriesVector(static_cast<std::size_t>(ring.n()), TruncSeries(ring)); }

SeriesVector identity_vector(const Ring& ring)
{
    SeriesVector v;
    for (int i = 0; i < ring.n(); ++i) {
        v.push_back(TruncSeries::variable(ring, i));
    }
    return v;
}

TruncSeries substitute(const TruncSeries& u, const SeriesVector& F)
{
    const Ring& ring = u.ring();
    require_series_vector(ring, F, "substitute");
    int p = u.t_precision();
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i].has_z_constant_term()) {
            throw PreconditionError("substitute: component " + std::to_string(i) +
                                    " has a nonzero constant term in z");
        }
        p = std::min(p, F[i].t_precision());
    }

    // Images of monomials, built right to left: w(F) = F_{w0} * (w[1:])(F).
    std::unordered_map<MonoIndex, TruncSeries> images;
    auto image = [&](auto&& self, MonoIndex m) -> const TruncSeries& {
        if (auto it = images.find(m); it != images.end()) {
            return it->second;
        }
        const Word& w = ring.word(m);
        TruncSeries value = w.empty() ? TruncSeries::constant(ring, 1).with_t_precision(p)
                                      : F[w.front()] * self(self, ring.index_of(std::span(w).subspan(1)));
        return images.emplace(m, std::move(value)).first->second;
    };

    detail::TermBuffer buf(p);
    for (const auto& term : u.terms()) {
        if (term.t > p) {
            break;
        }
        for (const auto& x : image(image, term.mono).terms()) {
            if (term.t + x.t > p) {
                break;
            }
            buf.add_product(term.t + x.t, x.mono, term.coeff, x.coeff);
        }
    }
    return detail::make_series(ring, buf.finish(), p);
}

SeriesVector substitute(const SeriesVector& u, const SeriesVector& F)
{
    SeriesVector out;
    out.reserve(u.size());
    for (const auto& component : u) {
        out.push_back(substitute(component, F));
    }
    return out;
}

TruncSeries t_derivative(const TruncSeries& u)
{
    std::vector<SeriesTerm> terms;
    for (const auto& term : u.terms()) {
        if (term.t > 0) {
            terms.push_back({term.t - 1, term.mono, term.coeff * term.t});
        }
    }
    return detail::make_series(u.ring(), std::move(terms), u.t_precision() - 1);
}

Orders orders(const TruncSeries& u)
{
    Orders o{kInfiniteOrder, kInfiniteOrder};
    for (const auto& term : u.terms()) {
        o.z_order = std::min(o.z_order, u.ring().degree(term.mono));
        o.t_order = std::min(o.t_order, term.t);
    }
    return o;
}

Orders orders(const SeriesVector& v)
{
    Orders o{kInfiniteOrder, kInfiniteOrder};
    for (const auto& s : v) {
        const Orders x = orders(s);
        o.z_order = std::min(o.z_order, x.z_order);
        o.t_order = std::min(o.t_order, x.t_order);
    }
    return o;
}

} // namespace ncsys
