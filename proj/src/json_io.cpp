#include "ncsys/json_io.hpp"

namespace ncsys {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw SchemaError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

Rational coeff_from_json(const Json& v)
{
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    if (!v.is_string()) {
        throw SchemaError("coefficient must be a string \"p/q\" or an integer");
    }
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("bad coefficient: ") + e.what());
    }
}

Json header(const Ring& ring, int alpha)
{
    Json j;
    j["n"] = ring.n();
    j["commutative"] = ring.commutative();
    j["alpha"] = alpha;
    j["N_z"] = ring.max_z_degree();
    j["N_t"] = ring.max_t_degree();
    return j;
}

Json word_json(const Ring& ring, MonoIndex m)
{
    return ring.commutative() ? Json(ring.exponents(m)) : Json(ring.word(m));
}

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

Json series_to_json(const TruncSeries& u)
{
    const Ring& ring = u.ring();
    Json out = Json::array();
    for (const auto& term : u.terms()) {
        Json t;
        t["t"] = term.t;
        t[ring.commutative() ? "exps" : "word"] = word_json(ring, term.mono);
        t["coeff"] = to_string(term.coeff);
        out.push_back(std::move(t));
    }
    return out;
}

TruncSeries series_from_json(const Ring& ring, const Json& j)
{
    if (!j.is_array()) {
        throw SchemaError("series must be an array of terms");
    }
    std::vector<SeriesTerm> terms;
    for (const auto& t : j) {
        const int tp = int_field(t, "t");
        if (tp < 0 || tp > ring.max_t_degree()) {
            throw SchemaError("t-power " + std::to_string(tp) + " outside [0, N_t]");
        }
        Word w;
        if (t.contains("word")) {
            for (const auto& x : t.at("word")) {
                if (!x.is_number_integer()) {
                    throw SchemaError("word entries must be integers");
                }
                w.push_back(x.get<int>());
            }
        } else if (t.contains("exps")) {
            const auto& e = t.at("exps");
            if (!e.is_array() || static_cast<int>(e.size()) != ring.n()) {
                throw SchemaError("exps must list n exponents");
            }
            for (int i = 0; i < ring.n(); ++i) {
                if (!e[static_cast<std::size_t>(i)].is_number_integer() || e[static_cast<std::size_t>(i)].get<int>() < 0) {
                    throw SchemaError("exponents must be nonnegative integers");
                }
                w.insert(w.end(), static_cast<std::size_t>(e[static_cast<std::size_t>(i)].get<int>()), i);
            }
            if (!ring.commutative() && ring.n() > 1) {
                throw SchemaError("exps only allowed in commutative mode");
            }
        } else {
            throw SchemaError("term needs 'word' or 'exps'");
        }
        for (int letter : w) {
            if (letter < 0 || letter >= ring.n()) {
                throw SchemaError("variable index " + std::to_string(letter) + " out of range");
            }
        }
        if (static_cast<int>(w.size()) > ring.max_z_degree()) {
            throw SchemaError("monomial degree " + std::to_string(w.size()) + " exceeds N_z");
        }
        terms.push_back({tp, ring.index_of(w), coeff_from_json(field(t, "coeff"))});
    }
    return TruncSeries::from_terms(ring, std::move(terms));
}

Json vector_to_json(const SeriesVector& v)
{
    Json out = Json::array();
    for (const auto& c : v) {
        out.push_back(series_to_json(c));
    }
    return out;
}

SeriesVector vector_from_json(const Ring& ring, const Json& j)
{
    if (!j.is_array() || static_cast<int>(j.size()) != ring.n()) {
        throw SchemaError("expected " + std::to_string(ring.n()) + " component series");
    }
    SeriesVector out;
    for (const auto& c : j) {
        out.push_back(series_from_json(ring, c));
    }
    return out;
}

Ring ring_from_json(const Json& j)
{
    const Json& comm = field(j, "commutative");
    if (!comm.is_boolean()) {
        throw SchemaError("field 'commutative' must be a boolean");
    }
    try {
        return Ring(int_field(j, "n"), comm.get<bool>(), int_field(j, "N_z"), int_field(j, "N_t"));
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
}

Json automorphism_to_json(const Automorphism& F)
{
    Json j = header(F.ring(), F.alpha());
    j["H"] = vector_to_json(F.H());
    return j;
}

Automorphism automorphism_from_json(const Json& j)
{
    const Ring ring = ring_from_json(j);
    return Automorphism(int_field(j, "alpha"), vector_from_json(ring, field(j, "H")));
}

Json dlog_to_json(const DLog& d)
{
    Json j = header(d.ring(), d.alpha());
    j["a"] = vector_to_json(d.a());
    return j;
}

DLog dlog_from_json(const Json& j)
{
    const Ring ring = ring_from_json(j);
    return DLog(int_field(j, "alpha"), vector_from_json(ring, field(j, "a")));
}

Json derivation_to_json(const Derivation& delta) { return vector_to_json(delta.coeffs()); }

Json diffop_to_json(const DiffOp& op)
{
    Json j;
    if (op.symbolic()) {
        j["identity"] = to_string(op.identity_scalar());
        Json terms = Json::array();
        for (const auto& term : op.terms()) {
            Json t;
            t["scalar"] = to_string(term.scalar);
            Json word = Json::array();
            for (const auto& d : term.word) {
                word.push_back(derivation_to_json(*d));
            }
            t["word"] = std::move(word);
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        return j;
    }
    const Ring& ring = op.ring();
    Json action = Json::array();
    for (MonoIndex m = 0; m < ring.basis_size(); ++m) {
        if (op.column(m).is_zero()) {
            continue;
        }
        Json col;
        col[ring.commutative() ? "exps" : "word"] = word_json(ring, m);
        col["image"] = series_to_json(op.column(m));
        action.push_back(std::move(col));
    }
    j["action"] = std::move(action);
    return j;
}

Json nsym_to_json(const NSymElem& P)
{
    Json out = Json::array();
    for (const auto& [w, c] : P.terms()) {
        Json t;
        t["word"] = w;
        t["coeff"] = to_string(c);
        out.push_back(std::move(t));
    }
    return out;
}

NSymElem nsym_from_json(const Json& j, int max_weight)
{
    if (!j.is_array()) {
        throw SchemaError("NSym element must be an array of {word, coeff}");
    }
    NSymElem out(max_weight);
    for (const auto& t : j) {
        LambdaWord w;
        for (const auto& x : field(t, "word")) {
            if (!x.is_number_integer() || x.get<int>() < 1) {
                throw SchemaError("Λ indices must be integers >= 1");
            }
            w.push_back(x.get<int>());
        }
        if (weight(w) > max_weight) {
            throw SchemaError("word weight exceeds the truncation");
        }
        out.add_term(w, coeff_from_json(field(t, "coeff")));
    }
    return out;
}

Json reports_to_json(const std::vector<Report>& reports)
{
    Json out = Json::array();
    for (const auto& r : reports) {
        Json j;
        j["check"] = r.check;
        j["status"] = r.passed ? "pass" : "fail";
        if (!r.passed) {
            j["counterexample"] = r.counterexample;
        }
        out.push_back(std::move(j));
    }
    return out;
}

Json separation_to_json(const SeparationResult& result)
{
    Json j;
    if (result.witness) {
        const auto& w = *result.witness;
        const Ring& ring = w.F.ring();
        j["status"] = "witness";
        j["n"] = ring.n();
        j["automorphism"] = automorphism_to_json(w.F);
        j["u"] = word_json(ring, ring.index_of(w.u));
        j["value"] = series_to_json(w.value);
        j["attempts"] = result.attempts_used;
    } else {
        j["status"] = "inconclusive";
        j["attempts"] = result.attempts_used;
        j["max_n"] = result.max_n_tried;
    }
    return j;
}

} // namespace ncsys
