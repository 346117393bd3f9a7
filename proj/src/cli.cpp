#include "ncsys/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncsys/json_io.hpp"

namespace ncsys {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240531;
constexpr int kMaxWeight = 12;
constexpr int kMaxZ = 10;
constexpr int kMaxT = 10;

struct Options {
    int n = 2;
    bool commutative = false;
    int alpha = 2;
    int nz = 6;
    int nt = 4;
    int nw = 4;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    int trials = 2;
    bool override_guards = false;
    std::string suite = "all";
    bool tamper = false;
    int max_n = 3;
    int attempts = 200;
    std::string family = "all";
    std::vector<std::string> inputs;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_input(const std::string& arg)
{
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        return arg;
    }
    std::ostringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(arg);
    if (!in) {
        throw UsageError("cannot read input '" + arg + "'");
    }
    buf << in.rdbuf();
    return buf.str();
}

Json input_json(const Options& o, std::size_t i)
{
    if (o.inputs.size() <= i) {
        throw UsageError("missing input argument");
    }
    return parse_json(read_input(o.inputs[i]));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string header_text(const Ring& ring, int alpha)
{
    std::ostringstream os;
    os << "n=" << ring.n() << " " << (ring.commutative() ? "commutative" : "noncommutative") << " alpha=" << alpha
       << " N_z=" << ring.max_z_degree() << " N_t=" << ring.max_t_degree() << "\n";
    return os.str();
}

void emit_vector(std::ostream& out, const Options& o, const Json& doc, const std::string& name,
                 const SeriesVector& v, const Ring& ring, int alpha)
{
    if (o.format == "json") {
        emit(out, doc);
        return;
    }
    out << header_text(ring, alpha);
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << name << (ring.n() > 1 ? std::to_string(i + 1) : "") << " = " << v[i].to_string() << "\n";
    }
}

void check_guards(const Options& o, const Ring& ring)
{
    if (!o.override_guards && (ring.max_z_degree() > kMaxZ || ring.max_t_degree() > kMaxT)) {
        throw UsageError("N_z or N_t above the cost guard (" + std::to_string(kMaxZ) + ", " + std::to_string(kMaxT) +
                         "); pass --override-guards to proceed");
    }
}

int cmd_invert(const Options& o, std::ostream& out)
{
    const Automorphism F = automorphism_from_json(input_json(o, 0));
    check_guards(o, F.ring());
    const Automorphism G = invert(F);
    if (o.format == "text") {
        emit_vector(out, o, {}, "M", inverse_shift(F), F.ring(), F.alpha());
    } else {
        emit(out, automorphism_to_json(G));
    }
    return 0;
}

int cmd_dlog(const Options& o, std::ostream& out)
{
    const Automorphism F = automorphism_from_json(input_json(o, 0));
    check_guards(o, F.ring());
    const DLog d = dlog(F);
    emit_vector(out, o, dlog_to_json(d), "a", d.a(), d.ring(), d.alpha());
    return 0;
}

int cmd_exp(const Options& o, std::ostream& out)
{
    const DLog d = dlog_from_json(input_json(o, 0));
    check_guards(o, d.ring());
    const Automorphism F = exp_derivation(d);
    emit_vector(out, o, automorphism_to_json(F), "H", F.H(), F.ring(), F.alpha());
    return 0;
}

int cmd_compose(const Options& o, std::ostream& out)
{
    const Automorphism U = automorphism_from_json(input_json(o, 0));
    const Automorphism V = automorphism_from_json(input_json(o, 1));
    check_guards(o, U.ring());
    const Automorphism W = compose(U, V);
    emit_vector(out, o, automorphism_to_json(W), "H", W.H(), W.ring(), W.alpha());
    return 0;
}

int cmd_nsym(const Options& o, std::ostream& out)
{
    if (o.nw < 0) {
        throw UsageError("--nw must be >= 0");
    }
    if (o.nw > kMaxWeight && !o.override_guards) {
        throw UsageError("N_w above the cost guard (" + std::to_string(kMaxWeight) +
                         "); pass --override-guards to proceed");
    }
    std::vector<std::string> names{"S", "Phi", "Psi", "Xi"};
    if (o.family != "all") {
        if (o.family != "Lambda" && std::find(names.begin(), names.end(), o.family) == names.end()) {
            throw UsageError("unknown family '" + o.family + "'");
        }
        names = {o.family};
    }
    const NcsfFamilies fam = solve_pi(o.nw);
    Json table = Json::array();
    for (const auto& name : names) {
        for (int m = 1; m <= o.nw; ++m) {
            const NSymElem e = fam.family(name, m);
            if (o.format == "text") {
                out << name << "_" << m << " = " << e.to_string() << "\n";
            } else {
                Json row;
                row["family"] = name;
                row["m"] = m;
                row["terms"] = nsym_to_json(e);
                table.push_back(std::move(row));
            }
        }
    }
    if (o.format == "json") {
        emit(out, table);
    }
    return 0;
}

std::vector<Report> prefixed(std::vector<Report> reports, const std::string& prefix)
{
    for (auto& r : reports) {
        r.check = prefix + r.check;
    }
    return reports;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    static const std::vector<std::string> suites{"ncs", "correspondence", "group", "graded", "hopf-action"};
    std::vector<std::string> selected;
    if (o.suite == "all") {
        selected = suites;
    } else if (std::find(suites.begin(), suites.end(), o.suite) != suites.end()) {
        selected = {o.suite};
    } else {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    if (o.trials < 0) {
        throw UsageError("--trials must be >= 0");
    }
    const Ring ring(o.n, o.commutative, o.nz, o.nt);
    check_guards(o, ring);
    std::vector<Report> all;
    for (int trial = 0; trial < o.trials; ++trial) {
        std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(trial));
        const std::string prefix = "trial " + std::to_string(trial) + ": ";
        const Automorphism F = random_automorphism(ring, o.alpha, Profile::general, rng);
        std::optional<NcsSystem> sys;
        auto system = [&]() -> const NcsSystem& {
            if (!sys) {
                sys = build_omega(F);
                if (o.tamper) {
                    sys->h = sys->h + TDiffOp::from_derivation(Derivation(identity_vector(ring)));
                }
            }
            return *sys;
        };
        for (const auto& suite : selected) {
            std::vector<Report> reports;
            if (suite == "ncs") {
                reports = verify_ncs(system());
            } else if (suite == "correspondence") {
                reports = correspondence_check(system(), solve_pi(ring.max_t_degree()), ring.max_t_degree());
            } else if (suite == "group") {
                const Automorphism V = random_automorphism(ring, o.alpha, Profile::general, rng);
                reports = group_hom_check(F, V);
            } else if (suite == "graded") {
                const int alpha = std::max(2, o.alpha);
                for (const Profile p : {Profile::graded, Profile::general}) {
                    const Automorphism E = random_automorphism(ring, alpha, p, rng);
                    const bool a = graded_check(E);
                    const bool b = is_graded_form(E);
                    reports.push_back({"graded_check = is_graded_form (" + to_string(p) + ")", a == b,
                                       a == b ? "" : "graded_check " + std::to_string(a) + ", form " +
                                                         std::to_string(b)});
                }
            } else {
                reports = action_hopf_checks(system(), rng, 3);
            }
            auto p = prefixed(std::move(reports), prefix + suite + ": ");
            all.insert(all.end(), p.begin(), p.end());
        }
    }
    if (o.format == "text") {
        for (const auto& r : all) {
            out << (r.passed ? "PASS " : "FAIL ") << r.check;
            if (!r.passed) {
                out << " -- " << r.counterexample;
            }
            out << "\n";
        }
    } else {
        emit(out, reports_to_json(all));
    }
    return all_passed(all) ? 0 : 1;
}

int cmd_separate(const Options& o, std::ostream& out)
{
    const NSymElem P = nsym_from_json(input_json(o, 0), 64);
    if (P.is_zero()) {
        throw UsageError("separate: P must be nonzero");
    }
    if (P.weight() > kMaxWeight && !o.override_guards) {
        throw UsageError("weight of P above the cost guard");
    }
    SeparationBudget budget;
    budget.max_n = o.max_n;
    budget.attempts = o.attempts;
    budget.seed = o.seed;
    budget.commutative = o.commutative;
    const SeparationResult result = separate(P.with_max_weight(std::max(0, P.weight())), budget);
    if (o.format == "text") {
        if (result.witness) {
            const auto& w = *result.witness;
            out << "witness at n=" << w.F.ring().n() << "\n" << header_text(w.F.ring(), w.F.alpha());
            for (std::size_t i = 0; i < w.F.H().size(); ++i) {
                out << "H" << (i + 1) << " = " << w.F.H()[i].to_string() << "\n";
            }
            out << "u = " << TruncSeries::monomial(w.F.ring(), 0, w.u).to_string() << "\n";
            out << "S(P)u = " << w.value.to_string() << "\n";
        } else {
            out << "inconclusive after " << result.attempts_used << " attempts (max_n " << result.max_n_tried
                << ")\n";
        }
    } else {
        emit(out, separation_to_json(result));
    }
    return result.witness ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact NCS systems over differential operators", "ncsys"};
    app.require_subcommand(1);
    app.add_option("--n", o.n, "variable count")->check(CLI::PositiveNumber);
    app.add_flag("--commutative", o.commutative, "commuting variables");
    app.add_option("--alpha", o.alpha, "order bound alpha")->check(CLI::PositiveNumber);
    app.add_option("--nz", o.nz, "z-degree truncation N_z");
    app.add_option("--nt", o.nt, "t-degree truncation N_t");
    app.add_option("--nw", o.nw, "NSym weight truncation N_w");
    app.add_option("--seed", o.seed, "master seed");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--trials", o.trials, "random trials per suite");
    app.add_flag("--override-guards", o.override_guards, "lift cost guards");
    app.add_option("--suite", o.suite, "verification suite");
    app.add_option("--max-n", o.max_n, "separation: largest n")->check(CLI::PositiveNumber);
    app.add_option("--attempts", o.attempts, "separation: attempts per n")->check(CLI::NonNegativeNumber);
    app.add_option("--family", o.family, "nsym: Lambda, S, Phi, Psi, Xi or all");
    app.add_flag("--tamper", o.tamper)->group("");

    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const Options&, std::ostream&);
    };
    const std::vector<Sub> subs{
        {"invert", "inverse automorphism G_t = z + M_t", cmd_invert},
        {"dlog", "D-Log a_t of an automorphism", cmd_dlog},
        {"exp", "automorphism e^{[a ∂/∂z]} z from a D-Log document", cmd_exp},
        {"compose", "U(V(z)) for two automorphism documents", cmd_compose},
        {"nsym", "NCSF expansions in Λ words", cmd_nsym},
        {"verify", "randomized verification suites", cmd_verify},
        {"separate", "search for F with S_F(P) != 0", cmd_separate},
    };
    std::vector<CLI::App*> handles;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        sub->add_option("inputs", o.inputs, "JSON file, inline JSON, or - for stdin");
        handles.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    // CLI11 would split "[a,b]" into a list; trailing whitespace keeps inline JSON arrays whole.
    for (auto& a : reversed) {
        if (a.size() > 1 && a.front() == '[' && a.back() == ']') {
            a += ' ';
        }
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (handles[i]->parsed()) {
                return subs[i].run(o, out);
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace ncsys
