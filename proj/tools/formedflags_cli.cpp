#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "formedflags/alpha.hpp"
#include "formedflags/coxeter_sums.hpp"
#include "formedflags/errors.hpp"
#include "formedflags/functional_equations.hpp"
#include "formedflags/oracle.hpp"
#include "formedflags/rat_func.hpp"
#include "formedflags/suites.hpp"

using namespace formedflags;
using nlohmann::json;

namespace {

enum Exit { ok = 0, falsified = 1, usage = 2, resource = 3 };

// thrown when formula paths or enumeration disagree
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string kind = "symplectic";
    int n = 0;
    int epsilon = 0;
    std::string forms_type;
    std::string flag_type;
    bool all = false;
    int field = 0;
    std::string method;
    std::string format = "text";
    std::uint64_t max_group_size = kDefaultMaxGroupSize;
    std::uint64_t max_oracle_ops = kDefaultMaxOracleOps;
};

Subset parse_subset(const std::string& s)
{
    std::vector<int> v;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty())
            continue;
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || x < 1 || x > 31)
            throw DomainError("bad subset element '" + tok + "'");
        v.push_back(x);
    }
    return Subset::of(v);
}

FormedSpaceSpec spec_of(const Options& o)
{
    return FormedSpaceSpec::make(parse_kind(o.kind), o.n, o.epsilon, parse_subset(o.forms_type));
}

std::vector<Subset> selected_types(const FormedSpaceSpec& spec, const Options& o)
{
    if (!o.flag_type.empty() && o.all)
        throw DomainError("--flag-type and --all are exclusive");
    if (!o.flag_type.empty()) {
        Subset J = parse_subset(o.flag_type);
        if (!J.is_subset_of(Subset::full(spec.n - 1)))
            throw DomainError("flag type " + J.to_string() + " not inside [n-1]");
        return {J};
    }
    std::vector<Subset> out;
    for (Subset J : all_subsets(spec.n - 1))
        if (spec.kind != Kind::symplectic || spec.admits(J))
            out.push_back(J);
    return out;
}

int evaluation_point(const SmallField& F, Kind kind) { return kind == Kind::unitary ? F.base_order() : F.order(); }

GramSpace oracle_space(const FormedSpaceSpec& spec, const SmallField& F)
{
    return standard_space(spec.kind, spec.n, F, spec.kind == Kind::orthogonal ? (spec.epsilon ? spec.epsilon : 1) : 0);
}

// Brute-force counts for the requested types; flags of forms when I is nonempty.
std::vector<mpz_class> oracle_counts(const FormedSpaceSpec& spec, const Options& o, const std::vector<Subset>& Js)
{
    if (!o.field)
        throw DomainError("the oracle needs --field");
    const SmallField F(o.field);
    std::vector<mpz_class> out;
    if (!spec.forms_type.empty()) {
        const FlagOfForms b = standard_flag_of_forms(spec.kind, spec.n, spec.forms_type, F);
        for (Subset J : Js)
            out.push_back(count_flags(b, J, o.max_oracle_ops));
    } else {
        const GramSpace s = oracle_space(spec, F);
        for (Subset J : Js)
            out.push_back(count_flags(s, J, o.max_oracle_ops));
    }
    return out;
}

std::vector<Method> applicable_methods(const FormedSpaceSpec& spec)
{
    if (spec.kind != Kind::orthogonal && !spec.forms_type.empty())
        return {Method::coxeter, Method::recursive};
    // the chessboard sums are conjectural for orthogonal spaces; not a proof path
    if (spec.kind == Kind::orthogonal)
        return {Method::closed, Method::recursive};
    return {Method::closed, Method::coxeter, Method::recursive};
}

Method default_method(const FormedSpaceSpec& spec) { return applicable_methods(spec).front(); }

// Table from every applicable path; Mismatch when two differ.
AlphaTable cross_table(const FormedSpaceSpec& spec, const Options& o, std::vector<std::string>& paths)
{
    std::optional<AlphaTable> first;
    for (Method m : applicable_methods(spec)) {
        AlphaTable t = alpha_table(spec, m, o.max_group_size);
        paths.push_back(to_string(m));
        if (!first) {
            first = std::move(t);
            continue;
        }
        for (Subset J : all_subsets(spec.n - 1))
            if (!(t.a[J.bits()] == first->a[J.bits()]))
                throw Mismatch(to_string(m) + " and " + paths.front() + " differ at J=" + J.to_string() + ": " +
                               t.a[J.bits()].to_text() + " vs " + first->a[J.bits()].to_text());
    }
    return *first;
}

std::string pad(const std::string& s, std::size_t w)
{
    // display width: count code points, not bytes
    std::size_t cols = 0;
    for (unsigned char c : s)
        cols += (c & 0xC0) != 0x80;
    return cols >= w ? s + "  " : s + std::string(w - cols + 2, ' ');
}

void print_rows(const std::string& title, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows, const std::string& format)
{
    if (format == "latex") {
        std::cout << "\\begin{tabular}{|l|" << std::string(header.size() - 1, 'c') << "|}\n\\hline\n";
        for (std::size_t k = 0; k < header.size(); ++k)
            std::cout << header[k] << (k + 1 < header.size() ? " & " : " \\\\\n");
        std::cout << "\\hline\\hline\n";
        for (const auto& r : rows)
            for (std::size_t k = 0; k < r.size(); ++k)
                std::cout << r[k] << (k + 1 < r.size() ? " & " : " \\\\\n");
        std::cout << "\\hline\n\\end{tabular}\n";
        return;
    }
    std::cout << title << "\n";
    std::vector<std::size_t> w(header.size(), 0);
    auto width = [](const std::string& s) {
        std::size_t c = 0;
        for (unsigned char ch : s)
            c += (ch & 0xC0) != 0x80;
        return c;
    };
    for (std::size_t k = 0; k < header.size(); ++k)
        w[k] = width(header[k]);
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k)
            w[k] = std::max(w[k], width(r[k]));
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t k = 0; k < r.size(); ++k)
            s += k + 1 < r.size() ? pad(r[k], w[k]) : r[k];
        s.erase(s.find_last_not_of(' ') + 1);
        std::cout << s << "\n";
    };
    line(header);
    for (const auto& r : rows)
        line(r);
}

std::string latex_subset(Subset J)
{
    if (J.empty())
        return "$\\varnothing$";
    std::string s = "$\\{";
    bool first = true;
    for (int j : J.elements()) {
        s += (first ? "" : ",") + std::to_string(j);
        first = false;
    }
    return s + "\\}$";
}

json spec_json(const FormedSpaceSpec& s)
{
    return {{"kind", to_string(s.kind)}, {"n", s.n}, {"epsilon", s.epsilon}, {"forms_type", s.forms_type.elements()}};
}

void check_format(const std::string& f)
{
    if (f != "text" && f != "latex" && f != "json")
        throw DomainError("unknown format '" + f + "'");
}

int cmd_alpha(const Options& o)
{
    check_format(o.format);
    const FormedSpaceSpec spec = spec_of(o);
    const std::vector<Subset> Js = selected_types(spec, o);
    const std::string method = o.method.empty() ? to_string(default_method(spec)) : o.method;

    if (method == "oracle") {
        const std::vector<mpz_class> c = oracle_counts(spec, o, Js);
        if (o.format == "json") {
            json rows = json::array();
            for (std::size_t k = 0; k < Js.size(); ++k)
                rows.push_back({{"J", Js[k].elements()}, {"count", c[k].get_str()}});
            std::cout << json{{"spec", spec_json(spec)}, {"field", o.field}, {"method", "oracle"}, {"rows", rows}}.dump(2)
                      << "\n";
            return ok;
        }
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < Js.size(); ++k)
            rows.push_back({o.format == "latex" ? latex_subset(Js[k]) : Js[k].to_string(), c[k].get_str()});
        print_rows(spec.label() + " over F" + std::to_string(o.field) + ", enumerated", {"J", "a^J"}, rows,
                   o.format);
        return ok;
    }

    std::vector<std::string> paths;
    AlphaTable t;
    if (method == "cross") {
        t = cross_table(spec, o, paths);
        if (o.field) {
            const SmallField F(o.field);
            const int q = evaluation_point(F, spec.kind);
            const std::vector<mpz_class> c = oracle_counts(spec, o, Js);
            for (std::size_t k = 0; k < Js.size(); ++k) {
                const mpq_class v = t.a[Js[k].bits()].evaluate_at(q);
                if (v != mpq_class(c[k]))
                    throw Mismatch("enumeration over F" + std::to_string(o.field) + " gives " + c[k].get_str() +
                                   " at J=" + Js[k].to_string() + ", formula gives " + v.get_str());
            }
            paths.push_back("oracle F" + std::to_string(o.field));
        }
    } else {
        const Method m = parse_method(method);
        paths.push_back(to_string(m));
        t = alpha_table(spec, m, o.max_group_size);
    }

    if (o.format == "json") {
        json rows = json::array();
        for (Subset J : Js)
            rows.push_back({{"J", J.elements()}, {"a", t.a[J.bits()].to_json()}, {"alpha", t.alpha[J.bits()].to_json()}});
        std::cout << json{{"spec", spec_json(spec)}, {"methods", paths}, {"rows", rows}}.dump(2) << "\n";
        return ok;
    }
    std::vector<std::vector<std::string>> rows;
    for (Subset J : Js) {
        const LaurentPoly &a = t.a[J.bits()], &al = t.alpha[J.bits()];
        if (o.format == "latex")
            rows.push_back({latex_subset(J), "$" + a.to_latex() + "$", "$" + al.to_latex() + "$"});
        else
            rows.push_back({J.to_string(), a.to_text(), al.to_text()});
    }
    std::string title = spec.label() + ", ";
    for (std::size_t k = 0; k < paths.size(); ++k)
        title += (k ? " = " : "") + paths[k];
    if (o.format == "latex")
        print_rows(title, {"$J$", "$a^J(q)$", "$\\alpha^J(q^{-1})$"}, rows, o.format);
    else
        print_rows(title, {"J", "a^J(q)", "alpha^J(q^-1)"}, rows, o.format);
    return ok;
}

int cmd_igusa(const Options& o)
{
    check_format(o.format);
    const FormedSpaceSpec spec = spec_of(o);
    const std::string method = o.method.empty() ? to_string(default_method(spec)) : o.method;
    if (method == "oracle")
        throw DomainError("igusa needs a polynomial path; use alpha --method oracle for counts");
    std::vector<std::string> paths;
    const AlphaTable t =
        method == "cross" ? cross_table(spec, o, paths) : alpha_table(spec, parse_method(method), o.max_group_size);
    const IgusaFunction ig = igusa_function(t);
    if (o.format == "json")
        std::cout << json{{"spec", spec_json(spec)}, {"igusa", ig.to_json()}}.dump(2) << "\n";
    else if (o.format == "latex")
        std::cout << ig.to_latex() << "\n";
    else
        std::cout << ig.to_text() << "\n";
    return ok;
}

int print_reports(const std::vector<VerificationReport>& reps, const std::string& format)
{
    check_format(format);
    bool all_ok = true;
    json arr = json::array();
    for (const auto& r : reps) {
        all_ok = all_ok && r.verified();
        arr.push_back(r.to_json());
    }
    if (format == "json") {
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reps) {
            std::cout << r.summary() << "\n";
            for (const auto& f : r.failures)
                std::cout << "  J=" << f.J.to_string() << ": " << f.lhs.to_text() << " != " << f.rhs.to_text()
                          << (f.note.empty() ? "" : "  (" + f.note + ")") << "\n";
        }
    }
    return all_ok ? ok : falsified;
}

int cmd_verify(const std::string& claim, const Options& o)
{
    std::vector<VerificationReport> reps;
    if (claim == "theorem-a") {
        const FormedSpaceSpec spec = spec_of(o);
        reps.push_back(verify_theorem_A(spec, o.method.empty() ? Method::closed : parse_method(o.method)));
    } else if (claim == "theorem-b") {
        const FormedSpaceSpec spec = spec_of(o);
        reps.push_back(verify_theorem_B(spec, o.method.empty() ? Method::coxeter : parse_method(o.method)));
    } else if (claim == "conjecture-c") {
        if (o.n < 1)
            throw DomainError("--n is required");
        std::vector<int> eps = o.epsilon ? std::vector<int>{o.epsilon}
                                         : (o.n % 2 ? std::vector<int>{1} : std::vector<int>{1, -1});
        for (int e : eps)
            reps.push_back(verify_conjecture_C(o.n, e, o.max_group_size));
    } else if (claim == "prop2") {
        if (o.n < 2)
            throw DomainError("--n must be at least 2");
        reps.push_back(verify_prop2_i(o.n));
        if (o.n % 2)
            reps.push_back(verify_prop2_ii(o.n / 2, true));
        else
            for (int e : {1, -1})
                reps.push_back(verify_prop2_ii(o.n / 2, false, e));
    } else {
        throw DomainError("unknown claim '" + claim + "'");
    }
    return print_reports(reps, o.format);
}

int cmd_oracle(const Options& o, bool cross, int typed, int delta, bool symmetric_bilinear)
{
    check_format(o.format);
    if (symmetric_bilinear) {
        const std::vector<mpz_class> t = a3_counterexample_table(o.field ? o.field : 2);
        std::vector<std::vector<std::string>> rows;
        json arr = json::array();
        for (Subset J : all_subsets(3)) {
            rows.push_back({J.to_string(), t[J.bits()].get_str()});
            arr.push_back({{"J", J.elements()}, {"count", t[J.bits()].get_str()}});
        }
        if (o.format == "json")
            std::cout << arr.dump(2) << "\n";
        else
            print_rows("symmetric bilinear n=4 over F" + std::to_string(o.field ? o.field : 2), {"J", "a^J"}, rows,
                       o.format);
        return ok;
    }
    const FormedSpaceSpec spec = spec_of(o);
    if (!o.field)
        throw DomainError("the oracle needs --field");
    const SmallField F(o.field);
    const int q = evaluation_point(F, spec.kind);

    if (typed) {
        if (spec.kind != Kind::orthogonal)
            throw DomainError("--typed is for orthogonal spaces");
        const mpz_class c = count_typed_subspaces(oracle_space(spec, F), typed, delta, o.max_oracle_ops);
        const mpq_class v = a_orthogonal_typed(spec.n, spec.epsilon, typed, delta).evaluate_at(q);
        if (o.format == "json")
            std::cout << json{{"j", typed}, {"delta", delta}, {"count", c.get_str()}, {"formula", v.get_str()}}.dump(2)
                      << "\n";
        else
            std::cout << "j=" << typed << " delta=" << delta << ": " << c.get_str() << " (formula " << v.get_str()
                      << ")\n";
        return cross && mpq_class(c) != v ? falsified : ok;
    }

    const std::vector<Subset> Js = selected_types(spec, o);
    const std::vector<mpz_class> c = oracle_counts(spec, o, Js);
    std::vector<std::string> paths;
    std::optional<AlphaTable> t;
    if (cross)
        t = cross_table(spec, o, paths);
    bool agree = true;
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < Js.size(); ++k) {
        json row = {{"J", Js[k].elements()}, {"count", c[k].get_str()}};
        std::vector<std::string> r = {Js[k].to_string(), c[k].get_str()};
        if (t) {
            const mpq_class v = t->a[Js[k].bits()].evaluate_at(q);
            const bool same = v == mpq_class(c[k]);
            agree = agree && same;
            row["formula"] = v.get_str();
            row["agree"] = same;
            r.push_back(v.get_str());
            r.push_back(same ? "ok" : "MISMATCH");
        }
        arr.push_back(row);
        rows.push_back(r);
    }
    if (o.format == "json") {
        std::cout << json{{"spec", spec_json(spec)}, {"field", o.field}, {"rows", arr}}.dump(2) << "\n";
    } else {
        std::vector<std::string> header = {"J", "count"};
        if (t) {
            header.push_back("formula at q=" + std::to_string(q));
            header.push_back("check");
        }
        print_rows(spec.label() + " over F" + std::to_string(o.field), header, rows, o.format);
    }
    return agree ? ok : falsified;
}

int cmd_explore(int n, const std::string& format)
{
    check_format(format);
    const MSetResult r = m_set(n);
    if (format == "json")
        std::cout << json{{"n", r.n},
                          {"m_set_size", r.size},
                          {"chessboard_size", r.chessboard_size},
                          {"equal", r.equals_chessboard}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "n=" << r.n << ": |M|=" << r.size << " |C_n|=" << r.chessboard_size
                  << " equal=" << (r.equals_chessboard ? "yes" : "no") << "\n";
    return ok;
}

int cmd_suite(const std::string& name, const Options& o, bool timings, bool verbose)
{
    check_format(o.format);
    const std::vector<int> ids = suite_criteria(name);
    SuiteOptions so;
    so.max_group_size = o.max_group_size;
    so.max_oracle_ops = o.max_oracle_ops;
    bool all_ok = true;
    double total = 0;
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (int id : ids) {
        const CriterionResult r = run_criterion(id, so);
        total += r.seconds;
        long long failures = 0;
        for (const auto& rep : r.reports)
            failures += static_cast<long long>(rep.failures.size()) + (rep.instances_checked == 0);
        all_ok = all_ok && r.passed();
        json reps = json::array();
        for (const auto& rep : r.reports)
            reps.push_back(rep.to_json());
        arr.push_back({{"criterion", id}, {"title", r.title}, {"passed", r.passed()}, {"reports", reps},
                       {"notes", r.notes}});
        rows.push_back({std::to_string(id), r.title, std::to_string(r.reports.size()), std::to_string(r.instances()),
                        std::to_string(failures), r.passed() ? "PASS" : "FAIL"});
        if (o.format != "json")
            for (const auto& rep : r.reports)
                if (verbose || !rep.verified())
                    rows.push_back({"", "  " + rep.summary(), "", "", "", ""});
        if (o.format != "json")
            for (const auto& n : r.notes)
                rows.push_back({"", "  " + n, "", "", "", ""});
    }
    if (o.format == "json")
        std::cout << arr.dump(2) << "\n";
    else
        print_rows("suite " + name, {"#", "criterion", "claims", "instances", "failures", "status"}, rows, "text");
    if (timings)
        std::fprintf(stderr, "wall time %.2fs\n", total);
    return all_ok ? ok : falsified;
}

void add_spec_options(CLI::App* c, Options& o)
{
    c->add_option("--kind", o.kind, "symplectic, unitary or orthogonal");
    c->add_option("--n", o.n, "dimension")->required();
    c->add_option("--epsilon", o.epsilon, "Witt type of an even-dimensional orthogonal space (+1 or -1)");
    c->add_option("--forms-type", o.forms_type, "radical dimensions of a flag of forms, e.g. 2,4");
}

void add_common_options(CLI::App* c, Options& o)
{
    c->add_option("--format", o.format, "text, latex or json");
    c->add_option("--max-group-size", o.max_group_size, "largest permutation group to sweep");
    c->add_option("--max-oracle-ops", o.max_oracle_ops, "enumeration step budget");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Counting non-degenerate flags in finite formed spaces"};
    app.require_subcommand(1);
    Options o;

    auto* alpha = app.add_subcommand("alpha", "flag counts a^J and normalised alpha^J");
    add_spec_options(alpha, o);
    add_common_options(alpha, o);
    alpha->add_option("--flag-type", o.flag_type, "one type J, e.g. 2,4");
    alpha->add_flag("--all", o.all, "every type J (even J for symplectic spaces)");
    alpha->add_option("--method", o.method, "closed, coxeter, recursive, oracle or cross");
    alpha->add_option("--field", o.field, "field order for the oracle");

    auto* igusa = app.add_subcommand("igusa", "Igusa-type function of the standard family");
    add_spec_options(igusa, o);
    add_common_options(igusa, o);
    igusa->add_option("--method", o.method, "closed, coxeter, recursive or cross");

    std::string claim;
    auto* verify = app.add_subcommand("verify", "check a functional equation or identity");
    verify->add_option("claim", claim, "theorem-a, theorem-b, conjecture-c or prop2")->required();
    verify->add_option("--kind", o.kind, "symplectic, unitary or orthogonal");
    verify->add_option("--n", o.n, "dimension")->required();
    verify->add_option("--epsilon", o.epsilon, "Witt type (+1 or -1); both when omitted for conjecture-c");
    verify->add_option("--forms-type", o.forms_type, "radical dimensions of a flag of forms");
    verify->add_option("--method", o.method, "closed, coxeter or recursive");
    add_common_options(verify, o);

    bool cross = false, symmetric_bilinear = false;
    int typed = 0, delta = 1;
    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration over a small field");
    oracle->add_option("--kind", o.kind, "symplectic, unitary or orthogonal");
    oracle->add_option("--n", o.n, "dimension");
    oracle->add_option("--epsilon", o.epsilon, "Witt type (+1 or -1)");
    oracle->add_option("--forms-type", o.forms_type, "radical dimensions of a flag of forms");
    oracle->add_option("--field", o.field, "field order: 2, 3, 4, 5, 7 or 9");
    oracle->add_option("--flag-type", o.flag_type, "one type J");
    oracle->add_flag("--all", o.all, "every type J");
    oracle->add_flag("--cross", cross, "compare against every formula path; exit 1 on a mismatch");
    oracle->add_option("--typed", typed, "count non-degenerate subspaces of this dimension instead");
    oracle->add_option("--delta", delta, "type of the subspaces counted by --typed");
    oracle->add_flag("--symmetric-bilinear", symmetric_bilinear,
                     "the 4-dimensional symmetric bilinear space in characteristic 2");
    add_common_options(oracle, o);

    auto* explore = app.add_subcommand("explore", "exploratory computations");
    auto* mset = explore->add_subcommand("m-set", "permutations whose simple reflections all move the statistics");
    int mset_n = 0;
    mset->add_option("--n", mset_n, "degree, at most 8")->required();
    mset->add_option("--format", o.format, "text or json");
    explore->require_subcommand(1);

    std::string suite_name;
    bool timings = false, verbose = false;
    auto* suite = app.add_subcommand("suite", "run a group of acceptance checks");
    suite->add_option("name", suite_name, "golden, lemmas, theorems, oracle-cross, conjecture, explore or all")
        ->required();
    suite->add_flag("--timings", timings, "print the wall time on the error stream");
    suite->add_flag("--verbose", verbose, "list every report");
    add_common_options(suite, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (alpha->parsed())
            return cmd_alpha(o);
        if (igusa->parsed())
            return cmd_igusa(o);
        if (verify->parsed())
            return cmd_verify(claim, o);
        if (oracle->parsed())
            return cmd_oracle(o, cross, typed, delta, symmetric_bilinear);
        if (mset->parsed())
            return cmd_explore(mset_n, o.format);
        if (suite->parsed())
            return cmd_suite(suite_name, o, timings, verbose);
    } catch (const Mismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return falsified;
    } catch (const ConsistencyError& e) {
        std::cerr << "inconsistent: " << e.what() << "\n";
        return falsified;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return resource;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const NotPolynomial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
