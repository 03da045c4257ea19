// Command line front end: parses a script, runs one operation (or the
// commands embedded in the script) and prints the result, optionally as one
// JSON record per command. Reruns with identical inputs and seeds print
// byte-identical JSON.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "legreuel/ideal_ops.hpp"
#include "legreuel/invariants.hpp"
#include "legreuel/parser.hpp"

using namespace legreuel;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
    std::string script;
    uint64_t seed = 0;
    int retries = 8;
    bool json = false;
    bool trace = false;
    std::string X = "X";
    std::string I = "I";
    std::string J = "J";
    std::string f = "f";
    std::string g = "g";
    std::string pi = "pi";
    std::string F = "F";
    std::string A = "A";
    std::string M = "M";
    int s = 0;
    int dim = -1; // pure dimension override, -1 = take the leading ideal's
    std::string forms;         // comma separated poly names pinning slice forms
    std::string reduced_slice; // script file providing the reduced curve slice
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::structural_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Ideal named `name`, or the zero ideal when the conventional default name is
// absent. An explicitly requested name must exist.
Ideal pick_ideal(const Script& sc, const std::string& name, bool explicit_name) {
    if (sc.has_ideal(name)) return sc.ideal(name);
    if (!explicit_name) return Ideal(sc.ring);
    return sc.ideal(name); // throws with the right message
}

VarietyPresentation presentation(const Ideal& I, int dim_flag) {
    int d = dim_flag >= 0 ? dim_flag : krull_dim(I);
    return VarietyPresentation(I, d);
}

ojson report_json(const ComputationReport& rep) {
    ojson terms = ojson::array();
    for (const ReportTerm& t : rep.terms) {
        ojson o;
        o["label"] = t.label;
        if (t.slice_dim > 0) o["slice_dim"] = t.slice_dim;
        if (t.form) o["form"] = *t.form;
        if (t.sat_exponent) o["sat_exponent"] = *t.sat_exponent;
        o["value"] = t.value;
        o["sign"] = t.sign;
        terms.push_back(std::move(o));
    }
    ojson r;
    r["seed"] = rep.seed;
    r["resamples"] = rep.resamples;
    r["terms"] = std::move(terms);
    return r;
}

void print_report(const ComputationReport& rep) {
    for (const ReportTerm& t : rep.terms) {
        std::cout << "  " << (t.sign >= 0 ? "+" : "-") << t.value << "  " << t.label;
        if (t.slice_dim > 0) std::cout << " dim " << t.slice_dim;
        if (t.form) std::cout << ", form " << *t.form;
        if (t.sat_exponent) std::cout << ", sat exponent " << *t.sat_exponent;
        std::cout << "\n";
    }
    if (rep.resamples > 0)
        std::cout << "  (" << rep.resamples << " resampled attempts, seed " << rep.seed << ")\n";
}

// One record per executed command. status/result come first so the JSON
// stream is easy to scan.
struct Emitter {
    bool json;
    int errors = 0;

    void ok(const std::string& command, ojson inputs, ojson result,
            const ComputationReport* rep = nullptr) {
        if (json) {
            ojson rec;
            rec["command"] = command;
            rec["status"] = "ok";
            rec["inputs"] = std::move(inputs);
            rec["result"] = std::move(result);
            if (rep) rec["report"] = report_json(*rep);
            std::cout << rec.dump() << "\n";
            return;
        }
        std::cout << command << ":";
        for (auto& [k, v] : result.items()) {
            if (v.is_array()) {
                std::cout << " " << k << " = [";
                for (size_t i = 0; i < v.size(); ++i)
                    std::cout << (i ? ", " : "") << v[i].get<std::string>();
                std::cout << "]";
            } else if (v.is_string()) {
                std::cout << " " << k << " = " << v.get<std::string>();
            } else {
                std::cout << " " << k << " = " << v.dump();
            }
        }
        std::cout << "\n";
        if (rep) print_report(*rep);
    }

    void error(const std::string& command, const Error& e) {
        ++errors;
        if (json) {
            ojson rec;
            rec["command"] = command;
            rec["status"] = "error";
            ojson err;
            err["kind"] = error_kind_name(e.kind());
            err["message"] = e.what();
            if (e.span()) {
                err["line"] = e.span()->line;
                err["column"] = e.span()->col;
            }
            rec["error"] = std::move(err);
            std::cout << rec.dump() << "\n";
        } else {
            std::cerr << command << ": error [" << error_kind_name(e.kind()) << "] " << e.what();
            if (e.span())
                std::cerr << " (line " << e.span()->line << ", column " << e.span()->col << ")";
            std::cerr << "\n";
        }
    }
};

ojson gens_json(const Ideal& I) {
    ojson a = ojson::array();
    for (const std::string& s : sorted_generator_strings(I)) a.push_back(s);
    return a;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::parse_error: return 2;
    case ErrorKind::internal_error: return 4;
    default: return 3;
    }
}

// ---------------------------------------------------------------- operations

void do_std(Emitter& em, const Script& sc, const Options& o, bool explicit_I) {
    Ideal I = pick_ideal(sc, o.I, explicit_I);
    const StdBasis& B = I.std_basis();
    ojson elems = ojson::array();
    for (const Polynomial& p : B.elements()) elems.push_back(p.to_string());
    ojson result;
    result["size"] = B.size();
    result["basis"] = std::move(elems);
    em.ok("std", {{"script", o.script}, {"I", o.I}}, std::move(result));
}

void do_vdim(Emitter& em, const Script& sc, const Options& o, bool explicit_I) {
    Ideal I = pick_ideal(sc, o.I, explicit_I);
    std::optional<long> v = vdim(I);
    ojson result;
    if (v) result["vdim"] = *v;
    else result["vdim"] = "infinite";
    em.ok("vdim", {{"script", o.script}, {"I", o.I}}, std::move(result));
}

void do_dim(Emitter& em, const Script& sc, const Options& o, bool explicit_I) {
    Ideal I = pick_ideal(sc, o.I, explicit_I);
    em.ok("dim", {{"script", o.script}, {"I", o.I}}, {{"dim", krull_dim(I)}});
}

void do_mult(Emitter& em, const Script& sc, const Options& o, bool explicit_I) {
    Ideal I = pick_ideal(sc, o.I, explicit_I);
    em.ok("mult", {{"script", o.script}, {"I", o.I}}, {{"mult", hilbert_multiplicity(I)}});
}

void do_saturate(Emitter& em, const Script& sc, const Options& o, bool explicit_I) {
    Ideal I = pick_ideal(sc, o.I, explicit_I);
    auto [S, k] = ideal_saturate(I, sc.poly(o.f));
    ojson result;
    result["exponent"] = k;
    result["generators"] = gens_json(S);
    em.ok("saturate", {{"script", o.script}, {"I", o.I}, {"f", o.f}}, std::move(result));
}

void do_intersect(Emitter& em, const Script& sc, const Options& o) {
    Ideal R = ideal_intersect(sc.ideal(o.I), sc.ideal(o.J));
    em.ok("intersect", {{"script", o.script}, {"I", o.I}, {"J", o.J}},
          {{"generators", gens_json(R)}});
}

void do_euler_diff(Emitter& em, const Script& sc, const Options& o, bool explicit_X) {
    VarietyPresentation X = presentation(pick_ideal(sc, o.X, explicit_X), o.dim);
    EulerDiffResult r = euler_diff(X, sc.poly(o.f), sc.poly(o.g));
    em.ok("euler-diff",
          {{"script", o.script}, {"X", o.X}, {"f", o.f}, {"g", o.g}},
          {{"value", r.value}}, &r.report);
}

void do_chi(Emitter& em, const Script& sc, const Options& o, bool explicit_X) {
    VarietyPresentation X = presentation(pick_ideal(sc, o.X, explicit_X), o.dim);
    SampleOptions so{o.seed, o.retries};
    ChiOverrides ovr;
    bool have_ovr = false;
    if (!o.forms.empty()) {
        for (const std::string& name : split_names(o.forms))
            ovr.forms.push_back(sc.poly(name));
        have_ovr = true;
    }
    if (!o.reduced_slice.empty()) {
        if (!have_ovr)
            fail(ErrorKind::structural_error,
                 "--reduced-slice needs --forms pinning the slice forms");
        Script slice = parse_script(slurp(o.reduced_slice));
        if (!slice.ring || *slice.ring != *sc.ring)
            fail(ErrorKind::structural_error,
                 "reduced slice script must declare the same ring");
        if (slice.ideals.size() == 1) {
            ovr.reduced_slice = Ideal(sc.ring, slice.ideals.begin()->second.gens());
        } else if (slice.has_ideal("X1")) {
            ovr.reduced_slice = Ideal(sc.ring, slice.ideal("X1").gens());
        } else {
            fail(ErrorKind::structural_error,
                 "reduced slice script must declare one ideal (or name it X1)");
        }
    }
    ChiResult r = chi_fiber(X, sc.poly(o.f), so, have_ovr ? &ovr : nullptr);
    ojson inputs;
    inputs["script"] = o.script;
    inputs["X"] = o.X;
    inputs["f"] = o.f;
    inputs["seed"] = o.seed;
    if (!o.forms.empty()) inputs["forms"] = o.forms;
    if (!o.reduced_slice.empty()) inputs["reduced_slice"] = o.reduced_slice;
    em.ok("chi", std::move(inputs), {{"value", r.value}}, &r.report);
}

void do_icis(Emitter& em, const Script& sc, const Options& o) {
    long v = icis_milnor_sum(sc.ideal(o.I).gens());
    em.ok("icis", {{"script", o.script}, {"I", o.I}}, {{"value", v}});
}

void do_curve_mu(Emitter& em, const Script& sc, const Options& o, bool explicit_X) {
    VarietyPresentation X = presentation(pick_ideal(sc, o.X, explicit_X), o.dim);
    CurveResult r = curve_invariants(X, sc.poly(o.pi), sc.poly(o.f), {o.seed, o.retries});
    ojson result;
    result["mu_f"] = r.mu_f;
    result["mu_X"] = r.mu_X;
    result["deg_f"] = r.deg_f;
    result["mult"] = r.mult;
    em.ok("curve-mu", {{"script", o.script}, {"X", o.X}, {"pi", o.pi}, {"f", o.f}, {"seed", o.seed}},
          std::move(result), &r.report);
}

void do_ids(Emitter& em, const Script& sc, const Options& o, bool have_f) {
    if (o.s < 1) fail(ErrorKind::structural_error, "ids needs --s, the rank bound");
    std::optional<Polynomial> fb;
    if (have_f) fb = sc.poly(o.f);
    IdsResult r = ids_invariants(sc.matrix(o.F), sc.matrix(o.A), o.s, fb, {o.seed, o.retries});
    ojson result;
    result["nu_X"] = r.nu_X;
    result["dim"] = r.dim_X;
    result["mult"] = r.mult;
    if (r.mu_f) result["mu_f"] = *r.mu_f;
    if (r.nu_slice) result["nu_slice"] = *r.nu_slice;
    ojson inputs;
    inputs["script"] = o.script;
    inputs["F"] = o.F;
    inputs["A"] = o.A;
    inputs["s"] = o.s;
    if (have_f) inputs["f"] = o.f;
    inputs["seed"] = o.seed;
    em.ok("ids", std::move(inputs), std::move(result), &r.report);
}

void do_gorenstein(Emitter& em, const Script& sc, const Options& o, bool explicit_X) {
    VarietyPresentation X = presentation(pick_ideal(sc, o.X, explicit_X), o.dim);
    GorensteinResult r = gorenstein_mu(X, sc.poly(o.pi), {o.seed, o.retries});
    em.ok("gorenstein-mu", {{"script", o.script}, {"X", o.X}, {"pi", o.pi}, {"seed", o.seed}},
          {{"mu", r.mu}, {"mult", r.mult}}, &r.report);
}

void do_pfaffian(Emitter& em, const Script& sc, const Options& o) {
    std::vector<Polynomial> ps = pfaffians(sc.matrix(o.M));
    ojson a = ojson::array();
    for (const Polynomial& p : ps) a.push_back(p.to_string());
    em.ok("pfaffian", {{"script", o.script}, {"M", o.M}}, {{"pfaffians", std::move(a)}});
}

// ------------------------------------------------------- embedded commands

const CmdArg& arg_at(const Command& c, size_t i) {
    if (i >= c.args.size())
        throw Error(ErrorKind::structural_error,
                    c.name + " expects more arguments", c.span);
    return c.args[i];
}

Polynomial arg_poly(const Command& c, size_t i) {
    const CmdArg& a = arg_at(c, i);
    if (!a.value)
        throw Error(ErrorKind::structural_error,
                    c.name + ": argument " + std::to_string(i + 1) +
                        " must be a polynomial, got " + a.text,
                    a.span);
    return *a.value;
}

Ideal arg_ideal(const Script& sc, const Command& c, size_t i) {
    const CmdArg& a = arg_at(c, i);
    if (!a.name || !sc.has_ideal(*a.name))
        throw Error(ErrorKind::structural_error,
                    c.name + ": argument " + std::to_string(i + 1) +
                        " must name an ideal, got " + a.text,
                    a.span);
    return sc.ideal(*a.name);
}

const PolyMatrix& arg_matrix(const Script& sc, const Command& c, size_t i) {
    const CmdArg& a = arg_at(c, i);
    if (!a.name || !sc.has_matrix(*a.name))
        throw Error(ErrorKind::structural_error,
                    c.name + ": argument " + std::to_string(i + 1) +
                        " must name a matrix, got " + a.text,
                    a.span);
    return sc.matrix(*a.name);
}

long arg_int(const Command& c, size_t i) {
    const CmdArg& a = arg_at(c, i);
    if (!a.integer)
        throw Error(ErrorKind::structural_error,
                    c.name + ": argument " + std::to_string(i + 1) +
                        " must be an integer, got " + a.text,
                    a.span);
    return *a.integer;
}

void check_arity(const Command& c, size_t lo, size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi)
        throw Error(ErrorKind::structural_error,
                    c.name + " takes " + std::to_string(lo) +
                        (hi > lo ? ".." + std::to_string(hi) : "") + " arguments",
                    c.span);
}

void run_command(Emitter& em, const Script& sc, const Command& c, const Options& o) {
    SampleOptions so{o.seed, o.retries};
    auto inputs = [&]() {
        ojson in;
        in["script"] = o.script;
        ojson args = ojson::array();
        for (const CmdArg& a : c.args) args.push_back(a.text);
        in["args"] = std::move(args);
        return in;
    };

    if (c.name == "std") {
        check_arity(c, 1, 1);
        Ideal I = arg_ideal(sc, c, 0); // keep alive, the basis is cached inside
        const StdBasis& B = I.std_basis();
        ojson elems = ojson::array();
        for (const Polynomial& p : B.elements()) elems.push_back(p.to_string());
        em.ok("std", inputs(), {{"size", B.size()}, {"basis", std::move(elems)}});
    } else if (c.name == "vdim") {
        check_arity(c, 1, 1);
        std::optional<long> v = vdim(arg_ideal(sc, c, 0));
        ojson result;
        if (v) result["vdim"] = *v;
        else result["vdim"] = "infinite";
        em.ok("vdim", inputs(), std::move(result));
    } else if (c.name == "dim") {
        check_arity(c, 1, 1);
        em.ok("dim", inputs(), {{"dim", krull_dim(arg_ideal(sc, c, 0))}});
    } else if (c.name == "mult") {
        check_arity(c, 1, 1);
        em.ok("mult", inputs(), {{"mult", hilbert_multiplicity(arg_ideal(sc, c, 0))}});
    } else if (c.name == "colon") {
        check_arity(c, 2, 2);
        Ideal R = ideal_colon(arg_ideal(sc, c, 0), arg_poly(c, 1));
        em.ok("colon", inputs(), {{"generators", gens_json(R)}});
    } else if (c.name == "saturate") {
        check_arity(c, 2, 2);
        auto [S, k] = ideal_saturate(arg_ideal(sc, c, 0), arg_poly(c, 1));
        em.ok("saturate", inputs(), {{"exponent", k}, {"generators", gens_json(S)}});
    } else if (c.name == "intersect") {
        check_arity(c, 2, 2);
        Ideal R = ideal_intersect(arg_ideal(sc, c, 0), arg_ideal(sc, c, 1));
        em.ok("intersect", inputs(), {{"generators", gens_json(R)}});
    } else if (c.name == "squarefree") {
        check_arity(c, 1, 1);
        em.ok("squarefree", inputs(), {{"value", squarefree_part(arg_poly(c, 0)).to_string()}});
    } else if (c.name == "euler_diff") {
        check_arity(c, 2, 3);
        Ideal IX(sc.ring);
        size_t base = 0;
        if (c.args.size() == 3) {
            IX = arg_ideal(sc, c, 0);
            base = 1;
        }
        VarietyPresentation X(IX, krull_dim(IX));
        EulerDiffResult r = euler_diff(X, arg_poly(c, base), arg_poly(c, base + 1));
        em.ok("euler_diff", inputs(), {{"value", r.value}}, &r.report);
    } else if (c.name == "chi") {
        check_arity(c, 2, 16);
        Ideal IX = arg_ideal(sc, c, 0);
        VarietyPresentation X(IX, krull_dim(IX));
        ChiOverrides ovr;
        bool have_ovr = false;
        for (size_t i = 2; i < c.args.size(); ++i) {
            const CmdArg& a = c.args[i];
            if (a.name && sc.has_ideal(*a.name)) {
                if (i + 1 != c.args.size())
                    throw Error(ErrorKind::structural_error,
                                "chi: the reduced slice ideal must be the last argument",
                                a.span);
                ovr.reduced_slice = arg_ideal(sc, c, i);
            } else {
                ovr.forms.push_back(arg_poly(c, i));
                have_ovr = true;
            }
        }
        if (ovr.reduced_slice && !have_ovr)
            throw Error(ErrorKind::structural_error,
                        "chi: a reduced slice needs pinned slice forms", c.span);
        ChiResult r = chi_fiber(X, arg_poly(c, 1), so, have_ovr ? &ovr : nullptr);
        em.ok("chi", inputs(), {{"value", r.value}}, &r.report);
    } else if (c.name == "icis") {
        check_arity(c, 1, 1);
        em.ok("icis", inputs(), {{"value", icis_milnor_sum(arg_ideal(sc, c, 0).gens())}});
    } else if (c.name == "curve_mu") {
        check_arity(c, 3, 3);
        Ideal IX = arg_ideal(sc, c, 0);
        VarietyPresentation X(IX, krull_dim(IX));
        CurveResult r = curve_invariants(X, arg_poly(c, 1), arg_poly(c, 2), so);
        em.ok("curve_mu", inputs(),
              {{"mu_f", r.mu_f}, {"mu_X", r.mu_X}, {"deg_f", r.deg_f}, {"mult", r.mult}},
              &r.report);
    } else if (c.name == "ids") {
        check_arity(c, 3, 4);
        std::optional<Polynomial> fb;
        if (c.args.size() == 4) fb = arg_poly(c, 3);
        IdsResult r = ids_invariants(arg_matrix(sc, c, 0), arg_matrix(sc, c, 1),
                                     (int)arg_int(c, 2), fb, so);
        ojson result;
        result["nu_X"] = r.nu_X;
        result["dim"] = r.dim_X;
        result["mult"] = r.mult;
        if (r.mu_f) result["mu_f"] = *r.mu_f;
        if (r.nu_slice) result["nu_slice"] = *r.nu_slice;
        em.ok("ids", inputs(), std::move(result), &r.report);
    } else if (c.name == "gorenstein_mu") {
        check_arity(c, 2, 2);
        Ideal IX = arg_ideal(sc, c, 0);
        VarietyPresentation X(IX, krull_dim(IX));
        GorensteinResult r = gorenstein_mu(X, arg_poly(c, 1), so);
        em.ok("gorenstein_mu", inputs(), {{"mu", r.mu}, {"mult", r.mult}}, &r.report);
    } else if (c.name == "pfaffian") {
        check_arity(c, 1, 1);
        std::vector<Polynomial> ps = pfaffians(arg_matrix(sc, c, 0));
        ojson a = ojson::array();
        for (const Polynomial& p : ps) a.push_back(p.to_string());
        em.ok("pfaffian", inputs(), {{"pfaffians", std::move(a)}});
    } else {
        throw Error(ErrorKind::structural_error, "unknown command: " + c.name, c.span);
    }
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* env = std::getenv("LEGREUEL_SEED"))
        o.seed = std::strtoull(env, nullptr, 10);

    CLI::App app{"exact Le-Greuel type invariants of singularities"};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "seed for generic linear form sampling");
    app.add_option("--retries", o.retries, "genericity resampling cap");
    app.add_flag("--json", o.json, "print one JSON record per command");
    app.add_flag("--trace", o.trace, "reduction statistics on stderr");

    auto add_script = [&](CLI::App* sub) {
        sub->add_option("script", o.script, "input script")->required();
        sub->fallthrough();
        return sub;
    };

    add_script(app.add_subcommand("run", "execute the script's own commands"));
    auto* c_std = add_script(app.add_subcommand("std", "reduced standard basis"));
    auto* c_vdim = add_script(app.add_subcommand("vdim", "vector space dimension of the quotient"));
    auto* c_dim = add_script(app.add_subcommand("dim", "Krull dimension of the quotient"));
    auto* c_mult = add_script(app.add_subcommand("mult", "Hilbert-Samuel multiplicity"));
    auto* c_sat = add_script(app.add_subcommand("saturate", "I : f^infinity"));
    auto* c_int = add_script(app.add_subcommand("intersect", "intersection of two ideals"));
    auto* c_euler = add_script(app.add_subcommand("euler-diff", "chi(F_f) - chi(F_{g,f})"));
    auto* c_chi = add_script(app.add_subcommand("chi", "Euler characteristic of the Milnor fibre"));
    auto* c_icis = add_script(app.add_subcommand("icis", "mu(X) + mu(X') for a complete intersection"));
    auto* c_curve = add_script(app.add_subcommand("curve-mu", "Milnor numbers of a smoothable space curve"));
    auto* c_ids = add_script(app.add_subcommand("ids", "vanishing Euler characteristic of a determinantal germ"));
    auto* c_gor = add_script(app.add_subcommand("gorenstein-mu", "Milnor number of a smoothable Gorenstein surface"));
    auto* c_pf = add_script(app.add_subcommand("pfaffian", "principal Pfaffians of a skew matrix"));

    for (CLI::App* sub : {c_std, c_vdim, c_dim, c_mult, c_sat})
        sub->add_option("--I", o.I, "ideal name");
    c_sat->add_option("--f", o.f, "polynomial name");
    c_int->add_option("--I", o.I, "first ideal name");
    c_int->add_option("--J", o.J, "second ideal name");
    for (CLI::App* sub : {c_euler, c_chi, c_curve, c_gor}) {
        sub->add_option("--X", o.X, "presentation ideal name");
        sub->add_option("--dim", o.dim, "declared pure dimension");
    }
    c_euler->add_option("--f", o.f, "function name");
    c_euler->add_option("--g", o.g, "auxiliary function name");
    c_chi->add_option("--f", o.f, "function name");
    c_chi->add_option("--forms", o.forms, "comma separated pinned slice form names");
    c_chi->add_option("--reduced-slice", o.reduced_slice, "script with the reduced curve slice");
    c_icis->add_option("--I", o.I, "ideal whose generators are the map components");
    c_curve->add_option("--pi", o.pi, "smoothing parameter name");
    c_curve->add_option("--f", o.f, "function name");
    c_ids->add_option("--F", o.F, "matrix name");
    c_ids->add_option("--A", o.A, "constant perturbation matrix name");
    c_ids->add_option("--s", o.s, "rank bound: X is where rank < s");
    c_ids->add_option("--f", o.f, "optional function name");
    c_gor->add_option("--pi", o.pi, "smoothing parameter name");
    c_pf->add_option("--M", o.M, "skew-symmetric matrix name");

    CLI11_PARSE(app, argc, argv);
    set_trace(o.trace);

    Emitter em{o.json};
    std::string active = app.get_subcommands().front()->get_name();
    try {
        Script sc = parse_script(slurp(o.script));
        if (active != "run" && !sc.ring)
            fail(ErrorKind::structural_error, "script declares no ring");

        if (active == "run") {
            // one failed command does not block the rest; report each and
            // exit with the most severe code seen
            int worst = 0;
            for (const Command& c : sc.commands) {
                try {
                    run_command(em, sc, c, o);
                } catch (const Error& e) {
                    em.error(c.name, e);
                    worst = std::max(worst, exit_code_for(e));
                }
            }
            return worst;
        }

        bool expl_I = c_std->count("--I") || c_vdim->count("--I") || c_dim->count("--I") ||
                      c_mult->count("--I") || c_sat->count("--I");
        bool expl_X = c_euler->count("--X") || c_chi->count("--X") ||
                      c_curve->count("--X") || c_gor->count("--X");

        if (active == "std") do_std(em, sc, o, expl_I);
        else if (active == "vdim") do_vdim(em, sc, o, expl_I);
        else if (active == "dim") do_dim(em, sc, o, expl_I);
        else if (active == "mult") do_mult(em, sc, o, expl_I);
        else if (active == "saturate") do_saturate(em, sc, o, expl_I);
        else if (active == "intersect") do_intersect(em, sc, o);
        else if (active == "euler-diff") do_euler_diff(em, sc, o, expl_X);
        else if (active == "chi") do_chi(em, sc, o, expl_X);
        else if (active == "icis") do_icis(em, sc, o);
        else if (active == "curve-mu") do_curve_mu(em, sc, o, expl_X);
        else if (active == "ids") do_ids(em, sc, o, c_ids->count("--f") > 0);
        else if (active == "gorenstein-mu") do_gorenstein(em, sc, o, expl_X);
        else if (active == "pfaffian") do_pfaffian(em, sc, o);
    } catch (const Error& e) {
        em.error(active, e);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        em.error(active, Error(ErrorKind::internal_error, e.what()));
        return 4;
    }
    return 0;
}
