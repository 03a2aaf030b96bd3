#include "ramicond/cli.hpp"
#include "ramicond/classify.hpp"
#include "ramicond/errors.hpp"
#include "ramicond/filtration.hpp"
#include "ramicond/herbrand.hpp"
#include "ramicond/kummer.hpp"
#include "ramicond/oracle.hpp"
#include "ramicond/padic.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

namespace ramicond::cli {

namespace {

using json = nlohmann::ordered_json;

struct flags {
    long p = 2;
    int c = 1;
    int level = 1;
    int n = 1;
    int d = 1;
    long vt = 0;
    long vt_beta = 0;
    long max_degree = oracle::options{}.max_degree;
    std::string a;
    std::string lattice;
    bool json_out = false;
    bool decimal = false;
};

std::string num(rational const& q, flags const& f)
{
    return f.decimal ? to_decimal(q) : to_string(q);
}

json jumps_json(herbrand::filtration const& fl, flags const& f)
{
    json arr = json::array();
    for (auto const& j : fl.jumps) arr.push_back({{"jump", num(j.at, f)}, {"order", j.order}});
    return arr;
}

int precision_for(int c, int level)
{
    if (char const* env = std::getenv("RAMICOND_PRECISION")) {
        char* end = nullptr;
        long m = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || m < 1 || m > 4096)
            fail(errc::invalid_argument, std::string("RAMICOND_PRECISION must be a positive integer, got '") + env + "'");
        return static_cast<int>(m);
    }
    return padic::default_precision(c, level);
}

std::optional<rational> as_rational(std::string const& text)
{
    try {
        return parse_rational(text);
    } catch (error const&) {
        return std::nullopt;
    }
}

/* multiply a rational by a power of p^N so that 0 <= v_p < N */
rational strip_powers(rational const& a, long p, long N)
{
    if (a == 0)
        fail(errc::invalid_argument, "a must be nonzero");
    long v = *ramicond::valuation(a, p);
    long k = (v >= 0 ? v : v - N + 1) / N;
    rational shift = rational(integer(ipow(p, static_cast<unsigned long>(std::abs(k) * N))));
    rational b = k >= 0 ? rational(a / shift) : rational(a * shift);
    b.canonicalize();
    return b;
}

padic::element element_arg(flags const& f, long strip_order)
{
    auto K = padic::local_field::cyclotomic(f.p, f.level);
    int M = precision_for(f.c, f.level);
    if (auto q = as_rational(f.a)) return padic::element::from_rational(K, strip_powers(*q, f.p, strip_order), M);
    return padic::parse(f.a, K, M);
}

void check_prime(long p)
{
    if (!is_prime(p))
        fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
}

json cmd_conductor(flags const& f, bool level_given)
{
    check_prime(f.p);
    if (f.c < 1)
        fail(errc::invalid_argument, "c must be at least 1");
    json j;
    if (f.p == 2 && f.level == 1) {
        auto q = as_rational(f.a);
        auto r = q ? classify::classify_p2(f.c, *q) : classify::classify_p2(f.c, element_arg(f, 1L << std::min(f.c, 40)));
        j["conductor"] = num(r.conductor, f);
        j["case"] = r.case_label;
        if (r.trivial) j["trivial"] = true;
        return j;
    }
    flags g = f;
    if (!level_given && f.p != 2) g.level = f.c;
    padic::element x = element_arg(g, to_int64(ipow(f.p, f.c)));
    classify::metabelian_result m;
    long vt = 0;
    if (f.c == 1) {
        auto dec = kummer::primitivize(x);
        if (!dec.t_valuation) {
            j["conductor"] = num(rational(g.level - 1), f);
            j["trivial"] = true;
            return j;
        }
        vt = *dec.t_valuation;
    } else {
        if (x.valuation() == 0) x = x * kummer::teichmuller(x).inverse();
        vt = kummer::primitive_t_valuation(x);
    }
    m = classify::metabelian_conductor(f.p, g.level, f.c, vt);
    j["conductor"] = num(m.closure_over_k0, f);
    j["conductor_over_base"] = num(m.over_kl, f);
    j["level"] = g.level;
    j["v_t"] = vt;
    return j;
}

json cmd_primitivize(flags const& f)
{
    check_prime(f.p);
    auto x = element_arg(f, f.p);
    auto dec = kummer::primitivize(x);
    json j;
    j["a_prime"] = dec.a_prime.to_string();
    j["beta"] = dec.beta.to_string();
    if (dec.t_valuation) j["v_t"] = *dec.t_valuation; else j["v_t"] = nullptr;
    j["pi_power"] = dec.pi_power;
    j["iterations"] = dec.iterations;
    return j;
}

bool is_one(padic::element const& x)
{
    return x.equals(padic::element::one(x.field(), x.modulus_exponent()));
}

json cmd_bound(flags const& f, bool have_a, bool have_vt, bool have_vt_beta, bool have_d)
{
    check_prime(f.p);
    std::optional<long> vt, vt_beta;
    if (have_a) {
        auto x = element_arg(f, f.p);
        if (have_d) {
            if (!is_one(x)) vt = kummer::primitive_t_valuation(x);
        } else {
            auto dec = kummer::primitivize(x);
            vt = dec.t_valuation;
            if (!is_one(dec.beta)) vt_beta = kummer::primitivize(dec.beta).t_valuation;
        }
    }
    if (have_vt) vt = f.vt;
    if (have_vt_beta) vt_beta = f.vt_beta;
    json j;
    if (have_d) {
        j["bound"] = num(classify::bound_ccruder(f.p, f.level, f.c, f.d, vt), f);
        j["kind"] = "ccruder";
    } else {
        j["bound"] = num(classify::bound_c2_specific(f.p, f.level, f.c, vt, vt_beta), f);
        j["kind"] = "c2_specific";
    }
    if (vt) j["v_t"] = *vt;
    if (vt_beta) j["v_t_beta"] = *vt_beta;
    return j;
}

json filtration_summary(herbrand::filtration const& lower, flags const& f)
{
    json j;
    j["conductor"] = num(herbrand::conductor(lower), f);
    j["lower_jumps"] = jumps_json(lower, f);
    j["upper_jumps"] = jumps_json(herbrand::upper_from_lower(lower), f);
    bool integral = std::all_of(lower.jumps.begin(), lower.jumps.end(),
                                [](herbrand::jump const& x) { return is_integer(x.at); });
    if (integral) j["different"] = filtration::different_exponent(lower);
    return j;
}

json cmd_cyclotomic(flags const& f)
{
    check_prime(f.p);
    json j;
    j["p"] = f.p;
    j["n"] = f.n;
    j.update(filtration_summary(filtration::cyclotomic(f.p, f.n), f));
    return j;
}

json cmd_filtration(flags const& f, bool with_field)
{
    std::ifstream in(f.lattice);
    if (!in)
        fail(errc::invalid_argument, "cannot read lattice file '" + f.lattice + "'");
    json raw;
    try {
        raw = json::parse(in);
    } catch (json::exception const& e) {
        fail(errc::syntax_error, std::string("lattice file: ") + e.what());
    }
    auto lattice = filtration::lattice_from_json(raw);
    herbrand::filtration upper;
    if (with_field) {
        auto q = as_rational(f.a);
        if (!q)
            fail(errc::invalid_argument, "--a must be a rational for the filtration command");
        upper = classify::full_filtration_p2(f.c, *q, lattice);
    } else {
        upper = filtration::reconstruct_upper(lattice);
    }
    return filtration_summary(herbrand::lower_from_upper(upper), f);
}

json cmd_oracle(flags const& f)
{
    check_prime(f.p);
    auto q = as_rational(f.a);
    if (!q)
        fail(errc::invalid_argument, "--a must be a rational for the oracle");
    oracle::options opt;
    opt.max_degree = f.max_degree;
    auto rep = oracle::verify_against_classifier(f.p, f.c, *q, opt);
    json j = oracle::to_json(rep);
    if (f.decimal) {
        j["conductor_formula"] = num(rep.conductor_formula, f);
        j["conductor_oracle"] = num(rep.conductor_oracle, f);
        j["lower_jumps"] = jumps_json(rep.lower, f);
    }
    return j;
}

std::string text_value(json const& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (auto const& e : v) {
            if (!s.empty()) s += " ";
            if (e.is_object() && e.contains("jump"))
                s += "(" + e["jump"].get<std::string>() + ", " + std::to_string(e["order"].get<long>()) + ")";
            else
                s += text_value(e);
        }
        return s.empty() ? "none" : s;
    }
    if (v.is_object()) {
        std::string s;
        for (auto const& [k, e] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + text_value(e);
        return s;
    }
    return v.dump();
}

void emit(json const& j, flags const& f, std::ostream& out)
{
    if (f.json_out) {
        out << j.dump() << "\n";
        return;
    }
    for (auto const& [k, v] : j.items()) out << k << ": " << text_value(v) << "\n";
}

void emit_error(std::ostream& err, std::string_view name, std::string const& message)
{
    json j;
    j["error"] = std::string(name);
    j["message"] = message;
    err << j.dump() << "\n";
}

}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    flags f;
    CLI::App app{"Conductors and ramification filtrations of wild Kummer extensions", "ramicond"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* s) {
        s->add_flag("--json", f.json_out, "JSON output");
        s->add_flag("--decimal", f.decimal, "decimal rendering of rationals");
    };

    auto* conductor = app.add_subcommand("conductor", "conductor of K_c(a^(1/p^c))");
    conductor->add_option("--p", f.p, "prime")->required();
    conductor->add_option("--c", f.c, "root exponent c")->required();
    auto* conductor_level = conductor->add_option("--level", f.level, "level l of the base K_l");
    conductor->add_option("--a", f.a, "rational or expression in z")->required();
    common(conductor);

    auto* primitivize = app.add_subcommand("primitivize", "write a = a' beta^p with a' p-primitive");
    primitivize->add_option("--p", f.p, "prime")->required();
    primitivize->add_option("--level", f.level, "level l of the base K_l");
    primitivize->add_option("--a", f.a, "rational or expression in z")->required();
    common(primitivize);

    auto* bound = app.add_subcommand("bound", "conductor bounds for Galois closures");
    bound->add_option("--p", f.p, "prime")->required();
    bound->add_option("--level", f.level, "level l");
    bound->add_option("--c", f.c, "root exponent c")->required();
    auto* bound_d = bound->add_option("--d", f.d, "level d of the cruder bound");
    auto* bound_a = bound->add_option("--a", f.a, "alpha in K_l");
    auto* bound_vt = bound->add_option("--vt", f.vt, "v(t) of alpha' (or of alpha with --d)");
    auto* bound_vtb = bound->add_option("--vt-beta", f.vt_beta, "v(t) of beta");
    common(bound);

    auto* cyclotomic = app.add_subcommand("cyclotomic", "filtration of K_n / K_0");
    cyclotomic->add_option("--p", f.p, "prime")->required();
    cyclotomic->add_option("--n", f.n, "level n")->required();
    common(cyclotomic);

    auto* filt = app.add_subcommand("filtration", "upper filtration from a subextension lattice");
    filt->add_option("--lattice", f.lattice, "lattice JSON file")->required();
    filt->add_option("--p", f.p, "prime");
    auto* filt_c = filt->add_option("--c", f.c, "root exponent c, with --a for p = 2");
    auto* filt_a = filt->add_option("--a", f.a, "rational a, with --c for p = 2");
    common(filt);

    auto* orc = app.add_subcommand("oracle", "brute-force filtration compared with the closed forms");
    orc->add_option("--p", f.p, "prime")->required();
    orc->add_option("--c", f.c, "root exponent c")->required();
    orc->add_option("--a", f.a, "rational a")->required();
    orc->add_option("--max-degree", f.max_degree, "degree cap");
    common(orc);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (CLI::ParseError const& e) {
        emit_error(err, "UsageError", e.what());
        return exit_validation;
    }

    try {
        json j;
        if (conductor->parsed()) j = cmd_conductor(f, conductor_level->count() > 0);
        else if (primitivize->parsed()) j = cmd_primitivize(f);
        else if (bound->parsed())
            j = cmd_bound(f, bound_a->count() > 0, bound_vt->count() > 0, bound_vtb->count() > 0, bound_d->count() > 0);
        else if (cyclotomic->parsed()) j = cmd_cyclotomic(f);
        else if (filt->parsed()) {
            if ((filt_c->count() > 0) != (filt_a->count() > 0))
                fail(errc::invalid_argument, "--c and --a go together");
            if (filt_a->count() > 0 && f.p != 2)
                fail(errc::invalid_argument, "field descriptors need p = 2");
            j = cmd_filtration(f, filt_a->count() > 0);
        }
        else j = cmd_oracle(f);
        emit(j, f, out);
        return exit_ok;
    } catch (error const& e) {
        emit_error(err, errc_name(e.code()), e.what());
        return is_validation_error(e.code()) ? exit_validation : exit_computation;
    } catch (std::exception const& e) {
        emit_error(err, "InternalError", e.what());
        return exit_computation;
    }
}

}
