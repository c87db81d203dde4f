#include "braidforge/acceptance.hpp"
#include "braidforge/adequacy.hpp"
#include "braidforge/burau.hpp"
#include "braidforge/classify3.hpp"
#include "braidforge/hecke.hpp"
#include "braidforge/mwf.hpp"
#include "braidforge/parallel.hpp"
#include "braidforge/polyring.hpp"
#include "braidforge/qpoly.hpp"
#include "braidforge/unitarity.hpp"
#include "braidforge/xuform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace bf;
using nlohmann::json;

namespace {

struct Options {
    size_t budget = 2000000;
    double tol = 1e-9;
    double step = 1e-4;
    std::vector<std::string> t_grid;
    bool json = false;
    std::string out;
    int n = 4;
    std::string kind = "alexander";
    std::string search;
    int components = -1;
    std::vector<std::string> inputs;
};

// 12 significant digits; the shortest round trip of the rounded value prints no more than that
double round12(double x)
{
    if (!std::isfinite(x))
        return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json num(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (std::isnan(x))
        return "nan";
    // quadrature and rounding noise around zero would otherwise leak into the output
    if (std::abs(x) < 1e-13)
        return 0.0;
    return round12(x);
}
json num(cplx z) { return json{{"re", num(z.real())}, {"im", num(z.imag())}}; }
json num(const Rational& r)
{
    if (r.denominator() == 1)
        return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json poly_json(const Poly& p) { return json{{"human", to_human(p)}, {"text", to_text(p)}}; }
json poly_json(const Poly2& p) { return json{{"human", to_human(p)}, {"text", to_text(p)}}; }

// one input line: where it came from and its text
struct Item {
    std::string source;
    int line = 0;
    std::string text;
};

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// an argument is a file when one exists by that name, otherwise inline
std::vector<Item> gather(const std::vector<std::string>& inputs)
{
    std::vector<Item> items;
    for (auto& in : inputs) {
        std::error_code ec;
        if (!std::filesystem::is_regular_file(in, ec)) {
            items.push_back({"<arg>", 0, in});
            continue;
        }
        std::ifstream f(in);
        std::string line;
        int k = 0;
        while (std::getline(f, line)) {
            ++k;
            std::string s = trim(line);
            if (s.empty() || s[0] == '#')
                continue;
            items.push_back({in, k, s});
        }
    }
    return items;
}

std::string where(const Item& it) { return it.line ? it.source + ":" + std::to_string(it.line) : it.source; }

BraidWord parse_item(const Item& it)
{
    try {
        return parse_braid(it.text);
    } catch (const ParseError& e) {
        std::string m = e.what();
        m.erase(m.rfind(" at column "));
        throw ParseError(where(it) + ": " + m, e.column);
    }
}

// text format "t: d:c ..." or human form
Poly parse_poly(const std::string& s)
{
    std::string x = trim(s);
    if (x.size() >= 2 && x[1] == ':')
        return poly_from_text(x);
    return poly_from_human(x);
}

bool nonsplit(const BraidWord& w)
{
    std::vector<bool> has(size_t(w.strands), false);
    for (int l : w.letters)
        has[size_t(std::abs(l))] = true;
    return std::count(has.begin() + 1, has.end(), true) == w.strands - 1;
}

json verdict_json(const UnitarityVerdict& v)
{
    json j{{"status", to_string(v.status)}, {"test", v.test}, {"t", num(v.t)}, {"value", num(v.value)},
           {"bound", num(v.bound)}, {"tol", num(v.tol)}};
    if (!v.reason.empty())
        j["reason"] = v.reason;
    if (v.delta)
        j["delta"] = num(*v.delta);
    if (v.y)
        j["y"] = num(*v.y);
    if (v.y_lo)
        j["y_lo"] = num(*v.y_lo);
    if (v.y_hi)
        j["y_hi"] = num(*v.y_hi);
    if (v.lambda)
        j["lambda"] = num(*v.lambda);
    return j;
}

json xu_json(const BraidWord& w)
{
    XuForm f = xu_normal_form(w);
    json j{{"form", to_string(f)}, {"band_word", to_string(f.band_word())}, {"band_length", f.band_length},
           {"inf", f.inf}, {"sup", f.sup}};
    EulerData e = euler_char(w);
    j["chi"] = e.chi;
    j["genus2"] = e.genus2;
    if (nonsplit(w)) {
        j["strongly_quasipositive"] = is_strongly_quasipositive(w);
        j["fibered"] = is_fibered(w);
    }
    return j;
}

json cmd_invariants(const BraidWord& w, const Options& o)
{
    json j;
    ClosureData cd = closure_data(w);
    j["strands"] = w.strands;
    j["length"] = w.length();
    j["exponent_sum"] = exponent_sum(w);
    j["components"] = cd.components;
    json lk = json::array();
    for (int a = 0; a < cd.components; ++a)
        for (int b = a + 1; b < cd.components; ++b)
            lk.push_back(json{{"i", a}, {"j", b}, {"lk", cd.lk(a, b)}});
    j["linking"] = lk;
    j["alexander"] = poly_json(alexander(w));
    if (w.strands == 3)
        j["jones"] = poly_json(jones3(w));
    else if (w.strands == 4)
        j["jones"] = poly_json(jones4(w));
    else if (w.length() <= 22)
        j["jones"] = poly_json(bracket_oracle(w));
    Poly2 P = w.strands <= 4 ? skein4(w) : homfly_oracle(w, int(std::min<size_t>(o.budget, 64)));
    j["homfly"] = poly_json(P);
    j["mwf_bound"] = mwf_bound(P);
    if (w.strands == 3)
        j["xu"] = xu_json(w);
    return j;
}

json cmd_xu(const BraidWord& w, const Options&)
{
    if (w.strands != 3)
        throw std::invalid_argument("xu needs a 3-braid");
    return xu_json(w);
}

json cmd_classify(const BraidWord& w, const Options&)
{
    if (w.strands != 3)
        throw std::invalid_argument("classify needs a 3-braid");
    AlexProfile a = alexander_profile(w);
    JonesProfile p = jones_profile(w);
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["alexander_profile"] = json{{"zero", a.zero}, {"dmax", a.dmax}, {"maxcf", a.maxcf}, {"sign_known", a.sign_known},
                                  {"reason", a.reason}};
    j["jones_profile"] = json{{"case", p.hh_case},         {"dmin", opt(p.dmin)},          {"dmax", opt(p.dmax)},
                              {"dmin_ge", opt(p.dmin_ge)}, {"dmax_le", opt(p.dmax_le)},    {"span_eq", opt(p.span_eq)},
                              {"span_le", opt(p.span_le)}, {"mincf_abs", opt(p.mincf_abs)}, {"maxcf_abs", opt(p.maxcf_abs)},
                              {"reason", p.reason}};
    j["note"] = "degrees are doubled";
    return j;
}

json cmd_classify_search(const Poly& target, const Options& o)
{
    PolyKind kind = o.search == "jones" ? PolyKind::Jones : PolyKind::Alexander;
    SearchResult r = search_3braids_by_polynomial(target, kind, o.components, o.budget);
    json forms = json::array();
    for (auto& f : r.forms)
        forms.push_back(json{{"form", to_string(f)}, {"band_word", to_string(f.band_word())}});
    json j{{"kind", o.search}, {"forms", forms}, {"chi_searched", r.chi_searched}, {"enumerated", r.enumerated}};
    if (o.components > 0) {
        Verdict v = exclusion_certificate(target, kind, o.components);
        j["certificate"] = json{{"excluded", v.excluded}, {"reason", v.reason}, {"chi_candidates", v.chi_candidates}};
    }
    return j;
}

json cmd_adequacy(const BraidWord& w, const Options&)
{
    json j;
    j["a_adequate"] = is_adequate(w, StateKind::A);
    j["b_adequate"] = is_adequate(w, StateKind::B);
    for (auto [k, name] : {std::pair{StateKind::A, "a_state"}, std::pair{StateKind::B, "b_state"}}) {
        StateGraph s = state(w, k);
        AGraphSummary g = graph_summary(s);
        j[name] = json{{"loops", s.loops}, {"chi_g", g.chi_g}, {"chi_ig", g.chi_ig}, {"triangles", g.triangles}};
    }
    if (w.strands == 3) {
        auto c = semiadequate_conjugate(w);
        j["semiadequate_conjugate"] = c ? json(to_string(*c)) : json(nullptr);
    }
    return j;
}

json cmd_mwf(const BraidWord& w, const Options& o)
{
    json j;
    Poly2 P = w.strands <= 4 ? skein4(w) : homfly_oracle(w, int(std::min<size_t>(o.budget, 64)));
    j["skein_mwf"] = mwf_bound(P);
    if (is_positive(w)) {
        j["resolution_mwf"] = resolution_mwf(w, o.budget);
        BraidWord m = maximal_subword(w);
        j["maximal_subword"] = to_string(m);
        j["summit_reduced"] = is_summit_reduced(w);
        j["index_reduced"] = is_index_reduced(w, o.budget);
        ExceptionMatch e = thmwf_exception_match(w);
        j["exception_family"] = e.matched ? json(e.family) : json(nullptr);
    }
    return j;
}

json cmd_q(const BraidWord& w, const Options&)
{
    if (w.strands != 3)
        throw std::invalid_argument("q needs a 3-braid");
    json j;
    j["q"] = poly_json(murakami_q(w));
    j["kanenobu_residual"] = num(kanenobu_residual(w));
    j["components"] = components(w);
    if (components(w) == 1)
        j["v2"] = casson_v2(w);
    return j;
}

json mahler_json(const Poly& p)
{
    if (p.is_zero())
        return json{{"zero", true}};
    MahlerData m = norms_and_mahler(p);
    return json{{"norm1", num(m.norm1)},
                {"norm2", num(m.norm2)},
                {"mahler", num(m.mahler_roots)},
                {"mahler_classical", num(m.mahler_classical)},
                {"jensen_log", num(m.jensen_log)}};
}

std::vector<UnitPoint> t_points(const Options& o)
{
    std::vector<UnitPoint> pts;
    for (auto& s : o.t_grid) {
        auto k = s.find('/');
        if (k == std::string::npos)
            throw std::invalid_argument("--t expects a/b, got '" + s + "'");
        pts.push_back(UnitPoint::from_fraction(std::stol(s.substr(0, k)), std::stol(s.substr(k + 1))));
    }
    return pts;
}

// "alexander: ...; jones: ...; e: 3" or a bare polynomial of the --kind given
json cmd_obstruct(const Item& it, const Options& o, bool& excluded)
{
    std::optional<Poly> D, V;
    std::optional<int> e;
    std::stringstream ss(it.text);
    std::string field;
    bool keyed = it.text.find('=') != std::string::npos;
    while (std::getline(ss, field, ';')) {
        field = trim(field);
        if (field.empty())
            continue;
        if (!keyed) {
            (o.kind == "jones" ? V : D) = parse_poly(field);
            continue;
        }
        auto k = field.find('=');
        if (k == std::string::npos)
            throw std::invalid_argument(where(it) + ": expected key=value");
        std::string key = trim(field.substr(0, k)), val = trim(field.substr(k + 1));
        if (key == "alexander")
            D = parse_poly(val);
        else if (key == "jones")
            V = parse_poly(val);
        else if (key == "e")
            e = std::stoi(val);
        else
            throw std::invalid_argument(where(it) + ": unknown key '" + key + "'");
    }
    json out = json::array();
    for (auto& p : t_points(o)) {
        std::vector<UnitarityVerdict> vs{norm_tests(V, D, p, o.n)};
        if (D && e && (o.n == 3 || o.n == 4))
            vs.push_back(refined_test(*D, *e, p, o.n));
        if (D && V && e && o.n == 4)
            vs.push_back(fourbraid_eigen_test(*D, *V, *e, p, o.step, o.tol));
        for (auto& v : vs) {
            excluded |= v.status == Status::Excluded;
            out.push_back(verdict_json(v));
        }
    }
    return json{{"verdicts", out}, {"n", o.n}};
}

struct Outcome {
    json record;
    bool error = false;
    bool excluded = false;
};

std::string plain(const json& rec)
{
    std::ostringstream os;
    os << rec.value("input", std::string()) << ":";
    for (auto& [k, v] : rec.items()) {
        if (k == "input")
            continue;
        os << " " << k << "=";
        if (v.is_object() && v.contains("human"))
            os << v["human"].get<std::string>();
        else if (v.is_string())
            os << v.get<std::string>();
        else
            os << v.dump();
    }
    return os.str();
}

int run_batch(const std::string& cmd, const Options& o, std::ostream& os)
{
    std::vector<Item> items = gather(o.inputs);
    if (items.empty())
        throw std::invalid_argument("no inputs");
    std::vector<Outcome> res(items.size());
    parallel_for(items.size(), [&](size_t i) {
        const Item& it = items[i];
        Outcome& r = res[i];
        r.record["input"] = it.text;
        if (it.line)
            r.record["source"] = where(it);
        try {
            json body;
            bool polyin = cmd == "obstruct" || cmd == "mahler" || (cmd == "classify" && !o.search.empty());
            if (cmd == "obstruct") {
                body = cmd_obstruct(it, o, r.excluded);
            } else if (cmd == "mahler" && it.text.front() != '[') {
                body = mahler_json(parse_poly(it.text));
            } else if (cmd == "classify" && polyin) {
                body = cmd_classify_search(parse_poly(it.text), o);
            } else {
                BraidWord w = parse_item(it);
                if (cmd == "invariants")
                    body = cmd_invariants(w, o);
                else if (cmd == "xu")
                    body = cmd_xu(w, o);
                else if (cmd == "classify")
                    body = cmd_classify(w, o);
                else if (cmd == "adequacy")
                    body = cmd_adequacy(w, o);
                else if (cmd == "mwf")
                    body = cmd_mwf(w, o);
                else if (cmd == "q")
                    body = cmd_q(w, o);
                else if (cmd == "mahler")
                    body = json{{"alexander", mahler_json(alexander(w))},
                                {"jones", w.strands == 3   ? mahler_json(jones3(w))
                                          : w.strands == 4 ? mahler_json(jones4(w))
                                                           : mahler_json(bracket_oracle(w))}};
            }
            for (auto& [k, v] : body.items())
                r.record[k] = v;
        } catch (const ParseError& e) {
            r.record["error"] = e.what();
            r.record["column"] = e.column;
            r.error = true;
        } catch (const std::runtime_error& e) {
            // budget exceedances are reported and do not fail the batch
            r.record["error"] = e.what();
            if (std::string(e.what()).find("budget") != std::string::npos)
                r.record["budget_exceeded"] = true;
            else
                r.error = true;
        } catch (const std::exception& e) {
            r.record["error"] = e.what();
            r.error = true;
        }
    });

    bool error = false, excluded = false;
    json all = json::array();
    for (auto& r : res) {
        error |= r.error;
        excluded |= r.excluded;
        if (o.json)
            all.push_back(r.record);
        else
            os << plain(r.record) << "\n";
    }
    if (o.json)
        os << all.dump(2) << "\n";
    if (error)
        return 1;
    return cmd == "obstruct" && excluded ? 2 : 0;
}

int run_selftest(const Options& o, std::ostream& os)
{
    auto rs = run_acceptance();
    bool ok = true;
    json all = json::array();
    for (auto& r : rs) {
        ok &= r.pass;
        if (o.json)
            all.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            os << format_line(r) << "\n";
    }
    if (o.json)
        os << all.dump(2) << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"braid closure invariants and obstructions"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s, bool inputs = true) {
        s->add_option("--budget", o.budget, "search/state budget");
        s->add_option("--tol", o.tol, "numeric tolerance");
        s->add_option("--step", o.step, "scan step");
        s->add_flag("--json", o.json, "emit JSON");
        s->add_option("--out", o.out, "write output to a file");
        if (!inputs)
            return;
        // taken raw from the leftovers: CLI11 would unpack a "[...]" word as a list
        s->allow_extras();
        s->footer("Inputs: braid words such as [12-1] or \"s12^-3 s2\", polynomials such as \"t - 1 + t^-1\" or\n"
                  "\"t: 2:1 0:-1 -2:1\", or files with one per line (# starts a comment).");
    };
    std::map<std::string, CLI::App*> subs;
    for (auto [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"invariants", "polynomials, linking, Xu form and flags of braid closures"},
             {"xu", "Xu normal form of 3-braids"},
             {"classify", "Alexander/Jones profiles of 3-braids, or --search by polynomial"},
             {"adequacy", "A/B adequacy of the closure diagram"},
             {"mwf", "MWF bound from the skein polynomial and from resolution trees"},
             {"obstruct", "unitarity obstructions for polynomial data"},
             {"q", "Q polynomial, Kanenobu residual and v2 of 3-braid closures"},
             {"mahler", "norms and Mahler measure"},
             {"selftest", "run the acceptance suite"}}) {
        auto* s = app.add_subcommand(name, help);
        common(s, name != "selftest");
        subs[name] = s;
    }
    subs["obstruct"]->add_option("--t", o.t_grid, "points a/b meaning exp(2 pi i a/b), repeatable")
        ->required()
        ->allow_extra_args(false);
    subs["obstruct"]->add_option("--n", o.n, "braid index")->check(CLI::Range(2, 64));
    subs["obstruct"]->add_option("--kind", o.kind, "bare polynomials are this")->check(CLI::IsMember({"alexander", "jones"}));
    subs["classify"]->add_option("--search", o.search, "inputs are polynomials of this kind")
        ->check(CLI::IsMember({"alexander", "jones"}));
    subs["classify"]->add_option("--components", o.components, "component count for the search and certificate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            std::cerr << "cannot open " << o.out << "\n";
            return 1;
        }
    }
    std::ostream& os = o.out.empty() ? std::cout : file;
    try {
        for (auto& [name, s] : subs)
            if (s->parsed()) {
                o.inputs = s->remaining();
                for (auto& a : o.inputs)
                    if (a.size() > 1 && a[0] == '-' && a[1] == '-')
                        throw std::invalid_argument("unknown option " + a);
                return name == "selftest" ? run_selftest(o, os) : run_batch(name, o, os);
            }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
