// blowup: command-line front end over the C API (blowup.h).
//
// Reads a problem file (ring, ideals, divisors, points), dispatches to the
// engine and prints text or JSON. Exit codes: 0 = computed (verdicts of
// "false" included), 2 = input error, 3 = resource cap exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "blowup.h"

namespace {

using Json = nlohmann::ordered_json;

int log_level() { // 0 quiet, 1 info, 2 debug; diagnostics only
    const char* env = std::getenv("BLOWUP_LOG");
    if (!env) return 0;
    std::string v = env;
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void note(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[blowup] " << msg << "\n";
}

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

int code_of(bu_status s) {
    switch (s) {
        case BU_OK: return 0;
        case BU_ERROR_RESOURCE: return 3;
        default: return 2;
    }
}

void check(bu_status s) {
    if (s != BU_OK) die(code_of(s), bu_last_error());
}

// RAII wrappers over the C handles
template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    explicit Handle(T* p) : ptr(p) {}
    ~Handle() { reset(); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    Handle& operator=(Handle&& o) noexcept {
        if (this != &o) {
            reset();
            ptr = o.ptr;
            o.ptr = nullptr;
        }
        return *this;
    }
    void reset() {
        if (ptr) Free(ptr);
        ptr = nullptr;
    }
    T** out() {
        reset();
        return &ptr;
    }
    operator T*() const { return ptr; }
};

using Ring = Handle<bu_ring, bu_ring_free>;
using Poly = Handle<bu_poly, bu_poly_free>;
using IdealH = Handle<bu_ideal, bu_ideal_free>;
using Step = Handle<bu_step, bu_step_free>;
using Divisor = Handle<bu_divisor, bu_divisor_free>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    bu_string_free(s);
    return out;
}

std::string poly_str(const bu_poly* p) {
    char* s = nullptr;
    check(bu_poly_format(p, &s));
    return take_string(s);
}

std::vector<std::string> ideal_strings(const bu_ideal* I) {
    std::vector<std::string> out;
    for (size_t i = 0; i < bu_ideal_size(I); ++i) {
        Poly g;
        check(bu_ideal_generator(I, i, g.out()));
        out.push_back(poly_str(g));
    }
    return out;
}

// ---------------------------------------------------------------- problem file

struct DivisorSpec {
    std::vector<std::pair<std::string, unsigned>> factors; // text, multiplicity
};

struct ProblemFile {
    std::vector<std::string> ring_vars;
    std::string order = "grevlex";
    std::vector<std::pair<std::string, std::vector<std::string>>> ideals;
    std::vector<std::pair<std::string, DivisorSpec>> divisors;
    std::vector<std::pair<std::string, std::vector<std::string>>> points;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) die(2, "cannot open file '" + path + "'");
    ProblemFile pf;
    std::string line;
    int lineno = 0;
    auto syntax = [&](const std::string& what) {
        die(2, path + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        std::string rest = trim(line.substr(keyword.size()));
        if (keyword == "ring") {
            std::size_t order_at = rest.find(" order ");
            if (order_at != std::string::npos) {
                pf.order = trim(rest.substr(order_at + 7));
                rest = trim(rest.substr(0, order_at));
            }
            for (const auto& v : split_commas(rest)) {
                if (v.empty()) syntax("empty variable name");
                pf.ring_vars.push_back(v);
            }
        } else if (keyword == "ideal" || keyword == "divisor" || keyword == "point") {
            std::size_t eq = rest.find('=');
            if (eq == std::string::npos) syntax("expected '=' after the name");
            std::string name = trim(rest.substr(0, eq));
            std::string body = trim(rest.substr(eq + 1));
            if (name.empty()) syntax("missing block name");
            if (keyword == "ideal") {
                auto gens = split_commas(body);
                if (gens.empty() || gens[0].empty()) syntax("ideal needs generators");
                pf.ideals.emplace_back(name, gens);
            } else if (keyword == "point") {
                if (body.size() < 2 || body.front() != '(' || body.back() != ')')
                    syntax("point must be written as (c1, c2, ...)");
                pf.points.emplace_back(name,
                                       split_commas(body.substr(1, body.size() - 2)));
            } else {
                DivisorSpec spec;
                std::size_t pos = 0;
                while (pos < body.size()) {
                    while (pos < body.size() &&
                           (body[pos] == ' ' || body[pos] == ',' || body[pos] == '\t'))
                        ++pos;
                    if (pos >= body.size()) break;
                    if (body[pos] != '(') syntax("divisor factor must start with '('");
                    std::size_t close = body.find(')', pos);
                    if (close == std::string::npos) syntax("unclosed factor");
                    std::string factor = trim(body.substr(pos + 1, close - pos - 1));
                    pos = close + 1;
                    unsigned mult = 1;
                    if (pos < body.size() && body[pos] == '^') {
                        ++pos;
                        std::size_t start = pos;
                        while (pos < body.size() && std::isdigit((unsigned char)body[pos]))
                            ++pos;
                        if (start == pos) syntax("expected multiplicity after '^'");
                        mult = static_cast<unsigned>(std::stoul(body.substr(start, pos - start)));
                    }
                    spec.factors.emplace_back(factor, mult);
                }
                if (spec.factors.empty()) syntax("divisor has no factors");
                pf.divisors.emplace_back(name, spec);
            }
        } else {
            syntax("unknown keyword '" + keyword + "'");
        }
        // names must be unique per kind
    }
    if (pf.ring_vars.empty()) die(2, path + ": no ring declared");
    for (auto* blocks : {&pf.ideals}) {
        for (std::size_t i = 0; i < blocks->size(); ++i)
            for (std::size_t j = i + 1; j < blocks->size(); ++j)
                if ((*blocks)[i].first == (*blocks)[j].first)
                    die(2, path + ": duplicate ideal '" + (*blocks)[i].first + "'");
    }
    return pf;
}

// ---------------------------------------------------------------- dispatch

struct Session {
    ProblemFile pf;
    Ring ring;
    bool json = false;
    bool summary = false;

    Poly parse(const std::string& text) const {
        Poly p;
        check(bu_poly_parse(ring, text.c_str(), p.out()));
        return p;
    }

    const std::vector<std::string>* find_ideal(const std::string& name) const {
        for (const auto& [n, gens] : pf.ideals)
            if (n == name) return &gens;
        return nullptr;
    }

    IdealH ideal(const std::string& name, bool required = true) const {
        const auto* gens = find_ideal(name);
        if (!gens) {
            if (required) die(2, "no ideal named '" + name + "' in the problem file");
            IdealH z;
            check(bu_ideal_create(ring, nullptr, 0, z.out())); // zero ideal
            return z;
        }
        std::vector<Poly> polys;
        std::vector<const bu_poly*> raw;
        for (const auto& text : *gens) {
            polys.push_back(parse(text));
            raw.push_back(polys.back());
        }
        IdealH I;
        check(bu_ideal_create(ring, raw.data(), raw.size(), I.out()));
        return I;
    }

    // relations ideal: the named block when present, else the zero ideal
    IdealH relations(const std::string& name) const { return ideal(name, false); }

    Divisor divisor(const std::string& name) const {
        for (const auto& [n, spec] : pf.divisors) {
            if (n != name) continue;
            std::vector<Poly> polys;
            std::vector<const bu_poly*> raw;
            std::vector<unsigned> mults;
            for (const auto& [text, mult] : spec.factors) {
                polys.push_back(parse(text));
                raw.push_back(polys.back());
                mults.push_back(mult);
            }
            IdealH rel = relations("R");
            Divisor d;
            check(bu_divisor_create(rel, raw.data(), mults.data(), raw.size(), d.out()));
            return d;
        }
        die(2, "no divisor named '" + name + "' in the problem file");
    }

    std::vector<std::string> point(const std::string& name) const {
        for (const auto& [n, coords] : pf.points)
            if (n == name) return coords;
        die(2, "no point named '" + name + "' in the problem file");
    }
};

void emit(const Session& s, const Json& doc, const std::string& text) {
    if (s.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

std::string render_ideal_lines(const std::vector<std::string>& gens, const char* label) {
    std::ostringstream os;
    os << label << ":\n";
    for (const auto& g : gens) os << "  " << g << "\n";
    return os.str();
}

std::string render_charts(const Json& step) {
    std::ostringstream os;
    const auto& charts = step.at("charts");
    os << "center: (";
    bool first = true;
    for (const auto& g : step.at("center")) {
        os << (first ? "" : ", ") << g.get<std::string>();
        first = false;
    }
    os << ")\n";
    for (std::size_t i = 0; i < charts.size(); ++i) {
        const auto& c = charts[i];
        os << "chart " << i << " (g = " << c.at("exceptional").get<std::string>() << ")\n";
        os << "  ring:";
        for (const auto& v : c.at("ring").at("vars")) os << " " << v.get<std::string>();
        os << "\n  relations:";
        bool any = false;
        for (const auto& rl : c.at("relations")) {
            os << (any ? ", " : " ") << rl.get<std::string>();
            any = true;
        }
        if (!any) os << " (none)";
        os << "\n";
    }
    return os.str();
}

int run_command(const std::string& cmd, Session& s,
                const std::map<std::string, std::string>& opts, unsigned max_steps,
                unsigned max_n, unsigned control) {
    auto opt = [&](const char* key, const char* fallback) {
        auto it = opts.find(key);
        return it != opts.end() && !it->second.empty() ? it->second : std::string(fallback);
    };

    if (cmd == "gb") {
        IdealH I = s.ideal(opt("ideal", "I"));
        IdealH basis;
        check(bu_groebner_basis(I, nullptr, basis.out()));
        auto gens = ideal_strings(basis);
        Json j{{"command", "gb"}, {"basis", gens}};
        emit(s, j, render_ideal_lines(gens, "reduced groebner basis"));
        return 0;
    }
    if (cmd == "membership") {
        IdealH target = s.ideal(opt("ideal", "I"));
        IdealH member = s.ideal(opt("member", "J"));
        Json results = Json::array();
        std::ostringstream os;
        for (size_t i = 0; i < bu_ideal_size(member); ++i) {
            Poly g, nf;
            check(bu_ideal_generator(member, i, g.out()));
            check(bu_normal_form(g, target, nullptr, nf.out()));
            bool inside = bu_poly_is_zero(nf);
            results.push_back({{"element", poly_str(g)},
                               {"member", inside},
                               {"normal_form", poly_str(nf)}});
            os << poly_str(g) << ": " << (inside ? "member" : "not a member")
               << " (normal form " << poly_str(nf) << ")\n";
        }
        emit(s, Json{{"command", "membership"}, {"results", results}}, os.str());
        return 0;
    }
    if (cmd == "saturate") {
        IdealH I = s.ideal(opt("ideal", "I"));
        IdealH J = s.ideal(opt("by", "J"));
        IdealH sat;
        unsigned k = 0;
        check(bu_ideal_saturation(I, J, sat.out(), &k));
        auto gens = ideal_strings(sat);
        Json j{{"command", "saturate"}, {"exponent", k}, {"generators", gens}};
        emit(s, j,
             render_ideal_lines(gens, "saturation") + "stabilization exponent: " +
                 std::to_string(k) + "\n");
        return 0;
    }
    if (cmd == "blowup") {
        IdealH rel = s.relations(opt("relations", "R"));
        IdealH center = s.ideal(opt("center", "J"));
        Step step;
        check(bu_blowup(rel, center, step.out()));
        char* js = nullptr;
        check(bu_step_to_json(step, &js));
        Json j = Json::parse(take_string(js));
        emit(s, j, render_charts(j));
        return 0;
    }
    if (cmd == "transform") {
        IdealH rel = s.relations(opt("relations", "R"));
        IdealH center = s.ideal(opt("center", "J"));
        IdealH I = s.ideal(opt("ideal", "I"));
        std::string kind = opt("kind", "strict");
        Step step;
        check(bu_blowup(rel, center, step.out()));
        Json charts = Json::array();
        std::ostringstream os;
        for (size_t ci = 0; ci < bu_step_chart_count(step); ++ci) {
            IdealH moved;
            if (kind == "total")
                check(bu_total_transform(step, ci, I, moved.out()));
            else if (kind == "strict")
                check(bu_strict_transform(step, ci, I, moved.out()));
            else if (kind == "controlled")
                check(bu_controlled_transform(step, ci, I, control, moved.out()));
            else
                die(2, "unknown transform kind '" + kind + "'");
            auto gens = ideal_strings(moved);
            Poly exc;
            check(bu_step_chart_exceptional(step, ci, exc.out()));
            charts.push_back({{"chart", ci},
                              {"exceptional", poly_str(exc)},
                              {"generators", gens}});
            os << "chart " << ci << " (g = " << poly_str(exc) << "): "
               << kind << " transform\n";
            for (const auto& g : gens) os << "  " << g << "\n";
        }
        emit(s, Json{{"command", "transform"}, {"kind", kind}, {"charts", charts}}, os.str());
        return 0;
    }
    if (cmd == "jacobian-ideal") {
        IdealH rel = s.relations(opt("relations", "R"));
        IdealH H;
        check(bu_jacobian_ideal(rel, H.out()));
        auto gens = ideal_strings(H);
        emit(s, Json{{"command", "jacobian-ideal"}, {"generators", gens}},
             render_ideal_lines(gens, "jacobian ideal"));
        return 0;
    }
    if (cmd == "smooth-check") {
        IdealH rel = s.relations(opt("relations", "R"));
        int smooth = 0;
        char* witness = nullptr;
        check(bu_is_smooth(rel, &smooth, &witness));
        Json w = Json::parse(take_string(witness));
        std::ostringstream os;
        os << "smooth: " << (smooth ? "true" : "false") << "\n";
        if (!smooth) {
            os << "singular locus basis:\n";
            for (const auto& g : w.at("witness")) os << "  " << g.get<std::string>() << "\n";
        }
        emit(s, Json{{"command", "smooth-check"}, {"smooth", smooth != 0}, {"detail", w}},
             os.str());
        return 0;
    }
    if (cmd == "singular-locus") {
        IdealH rel = s.relations(opt("relations", "R"));
        IdealH sing;
        check(bu_singular_locus(rel, sing.out()));
        auto gens = ideal_strings(sing);
        emit(s, Json{{"command", "singular-locus"}, {"generators", gens}},
             render_ideal_lines(gens, "singular locus ideal"));
        return 0;
    }
    if (cmd == "max-order") {
        IdealH I = s.ideal(opt("ideal", "I"));
        Poly f;
        check(bu_ideal_generator(I, 0, f.out()));
        unsigned mu = 0;
        IdealH locus;
        check(bu_max_order_locus(f, &mu, locus.out()));
        auto gens = ideal_strings(locus);
        emit(s, Json{{"command", "max-order"}, {"mu", mu}, {"locus", gens}},
             "mu: " + std::to_string(mu) + "\n" + render_ideal_lines(gens, "locus"));
        return 0;
    }
    if (cmd == "snc-check") {
        Divisor d = s.divisor(opt("divisor", "D"));
        char* verdict = nullptr;
        std::string pname = opt("point", "");
        if (!pname.empty()) {
            auto coords = s.point(pname);
            std::vector<const char*> raw;
            for (const auto& c : coords) raw.push_back(c.c_str());
            check(bu_snc_check_at_point(d, raw.data(), raw.size(), &verdict));
        } else {
            check(bu_snc_check(d, &verdict));
        }
        Json j = Json::parse(take_string(verdict));
        std::ostringstream os;
        os << "snc: " << (j.at("snc").get<bool>() ? "true" : "false") << "\n";
        for (const auto& f : j.at("failures")) {
            os << "  failure: factors {";
            bool first = true;
            for (const auto& i : f.at("subset")) {
                os << (first ? "" : ", ") << i.get<int>();
                first = false;
            }
            os << "} " << f.at("reason").get<std::string>() << "\n";
        }
        emit(s, Json{{"command", "snc-check"}, {"verdict", j}}, os.str());
        return 0;
    }
    if (cmd == "monomial-check") {
        Divisor d = s.divisor(opt("divisor", "D"));
        int monomial = 0;
        check(bu_monomial_check(d, &monomial));
        emit(s, Json{{"command", "monomial-check"}, {"monomial", monomial != 0}},
             std::string("monomial: ") + (monomial ? "true" : "false") + "\n");
        return 0;
    }
    if (cmd == "separate") {
        IdealH rel = s.relations(opt("relations", "R"));
        IdealH left = s.ideal(opt("left", "I"));
        IdealH right = s.ideal(opt("right", "J"));
        int separated = 0;
        Step step;
        check(bu_separate_components(rel, left, right, &separated, step.out()));
        char* js = nullptr;
        check(bu_step_to_json(step, &js));
        Json j = Json::parse(take_string(js));
        emit(s,
             Json{{"command", "separate"}, {"separated", separated != 0}, {"step", j}},
             std::string("separated: ") + (separated ? "true" : "false") + "\n" +
                 render_charts(j));
        return 0;
    }
    if (cmd == "principalize") {
        IdealH rel = s.relations(opt("relations", "R"));
        IdealH I = s.ideal(opt("ideal", "I"));
        IdealH J = s.ideal(opt("in", "J"));
        char* js = nullptr;
        check(bu_principalize(rel, I, J, max_n, &js));
        Json j = Json::parse(take_string(js));
        std::ostringstream os;
        os << "n: " << j.at("n").get<unsigned>() << "\n";
        const auto& gens = j.at("chart_generators");
        for (std::size_t ci = 0; ci < gens.size(); ++ci) {
            os << "chart " << ci << " strict transform generators:";
            for (const auto& g : gens[ci]) os << " " << g.get<std::string>();
            os << "\n";
        }
        emit(s, Json{{"command", "principalize"}, {"result", j}}, os.str());
        return 0;
    }
    if (cmd == "strnorm") {
        Divisor d = s.divisor(opt("divisor", "D"));
        char* js = nullptr;
        check(bu_strnorm_surface(d, max_steps, &js));
        Json j = Json::parse(take_string(js));
        std::ostringstream os;
        os << "steps: " << j.at("steps").get<unsigned>() << "\n";
        for (const auto& leaf : j.at("leaves")) {
            os << "leaf " << leaf.at("path").get<std::string>() << ": snc = "
               << (leaf.at("snc").get<bool>() ? "true" : "false") << "; divisor:";
            for (const auto& df : leaf.at("divisor"))
                os << " " << df.at("name").get<std::string>() << " = ("
                   << df.at("factor").get<std::string>() << ")";
            os << "\n";
        }
        emit(s, j, os.str());
        return 0;
    }
    if (cmd == "resolve-curve") {
        IdealH I = s.ideal(opt("ideal", "I"));
        Poly f;
        check(bu_ideal_generator(I, 0, f.out()));
        char* js = nullptr;
        check(bu_resolve_plane_curve(f, max_steps, &js));
        std::string trace = take_string(js);
        if (s.json) {
            std::cout << trace << "\n";
        } else {
            char* sum = nullptr;
            check(bu_trace_summary(trace.c_str(), &sum));
            std::cout << take_string(sum);
        }
        return 0;
    }
    die(2, "unknown command '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blowup: exact blow ups, transforms and embedded resolution of plane curves"};
    app.require_subcommand(0);

    std::string file;
    std::map<std::string, std::string> opts;
    bool json = false, summary = false, verbose = false;
    unsigned max_steps = 32, max_n = 8, control = 0;
    unsigned sat_cap = 0, gb_cap = 0;
    std::string order_override;

    std::vector<std::string> commands = {
        "gb",          "membership",  "saturate",      "blowup",
        "transform",   "jacobian-ideal", "smooth-check", "singular-locus",
        "max-order",   "snc-check",   "monomial-check", "separate",
        "principalize", "strnorm",    "resolve-curve", "verify"};
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c, "");
        sub->add_option("file", file, "problem file")->required();
        sub->add_flag("--json", json, "emit JSON on stdout");
        sub->add_flag("--summary", summary, "one line per step");
        sub->add_flag("--verbose", verbose, "more diagnostics on stderr");
        sub->add_option("--order", order_override, "monomial order override");
        sub->add_option("--max-steps", max_steps, "blow-up budget");
        sub->add_option("--max-n", max_n, "principalization search bound");
        sub->add_option("--sat-cap", sat_cap, "saturation iteration cap");
        sub->add_option("--gb-cap", gb_cap, "groebner S-pair cap");
        for (const char* key : {"ideal", "member", "by", "center", "relations", "kind",
                                "left", "right", "divisor", "point", "in"})
            sub->add_option(std::string("--") + key, opts[key]);
        sub->add_option("--control", control, "exceptional power to divide out");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto* active = [&]() -> CLI::App* {
        for (auto* sub : subs)
            if (sub->parsed()) return sub;
        return nullptr;
    }();
    if (!active) {
        std::cerr << app.help() << "\n";
        return 2;
    }
    const std::string cmd = active->get_name();

    try {
        if (sat_cap || gb_cap) bu_set_limits(sat_cap, gb_cap, 0);

        if (cmd == "verify") {
            std::ifstream in(file);
            if (!in) die(2, "cannot open file '" + file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            int ok = 0;
            char* report = nullptr;
            check(bu_verify_trace(buf.str().c_str(), &ok, &report));
            std::string rep = take_string(report);
            if (json) {
                Json j{{"command", "verify"}, {"verified", ok != 0}, {"report", rep}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "verified: " << (ok ? "true" : "false") << "\n";
                if (!rep.empty()) std::cout << rep;
            }
            return 0;
        }

        Session s;
        s.pf = parse_problem(file);
        s.json = json;
        s.summary = summary;
        if (!order_override.empty()) s.pf.order = order_override;
        std::vector<const char*> names;
        for (const auto& v : s.pf.ring_vars) names.push_back(v.c_str());
        check(bu_ring_create(names.data(), names.size(), s.pf.order.c_str(), s.ring.out()));
        note("ring with " + std::to_string(s.pf.ring_vars.size()) + " variables, order " +
             s.pf.order);
        return run_command(cmd, s, opts, max_steps, max_n, control);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
