#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "folsym/liouville.hpp"
#include "folsym/monomial.hpp"
#include "folsym/parse.hpp"
#include "folsym/torus.hpp"
#include "folsym/trace_json.hpp"

using namespace folsym;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// small shared helpers

json int_json(const Int& v) {
    try {
        return json(v.convert_to<long long>());
    } catch (...) {
        return json(v.str());
    }
}

json int2_json(const IntMatrix2& m) {
    return json::array({json::array({int_json(m.a), int_json(m.b)}),
                        json::array({int_json(m.c), int_json(m.d)})});
}

json qmat_json(const QMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(quad_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/** i and j are handy unit names the expression parser does not know. */
std::string desugar_units(const std::string& text) {
    std::string out;
    std::size_t k = 0;
    while (k < text.size()) {
        if (std::isalpha((unsigned char)text[k])) {
            std::size_t e = k;
            while (e < text.size() && std::isalnum((unsigned char)text[e])) ++e;
            std::string word = text.substr(k, e - k);
            if (word == "i")
                out += "(sqrt(-1))";
            else if (word == "j")
                out += "((sqrt(-3)-1)/2)";
            else
                out += word;
            k = e;
        } else {
            out += text[k++];
        }
    }
    return out;
}

QuadNumber parse_unit_scalar(const std::string& text) {
    return parse_scalar(desugar_units(text));
}

/** Split "[[a,b],[c,d]]" (any square size) into entry strings, row major. */
std::vector<std::string> matrix_entries(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.size() < 6 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
        throw ParseError("matrix must look like [[a,b],[c,d]]", 0);
    std::string body = s.substr(2, s.size() - 4);
    std::vector<std::string> rows;
    std::size_t pos;
    while ((pos = body.find("],[")) != std::string::npos) {
        rows.push_back(body.substr(0, pos));
        body = body.substr(pos + 3);
    }
    rows.push_back(body);
    std::vector<std::string> out;
    for (const auto& r : rows) {
        int depth = 0;
        std::string cur;
        for (char c : r) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(cur);
    }
    for (const auto& e : out)
        if (e.empty()) throw ParseError("matrix has an empty entry", 0);
    return out;
}

IntMatrix2 parse_int_matrix(const std::string& text) {
    auto es = matrix_entries(text);
    if (es.size() != 4) throw ParseError("expected a 2x2 matrix", 0);
    Int v[4];
    for (int k = 0; k < 4; ++k) {
        QuadNumber q = parse_unit_scalar(es[(std::size_t)k]);
        if (!q.is_integer()) throw ParseError("matrix entries must be integers", 0);
        v[k] = boost::multiprecision::numerator(q.rational_part());
    }
    return {v[0], v[1], v[2], v[3]};
}

QMat parse_quad_matrix(const std::string& text) {
    auto es = matrix_entries(text);
    std::size_t n = es.size() == 4 ? 2 : es.size() == 16 ? 4 : 0;
    if (n == 0) throw ParseError("expected a 2x2 or 4x4 matrix", 0);
    QMat m(n);
    for (std::size_t k = 0; k < es.size(); ++k)
        m.at(k / n, k % n) = parse_unit_scalar(es[k]);
    return m;
}

LatticeKind parse_lattice(const std::string& name) {
    if (name == "zi") return LatticeKind::ZiSquare;
    if (name == "zj") return LatticeKind::ZjSquare;
    if (name == "e2" || name == "e") return LatticeKind::ESquare;
    if (name == "z4") return LatticeKind::GeneralZ4;
    throw ParseError("unknown lattice '" + name + "' (try zi, zj, e2, z4)", 0);
}

std::string lattice_name(LatticeKind k) {
    switch (k) {
        case LatticeKind::ZiSquare: return "zi";
        case LatticeKind::ZjSquare: return "zj";
        case LatticeKind::ESquare: return "e2";
        default: return "z4";
    }
}

LatticeKind infer_lattice(const QMat& m) {
    if (m.size() == 4) return LatticeKind::GeneralZ4;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            Int d = m.at(i, j).radicand();
            if (d == -1) return LatticeKind::ZiSquare;
            if (d == -3) return LatticeKind::ZjSquare;
        }
    return LatticeKind::ESquare;
}

SurfaceModel make_atlas(const std::string& atlas, const OneForm& w) {
    if (atlas == "affine") {
        SurfaceModel m = SurfaceModel::affine(w);
        QuadNumber z(0);
        m.register_curve(w.vx() + "=0", 0, {{0, 0, z}});
        m.register_curve(w.vy() + "=0", 0, {{0, 1, z}});
        return m;
    }
    if (atlas == "p2") {
        SurfaceModel m = SurfaceModel::p2(w);
        QuadNumber z(0);
        m.register_curve(w.vx() + "=0", 1, {{0, 0, z}, {2, 1, z}});
        m.register_curve(w.vy() + "=0", 1, {{0, 1, z}, {1, 1, z}});
        return m;
    }
    if (atlas == "p1xp1") return SurfaceModel::p1xp1(w);
    throw ParseError("unknown atlas '" + atlas + "' (try affine, p2, p1xp1)", 0);
}

/** Blow up the first singular point (non-reduced ones first), n times. */
void reduce_steps(SurfaceModel& m, int steps) {
    for (int k = 0; k < steps; ++k) {
        auto reports = m.singular_reports();
        if (reports.empty()) return;
        const SingularityReport* next = &reports.front();
        for (const auto& r : reports)
            if (!r.sing.reduced) {
                next = &r;
                break;
            }
        m.blow_up(next->chart, next->point.first, next->point.second);
    }
}

// ---------------------------------------------------------------------------
// output plumbing

struct Sink {
    std::ostream& os;
    std::string format = "text";

    void emit(const json& j, const std::string& text) const {
        if (format == "json")
            os << j.dump(2) << "\n";
        else
            os << text;
    }
};

int emit_error(std::ostream& os, int code, const std::string& kind, const std::string& msg) {
    json e;
    e["schema_version"] = kSchemaVersion;
    e["error"] = {{"code", code}, {"kind", kind}, {"message", msg}};
    os << e.dump() << "\n";
    return code;
}

// ---------------------------------------------------------------------------
// subcommand bodies

void cmd_reduce(const Sink& sink, const std::string& form_text, const std::string& atlas,
                int max_blowups, const std::string& trace_file) {
    OneForm w = parse_form(form_text);
    SurfaceModel model = make_atlas(atlas, w);
    ReductionTrace tr = seidenberg_reduce(model, max_blowups);

    json full = trace_json(model, tr, form_text, atlas, max_blowups);
    if (!trace_file.empty()) {
        std::ofstream out(trace_file);
        if (!out) throw Error("cannot write trace file " + trace_file);
        out << full.dump(2) << "\n";
    }

    if (sink.format == "dot") {
        sink.os << export_dual_graph(model);
        return;
    }

    json j;
    j["schema_version"] = kSchemaVersion;
    j["blowups"] = tr.blowup_count;
    j["dicritical"] = tr.dicritical_count > 0;
    j["reports"] = json::array();
    for (const auto& r : tr.final_reports) j["reports"].push_back(report_json(model, r));
    j["curves"] = full["curves"];

    std::ostringstream text;
    text << "blowups: " << tr.blowup_count << "\n";
    text << "dicritical: " << (tr.dicritical_count > 0 ? "true" : "false") << "\n";
    text << "reports:\n";
    for (const auto& r : tr.final_reports)
        text << "  " << model.charts()[(std::size_t)r.chart].name << " ("
             << r.point.first.str() << ", " << r.point.second.str()
             << "): " << sing_type_name(r.sing.type) << "\n";
    sink.emit(j, text.str());
}

void cmd_cs_check(const Sink& sink, const std::string& curve, const std::string& form_text,
                  const std::string& atlas, const std::string& trace_file, int max_blowups,
                  int steps) {
    SurfaceModel model = SurfaceModel::affine(OneForm(BiPoly::var_x(), BiPoly::var_y()));
    if (!trace_file.empty()) {
        std::ifstream in(trace_file);
        if (!in) throw Error("cannot read trace file " + trace_file);
        json tr = json::parse(in, nullptr, false);
        if (tr.is_discarded()) throw ParseError("trace file is not valid JSON", 0);
        std::string form = tr.at("input").at("form").get<std::string>();
        std::string at = tr.at("input").at("atlas").get<std::string>();
        int budget = tr.at("input").at("max_blowups").get<int>();
        model = make_atlas(at, parse_form(form));
        ReductionTrace replay = seidenberg_reduce(model, budget);
        if (replay.blowup_count != tr.at("blowup_count").get<int>())
            throw Error("trace replay diverged from the recorded reduction");
    } else {
        if (form_text.empty()) throw ParseError("cs-check needs a form or a --trace file", 0);
        model = make_atlas(atlas, parse_form(form_text));
        if (steps >= 0)
            reduce_steps(model, steps);
        else
            seidenberg_reduce(model, max_blowups);
    }

    CamachoSadCheck chk = verify_camacho_sad(model, model.curve_id(curve));

    json j;
    j["schema_version"] = kSchemaVersion;
    j["curve"] = curve;
    j["sum"] = quad_json(chk.sum);
    j["self_int"] = chk.self_int;
    j["ok"] = chk.ok;

    std::ostringstream text;
    text << "curve: " << curve << "\n";
    text << "sum: " << chk.sum.str() << "\n";
    text << "self_int: " << chk.self_int << "\n";
    text << "ok: " << (chk.ok ? "true" : "false") << "\n";
    sink.emit(j, text.str());
}

void cmd_classify_monomial(const Sink& sink, const std::string& matrix_text) {
    MonomialMap f(parse_int_matrix(matrix_text));
    GrowthClass g = growth_class(f);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["mode"] = "monomial";
    j["matrix"] = int2_json(f.m);
    j["growth"] = g.str();
    j["rate"] = g.tag == GrowthClass::Tag::Exponential ? quad_json(g.rate) : json(nullptr);
    j["algebraically_stable"] = is_algebraically_stable(f);

    std::ostringstream text;
    text << "mode: monomial\n";
    text << "growth: " << g.str() << "\n";
    text << "algebraically stable: " << (is_algebraically_stable(f) ? "true" : "false")
         << "\n";

    j["conjugator"] = nullptr;
    j["stable_model"] = nullptr;
    if (g.tag == GrowthClass::Tag::Exponential) {
        StabilizedMap st = stabilize_conjugate(f);
        j["conjugator"] = int2_json(st.conjugator);
        j["stable_model"] = int2_json(st.map.m);
        text << "conjugator: " << st.conjugator.str() << "\n";
        text << "stable model: " << st.map.m.str() << "\n";
    }

    try {
        auto fols = invariant_foliations(f);
        j["foliations"] = json::array();
        text << "foliations:\n";
        for (const auto& fol : fols) {
            json e;
            e["direction"] = json::array({quad_json(fol.a), quad_json(fol.b)});
            e["eigenvalue"] = quad_json(fol.eigenvalue);
            e["alpha"] = fol.degenerate() ? json(nullptr) : json(quad_json(fol.alpha()));
            j["foliations"].push_back(std::move(e));
            text << "  direction (" << fol.a.str() << ", " << fol.b.str()
                 << ") eigenvalue " << fol.eigenvalue.str() << "\n";
        }
    } catch (const ComplexEigenvalues&) {
        j["foliations"] = nullptr;
        text << "foliations: none over the reals (non-real spectrum)\n";
    }
    sink.emit(j, text.str());
}

void cmd_classify_torus(const Sink& sink, const std::string& matrix_text,
                        const std::string& lattice_flag) {
    QMat m = parse_quad_matrix(matrix_text);
    LatticeKind lat = lattice_flag.empty() ? infer_lattice(m) : parse_lattice(lattice_flag);
    TorusAut t(lat, m);
    bool anosov = anosov_check(t);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["mode"] = "torus";
    j["lattice"] = lattice_name(lat);
    j["matrix"] = qmat_json(m);
    j["anosov"] = anosov;

    std::ostringstream text;
    text << "mode: torus\n";
    text << "lattice: " << lattice_name(lat) << "\n";
    text << "anosov: " << (anosov ? "true" : "false") << "\n";

    j["growth"] = nullptr;
    j["rate"] = nullptr;
    if (lat != LatticeKind::GeneralZ4) {
        GrowthClass g = h11_growth(t);
        j["growth"] = g.str();
        if (g.tag == GrowthClass::Tag::Exponential) j["rate"] = quad_json(g.rate);
        text << "growth: " << g.str() << "\n";
    }

    j["slopes"] = nullptr;
    if (anosov && lat != LatticeKind::GeneralZ4) {
        try {
            SlopePair s = stable_unstable_slopes(t);
            auto dir_json = [](const EigenDirection& e) {
                json d;
                d["direction"] = json::array({quad_json(e.v[0]), quad_json(e.v[1])});
                d["eigenvalue"] = quad_json(e.lambda);
                return d;
            };
            j["slopes"] = {{"stable", dir_json(s.stable)}, {"unstable", dir_json(s.unstable)}};
            text << "stable direction: (" << s.stable.v[0].str() << ", "
                 << s.stable.v[1].str() << ") eigenvalue " << s.stable.lambda.str() << "\n";
            text << "unstable direction: (" << s.unstable.v[0].str() << ", "
                 << s.unstable.v[1].str() << ") eigenvalue " << s.unstable.lambda.str()
                 << "\n";
        } catch (const Error&) {
            text << "slopes: eigen data leaves the quadratic tower\n";
        }
    }
    sink.emit(j, text.str());
}

void cmd_bir_group(const Sink& sink, const std::string& alpha_text, long t_bound,
                   long a_bound) {
    QuadNumber alpha = parse_unit_scalar(alpha_text);
    BirClassification b = bir_group_classify(alpha, t_bound, a_bound);

    const char* tag = b.tag == BirClassification::Tag::Fibration ? "fibration"
                      : b.tag == BirClassification::Tag::InfiniteMonomial
                          ? "infinite_monomial"
                          : "finite";
    json j;
    j["schema_version"] = kSchemaVersion;
    j["alpha"] = quad_json(alpha);
    j["class"] = tag;
    j["witness"] = b.tag == BirClassification::Tag::InfiniteMonomial ? int2_json(b.witness)
                                                                     : json(nullptr);
    j["norm_certified"] = b.norm_certified;
    j["search_exhausted"] = b.search_exhausted;
    j["bounds"] = {{"t", b.t_bound}, {"a", b.a_bound}};

    std::ostringstream text;
    text << "alpha: " << alpha.str() << "\n";
    text << "class: " << tag << "\n";
    if (b.tag == BirClassification::Tag::InfiniteMonomial)
        text << "witness: " << b.witness.str() << "\n";
    if (b.norm_certified) text << "certificate: imaginary quadratic norm equation\n";
    if (b.search_exhausted)
        text << "note: no witness within |t| <= " << b.t_bound << ", |a| <= " << b.a_bound
             << "\n";
    sink.emit(j, text.str());
}

void cmd_torus_classify(const Sink& sink, const std::string& lattice_text,
                        const std::string& xi_text, const std::string& matrix_text) {
    LatticeKind lat = parse_lattice(lattice_text);
    QuadNumber xi = parse_unit_scalar(xi_text);
    QuotientClass qc = classify_quotient(lat, xi);

    QMat xi_mat = QMat::identity(2);
    xi_mat.at(0, 0) = xi;
    xi_mat.at(1, 1) = xi;
    TorusAut xi_aut(lat, xi_mat);
    CrystalReport cr = crystallographic_constraint(to_integer_model(xi_aut));

    json j;
    j["schema_version"] = kSchemaVersion;
    j["lattice"] = lattice_name(lat);
    j["xi"] = quad_json(xi);
    j["quotient"] = quotient_class_name(qc);
    j["crystallographic"] = {{"order", cr.order}, {"phi", cr.phi}, {"pass", cr.pass}};

    std::ostringstream text;
    text << "lattice: " << lattice_name(lat) << "\n";
    text << "xi: " << xi.str() << "\n";
    text << "quotient: " << quotient_class_name(qc) << "\n";
    text << "crystallographic: order " << cr.order << ", phi " << cr.phi << ", pass "
         << (cr.pass ? "true" : "false") << "\n";

    j["commutation"] = nullptr;
    j["anosov"] = nullptr;
    if (!matrix_text.empty()) {
        TorusAut phi(lat, parse_quad_matrix(matrix_text));
        bool anosov = anosov_check(phi);
        CommutationReport rep = homothety_and_commutation(xi_aut, phi);
        j["anosov"] = anosov;
        j["commutation"] = {{"commute", rep.commute},
                            {"homothety", rep.homothety},
                            {"consistent", rep.consistent}};
        text << "anosov: " << (anosov ? "true" : "false") << "\n";
        text << "commutation: commute " << (rep.commute ? "true" : "false") << ", homothety "
             << (rep.homothety ? "true" : "false") << ", consistent "
             << (rep.consistent ? "true" : "false") << "\n";
    }
    sink.emit(j, text.str());
}

void emit_singer(const Sink& sink, const std::optional<RatOneForm>& eta, bool singer) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["eta"] = eta ? json(eta->str()) : json(nullptr);
    j["singer"] = singer;

    std::ostringstream text;
    if (eta) text << "eta: " << eta->str() << "\n";
    text << "singer: " << (singer ? "true" : "false") << "\n";
    sink.emit(j, text.str());
}

void cmd_liouville_singer(const Sink& sink, const std::string& form_text,
                          const std::string& eta_text) {
    RatOneForm omega = parse_rational_form(form_text);
    RatOneForm eta = parse_rational_form(eta_text);
    emit_singer(sink, eta, singer_check(omega, eta));
}

/** The coefficient c when f = c * x^i y^j, nothing else. */
std::optional<QuadNumber> monomial_multiple(const RatFn& f, int i, int j) {
    if (!f.is_polynomial()) return std::nullopt;
    QuadNumber c = f.num().coeff(i, j);
    if (c.is_zero()) return std::nullopt;
    if (!(f.num() - BiPoly::monomial(c, i, j)).is_zero()) return std::nullopt;
    return c;
}

void cmd_liouville_construct(const Sink& sink, const std::string& form_text) {
    RatOneForm omega = parse_rational_form(form_text);
    // recognize c1 * w dz + c2 * z dw with c1 nonzero
    auto c1 = monomial_multiple(omega.p, 0, 1);
    auto c2 = monomial_multiple(omega.q, 1, 0);
    if (!c1 || !c2)
        throw ParseError("construction handles w dz + alpha z dw only; "
                         "use 'singer' for a general pair", 0);
    RatOneForm eta = construct_eta_linear(*c2 / *c1);
    emit_singer(sink, eta, true);
}

// ---------------------------------------------------------------------------
// dispatch

int run_impl(const std::function<void(CLI::App&)>& do_parse, std::ostream& os,
             bool allow_batch);

int run_commandline(const std::string& line, std::ostream& os, bool allow_batch) {
    return run_impl([&](CLI::App& app) { app.parse(line, false); }, os, allow_batch);
}

void cmd_batch(std::ostream& os, const std::string& file, int& code) {
    std::ifstream in(file);
    if (!in) throw Error("cannot read batch file " + file);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = line;
        t.erase(0, t.find_first_not_of(" \t"));
        if (t.empty() || t[0] == '#') continue;
        lines.push_back(t);
    }
    std::vector<std::future<std::pair<int, std::string>>> jobs;
    jobs.reserve(lines.size());
    for (const auto& l : lines)
        jobs.push_back(std::async(std::launch::async, [l] {
            std::ostringstream ss;
            int c = run_commandline(l, ss, false);
            return std::make_pair(c, ss.str());
        }));
    for (auto& jb : jobs) {
        auto [c, out] = jb.get();
        os << out;
        if (code == 0 && c != 0) code = c;
    }
}

int run_impl(const std::function<void(CLI::App&)>& do_parse, std::ostream& os,
             bool allow_batch) {
    CLI::App app{"exact toolkit for foliated-surface symmetries"};
    app.require_subcommand(1);

    std::string format = "text";

    auto add_format = [&](CLI::App* sub, bool with_dot) {
        auto* opt = sub->add_option("--format", format, "output format");
        opt->check(CLI::IsMember(with_dot ? std::vector<std::string>{"json", "text", "dot"}
                                          : std::vector<std::string>{"json", "text"}));
    };

    // reduce
    std::string red_form, red_atlas = "affine", red_trace;
    int red_budget = 64;
    auto* red = app.add_subcommand("reduce", "resolve a foliation to reduced singularities");
    red->add_option("form", red_form, "one-form, e.g. \"x*dy + 2*y*dx\"")->required();
    red->add_option("--atlas", red_atlas, "chart atlas: affine, p2, p1xp1");
    red->add_option("--max-blowups", red_budget, "blowup budget")->check(CLI::PositiveNumber);
    red->add_option("--trace", red_trace, "write the full reduction trace to this file");
    add_format(red, true);

    // cs-check
    std::string cs_curve, cs_form, cs_atlas = "affine", cs_trace;
    int cs_budget = 64, cs_steps = -1;
    auto* cs = app.add_subcommand("cs-check", "index-sum check along a tracked curve");
    cs->add_option("curve", cs_curve, "curve name, e.g. E1, Linf, z=0")->required();
    cs->add_option("form", cs_form, "one-form (omit when using --trace)");
    cs->add_option("--atlas", cs_atlas, "chart atlas: affine, p2, p1xp1");
    cs->add_option("--trace", cs_trace, "replay a reduction trace written by reduce");
    cs->add_option("--max-blowups", cs_budget, "blowup budget")->check(CLI::PositiveNumber);
    cs->add_option("--steps", cs_steps,
                   "blow up the first singular point this many times instead of reducing");
    add_format(cs, false);

    // classify
    std::string cl_mode, cl_matrix, cl_lattice;
    auto* cl = app.add_subcommand("classify", "growth and invariant data of a linear model");
    cl->add_option("mode", cl_mode, "monomial or torus")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"monomial", "torus"}));
    cl->add_option("matrix", cl_matrix, "[[a,b],[c,d]]")->required();
    cl->add_option("--lattice", cl_lattice, "torus mode: zi, zj, e2, z4 (default inferred)");
    add_format(cl, false);

    // bir-group
    std::string bg_alpha, bg_bounds;
    auto* bg = app.add_subcommand("bir-group",
                                  "symmetry trichotomy for w dz + alpha z dw");
    bg->add_option("alpha", bg_alpha, "e.g. \"2/3\", \"1+sqrt(2)\", \"i\"")->required();
    bg->add_option("--bounds", bg_bounds, "witness search bounds as t,a (default 10,50)");
    add_format(bg, false);

    // torus-classify
    std::string tc_lattice, tc_xi, tc_matrix;
    auto* tc = app.add_subcommand("torus-classify", "quotient type of a torus symmetry");
    tc->add_option("lattice", tc_lattice, "zi, zj or e2")->required();
    tc->add_option("xi", tc_xi, "finite-order generator, e.g. i, j, -1")->required();
    tc->add_option("matrix", tc_matrix, "optional Anosov matrix for the commutation report");
    add_format(tc, false);

    // liouville
    auto* lv = app.add_subcommand("liouville", "closed-form certificates");
    lv->require_subcommand(1);
    std::string lv_form, lv_eta;
    auto* lvs = lv->add_subcommand("singer", "check d(eta) = 0 and d(omega) = eta ^ omega");
    lvs->add_option("form", lv_form, "the one-form omega")->required();
    lvs->add_option("eta", lv_eta, "the candidate closed form")->required();
    add_format(lvs, false);
    auto* lvc = lv->add_subcommand("construct", "build eta for w dz + alpha z dw");
    lvc->add_option("form", lv_form, "a linear one-form")->required();
    add_format(lvc, false);

    // batch
    std::string batch_file;
    CLI::App* bt = nullptr;
    if (allow_batch) {
        bt = app.add_subcommand("batch", "run one command per line of a file, in parallel");
        bt->add_option("file", batch_file, "command file")->required();
    }

    int code = 0;
    try {
        do_parse(app);
        Sink sink{os, format};
        if (red->parsed()) cmd_reduce(sink, red_form, red_atlas, red_budget, red_trace);
        if (cs->parsed())
            cmd_cs_check(sink, cs_curve, cs_form, cs_atlas, cs_trace, cs_budget, cs_steps);
        if (cl->parsed()) {
            if (cl_mode == "monomial")
                cmd_classify_monomial(sink, cl_matrix);
            else
                cmd_classify_torus(sink, cl_matrix, cl_lattice);
        }
        if (bg->parsed()) {
            long tb = 10, ab = 50;
            if (!bg_bounds.empty()) {
                auto comma = bg_bounds.find(',');
                if (comma == std::string::npos)
                    throw ParseError("--bounds wants t,a", 0);
                tb = std::stol(bg_bounds.substr(0, comma));
                ab = std::stol(bg_bounds.substr(comma + 1));
                if (tb <= 0 || ab <= 0) throw ParseError("bounds must be positive", 0);
            }
            cmd_bir_group(sink, bg_alpha, tb, ab);
        }
        if (tc->parsed()) cmd_torus_classify(sink, tc_lattice, tc_xi, tc_matrix);
        if (lvs->parsed()) cmd_liouville_singer(sink, lv_form, lv_eta);
        if (lvc->parsed()) cmd_liouville_construct(sink, lv_form);
        if (bt && bt->parsed()) cmd_batch(os, batch_file, code);
    } catch (const CLI::CallForHelp& e) {
        os << app.help();
    } catch (const CLI::ParseError& e) {
        return emit_error(os, 1, "parse error", e.what());
    } catch (const ParseError& e) {
        return emit_error(os, 1, "parse error", e.what());
    } catch (const BudgetExceeded& e) {
        return emit_error(os, 2, "budget exceeded", e.what());
    } catch (const FieldTowerMismatch& e) {
        return emit_error(os, 3, "field tower", e.what());
    } catch (const FieldTowerExceeded& e) {
        return emit_error(os, 3, "field tower", e.what());
    } catch (const NotInvariant& e) {
        return emit_error(os, 4, "not invariant", e.what());
    } catch (const NonUnimodular& e) {
        return emit_error(os, 5, "not unimodular", e.what());
    } catch (const InconsistentLattice& e) {
        return emit_error(os, 6, "inconsistent lattice", e.what());
    } catch (const Error& e) {
        return emit_error(os, 1, "error", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error(os, 1, "parse error", e.what());
    } catch (const std::exception& e) {
        return emit_error(os, 1, "error", e.what());
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_impl(
        [&](CLI::App& app) {
            std::reverse(args.begin(), args.end());
            app.parse(std::move(args));
        },
        std::cout, true);
}
