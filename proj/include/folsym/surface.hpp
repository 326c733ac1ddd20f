#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "folsym/local.hpp"

namespace folsym {

using ChartPoint = std::pair<QuadNumber, QuadNumber>;

/** Locus {coordinate == value} inside one chart; coord 0 pins vx, coord 1 pins vy. */
struct CurveAppearance {
    int chart;
    int coord;
    QuadNumber value;
};

struct TrackedCurve {
    std::string name;
    long long self_int = 0;
    bool invariant = false;
    std::vector<CurveAppearance> appearances;
};

/**
 * One affine chart of the surface. Every chart except the base one carries the
 * substitution expressing its parent's coordinates in terms of its own.
 * A point belongs to the chart's ownership region when the coordinates listed
 * in owns_when_zero vanish; the regions of all charts partition the surface,
 * so points, curves and singularities are never counted twice.
 */
struct Chart {
    std::string name;
    OneForm form;
    int parent = -1;
    RatFn parent_x, parent_y;
    std::vector<int> owns_when_zero;
    std::vector<ChartPoint> excluded;  // centers replaced by later blowups
};

struct BlowupRecord {
    int chart;  // chart that owned the center
    ChartPoint center;
    int chart_a, chart_b;
    int curve;  // id of the exceptional curve
    int multiplicity;
    bool dicritical;
};

struct SingularityReport {
    int chart;
    ChartPoint point;
    Singularity sing;
};

class SurfaceModel {
  public:
    static SurfaceModel affine(const OneForm& w) {
        SurfaceModel m;
        m.push_chart("U0", w, -1, RatFn::var_x(), RatFn::var_y(), {});
        return m;
    }

    /** Three standard charts; the line at infinity is tracked from the start. */
    static SurfaceModel p2(const OneForm& w) {
        SurfaceModel m;
        RatFn one(1), u = RatFn::var_x(), v = RatFn::var_y();
        RatOneForm base = w.rational();
        m.push_chart("U0", w, -1, u, v, {});
        m.push_chart("U1", OneForm::from_rational(base.pullback(one / u, v / u, "u", "v")),
                     0, one / u, v / u, {0});
        m.push_chart("U2", OneForm::from_rational(base.pullback(v / u, one / u, "p", "q")),
                     0, v / u, one / u, {0, 1});
        m.register_curve("Linf", 1, {{1, 0, QuadNumber(0)}, {2, 0, QuadNumber(0)}});
        return m;
    }

    /** Four standard charts; one fiber pair of each ruling is tracked. */
    static SurfaceModel p1xp1(const OneForm& w) {
        SurfaceModel m;
        RatFn one(1), u = RatFn::var_x(), v = RatFn::var_y();
        RatOneForm base = w.rational();
        const std::string ix = "i" + w.vx(), iy = "i" + w.vy();
        m.push_chart("U0", w, -1, u, v, {});
        m.push_chart("U1", OneForm::from_rational(base.pullback(one / u, v, ix, w.vy())),
                     0, one / u, v, {0});
        m.push_chart("U2", OneForm::from_rational(base.pullback(u, one / v, w.vx(), iy)),
                     0, u, one / v, {1});
        m.push_chart("U3", OneForm::from_rational(base.pullback(one / u, one / v, ix, iy)),
                     0, one / u, one / v, {0, 1});
        QuadNumber z(0);
        m.register_curve(w.vx() + "=0", 0, {{0, 0, z}, {2, 0, z}});
        m.register_curve(w.vx() + "=inf", 0, {{1, 0, z}, {3, 0, z}});
        m.register_curve(w.vy() + "=0", 0, {{0, 1, z}, {1, 1, z}});
        m.register_curve(w.vy() + "=inf", 0, {{2, 1, z}, {3, 1, z}});
        return m;
    }

    const std::vector<Chart>& charts() const { return charts_; }
    const std::vector<TrackedCurve>& curves() const { return curves_; }
    const std::vector<BlowupRecord>& log() const { return log_; }
    const std::map<std::pair<int, int>, int>& adjacency() const { return adjacency_; }

    int curve_id(const std::string& name) const {
        for (std::size_t i = 0; i < curves_.size(); ++i)
            if (curves_[i].name == name) return (int)i;
        throw Error("no tracked curve named " + name);
    }

    /** True when the point lies in the chart's ownership region. */
    bool owns(int chart, const ChartPoint& p) const {
        const Chart& c = charts_[(std::size_t)chart];
        for (int idx : c.owns_when_zero)
            if (!(idx == 0 ? p.first : p.second).is_zero()) return false;
        for (const auto& e : c.excluded)
            if (e.first == p.first && e.second == p.second) return false;
        return true;
    }

    bool appearance_invariant(const CurveAppearance& ap) const {
        const OneForm& f = charts_[(std::size_t)ap.chart].form;
        if (ap.coord == 0) return f.b().eval_x(ap.value).is_zero();
        return f.a().eval_y(ap.value).is_zero();
    }

    /**
     * Track a curve given as one coordinate locus per chart it meets.
     * Invariance is read off from the chart forms; intersections with
     * previously tracked curves enter the dual graph here.
     */
    int register_curve(const std::string& name, long long self_int,
                       std::vector<CurveAppearance> apps) {
        if (apps.empty()) throw Error("a tracked curve needs at least one appearance");
        bool inv = appearance_invariant(apps[0]);
        for (std::size_t i = 1; i < apps.size(); ++i)
            if (appearance_invariant(apps[i]) != inv)
                throw Error("charts disagree about the invariance of " + name);
        int id = (int)curves_.size();
        for (const auto& ap : apps)
            for (int k = 0; k < id; ++k)
                for (const auto& bp : curves_[(std::size_t)k].appearances) {
                    if (bp.chart != ap.chart || bp.coord == ap.coord) continue;
                    ChartPoint pt = ap.coord == 0 ? ChartPoint{ap.value, bp.value}
                                                  : ChartPoint{bp.value, ap.value};
                    if (owns(ap.chart, pt)) bump_edge(k, id, 1);
                }
        curves_.push_back({name, self_int, inv, std::move(apps)});
        return id;
    }

    /**
     * Blow up an owned point. Appends the two standard charts, registers the
     * exceptional curve, reroutes strict transforms of curves through the
     * center and updates self-intersections and the dual graph.
     */
    void blow_up(int cid, const QuadNumber& px, const QuadNumber& py) {
        if (cid < 0 || cid >= (int)charts_.size()) throw Error("no such chart");
        if (!owns(cid, {px, py}))
            throw Error("blow-up center must be owned by the chart");
        ++exceptional_;
        const std::string tag = std::to_string(exceptional_);
        const std::string pvx = charts_[(std::size_t)cid].form.vx();
        const std::string pvy = charts_[(std::size_t)cid].form.vy();

        OneForm local = charts_[(std::size_t)cid].form.translate(px, py);
        BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();

        // (x, y) = (x, x t): the exceptional curve is {x = 0}
        BiPoly a1 = local.a().subst(x, x * y), b1 = local.b().subst(x, x * y);
        OneForm fa(a1 + y * b1, x * b1, pvx, "t" + tag);
        // (x, y) = (s y, y): the exceptional curve is {y = 0}
        BiPoly a2 = local.a().subst(x * y, y), b2 = local.b().subst(x * y, y);
        OneForm fb(y * a2, x * a2 + b2, "s" + tag, pvy);

        int ma = monomial_power(fa.divided_factor(), 0);
        int mb = monomial_power(fb.divided_factor(), 1);
        if (ma < 0 || mb < 0 || ma != mb)
            throw Error("pullback did not divide by a clean power of the exceptional coordinate");
        bool inv_a = axis_invariant(fa, 1), inv_b = axis_invariant(fb, 0);
        if (inv_a != inv_b)
            throw Error("charts disagree about the invariance of the exceptional curve");

        RatFn rx = RatFn::var_x(), ry = RatFn::var_y();
        int ida = push_chart("A" + tag, fa, cid, rx + RatFn(px), rx * ry + RatFn(py), {0});
        int idb = push_chart("B" + tag, fb, cid, rx * ry + RatFn(px), ry + RatFn(py), {0, 1});
        charts_[(std::size_t)cid].excluded.push_back({px, py});

        // strict transforms of tracked curves through the center
        std::vector<int> through;
        std::vector<std::pair<int, CurveAppearance>> added;
        for (std::size_t ci = 0; ci < curves_.size(); ++ci)
            for (const auto& ap : curves_[ci].appearances) {
                if (ap.chart != cid) continue;
                if (ap.coord == 0 && ap.value == px) {
                    added.push_back({(int)ci, {idb, 0, QuadNumber(0)}});
                    through.push_back((int)ci);
                } else if (ap.coord == 1 && ap.value == py) {
                    added.push_back({(int)ci, {ida, 1, QuadNumber(0)}});
                    through.push_back((int)ci);
                }
            }
        for (auto& [ci, ap] : added) curves_[(std::size_t)ci].appearances.push_back(ap);
        for (int ci : through) curves_[(std::size_t)ci].self_int -= 1;
        for (std::size_t i = 0; i < through.size(); ++i)
            for (std::size_t j = i + 1; j < through.size(); ++j)
                bump_edge(through[i], through[j], -1);  // they met at the center

        int e = register_curve("E" + tag, -1,
                               {{ida, 0, QuadNumber(0)}, {idb, 1, QuadNumber(0)}});
        log_.push_back({cid, {px, py}, ida, idb, e, ma, !inv_a});
    }

    /** Owned singular points of every chart, classified; charts in order, points lex. */
    std::vector<SingularityReport> singular_reports() const {
        std::vector<SingularityReport> out;
        for (std::size_t c = 0; c < charts_.size(); ++c)
            for (const auto& p : singular_points(charts_[c].form)) {
                if (!owns((int)c, p)) continue;
                out.push_back({(int)c, p,
                               classify_singularity(charts_[c].form.translate(p.first, p.second))});
            }
        return out;
    }

  private:
    int push_chart(const std::string& name, OneForm form, int parent, RatFn tx, RatFn ty,
                   std::vector<int> clause) {
        Chart c;
        c.name = name;
        c.form = std::move(form);
        c.parent = parent;
        c.parent_x = std::move(tx);
        c.parent_y = std::move(ty);
        c.owns_when_zero = std::move(clause);
        charts_.push_back(std::move(c));
        return (int)charts_.size() - 1;
    }

    void bump_edge(int i, int j, int d) {
        std::pair<int, int> key = std::minmax(i, j);
        int& v = adjacency_[key];
        v += d;
        if (v < 0) throw Error("dual graph lost an intersection it never had");
        if (v == 0) adjacency_.erase(key);
    }

    /** Exponent when g is a monic power of the given variable, else -1. */
    static int monomial_power(const BiPoly& g, int var) {
        if (g.terms().size() != 1) return -1;
        const auto& [key, c] = *g.terms().begin();
        if (!(c == QuadNumber(1))) return -1;
        if (var == 0) return key.second == 0 ? key.first : -1;
        return key.first == 0 ? key.second : -1;
    }

    std::vector<Chart> charts_;
    std::vector<TrackedCurve> curves_;
    std::vector<BlowupRecord> log_;
    std::map<std::pair<int, int>, int> adjacency_;
    int exceptional_ = 0;
};

inline SurfaceModel blow_up(SurfaceModel model, int chart, const QuadNumber& px,
                            const QuadNumber& py) {
    model.blow_up(chart, px, py);
    return model;
}

/** True when the exceptional curve of the blowup at p would not be invariant. */
inline bool is_dicritical(const SurfaceModel& model, int chart, const QuadNumber& px,
                          const QuadNumber& py) {
    SurfaceModel probe = model;
    probe.blow_up(chart, px, py);
    return probe.log().back().dicritical;
}

struct ReductionTrace {
    std::vector<BlowupRecord> steps;
    std::vector<SingularityReport> final_reports;
    int blowup_count = 0;
    int dicritical_count = 0;
};

/**
 * Blow up the first non-reduced singular point until none remains.
 * Points once seen reduced must stay reduced; the loop checks that.
 */
inline ReductionTrace seidenberg_reduce(SurfaceModel& model, int max_blowups = 64) {
    ReductionTrace tr;
    std::map<std::tuple<int, std::string, std::string>, bool> seen;
    while (true) {
        std::vector<SingularityReport> reports = model.singular_reports();
        const SingularityReport* next = nullptr;
        for (const auto& r : reports) {
            auto key = std::make_tuple(r.chart, r.point.first.str(), r.point.second.str());
            auto it = seen.find(key);
            if (it != seen.end() && it->second && !r.sing.reduced)
                throw Error("a reduced singular point stopped being reduced");
            seen[key] = r.sing.reduced;
            if (!next && !r.sing.reduced) next = &r;
        }
        if (!next) {
            tr.final_reports = std::move(reports);
            return tr;
        }
        if (tr.blowup_count >= max_blowups)
            throw BudgetExceeded("not reduced after " + std::to_string(max_blowups) + " blowups");
        model.blow_up(next->chart, next->point.first, next->point.second);
        tr.steps.push_back(model.log().back());
        ++tr.blowup_count;
        if (model.log().back().dicritical) ++tr.dicritical_count;
    }
}

inline std::pair<SurfaceModel, ReductionTrace> seidenberg_reduce(const OneForm& w,
                                                                 int max_blowups = 64) {
    SurfaceModel model = SurfaceModel::affine(w);
    ReductionTrace tr = seidenberg_reduce(model, max_blowups);
    return {std::move(model), std::move(tr)};
}

struct CamachoSadCheck {
    QuadNumber sum;
    long long self_int = 0;
    bool ok = false;
};

namespace detail {

/** Singular or tangency points of the chart form on one coordinate locus. */
inline UniPoly curve_restriction(const OneForm& f, const CurveAppearance& ap, bool invariant) {
    if (ap.coord == 0) return invariant ? f.a().eval_x(ap.value) : f.b().eval_x(ap.value);
    return invariant ? f.b().eval_y(ap.value) : f.a().eval_y(ap.value);
}

}  // namespace detail

/** Exact check of the index theorem: the curve's CS indices sum to its self-intersection. */
inline CamachoSadCheck verify_camacho_sad(const SurfaceModel& model, int curve) {
    const TrackedCurve& c = model.curves()[(std::size_t)curve];
    if (!c.invariant) throw NotInvariant(c.name + " is not invariant");
    QuadNumber sum(0);
    for (const auto& ap : c.appearances) {
        const OneForm& f = model.charts()[(std::size_t)ap.chart].form;
        UniPoly s = detail::curve_restriction(f, ap, true);
        if (s.is_zero()) throw Error(c.name + " lies inside the singular locus");
        if (s.degree() <= 0) continue;
        for (const auto& [root, mult] : field_roots(s).roots) {
            (void)mult;
            ChartPoint pt = ap.coord == 0 ? ChartPoint{ap.value, root}
                                          : ChartPoint{root, ap.value};
            if (!model.owns(ap.chart, pt)) continue;
            OneForm local = f.translate(pt.first, pt.second);
            // the residue reading of the index needs a nonzero linear part
            if (classify_singularity(local).type == SingType::NonReduced)
                throw NonReducedOnCurve("degenerate singular point on " + c.name);
            sum += camacho_sad_index(local, ap.coord == 0 ? 1 : 0);
        }
    }
    return {sum, c.self_int, sum == QuadNumber(Int(c.self_int))};
}

/**
 * Intersection of the foliation's tangent class with a tracked rational curve:
 * 2 - Z when the curve is invariant, self-intersection - Tang when it is not.
 */
inline long long tf_dot_curve(const SurfaceModel& model, int curve) {
    const TrackedCurve& c = model.curves()[(std::size_t)curve];
    long long acc = 0;
    for (const auto& ap : c.appearances) {
        const OneForm& f = model.charts()[(std::size_t)ap.chart].form;
        UniPoly s = detail::curve_restriction(f, ap, c.invariant);
        if (s.is_zero()) throw Error(c.name + " lies inside the singular locus");
        if (s.degree() <= 0) continue;
        int axis = ap.coord == 0 ? 1 : 0;
        for (const auto& [root, mult] : field_roots(s).roots) {
            (void)mult;
            ChartPoint pt = ap.coord == 0 ? ChartPoint{ap.value, root}
                                          : ChartPoint{root, ap.value};
            if (!model.owns(ap.chart, pt)) continue;
            OneForm local = f.translate(pt.first, pt.second);
            if (c.invariant) {
                if (classify_singularity(local).type == SingType::NonReduced)
                    throw NonReducedOnCurve("degenerate singular point on " + c.name);
                acc += z_index(local, axis);
            } else {
                acc += tangency_order(local, axis);
            }
        }
    }
    return c.invariant ? 2 - acc : c.self_int - acc;
}

/** Pullback under (x, y) = (u, u^n v); shifts a linear index at the origin by n. */
inline OneForm monomial_substitute(const OneForm& w, int n) {
    if (n < 1) throw Error("monomial substitution needs a positive exponent");
    BiPoly u = BiPoly::var_x(), v = BiPoly::var_y();
    BiPoly fy = u.pow(n) * v;
    BiPoly as = w.a().subst(u, fy), bs = w.b().subst(u, fy);
    return OneForm(as + bs * v * QuadNumber(n) * u.pow(n - 1), bs * u.pow(n), w.vx(), w.vy());
}

enum class FlipSide { p, q };

/**
 * Elementary transformation of the local Riccati model lambda w dz - z dw:
 * blow up the singular point on the fiber, contract the fiber's strict
 * transform, and read the shifted index off the resulting model.
 */
inline QuadNumber flip(const QuadNumber& lambda, FlipSide side) {
    QuadNumber shifted = side == FlipSide::p ? lambda + QuadNumber(1) : lambda - QuadNumber(1);
    if (shifted.is_rational() && shifted.rational_part() >= 0)
        throw WouldCreateNonReduced("flipped index " + shifted.str() +
                                    " is a nonnegative rational");
    // the sign of the model parameter selects which singular point sits at the origin
    QuadNumber mu = side == FlipSide::q ? lambda : -lambda;
    OneForm model(BiPoly::var_y() * mu, -BiPoly::var_x(), "z", "w");
    SurfaceModel m = SurfaceModel::affine(model);
    m.blow_up(0, QuadNumber(0), QuadNumber(0));
    // contract {s = 0} in chart B: invert a blowup that had it as exceptional curve
    RatFn u = RatFn::var_x(), v = RatFn::var_y();
    const OneForm& upstairs = m.charts()[(std::size_t)m.log().back().chart_b].form;
    OneForm down = OneForm::from_rational(upstairs.rational().pullback(u, v / u, "z", "w"));
    QuadNumber alpha = down.a().coeff(0, 1), beta = down.b().coeff(1, 0);
    if (alpha.is_zero() || beta.is_zero() || !(down.a() == BiPoly::var_y() * alpha) ||
        !(down.b() == BiPoly::var_x() * beta))
        throw Error("contraction left the Riccati model family");
    QuadNumber out = -(beta / alpha);  // model read in the contracted coordinates
    if (!(out == shifted) && !(out == -shifted))
        throw Error("flip round trip disagrees with the index shift");
    return shifted;
}

/** Deterministic Graphviz rendering of the tracked-curve dual graph. */
inline std::string export_dual_graph(const SurfaceModel& model) {
    std::string out = "graph dual {\n";
    for (std::size_t i = 0; i < model.curves().size(); ++i) {
        const TrackedCurve& c = model.curves()[i];
        out += "  c" + std::to_string(i) + " [label=\"" + c.name + " (" +
               std::to_string(c.self_int) + ") " + (c.invariant ? "inv" : "non-inv") + "\"];\n";
    }
    for (const auto& [key, count] : model.adjacency())
        for (int r = 0; r < count; ++r)
            out += "  c" + std::to_string(key.first) + " -- c" + std::to_string(key.second) +
                   ";\n";
    out += "}\n";
    return out;
}

/** Spot-check that every chart form is the base form seen through the transition maps. */
inline bool transitions_consistent(const SurfaceModel& model) {
    for (std::size_t c = 1; c < model.charts().size(); ++c) {
        RatFn gx = RatFn::var_x(), gy = RatFn::var_y();
        int cur = (int)c;
        while (cur > 0) {
            const Chart& ch = model.charts()[(std::size_t)cur];
            RatFn nx = ch.parent_x.subst(gx, gy), ny = ch.parent_y.subst(gx, gy);
            gx = std::move(nx);
            gy = std::move(ny);
            cur = ch.parent;
        }
        const Chart& ch = model.charts()[c];
        RatOneForm pulled =
            model.charts()[0].form.rational().pullback(gx, gy, ch.form.vx(), ch.form.vy());
        if (!OneForm::from_rational(pulled).proportional(ch.form)) return false;
    }
    return true;
}

}  // namespace folsym
