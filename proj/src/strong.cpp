#include "morsecat/strong.hpp"

#include <algorithm>
#include <map>

namespace morsecat {

std::vector<Simplex> st_vu(const SimplicialComplex& K, VertexId v, VertexId u) {
    if (!K.contains(Simplex{u, v}))
        throw DomainError("edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "} not in complex");
    std::vector<Simplex> out;
    for (const Simplex& s : K.simplices()) {
        if (!s.contains(v))
            continue;
        if (s.contains(u) || K.contains(s.join(u)))
            out.push_back(s);
    }
    return out;
}

std::vector<Simplex> st_vu(const SimplicialComplex& K, const GradientField& V,
                           VertexId v, VertexId u) {
    Simplex edge{u, v};
    if (!V.has_pair(Simplex{v}, edge))
        throw DomainError("({" + std::to_string(v) + "}, " + edge.to_string() +
                          ") is not a vertex/edge pair of the field");
    return st_vu(K, v, u);
}

namespace {

// everything scrit needs repeatedly, computed once
struct StrongContext {
    const SimplicialComplex& K;
    const MorseFunction& f;
    std::set<Simplex> critical; // Forman-critical
    std::set<Rat> critical_values;

    StrongContext(const SimplicialComplex& K_, const MorseFunction& f_)
        : K(K_), f(f_), critical(forman_critical(K_, f_)) {
        for (const Simplex& s : critical)
            critical_values.insert(f.at(s));
    }

    bool is_regular_value(const Rat& val) const {
        return !critical_values.count(val);
    }
};

Level m_of(const StrongContext& ctx, const VertexEdgePair& p,
           const std::vector<Simplex>& st) {
    std::set<Simplex> st_set(st.begin(), st.end());
    const Rat edge_val = ctx.f.at(p.edge);
    std::optional<Rat> best;
    for (const Simplex& t : ctx.K.simplices()) {
        const Rat& ft = ctx.f.at(t);
        if (ft <= edge_val)
            continue;
        if (st_set.count(t) && !ctx.critical.count(t))
            continue;
        if (!best || ft < *best)
            best = ft;
    }
    return best ? Level::of(*best) : Level::pos_inf();
}

std::optional<Rat> l_of(const StrongContext& ctx, const VertexEdgePair& p,
                        const std::vector<Simplex>& st, const Level& m,
                        const StrongOptions& opt) {
    const Rat edge_val = ctx.f.at(p.edge);
    std::set<Rat> st_values;
    for (const Simplex& s : st)
        st_values.insert(ctx.f.at(s));

    std::optional<Rat> best;
    for (const Rat& l : st_values) {
        if (!ctx.is_regular_value(l))
            continue;
        if (l < edge_val)
            continue;
        Level ll = Level::of(l);
        if (opt.strict_l_below_m ? ll >= m : ll > m)
            continue;
        // regular part of K(l) ∩ St(v,u); K(l) membership is closure
        // membership, not a value comparison
        SimplicialComplex Kl = sublevel_complex(ctx.K, ctx.f, ll);
        std::vector<Simplex> regs;
        for (const Simplex& s : st)
            if (Kl.contains(s) && !ctx.critical.count(s))
                regs.push_back(s);
        bool ok = true;
        for (const Simplex& s : regs) {
            if (s.contains(p.u))
                continue;
            bool maximal = std::none_of(
                regs.begin(), regs.end(), [&](const Simplex& t) {
                    return t != s && s.is_face_of(t);
                });
            if (maximal) {
                ok = false;
                break;
            }
        }
        if (ok && (!best || l > *best))
            best = l;
    }
    return best;
}

} // namespace

Level compute_m_v(const SimplicialComplex& K, const MorseFunction& f,
                  const VertexEdgePair& p) {
    StrongContext ctx(K, f);
    return m_of(ctx, p, st_vu(K, p.v, p.u));
}

std::optional<Rat> compute_l_v(const SimplicialComplex& K,
                               const MorseFunction& f, const VertexEdgePair& p,
                               const StrongOptions& opt) {
    StrongContext ctx(K, f);
    auto st = st_vu(K, p.v, p.u);
    return l_of(ctx, p, st, m_of(ctx, p, st), opt);
}

namespace {

std::vector<PairValues> all_pair_values(const StrongContext& ctx,
                                        const std::vector<VertexEdgePair>& vps,
                                        const StrongOptions& opt) {
    std::vector<PairValues> out(vps.size());
    const int n = static_cast<int>(vps.size());
    if (opt.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            auto st = st_vu(ctx.K, vps[i].v, vps[i].u);
            Level m = m_of(ctx, vps[i], st);
            out[i] = {vps[i], m, l_of(ctx, vps[i], st, m, opt)};
        }
    } else {
        for (int i = 0; i < n; ++i) {
            auto st = st_vu(ctx.K, vps[i].v, vps[i].u);
            Level m = m_of(ctx, vps[i], st);
            out[i] = {vps[i], m, l_of(ctx, vps[i], st, m, opt)};
        }
    }
    return out;
}

std::vector<StrongInterval> intervals_from(const StrongContext& ctx,
                                           const GradientField& V,
                                           const std::vector<PairValues>& pvs,
                                           const StrongOptions& opt) {
    std::vector<StrongInterval> out;
    for (const PairValues& pv : pvs) {
        if (!pv.l)
            continue;
        StrongInterval iv{pv.pair, ctx.f.at(pv.pair.edge), *pv.l, {}};
        std::set<Simplex> st_set;
        if (opt.restrict_to_st) {
            auto st = st_vu(ctx.K, pv.pair.v, pv.pair.u);
            st_set.insert(st.begin(), st.end());
        }
        for (const auto& pr : V.pairs()) {
            const Rat& ft = ctx.f.at(pr.second);
            if (ft < iv.lo || ft > iv.hi)
                continue;
            if (opt.restrict_to_st &&
                (!st_set.count(pr.first) || !st_set.count(pr.second)))
                continue;
            iv.members.push_back(pr);
        }
        out.push_back(std::move(iv));
    }
    std::sort(out.begin(), out.end(),
              [](const StrongInterval& a, const StrongInterval& b) {
                  return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
              });
    return out;
}

} // namespace

std::vector<StrongInterval> strong_collapse_sets(const SimplicialComplex& K,
                                                 const MorseFunction& f,
                                                 const StrongOptions& opt) {
    StrongContext ctx(K, f);
    GradientField V = gradient_field(K, f);
    auto pvs = all_pair_values(ctx, vertex_edge_pairs(V), opt);
    return intervals_from(ctx, V, pvs, opt);
}

std::vector<Rat> ScritReport::values() const {
    std::vector<Rat> out;
    out.reserve(objects.size());
    for (const CriticalObject& o : objects)
        out.push_back(o.value);
    return out;
}

ScritReport scrit(const SimplicialComplex& K, const MorseFunction& f,
                  const StrongOptions& opt) {
    StrongContext ctx(K, f);
    ScritReport rep;
    rep.field = gradient_field(K, f);
    rep.critical_simplices = ctx.critical;
    rep.pair_values = all_pair_values(ctx, vertex_edge_pairs(rep.field), opt);
    rep.intervals = intervals_from(ctx, rep.field, rep.pair_values, opt);

    std::set<GradientPair> covered;
    for (const StrongInterval& iv : rep.intervals)
        covered.insert(iv.members.begin(), iv.members.end());
    for (const auto& pr : rep.field.pairs())
        if (!covered.count(pr))
            rep.critical_pairs.push_back(pr);

    for (const Simplex& s : rep.critical_simplices)
        rep.objects.push_back(
            {CriticalObject::Kind::Simplex, s, {}, f.at(s)});
    for (const auto& pr : rep.critical_pairs)
        rep.objects.push_back(
            {CriticalObject::Kind::Pair, {}, pr, f.at(pr.second)});
    std::sort(rep.objects.begin(), rep.objects.end(),
              [](const CriticalObject& a, const CriticalObject& b) {
                  return a.value < b.value;
              });
    return rep;
}

namespace {

struct WitnessSearch {
    SimplicialComplex current;
    std::vector<VertexId> remaining;
    std::vector<std::pair<VertexId, VertexId>> trail;
    std::set<std::vector<VertexId>> dead;
    Budget budget;

    bool dfs() {
        if (remaining.empty())
            return true;
        if (dead.count(remaining))
            return false;
        budget.charge();
        auto dom = dominated_vertices(current);
        for (const DominatedVertex& d : dom) {
            auto it = std::find(remaining.begin(), remaining.end(), d.v);
            if (it == remaining.end())
                continue;
            SimplicialComplex saved = current;
            remaining.erase(it);
            trail.push_back({d.v, d.dominators.front()});
            current = current.without_vertex(d.v);
            if (dfs())
                return true;
            current = std::move(saved);
            trail.pop_back();
            remaining.insert(std::lower_bound(remaining.begin(),
                                              remaining.end(), d.v),
                             d.v);
        }
        dead.insert(remaining);
        return false;
    }
};

} // namespace

std::optional<CollapseWitness>
check_interval_collapse(const SimplicialComplex& K, const MorseFunction& f,
                        const Level& a, const Level& b, long long budget,
                        const StrongOptions& opt) {
    if (a > b)
        throw DomainError("invalid interval: lower end exceeds upper end");
    SimplicialComplex Ka = sublevel_complex(K, f, a);
    SimplicialComplex Kb = sublevel_complex(K, f, b);
    if (Ka == Kb)
        return CollapseWitness{};

    for (const Rat& cv : scrit(K, f, opt).values())
        if (a <= Level::of(cv) && Level::of(cv) <= b)
            throw DomainError("interval not regular: strong critical value " +
                              rat_str(cv) + " inside");

    std::vector<VertexId> pending;
    for (VertexId w : Kb.vertices())
        if (!Ka.has_vertex(w))
            pending.push_back(w);

    WitnessSearch ws{Kb, std::move(pending), {}, {},
                     Budget(budget, "strong collapse witness")};
    if (ws.dfs())
        return CollapseWitness{ws.trail};
    return std::nullopt;
}

LsReport verify_ls(const SimplicialComplex& K, const MorseFunction& f,
                   int scat_value, const StrongOptions& opt) {
    std::size_t n = scrit(K, f, opt).count();
    std::size_t lhs = static_cast<std::size_t>(scat_value) + 1;
    return {scat_value, n, lhs <= n, lhs == n};
}

} // namespace morsecat
