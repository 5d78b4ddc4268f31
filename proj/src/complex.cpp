#include "morsecat/complex.hpp"

#include "morsecat/errors.hpp"

#include <algorithm>

namespace morsecat {

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& gens) {
    std::set<Simplex> closed;
    for (const Simplex& g : gens) {
        if (g.empty())
            throw DomainError("empty simplex not allowed");
        const auto& vs = g.vertices();
        if (vs.size() > 25)
            throw DomainError("simplex dimension too large: " + g.to_string());
        for (unsigned long mask = 1; mask < (1UL << vs.size()); ++mask) {
            std::vector<VertexId> sub;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask & (1UL << i))
                    sub.push_back(vs[i]);
            closed.insert(Simplex(std::move(sub)));
        }
    }
    return from_closed_set(std::move(closed));
}

SimplicialComplex
SimplicialComplex::from_vertex_lists(const std::vector<std::vector<VertexId>>& facets) {
    std::vector<Simplex> gens;
    gens.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty())
            throw DomainError("empty simplex not allowed");
        gens.push_back(Simplex(f));
    }
    return from_facets(gens);
}

SimplicialComplex SimplicialComplex::from_closed_set(std::set<Simplex> simplices) {
    SimplicialComplex K;
    K.simplices_ = std::move(simplices);
    K.index();
    return K;
}

void SimplicialComplex::index() {
    up_.clear();
    facets_.clear();
    for (const Simplex& s : simplices_) {
        up_[s]; // ensure entry
        for (const Simplex& f : s.boundary())
            up_[f].push_back(s);
    }
    for (const Simplex& s : simplices_)
        if (up_[s].empty())
            facets_.push_back(s);
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    for (const Simplex& s : simplices_) {
        if (s.size() > 1)
            break;
        out.push_back(s.vertices()[0]);
    }
    return out;
}

int SimplicialComplex::dim() const {
    return simplices_.empty() ? -1 : simplices_.rbegin()->dim();
}

const std::vector<Simplex>& SimplicialComplex::cofacets(const Simplex& s) const {
    auto it = up_.find(s);
    if (it == up_.end())
        throw DomainError("simplex not in complex: " + s.to_string());
    return it->second;
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
    return cofacets(s).empty();
}

SimplicialComplex SimplicialComplex::without_vertex(VertexId v) const {
    std::set<Simplex> kept;
    for (const Simplex& s : simplices_)
        if (!s.contains(v))
            kept.insert(s);
    return from_closed_set(std::move(kept));
}

SimplicialComplex SimplicialComplex::induced(const std::vector<VertexId>& keep) const {
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::set<Simplex> kept;
    for (const Simplex& s : simplices_) {
        const auto& vs = s.vertices();
        if (std::includes(sorted.begin(), sorted.end(), vs.begin(), vs.end()))
            kept.insert(s);
    }
    return from_closed_set(std::move(kept));
}

SimplicialComplex star(const SimplicialComplex& K, VertexId v) {
    if (!K.has_vertex(v))
        throw DomainError("vertex not in complex: " + std::to_string(v));
    std::vector<Simplex> gens;
    for (const Simplex& f : K.facets())
        if (f.contains(v))
            gens.push_back(f);
    return SimplicialComplex::from_facets(gens);
}

std::vector<Simplex> open_star(const SimplicialComplex& K, VertexId v) {
    if (!K.has_vertex(v))
        throw DomainError("vertex not in complex: " + std::to_string(v));
    std::vector<Simplex> out;
    for (const Simplex& s : K.simplices())
        if (s.contains(v))
            out.push_back(s);
    return out;
}

SimplicialComplex link(const SimplicialComplex& K, VertexId v) {
    if (!K.has_vertex(v))
        throw DomainError("vertex not in complex: " + std::to_string(v));
    std::vector<Simplex> gens;
    for (const Simplex& f : K.facets())
        if (f.contains(v) && f.size() > 1)
            gens.push_back(f.drop(v));
    return SimplicialComplex::from_facets(gens);
}

std::optional<VertexId> cone_apex(const SimplicialComplex& K) {
    for (VertexId v : K.vertices()) {
        bool apex = true;
        for (const Simplex& f : K.facets())
            if (!f.contains(v)) {
                apex = false;
                break;
            }
        if (apex)
            return v;
    }
    return std::nullopt;
}

std::vector<DominatedVertex> dominated_vertices(const SimplicialComplex& K) {
    std::vector<DominatedVertex> out;
    const auto& facets = K.facets();
    for (VertexId v : K.vertices()) {
        std::vector<VertexId> candidates;
        bool first = true;
        for (const Simplex& f : facets) {
            if (!f.contains(v))
                continue;
            if (first) {
                for (VertexId u : f.vertices())
                    if (u != v)
                        candidates.push_back(u);
                first = false;
            } else {
                std::erase_if(candidates,
                              [&](VertexId u) { return !f.contains(u); });
            }
            if (candidates.empty())
                break;
        }
        if (!candidates.empty())
            out.push_back({v, std::move(candidates)});
    }
    return out;
}

SimplicialComplex strong_collapse_step(const SimplicialComplex& K, VertexId v) {
    auto dom = dominated_vertices(K);
    bool ok = std::any_of(dom.begin(), dom.end(),
                          [&](const DominatedVertex& d) { return d.v == v; });
    if (!ok)
        throw DomainError("not an elementary strong collapse: vertex " +
                          std::to_string(v) + " is not dominated");
    return K.without_vertex(v);
}

CoreResult core(const SimplicialComplex& K) {
    CoreResult res{K, {}};
    for (;;) {
        auto dom = dominated_vertices(res.complex);
        if (dom.empty())
            return res;
        const DominatedVertex& d = dom.front();
        res.removed.push_back({d.v, d.dominators.front()});
        res.complex = res.complex.without_vertex(d.v);
    }
}

bool has_point_core(const SimplicialComplex& K) {
    return core(K).complex.size() == 1;
}

SimplicialComplex clique_complex(const SimplicialComplex& K) {
    std::vector<VertexId> vs = K.vertices();
    std::set<Simplex> cliques;
    // grow cliques one vertex at a time, largest vertex last
    std::vector<std::vector<VertexId>> frontier;
    for (VertexId v : vs) {
        cliques.insert(Simplex{v});
        frontier.push_back({v});
    }
    while (!frontier.empty()) {
        std::vector<std::vector<VertexId>> next;
        for (const auto& c : frontier) {
            for (VertexId w : vs) {
                if (w <= c.back())
                    continue;
                bool joined = std::all_of(c.begin(), c.end(), [&](VertexId u) {
                    return K.contains(Simplex{u, w});
                });
                if (joined) {
                    auto bigger = c;
                    bigger.push_back(w);
                    cliques.insert(Simplex(bigger));
                    next.push_back(std::move(bigger));
                }
            }
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_closed_set(std::move(cliques));
}

} // namespace morsecat
