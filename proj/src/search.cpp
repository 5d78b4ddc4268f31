#include "morsecat/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace morsecat {

std::vector<FreePair> free_pairs(const SimplicialComplex& K) {
    std::vector<FreePair> out;
    for (const Simplex& s : K.simplices()) {
        const auto& up = K.cofacets(s);
        if (up.size() == 1)
            out.push_back({s, up.front()});
    }
    return out;
}

namespace {

std::vector<FreePair> free_pairs_of(const std::set<Simplex>& state) {
    std::map<Simplex, std::vector<const Simplex*>> up;
    for (const Simplex& s : state) {
        up[s];
        for (const Simplex& f : s.boundary())
            if (state.count(f))
                up[f].push_back(&s);
    }
    std::vector<FreePair> out;
    for (auto& [s, cof] : up)
        if (cof.size() == 1)
            out.push_back({s, *cof.front()});
    return out;
}

std::string encode(const std::set<Simplex>& state) {
    std::ostringstream os;
    for (const Simplex& s : state)
        os << s.to_string();
    return os.str();
}

struct CollapseSearch {
    const std::set<Simplex>* goal; // nullptr means "any single simplex"
    Budget budget;
    std::set<std::string> visited;
    std::vector<FreePair> trail;

    bool dfs(std::set<Simplex>& state) {
        if (goal ? state == *goal : state.size() == 1)
            return true;
        auto [it, fresh] = visited.insert(encode(state));
        if (!fresh)
            return false;
        budget.charge();
        for (const FreePair& fp : free_pairs_of(state)) {
            if (goal && (goal->count(fp.first) || goal->count(fp.second)))
                continue;
            state.erase(fp.first);
            state.erase(fp.second);
            trail.push_back(fp);
            if (dfs(state))
                return true;
            trail.pop_back();
            state.insert(fp.first);
            state.insert(fp.second);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<FreePair>>
collapse_search(const SimplicialComplex& K, const SimplicialComplex& target,
                long long budget) {
    for (const Simplex& s : target.simplices())
        if (!K.contains(s))
            throw DomainError("collapse target is not a subcomplex");
    if ((K.size() - target.size()) % 2 != 0)
        return std::nullopt;
    CollapseSearch cs{&target.simplices(), Budget(budget, "collapse search"), {}, {}};
    std::set<Simplex> state = K.simplices();
    if (cs.dfs(state))
        return cs.trail;
    return std::nullopt;
}

std::optional<std::vector<FreePair>>
collapse_search_to_point(const SimplicialComplex& K, long long budget) {
    if (K.empty())
        throw DomainError("cannot collapse the empty complex to a point");
    if (K.size() % 2 != 1)
        return std::nullopt;
    CollapseSearch cs{nullptr, Budget(budget, "collapse search"), {}, {}};
    std::set<Simplex> state = K.simplices();
    if (cs.dfs(state))
        return cs.trail;
    return std::nullopt;
}

namespace {

// per-vertex fingerprint: number of containing simplices of each dimension
std::map<VertexId, std::vector<int>> profiles(const SimplicialComplex& K) {
    std::map<VertexId, std::vector<int>> out;
    int d = std::max(K.dim(), 0);
    for (VertexId v : K.vertices())
        out[v].assign(d + 1, 0);
    for (const Simplex& s : K.simplices())
        for (VertexId v : s.vertices())
            out[v][s.dim()]++;
    return out;
}

struct IsoSearch {
    const SimplicialComplex* K;
    const SimplicialComplex* L;
    std::vector<VertexId> order;                 // K's vertices, rarest profile first
    std::map<VertexId, std::vector<VertexId>> cand;
    std::map<VertexId, VertexId> assign;
    std::set<VertexId> used;
    Budget budget;

    bool consistent(VertexId v) {
        for (const Simplex& s : open_star(*K, v)) {
            std::vector<VertexId> img;
            bool full = true;
            for (VertexId w : s.vertices()) {
                auto it = assign.find(w);
                if (it == assign.end()) {
                    full = false;
                    break;
                }
                img.push_back(it->second);
            }
            if (full && !L->contains(Simplex(img)))
                return false;
        }
        return true;
    }

    bool dfs(std::size_t i) {
        if (i == order.size())
            return true;
        budget.charge();
        VertexId v = order[i];
        for (VertexId u : cand[v]) {
            if (used.count(u))
                continue;
            assign[v] = u;
            used.insert(u);
            if (consistent(v) && dfs(i + 1))
                return true;
            assign.erase(v);
            used.erase(u);
        }
        return false;
    }
};

} // namespace

std::optional<std::map<VertexId, VertexId>>
isomorphic(const SimplicialComplex& K, const SimplicialComplex& L,
           long long budget) {
    if (K.size() != L.size())
        return std::nullopt;
    if (K.empty())
        return std::map<VertexId, VertexId>{};
    if (K.dim() != L.dim())
        return std::nullopt;

    auto pk = profiles(K), pl = profiles(L);
    {
        std::vector<std::vector<int>> a, b;
        for (auto& [v, p] : pk) a.push_back(p);
        for (auto& [u, p] : pl) b.push_back(p);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    IsoSearch is{&K, &L, {}, {}, {}, {}, Budget(budget, "isomorphism search")};
    for (auto& [v, p] : pk) {
        is.order.push_back(v);
        for (auto& [u, q] : pl)
            if (p == q)
                is.cand[v].push_back(u);
    }
    std::stable_sort(is.order.begin(), is.order.end(), [&](VertexId a, VertexId b) {
        return is.cand[a].size() < is.cand[b].size();
    });

    if (!is.dfs(0))
        return std::nullopt;
    // vertex counts match and the induced simplex map lands in L, so it is
    // injective on simplices; equal simplex counts make it a bijection
    for (const Simplex& s : K.simplices()) {
        std::vector<VertexId> img;
        for (VertexId w : s.vertices())
            img.push_back(is.assign.at(w));
        if (!L.contains(Simplex(img)))
            return std::nullopt;
    }
    return is.assign;
}

} // namespace morsecat
