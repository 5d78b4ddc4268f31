// Naive reference implementations, written straight from the definitions and
// sharing no code paths with the library versions they are checked against.
#pragma once

#include "morsecat/complex.hpp"
#include "morsecat/contiguity.hpp"
#include "morsecat/morse.hpp"
#include "morsecat/strong.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace morsecat;

// closure by repeated boundary insertion
inline std::set<Simplex> closure(const std::vector<Simplex>& gens) {
    std::set<Simplex> out(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Simplex> add;
        for (const Simplex& s : out)
            for (const Simplex& b : s.boundary())
                if (!out.count(b))
                    add.push_back(b);
        for (const Simplex& b : add)
            grew |= out.insert(b).second;
    }
    return out;
}

// star by the definition: sigma with sigma ∪ {v} in K
inline std::set<Simplex> star_of(const SimplicialComplex& K, VertexId v) {
    std::set<Simplex> out;
    for (const Simplex& s : K.simplices()) {
        std::vector<VertexId> w = s.vertices();
        if (!s.contains(v))
            w.push_back(v);
        if (K.contains(Simplex(w)))
            out.insert(s);
    }
    return out;
}

// v dominated by u iff link(v) is a cone with apex u
inline std::vector<VertexId> dominators_of(const SimplicialComplex& K,
                                           VertexId v) {
    SimplicialComplex lk = link(K, v);
    std::vector<VertexId> out;
    if (lk.empty())
        return out;
    for (VertexId u : lk.vertices()) {
        bool apex = true;
        for (const Simplex& f : lk.facets())
            if (!f.contains(u)) {
                apex = false;
                break;
            }
        if (apex)
            out.push_back(u);
    }
    return out;
}

// every codim-1 incidence, tested for the two matching conditions
inline std::vector<GradientPair> gradient_pairs(const SimplicialComplex& K,
                                                const MorseFunction& f) {
    std::vector<GradientPair> out;
    for (const Simplex& tau : K.simplices()) {
        if (tau.dim() == 0)
            continue;
        for (const Simplex& sigma : tau.boundary())
            if (f.at(sigma) >= f.at(tau))
                out.push_back({sigma, tau});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// critical = complement of the matched simplices
inline std::set<Simplex> critical_simplices(const SimplicialComplex& K,
                                            const MorseFunction& f) {
    std::set<Simplex> matched;
    for (const auto& [s, t] : gradient_pairs(K, f)) {
        matched.insert(s);
        matched.insert(t);
    }
    std::set<Simplex> out;
    for (const Simplex& s : K.simplices())
        if (!matched.count(s))
            out.insert(s);
    return out;
}

// sublevel by filtering, then checking closedness explicitly
inline std::set<Simplex> sublevel(const SimplicialComplex& K,
                                  const MorseFunction& f, const Level& c) {
    std::set<Simplex> out;
    for (const Simplex& s : K.simplices())
        if (Level::of(f.at(s)) <= c)
            out.insert(s);
    return out;
}

inline std::set<Simplex> st_vu_set(const SimplicialComplex& K, VertexId v,
                                   VertexId u) {
    std::set<Simplex> out;
    for (const Simplex& s : star_of(K, v))
        if (s.contains(v) && star_of(K, u).count(s))
            out.insert(s);
    return out;
}

inline Level m_value(const SimplicialComplex& K, const MorseFunction& f,
                     VertexId v, VertexId u) {
    Rat fuv = f.at(Simplex({v, u}));
    std::set<Simplex> st = st_vu_set(K, v, u);
    std::set<Simplex> crit = critical_simplices(K, f);
    std::optional<Rat> best;
    for (const Simplex& tau : K.simplices()) {
        Rat ft = f.at(tau);
        if (ft <= fuv)
            continue;
        bool counts = !st.count(tau) || crit.count(tau);
        if (counts && (!best || ft < *best))
            best = ft;
    }
    return best ? Level::of(*best) : Level::pos_inf();
}

inline std::optional<Rat> l_value(const SimplicialComplex& K,
                                  const MorseFunction& f, VertexId v,
                                  VertexId u, bool strict) {
    Rat fuv = f.at(Simplex({v, u}));
    Level m = m_value(K, f, v, u);
    std::set<Simplex> st = st_vu_set(K, v, u);
    std::set<Simplex> crit = critical_simplices(K, f);
    std::set<Rat> crit_values;
    for (const Simplex& s : crit)
        crit_values.insert(f.at(s));
    std::optional<Rat> best;
    for (const Simplex& witness : st) {
        Rat l = f.at(witness);
        if (crit_values.count(l))
            continue;
        if (l < fuv)
            continue;
        if (strict ? !(Level::of(l) < m) : !(Level::of(l) <= m))
            continue;
        std::set<Simplex> kl = sublevel(K, f, Level::of(l));
        std::vector<Simplex> regs;
        for (const Simplex& s : st)
            if (kl.count(s) && !crit.count(s))
                regs.push_back(s);
        bool ok = true;
        for (const Simplex& s : regs) {
            bool maximal = true;
            for (const Simplex& t : regs)
                if (!(t == s) && s.is_face_of(t)) {
                    maximal = false;
                    break;
                }
            if (maximal && !s.contains(u)) {
                ok = false;
                break;
            }
        }
        if (ok && (!best || l > *best))
            best = l;
    }
    return best;
}

inline std::size_t scrit_count(const SimplicialComplex& K,
                               const MorseFunction& f, bool strict = false) {
    std::size_t n = critical_simplices(K, f).size();
    std::vector<GradientPair> pairs = gradient_pairs(K, f);
    std::set<GradientPair> covered;
    for (const auto& p : pairs) {
        const Simplex& sigma = p.first;
        if (sigma.dim() != 0)
            continue;
        VertexId v = sigma.vertices()[0];
        if (p.second.dim() != 1)
            continue;
        VertexId u = p.second.vertices()[0] == v ? p.second.vertices()[1]
                                                 : p.second.vertices()[0];
        std::optional<Rat> l = l_value(K, f, v, u, strict);
        if (!l)
            continue;
        Rat fuv = f.at(p.second);
        for (const auto& q : pairs)
            if (f.at(q.second) >= fuv && f.at(q.second) <= *l)
                covered.insert(q);
    }
    for (const auto& q : pairs)
        if (!covered.count(q))
            ++n;
    return n;
}

// contiguity checked over every simplex, not just facets
inline bool contiguous_all(const SimplicialMap& phi, const SimplicialMap& psi) {
    for (const Simplex& s : phi.source().simplices()) {
        std::vector<VertexId> u = phi.image(s).vertices();
        Simplex pim = psi.image(s);
        for (VertexId v : pim.vertices())
            u.push_back(v);
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        if (!phi.target().contains(Simplex(u)))
            return false;
    }
    return true;
}

// all simplicial maps source -> target, by filtering every vertex map
inline std::vector<SimplicialMap> all_maps(const SimplicialComplex& source,
                                           const SimplicialComplex& target) {
    std::vector<VertexId> sv = source.vertices();
    std::vector<VertexId> tv = target.vertices();
    std::vector<SimplicialMap> out;
    std::vector<std::size_t> idx(sv.size(), 0);
    while (true) {
        std::map<VertexId, VertexId> m;
        for (std::size_t i = 0; i < sv.size(); ++i)
            m[sv[i]] = tv[idx[i]];
        bool simplicial = true;
        for (const Simplex& s : source.simplices()) {
            std::set<VertexId> img;
            for (VertexId v : s.vertices())
                img.insert(m.at(v));
            if (!target.contains(
                    Simplex(std::vector<VertexId>(img.begin(), img.end())))) {
                simplicial = false;
                break;
            }
        }
        if (simplicial)
            out.push_back(SimplicialMap(source, target, m));
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < tv.size())
                break;
            idx[i] = 0;
        }
        if (i == idx.size())
            return out;
    }
}

// BFS over the full map space with pairwise contiguity as adjacency
inline bool same_class(const SimplicialMap& phi, const SimplicialMap& psi) {
    std::vector<SimplicialMap> maps = all_maps(phi.source(), phi.target());
    auto find = [&](const SimplicialMap& m) {
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i] == m)
                return i;
        return maps.size();
    };
    std::size_t a = find(phi), b = find(psi);
    std::vector<bool> seen(maps.size(), false);
    std::queue<std::size_t> q;
    q.push(a);
    seen[a] = true;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        if (i == b)
            return true;
        for (std::size_t j = 0; j < maps.size(); ++j)
            if (!seen[j] && contiguous_all(maps[i], maps[j])) {
                seen[j] = true;
                q.push(j);
            }
    }
    return false;
}

inline bool categorical(const SimplicialComplex& U, const SimplicialComplex& K) {
    SimplicialMap incl = SimplicialMap::inclusion(U, K);
    for (VertexId v : K.vertices())
        if (same_class(incl, SimplicialMap::constant(U, K, v)))
            return true;
    return false;
}

// brute-force scat: all facet partitions into exactly m+1 blocks, m ascending
inline int scat(const SimplicialComplex& K) {
    std::vector<Simplex> facets = K.facets();
    std::size_t n = facets.size();
    for (std::size_t m = 0; m + 1 <= n; ++m) {
        std::size_t nblocks = m + 1;
        std::vector<std::size_t> assign(n, 0);
        std::function<bool(std::size_t, std::size_t)> rec =
            [&](std::size_t i, std::size_t used) -> bool {
            if (i == n) {
                if (used != nblocks)
                    return false;
                for (std::size_t b = 0; b < nblocks; ++b) {
                    std::vector<Simplex> block;
                    for (std::size_t j = 0; j < n; ++j)
                        if (assign[j] == b)
                            block.push_back(facets[j]);
                    if (!categorical(SimplicialComplex::from_facets(block), K))
                        return false;
                }
                return true;
            }
            std::size_t top = std::min(used + 1, nblocks);
            for (std::size_t b = 0; b < top; ++b) {
                assign[i] = b;
                if (rec(i + 1, std::max(used, b + 1)))
                    return true;
            }
            return false;
        };
        if (rec(0, 0))
            return static_cast<int>(m);
    }
    return static_cast<int>(n) - 1; // unreachable: singleton facets are cones
}

// random generators for property tests (deterministic in the seed)
inline SimplicialComplex random_complex(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int nv = std::uniform_int_distribution<int>(3, 7)(rng);
    int nf = std::uniform_int_distribution<int>(2, 5)(rng);
    std::vector<Simplex> facets;
    for (int i = 0; i < nf; ++i) {
        int size = std::uniform_int_distribution<int>(1, std::min(4, nv))(rng);
        std::vector<VertexId> all(nv);
        for (int v = 0; v < nv; ++v)
            all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        facets.push_back(
            Simplex(std::vector<VertexId>(all.begin(), all.begin() + size)));
    }
    return SimplicialComplex::from_facets(facets);
}

// injective values increasing with dimension: a valid function where every
// simplex is critical
inline MorseFunction injective_dmf(const SimplicialComplex& K,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<Simplex, Rat> raw;
    int i = 0;
    std::vector<Simplex> by_dim(K.simplices().begin(), K.simplices().end());
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [](const Simplex& a, const Simplex& b) {
                         return a.dim() < b.dim();
                     });
    // shuffle within dimension
    for (std::size_t lo = 0; lo < by_dim.size();) {
        std::size_t hi = lo;
        while (hi < by_dim.size() && by_dim[hi].dim() == by_dim[lo].dim())
            ++hi;
        std::shuffle(by_dim.begin() + lo, by_dim.begin() + hi, rng);
        lo = hi;
    }
    for (const Simplex& s : by_dim)
        raw[s] = Rat(i++);
    auto res = validate_dmf(K, raw);
    return *res.function;
}

} // namespace oracle
