#include "morsecat/contiguity.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace morsecat {

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::map<VertexId, VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)),
      map_(std::move(vertex_map)) {
    for (VertexId v : source_.vertices())
        if (!map_.count(v))
            throw DomainError("vertex map misses source vertex " +
                              std::to_string(v));
    for (const auto& [v, w] : map_) {
        if (!source_.has_vertex(v))
            throw DomainError("vertex map defined outside the source: " +
                              std::to_string(v));
        if (!target_.has_vertex(w))
            throw DomainError("vertex map leaves the target: " +
                              std::to_string(w));
    }
    for (const Simplex& F : source_.facets())
        if (!target_.contains(image(F)))
            throw DomainError("not a simplicial map: image of " +
                              F.to_string() + " is no simplex");
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex& sub,
                                       const SimplicialComplex& K) {
    for (const Simplex& F : sub.facets())
        if (!K.contains(F))
            throw DomainError("not a subcomplex: " + F.to_string());
    std::map<VertexId, VertexId> id;
    for (VertexId v : sub.vertices())
        id[v] = v;
    return SimplicialMap(sub, K, std::move(id));
}

SimplicialMap SimplicialMap::constant(const SimplicialComplex& source,
                                      const SimplicialComplex& target,
                                      VertexId v) {
    if (!target.has_vertex(v))
        throw DomainError("constant map needs a target vertex");
    std::map<VertexId, VertexId> m;
    for (VertexId w : source.vertices())
        m[w] = v;
    return SimplicialMap(source, target, std::move(m));
}

Simplex SimplicialMap::image(const Simplex& s) const {
    std::vector<VertexId> img;
    img.reserve(s.size());
    for (VertexId v : s.vertices()) {
        VertexId w = map_.at(v);
        if (std::find(img.begin(), img.end(), w) == img.end())
            img.push_back(w);
    }
    return Simplex(std::move(img));
}

bool is_contiguous(const SimplicialMap& phi, const SimplicialMap& psi) {
    if (phi.source() != psi.source() || phi.target() != psi.target())
        throw DomainError("maps have different source or target");
    for (const Simplex& F : phi.source().facets()) {
        std::vector<VertexId> merged = phi.image(F).vertices();
        Simplex pim = psi.image(F);
        for (VertexId v : pim.vertices())
            if (std::find(merged.begin(), merged.end(), v) == merged.end())
                merged.push_back(v);
        if (!phi.target().contains(Simplex(merged)))
            return false;
    }
    return true;
}

namespace {

// overflow-safe n^k, saturating just above cap
long long ipow_capped(long long n, long long k, long long cap) {
    long long r = 1;
    for (long long i = 0; i < k; ++i) {
        if (r > cap / n)
            return cap + 1;
        r *= n;
    }
    return r;
}

// BFS universe: all vertex maps source -> target, encoded in mixed radix
struct MapSpace {
    const SimplicialComplex* U;
    const SimplicialComplex* K;
    std::vector<VertexId> sv; // sorted source vertices
    std::vector<VertexId> tv; // sorted target vertices
    std::map<VertexId, int> tix;
    std::vector<std::vector<Simplex>> facets_at; // source facets per position

    MapSpace(const SimplicialComplex& U_, const SimplicialComplex& K_,
             long long states_budget)
        : U(&U_), K(&K_), sv(U_.vertices()), tv(K_.vertices()) {
        long long total = ipow_capped(static_cast<long long>(tv.size()),
                                      static_cast<long long>(sv.size()),
                                      states_budget);
        if (total > states_budget)
            throw BudgetError("contiguity search too large");
        for (std::size_t j = 0; j < tv.size(); ++j)
            tix[tv[j]] = static_cast<int>(j);
        facets_at.resize(sv.size());
        for (std::size_t i = 0; i < sv.size(); ++i)
            for (const Simplex& F : U->facets())
                if (F.contains(sv[i]))
                    facets_at[i].push_back(F);
    }

    std::uint64_t encode(const std::vector<int>& img) const {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < img.size(); ++i)
            code = code * tv.size() + static_cast<std::uint64_t>(img[i]);
        return code;
    }

    std::vector<int> decode(std::uint64_t code) const {
        std::vector<int> img(sv.size());
        for (std::size_t i = sv.size(); i-- > 0;) {
            img[i] = static_cast<int>(code % tv.size());
            code /= tv.size();
        }
        return img;
    }

    std::vector<int> state_of(const SimplicialMap& m) const {
        std::vector<int> img(sv.size());
        for (std::size_t i = 0; i < sv.size(); ++i)
            img[i] = tix.at(m.vertex_map().at(sv[i]));
        return img;
    }

    SimplicialMap map_of(const std::vector<int>& img) const {
        std::map<VertexId, VertexId> vm;
        for (std::size_t i = 0; i < sv.size(); ++i)
            vm[sv[i]] = tv[static_cast<std::size_t>(img[i])];
        return SimplicialMap(*U, *K, std::move(vm));
    }

    Simplex image_of(const std::vector<int>& img, const Simplex& F) const {
        std::vector<VertexId> out;
        for (VertexId v : F.vertices()) {
            std::size_t i = static_cast<std::size_t>(
                std::lower_bound(sv.begin(), sv.end(), v) - sv.begin());
            VertexId w = tv[static_cast<std::size_t>(img[i])];
            if (std::find(out.begin(), out.end(), w) == out.end())
                out.push_back(w);
        }
        return Simplex(std::move(out));
    }

    // change position i to target index j: legal iff the result is again a
    // simplicial map directly contiguous to img; both reduce to the single
    // condition image(F) ∪ {tv[j]} ∈ K for every source facet F at i
    bool can_move(const std::vector<int>& img, std::size_t i, int j) const {
        VertexId w = tv[static_cast<std::size_t>(j)];
        for (const Simplex& F : facets_at[i]) {
            Simplex im = image_of(img, F);
            if (!im.contains(w) && !K->contains(im.join(w)))
                return false;
        }
        return true;
    }

    // some vertex's closed star swallows the whole image
    bool coned(const std::vector<int>& img) const {
        for (VertexId v : tv) {
            bool ok = true;
            for (const Simplex& F : U->facets()) {
                Simplex im = image_of(img, F);
                if (!im.contains(v) && !K->contains(im.join(v))) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<SimplicialMap>>
contiguity_path(const SimplicialMap& phi, const SimplicialMap& psi,
                long long states_budget) {
    if (phi.source() != psi.source() || phi.target() != psi.target())
        throw DomainError("maps have different source or target");
    MapSpace sp(phi.source(), phi.target(), states_budget);
    std::vector<int> start = sp.state_of(phi);
    std::vector<int> goal = sp.state_of(psi);
    std::uint64_t goal_code = sp.encode(goal);

    Budget budget(states_budget, "contiguity class search");
    std::unordered_map<std::uint64_t, std::uint64_t> parent;
    std::deque<std::uint64_t> queue;
    std::uint64_t start_code = sp.encode(start);
    parent[start_code] = start_code;
    queue.push_back(start_code);
    bool found = start_code == goal_code;
    while (!queue.empty() && !found) {
        std::uint64_t code = queue.front();
        queue.pop_front();
        budget.charge();
        std::vector<int> img = sp.decode(code);
        for (std::size_t i = 0; i < sp.sv.size() && !found; ++i) {
            int cur = img[i];
            for (int j = 0; j < static_cast<int>(sp.tv.size()); ++j) {
                if (j == cur || !sp.can_move(img, i, j))
                    continue;
                img[i] = j;
                std::uint64_t next = sp.encode(img);
                img[i] = cur;
                if (parent.emplace(next, code).second) {
                    if (next == goal_code) {
                        found = true;
                        break;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    if (!found)
        return std::nullopt;
    std::vector<SimplicialMap> path;
    for (std::uint64_t code = goal_code;; code = parent.at(code)) {
        path.push_back(sp.map_of(sp.decode(code)));
        if (code == start_code)
            break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool same_contiguity_class(const SimplicialMap& phi, const SimplicialMap& psi,
                           long long states_budget) {
    return contiguity_path(phi, psi, states_budget).has_value();
}

namespace {

std::map<VertexId, int> components_of(const SimplicialComplex& K) {
    std::map<VertexId, int> comp;
    int next = 0;
    for (VertexId v : K.vertices()) {
        if (comp.count(v))
            continue;
        std::deque<VertexId> queue{v};
        comp[v] = next;
        while (!queue.empty()) {
            VertexId w = queue.front();
            queue.pop_front();
            for (const Simplex& s : open_star(K, w))
                for (VertexId x : s.vertices())
                    if (!comp.count(x)) {
                        comp[x] = next;
                        queue.push_back(x);
                    }
        }
        ++next;
    }
    return comp;
}

bool star_swallows(const SimplicialComplex& U, const SimplicialComplex& K) {
    for (VertexId v : K.vertices()) {
        bool ok = true;
        for (const Simplex& F : U.facets())
            if (!F.contains(v) && !K.contains(F.join(v))) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    }
    return false;
}

bool spans_components(const SimplicialComplex& U,
                      const std::map<VertexId, int>& comp) {
    int seen = -1;
    for (VertexId v : U.vertices()) {
        int c = comp.at(v);
        if (seen == -1)
            seen = c;
        else if (c != seen)
            return true;
    }
    return false;
}

bool categorical_bfs(const SimplicialComplex& U, const SimplicialComplex& K,
                     long long states_budget) {
    MapSpace sp(U, K, states_budget);
    std::vector<int> start = sp.state_of(SimplicialMap::inclusion(U, K));
    if (sp.coned(start))
        return true;
    Budget budget(states_budget, "categorical subcomplex search");
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::uint64_t> queue;
    seen.insert(sp.encode(start));
    queue.push_back(sp.encode(start));
    while (!queue.empty()) {
        std::uint64_t code = queue.front();
        queue.pop_front();
        budget.charge();
        std::vector<int> img = sp.decode(code);
        for (std::size_t i = 0; i < sp.sv.size(); ++i) {
            int cur = img[i];
            for (int j = 0; j < static_cast<int>(sp.tv.size()); ++j) {
                if (j == cur || !sp.can_move(img, i, j))
                    continue;
                img[i] = j;
                std::uint64_t next = sp.encode(img);
                if (seen.insert(next).second) {
                    if (sp.coned(img))
                        return true;
                    queue.push_back(next);
                }
                img[i] = cur;
            }
        }
    }
    return false;
}

} // namespace

bool is_categorical(const SimplicialComplex& U, const SimplicialComplex& K,
                    const ContiguityBudget& budget) {
    if (U.empty())
        throw DomainError("categorical test needs a nonempty subcomplex");
    for (const Simplex& F : U.facets())
        if (!K.contains(F))
            throw DomainError("not a subcomplex: " + F.to_string());

    if (star_swallows(U, K))
        return true;
    if (U == K)
        return has_point_core(K);
    if (spans_components(U, components_of(K)))
        return false;
    if (has_point_core(U))
        return true;
    return categorical_bfs(U, K, budget.states);
}

namespace {

enum class PieceStatus : int { False = 0, True = 1, Unknown = 2 };

struct ScatSearch {
    const SimplicialComplex* K;
    ContiguityBudget budget;
    std::vector<Simplex> facets;
    std::map<VertexId, int> comp;
    std::map<std::vector<int>, PieceStatus> cheap_cache;
    std::map<std::vector<int>, bool> bfs_cache;
    bool budget_hit = false;

    SimplicialComplex piece_of(const std::vector<int>& block) const {
        std::vector<Simplex> gens;
        for (int i : block)
            gens.push_back(facets[static_cast<std::size_t>(i)]);
        return SimplicialComplex::from_facets(gens);
    }

    PieceStatus cheap(const std::vector<int>& block) {
        auto it = cheap_cache.find(block);
        if (it != cheap_cache.end())
            return it->second;
        SimplicialComplex piece = piece_of(block);
        PieceStatus st = PieceStatus::Unknown;
        if (star_swallows(piece, *K))
            st = PieceStatus::True;
        else if (spans_components(piece, comp))
            st = PieceStatus::False;
        else if (has_point_core(piece))
            st = PieceStatus::True;
        cheap_cache[block] = st;
        return st;
    }

    // resolves Unknown by BFS; may set budget_hit instead of answering
    std::optional<bool> full(const std::vector<int>& block) {
        PieceStatus st = cheap(block);
        if (st != PieceStatus::Unknown)
            return st == PieceStatus::True;
        auto it = bfs_cache.find(block);
        if (it != bfs_cache.end())
            return it->second;
        try {
            bool r = categorical_bfs(piece_of(block), *K, budget.states);
            bfs_cache[block] = r;
            return r;
        } catch (const BudgetError&) {
            budget_hit = true;
            return std::nullopt;
        }
    }
};

std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs,
                                        int nblocks) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (std::size_t i = 0; i < rgs.size(); ++i)
        blocks[static_cast<std::size_t>(rgs[i])].push_back(
            static_cast<int>(i));
    return blocks;
}

// restricted growth strings over n items with exactly nblocks blocks
void enumerate_partitions(int n, int nblocks, Budget& counter,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    struct Rec {
        int n, nblocks;
        Budget& counter;
        const std::function<bool(const std::vector<int>&)>& visit;
        std::vector<int>& rgs;
        bool stop = false;

        void go(int i, int used) {
            if (stop)
                return;
            if (n - i < nblocks - used)
                return; // not enough items left to open the remaining blocks
            if (i == n) {
                if (used == nblocks) {
                    counter.charge();
                    if (visit(rgs))
                        stop = true;
                }
                return;
            }
            int top = std::min(used, nblocks - 1);
            for (int b = 0; b <= top && !stop; ++b) {
                rgs[static_cast<std::size_t>(i)] = b;
                go(i + 1, std::max(used, b + 1));
            }
        }
    } rec{n, nblocks, counter, visit, rgs};
    rec.go(0, 0);
}

Cover cover_from(const ScatSearch& ss, const std::vector<std::vector<int>>& blocks) {
    Cover cover;
    for (const auto& block : blocks) {
        std::vector<Simplex> facets;
        for (int i : block)
            facets.push_back(ss.facets[static_cast<std::size_t>(i)]);
        cover.blocks.push_back(facets);
        cover.pieces.push_back(SimplicialComplex::from_facets(facets));
    }
    return cover;
}

} // namespace

ScatResult scat_exact(const SimplicialComplex& K,
                      const ContiguityBudget& budget) {
    if (K.empty())
        throw DomainError("scat of the empty complex is undefined");

    ScatSearch ss{&K, budget, K.facets(), components_of(K), {}, {}, false};
    const int n = static_cast<int>(ss.facets.size());

    if (has_point_core(K)) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            all[static_cast<std::size_t>(i)] = i;
        return {0, cover_from(ss, {all})};
    }

    Budget partition_counter(budget.partitions, "facet partition enumeration");
    for (int m = 1; m < n; ++m) {
        std::vector<std::vector<std::vector<int>>> pending;
        std::optional<std::vector<std::vector<int>>> winner;
        ss.budget_hit = false;

        enumerate_partitions(
            n, m + 1, partition_counter, [&](const std::vector<int>& rgs) {
                auto blocks = blocks_of(rgs, m + 1);
                bool rejected = false, all_true = true;
                for (const auto& block : blocks) {
                    PieceStatus st = ss.cheap(block);
                    if (st == PieceStatus::False) {
                        rejected = true;
                        break;
                    }
                    if (st != PieceStatus::True)
                        all_true = false;
                }
                if (rejected)
                    return false;
                if (all_true) {
                    winner = blocks;
                    return true;
                }
                pending.push_back(blocks);
                return false;
            });

        if (!winner) {
            for (const auto& blocks : pending) {
                bool all_true = true;
                for (const auto& block : blocks) {
                    std::optional<bool> r = ss.full(block);
                    if (!r || !*r) {
                        all_true = false;
                        break;
                    }
                }
                if (all_true) {
                    winner = blocks;
                    break;
                }
            }
        }
        if (winner)
            return {m, cover_from(ss, *winner)};
        if (ss.budget_hit)
            throw BudgetError("scat search inconclusive within budget");
    }
    // unreachable: the all-singletons partition at m = n-1 always certifies,
    // every single facet closure being a cone
    throw BudgetError("scat search inconclusive within budget");
}

ScatBounds scat_bounds(const SimplicialComplex& K) {
    if (K.empty())
        throw DomainError("scat of the empty complex is undefined");
    ScatBounds out;
    out.lower = has_point_core(K) ? 0 : 1;

    const auto& facets = K.facets();
    std::vector<bool> covered(facets.size(), false);
    std::size_t left = facets.size();
    while (left > 0) {
        VertexId best = -1;
        std::size_t best_count = 0;
        for (VertexId v : K.vertices()) {
            std::size_t cnt = 0;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if (!covered[i] && facets[i].contains(v))
                    ++cnt;
            if (cnt > best_count) {
                best_count = cnt;
                best = v;
            }
        }
        std::vector<Simplex> block;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (!covered[i] && facets[i].contains(best)) {
                covered[i] = true;
                block.push_back(facets[i]);
                --left;
            }
        out.star_cover.blocks.push_back(block);
        out.star_cover.pieces.push_back(SimplicialComplex::from_facets(block));
    }
    out.upper = static_cast<int>(out.star_cover.blocks.size()) - 1;
    return out;
}

bool strong_equivalent(const SimplicialComplex& K, const SimplicialComplex& L,
                       long long iso_budget) {
    return isomorphic(core(K).complex, core(L).complex, iso_budget).has_value();
}

} // namespace morsecat
