#include "morsecat/matching.hpp"

#include "morsecat/errors.hpp"

#include <algorithm>

namespace morsecat {

Matching Matching::from_pairs(const SimplicialComplex& K,
                              std::vector<GradientPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    Matching M;
    for (auto& [face, cofacet] : pairs) {
        if (!K.contains(face) || !K.contains(cofacet))
            throw DomainError("matched pair not in complex: " + face.to_string() +
                              " < " + cofacet.to_string());
        if (cofacet.dim() != face.dim() + 1 || !face.is_face_of(cofacet))
            throw DomainError("not a codimension-1 pair: " + face.to_string() +
                              " < " + cofacet.to_string());
        if (M.partner_.count(face))
            throw DomainError("simplex matched twice: " + face.to_string());
        if (M.partner_.count(cofacet))
            throw DomainError("simplex matched twice: " + cofacet.to_string());
        M.partner_[face] = cofacet;
        M.partner_[cofacet] = face;
    }
    M.pairs_ = std::move(pairs);
    return M;
}

std::optional<Simplex> Matching::partner(const Simplex& s) const {
    auto it = partner_.find(s);
    if (it == partner_.end())
        return std::nullopt;
    return it->second;
}

bool Matching::has_pair(const Simplex& face, const Simplex& cofacet) const {
    auto it = partner_.find(face);
    return it != partner_.end() && it->second == cofacet &&
           face.dim() < cofacet.dim();
}

std::vector<Simplex> BuildUnit::simplices() const {
    if (pair)
        return {pair->first, pair->second};
    return {single};
}

namespace {

struct UnitDag {
    std::vector<BuildUnit> units;
    std::map<Simplex, int> unit_of;
    std::vector<std::vector<int>> succ;
    std::vector<int> indegree;
};

UnitDag build_unit_dag(const SimplicialComplex& K, const Matching& M) {
    UnitDag dag;
    for (const Simplex& s : K.simplices()) {
        if (dag.unit_of.count(s))
            continue;
        auto p = M.partner(s);
        int id = static_cast<int>(dag.units.size());
        if (p) {
            const Simplex& face = s.dim() < p->dim() ? s : *p;
            const Simplex& cof = s.dim() < p->dim() ? *p : s;
            dag.units.push_back(BuildUnit::of_pair({face, cof}));
            dag.unit_of[face] = id;
            dag.unit_of[cof] = id;
        } else {
            dag.units.push_back(BuildUnit::of_single(s));
            dag.unit_of[s] = id;
        }
    }
    dag.succ.resize(dag.units.size());
    dag.indegree.assign(dag.units.size(), 0);
    std::set<std::pair<int, int>> seen;
    for (const Simplex& y : K.simplices()) {
        int uy = dag.unit_of.at(y);
        for (const Simplex& x : y.boundary()) {
            int ux = dag.unit_of.at(x);
            if (ux == uy)
                continue;
            if (seen.insert({ux, uy}).second) {
                dag.succ[ux].push_back(uy);
                dag.indegree[uy]++;
            }
        }
    }
    return dag;
}

std::optional<BuildOrder> topo_order(UnitDag dag, std::mt19937_64* rng) {
    std::vector<int> ready;
    for (std::size_t i = 0; i < dag.units.size(); ++i)
        if (dag.indegree[i] == 0)
            ready.push_back(static_cast<int>(i));
    BuildOrder order;
    while (!ready.empty()) {
        std::size_t pick = 0;
        if (rng) {
            pick = std::uniform_int_distribution<std::size_t>(
                0, ready.size() - 1)(*rng);
        } else {
            pick = static_cast<std::size_t>(
                std::min_element(ready.begin(), ready.end()) - ready.begin());
        }
        int u = ready[pick];
        ready.erase(ready.begin() + static_cast<long>(pick));
        order.push_back(dag.units[u]);
        for (int w : dag.succ[u])
            if (--dag.indegree[w] == 0)
                ready.push_back(w);
    }
    if (order.size() != dag.units.size())
        return std::nullopt; // cycle
    return order;
}

} // namespace

std::optional<BuildOrder> linear_extension(const SimplicialComplex& K,
                                           const Matching& M) {
    return topo_order(build_unit_dag(K, M), nullptr);
}

std::optional<BuildOrder> linear_extension(const SimplicialComplex& K,
                                           const Matching& M,
                                           std::mt19937_64& rng) {
    return topo_order(build_unit_dag(K, M), &rng);
}

bool is_acyclic(const SimplicialComplex& K, const Matching& M) {
    return linear_extension(K, M).has_value();
}

} // namespace morsecat
