#pragma once

#include "morsecat/budget.hpp"
#include "morsecat/complex.hpp"
#include "morsecat/search.hpp"

#include <map>
#include <optional>
#include <vector>

namespace morsecat {

// Vertex map between complexes carrying simplices to simplices.
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                  std::map<VertexId, VertexId> vertex_map);

    static SimplicialMap inclusion(const SimplicialComplex& sub,
                                   const SimplicialComplex& K);
    static SimplicialMap constant(const SimplicialComplex& source,
                                  const SimplicialComplex& target, VertexId v);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    const std::map<VertexId, VertexId>& vertex_map() const { return map_; }
    Simplex image(const Simplex& s) const;

    bool operator==(const SimplicialMap&) const = default;

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::map<VertexId, VertexId> map_;
};

// phi(sigma) ∪ psi(sigma) a simplex of the target, for every sigma
bool is_contiguous(const SimplicialMap& phi, const SimplicialMap& psi);

struct ContiguityBudget {
    long long states = 10'000'000;     // BFS cap: |V(target)|^|V(source)|
    long long partitions = 10'000'000; // facet partitions in scat_exact
};

// Chain phi = m_0 ~ m_1 ~ ... ~ m_n = psi of stepwise-contiguous maps, or
// nullopt when the two maps sit in different contiguity classes.
std::optional<std::vector<SimplicialMap>>
contiguity_path(const SimplicialMap& phi, const SimplicialMap& psi,
                long long states_budget = ContiguityBudget{}.states);

bool same_contiguity_class(const SimplicialMap& phi, const SimplicialMap& psi,
                           long long states_budget = ContiguityBudget{}.states);

// inclusion U -> K in the contiguity class of some constant map?
bool is_categorical(const SimplicialComplex& U, const SimplicialComplex& K,
                    const ContiguityBudget& budget = {});

struct Cover {
    std::vector<std::vector<Simplex>> blocks; // facet partition
    std::vector<SimplicialComplex> pieces;    // block closures
};

struct ScatResult {
    int value;
    Cover cover; // value + 1 categorical pieces
};

ScatResult scat_exact(const SimplicialComplex& K,
                      const ContiguityBudget& budget = {});

struct ScatBounds {
    int lower;
    int upper;
    Cover star_cover; // witnesses the upper bound
};

ScatBounds scat_bounds(const SimplicialComplex& K);

// cores isomorphic = same strong homotopy type
bool strong_equivalent(const SimplicialComplex& K, const SimplicialComplex& L,
                       long long iso_budget = kDefaultIsoBudget);

} // namespace morsecat
