#pragma once

#include "morsecat/simplex.hpp"

#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace morsecat {

// Finite abstract simplicial complex, closed under taking faces.
// May be empty. Iteration order over simplices is dimension-major.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closure of the given simplices; they need not be mutually maximal.
    static SimplicialComplex from_facets(const std::vector<Simplex>& gens);

    // Same, from raw vertex lists.
    static SimplicialComplex
    from_vertex_lists(const std::vector<std::vector<VertexId>>& facets);

    // Adopts a set that is already closed under faces (not re-checked).
    static SimplicialComplex from_closed_set(std::set<Simplex> simplices);

    const std::set<Simplex>& simplices() const { return simplices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::vector<VertexId> vertices() const;

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool has_vertex(VertexId v) const { return contains(Simplex{v}); }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    int dim() const;

    // codimension-1 cofaces of s within the complex
    const std::vector<Simplex>& cofacets(const Simplex& s) const;
    bool is_facet(const Simplex& s) const;

    // subcomplex of simplices avoiding v
    SimplicialComplex without_vertex(VertexId v) const;
    // subcomplex of simplices whose vertices all lie in keep
    SimplicialComplex induced(const std::vector<VertexId>& keep) const;

    bool operator==(const SimplicialComplex& other) const {
        return simplices_ == other.simplices_;
    }

private:
    void index();

    std::set<Simplex> simplices_;
    std::vector<Simplex> facets_;
    std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> up_;
};

SimplicialComplex star(const SimplicialComplex& K, VertexId v);
std::vector<Simplex> open_star(const SimplicialComplex& K, VertexId v);
SimplicialComplex link(const SimplicialComplex& K, VertexId v);

// smallest vertex whose star is all of K, if any
std::optional<VertexId> cone_apex(const SimplicialComplex& K);
inline bool is_cone(const SimplicialComplex& K) { return cone_apex(K).has_value(); }

struct DominatedVertex {
    VertexId v;
    std::vector<VertexId> dominators; // sorted, nonempty
};

// all dominated vertices with every vertex dominating them
std::vector<DominatedVertex> dominated_vertices(const SimplicialComplex& K);

// deletes v, which must be dominated
SimplicialComplex strong_collapse_step(const SimplicialComplex& K, VertexId v);

struct CoreResult {
    SimplicialComplex complex;
    // (vertex, one dominator that justified its removal), in removal order
    std::vector<std::pair<VertexId, VertexId>> removed;
};

// iterated strong collapse until no vertex is dominated; deterministic
// (smallest dominated vertex first)
CoreResult core(const SimplicialComplex& K);

bool has_point_core(const SimplicialComplex& K);

// flag completion of the 1-skeleton
SimplicialComplex clique_complex(const SimplicialComplex& K);

} // namespace morsecat
