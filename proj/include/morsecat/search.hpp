#pragma once

#include "morsecat/budget.hpp"
#include "morsecat/complex.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace morsecat {

using FreePair = std::pair<Simplex, Simplex>; // (free face, its unique cofacet)

std::vector<FreePair> free_pairs(const SimplicialComplex& K);

constexpr long long kDefaultCollapseBudget = 1'000'000;

// Backtracking search for a sequence of elementary collapses from K down to
// target (target must be a subcomplex). Returns the removed pairs in order,
// or nullopt if no sequence exists.
std::optional<std::vector<FreePair>>
collapse_search(const SimplicialComplex& K, const SimplicialComplex& target,
                long long budget = kDefaultCollapseBudget);

// Same, with target any single vertex.
std::optional<std::vector<FreePair>>
collapse_search_to_point(const SimplicialComplex& K,
                         long long budget = kDefaultCollapseBudget);

constexpr long long kDefaultIsoBudget = 1'000'000;

// Vertex bijection inducing a simplex bijection, or nullopt.
std::optional<std::map<VertexId, VertexId>>
isomorphic(const SimplicialComplex& K, const SimplicialComplex& L,
           long long budget = kDefaultIsoBudget);

} // namespace morsecat
