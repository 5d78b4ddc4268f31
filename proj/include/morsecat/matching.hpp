#pragma once

#include "morsecat/complex.hpp"

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace morsecat {

using GradientPair = std::pair<Simplex, Simplex>; // (face, cofacet), codim 1

// A partial matching of the Hasse diagram: each simplex in at most one pair.
// Acyclicity is a separate property, checked by is_acyclic / linear_extension.
class Matching {
public:
    Matching() = default;

    // validates: simplices in K, codim-1 face relations, no simplex reused
    static Matching from_pairs(const SimplicialComplex& K,
                               std::vector<GradientPair> pairs);

    const std::vector<GradientPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool is_matched(const Simplex& s) const { return partner_.count(s) > 0; }
    std::optional<Simplex> partner(const Simplex& s) const;
    bool has_pair(const Simplex& face, const Simplex& cofacet) const;

    bool operator==(const Matching& other) const { return pairs_ == other.pairs_; }

private:
    std::vector<GradientPair> pairs_; // sorted
    std::map<Simplex, Simplex> partner_;
};

// One value-assignment unit: a matched pair or a lone simplex.
struct BuildUnit {
    std::optional<GradientPair> pair;
    Simplex single; // meaningful when !pair

    bool is_pair() const { return pair.has_value(); }
    static BuildUnit of_pair(GradientPair p) { return {std::move(p), {}}; }
    static BuildUnit of_single(Simplex s) { return {std::nullopt, std::move(s)}; }
    std::vector<Simplex> simplices() const;
    bool operator==(const BuildUnit&) const = default;
};

using BuildOrder = std::vector<BuildUnit>;

// Units of (K, M) in dependency order: whenever x is a codimension-1 face of
// y and they sit in different units, x's unit comes first. nullopt iff the
// dependency digraph has a cycle, which is exactly a gradient cycle of M.
std::optional<BuildOrder> linear_extension(const SimplicialComplex& K,
                                           const Matching& M);
// random linear extension (uniform tie-breaking among ready units)
std::optional<BuildOrder> linear_extension(const SimplicialComplex& K,
                                           const Matching& M,
                                           std::mt19937_64& rng);

bool is_acyclic(const SimplicialComplex& K, const Matching& M);

} // namespace morsecat
