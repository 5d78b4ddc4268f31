#pragma once

#include "morsecat/budget.hpp"
#include "morsecat/morse.hpp"

#include <optional>
#include <vector>

namespace morsecat {

enum class Exec { Serial, Parallel };

struct StrongOptions {
    // count S^f_v members inside St(v,u) only, instead of over the whole field
    bool restrict_to_st = false;
    // require l_v < m_v instead of l_v <= m_v
    bool strict_l_below_m = false;
    Exec exec = Exec::Parallel;
};

// St(v,u): simplices containing v whose union with u is still a simplex.
// Not closed under faces.
std::vector<Simplex> st_vu(const SimplicialComplex& K, VertexId v, VertexId u);
// checked variant: ({v}, uv) must be a pair of the field
std::vector<Simplex> st_vu(const SimplicialComplex& K, const GradientField& V,
                           VertexId v, VertexId u);

// first value above f(uv) outside St(v,u) or at a Forman-critical simplex
// inside it; +inf when nothing qualifies
Level compute_m_v(const SimplicialComplex& K, const MorseFunction& f,
                  const VertexEdgePair& p);

// largest regular value l in f(St(v,u)), f(uv) <= l <= m_v, such that every
// maximal regular simplex of K(l) ∩ St(v,u) contains u; nullopt if none
std::optional<Rat> compute_l_v(const SimplicialComplex& K,
                               const MorseFunction& f, const VertexEdgePair& p,
                               const StrongOptions& opt = {});

struct StrongInterval {
    VertexEdgePair owner;
    Rat lo; // f(uv)
    Rat hi; // l_v
    std::vector<GradientPair> members; // S^f_v
};

struct PairValues {
    VertexEdgePair pair;
    Level m = Level::pos_inf();
    std::optional<Rat> l;
};

struct CriticalObject {
    enum class Kind { Simplex, Pair };
    Kind kind;
    Simplex simplex;   // set when kind == Simplex
    GradientPair pair; // set when kind == Pair
    Rat value;         // f(simplex), or f(tau) for a pair
    bool operator==(const CriticalObject&) const = default;
};

struct ScritReport {
    std::vector<CriticalObject> objects; // sorted by value
    std::vector<StrongInterval> intervals;
    std::vector<PairValues> pair_values;
    std::set<Simplex> critical_simplices;    // Forman-critical
    std::vector<GradientPair> critical_pairs; // in no strong collapse set
    GradientField field;

    std::size_t count() const { return objects.size(); }
    std::vector<Rat> values() const; // strong critical values, sorted
};

// one interval per vertex/edge pair with defined l_v
std::vector<StrongInterval> strong_collapse_sets(const SimplicialComplex& K,
                                                 const MorseFunction& f,
                                                 const StrongOptions& opt = {});

ScritReport scrit(const SimplicialComplex& K, const MorseFunction& f,
                  const StrongOptions& opt = {});

constexpr long long kDefaultWitnessBudget = 1'000'000;

struct CollapseWitness {
    // (deleted vertex, vertex dominating it at that step), in deletion order
    std::vector<std::pair<VertexId, VertexId>> order;
};

// If [a,b] carries no strong critical value, searches for an elimination
// order of the vertices of K(b) outside K(a), each dominated at its turn.
// nullopt means no order exists (which would falsify the implementation, not
// the underlying theory). Throws DomainError when a > b or when [a,b]
// contains a strong critical value and the sublevels actually differ.
std::optional<CollapseWitness>
check_interval_collapse(const SimplicialComplex& K, const MorseFunction& f,
                        const Level& a, const Level& b,
                        long long budget = kDefaultWitnessBudget,
                        const StrongOptions& opt = {});

struct LsReport {
    int scat_value;
    std::size_t scrit_count;
    bool holds;    // scat_value + 1 <= scrit_count
    bool equality; // scat_value + 1 == scrit_count
};

LsReport verify_ls(const SimplicialComplex& K, const MorseFunction& f,
                   int scat_value, const StrongOptions& opt = {});

} // namespace morsecat
