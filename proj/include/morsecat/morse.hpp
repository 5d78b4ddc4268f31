#pragma once

#include "morsecat/complex.hpp"
#include "morsecat/level.hpp"
#include "morsecat/matching.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace morsecat {

// Total assignment of exact rational values to the simplices of a complex.
// Construct through validate_dmf to get the discrete Morse guarantees.
class MorseFunction {
public:
    MorseFunction() = default;
    explicit MorseFunction(std::map<Simplex, Rat> values)
        : values_(std::move(values)) {}

    const Rat& at(const Simplex& s) const;
    const std::map<Simplex, Rat>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool operator==(const MorseFunction&) const = default;

private:
    std::map<Simplex, Rat> values_;
};

struct MorseViolation {
    std::string rule; // "M1", "M2" or "flat"
    Simplex simplex;
    std::vector<Simplex> offenders;
    std::string message;
};

struct ValidationResult {
    std::optional<MorseFunction> function; // present iff no violations
    std::vector<MorseViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks M1/M2 at every simplex plus the flatness rule (a value may repeat
// only on one matched face/cofacet pair). Throws on a mapping that is not
// total on K or mentions simplices outside K; rule violations are reported,
// not thrown.
ValidationResult validate_dmf(const SimplicialComplex& K,
                              const std::map<Simplex, Rat>& raw);

using GradientField = Matching;

// V_f = {(sigma, tau) : sigma codim-1 face of tau, f(sigma) >= f(tau)};
// checks that the result is an acyclic matching.
GradientField gradient_field(const SimplicialComplex& K, const MorseFunction& f);

// simplices satisfying C1 and C2 (no low coface, no high face)
std::set<Simplex> forman_critical(const SimplicialComplex& K,
                                  const MorseFunction& f);

// K(c): union of closures of simplices with value <= c
SimplicialComplex sublevel_complex(const SimplicialComplex& K,
                                   const MorseFunction& f, const Level& c);

struct VertexEdgePair {
    VertexId v;    // the matched vertex
    VertexId u;    // other endpoint of the matched edge
    Simplex edge;  // {u, v}
    bool operator==(const VertexEdgePair&) const = default;
};

// all pairs ({v}, uv) of the field, sorted by (v, u)
std::vector<VertexEdgePair> vertex_edge_pairs(const GradientField& V);

} // namespace morsecat
