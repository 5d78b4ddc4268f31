#include "morsecat/morse.hpp"

#include "morsecat/errors.hpp"

#include <algorithm>

namespace morsecat {

const Rat& MorseFunction::at(const Simplex& s) const {
    auto it = values_.find(s);
    if (it == values_.end())
        throw DomainError("missing simplex value: " + s.to_string());
    return it->second;
}

ValidationResult validate_dmf(const SimplicialComplex& K,
                              const std::map<Simplex, Rat>& raw) {
    for (const Simplex& s : K.simplices())
        if (!raw.count(s))
            throw DomainError("missing simplex value: " + s.to_string());
    for (const auto& [s, val] : raw)
        if (!K.contains(s))
            throw DomainError("value given for simplex not in complex: " +
                              s.to_string());

    ValidationResult res;
    for (const Simplex& s : K.simplices()) {
        const Rat& fs = raw.at(s);
        std::vector<Simplex> low_cofaces;
        for (const Simplex& t : K.cofacets(s))
            if (raw.at(t) <= fs)
                low_cofaces.push_back(t);
        if (low_cofaces.size() > 1) {
            std::string msg = "M1 violated at " + s.to_string() + ": cofaces";
            for (const Simplex& t : low_cofaces)
                msg += " " + t.to_string();
            msg += " do not exceed its value";
            res.violations.push_back({"M1", s, low_cofaces, msg});
        }
        std::vector<Simplex> high_faces;
        for (const Simplex& r : s.boundary())
            if (K.contains(r) && raw.at(r) >= fs)
                high_faces.push_back(r);
        if (high_faces.size() > 1) {
            std::string msg = "M2 violated at " + s.to_string() + ": faces";
            for (const Simplex& r : high_faces)
                msg += " " + r.to_string();
            msg += " do not fall below its value";
            res.violations.push_back({"M2", s, high_faces, msg});
        }
    }

    std::map<Rat, std::vector<Simplex>> by_value;
    for (const auto& [s, val] : raw)
        by_value[val].push_back(s);
    for (auto& [val, group] : by_value) {
        if (group.size() == 1)
            continue;
        std::sort(group.begin(), group.end());
        bool pair_ok = group.size() == 2 &&
                       group[1].dim() == group[0].dim() + 1 &&
                       group[0].is_face_of(group[1]);
        if (!pair_ok) {
            std::string msg = "value " + rat_str(val) +
                              " repeats outside a matched pair:";
            for (const Simplex& s : group)
                msg += " " + s.to_string();
            res.violations.push_back(
                {"flat", group.front(),
                 std::vector<Simplex>(group.begin() + 1, group.end()), msg});
        }
    }

    if (res.violations.empty())
        res.function = MorseFunction(raw);
    return res;
}

GradientField gradient_field(const SimplicialComplex& K,
                             const MorseFunction& f) {
    std::vector<GradientPair> pairs;
    for (const Simplex& s : K.simplices())
        for (const Simplex& t : K.cofacets(s))
            if (f.at(s) >= f.at(t))
                pairs.push_back({s, t});
    GradientField V = Matching::from_pairs(K, std::move(pairs));
    if (!is_acyclic(K, V))
        throw DomainError("gradient field has a directed cycle");
    return V;
}

std::set<Simplex> forman_critical(const SimplicialComplex& K,
                                  const MorseFunction& f) {
    std::set<Simplex> out;
    for (const Simplex& s : K.simplices()) {
        const Rat& fs = f.at(s);
        bool c1 = std::none_of(
            K.cofacets(s).begin(), K.cofacets(s).end(),
            [&](const Simplex& t) { return f.at(t) <= fs; });
        bool c2 = true;
        for (const Simplex& r : s.boundary())
            if (K.contains(r) && f.at(r) >= fs) {
                c2 = false;
                break;
            }
        if (c1 && c2)
            out.insert(s);
    }
    return out;
}

SimplicialComplex sublevel_complex(const SimplicialComplex& K,
                                   const MorseFunction& f, const Level& c) {
    std::vector<Simplex> gens;
    for (const Simplex& s : K.simplices())
        if (Level::of(f.at(s)) <= c)
            gens.push_back(s);
    return SimplicialComplex::from_facets(gens);
}

std::vector<VertexEdgePair> vertex_edge_pairs(const GradientField& V) {
    std::vector<VertexEdgePair> out;
    for (const auto& [face, cofacet] : V.pairs()) {
        if (face.dim() != 0 || cofacet.dim() != 1)
            continue;
        VertexId v = face.vertices()[0];
        VertexId u = cofacet.vertices()[0] == v ? cofacet.vertices()[1]
                                                : cofacet.vertices()[0];
        out.push_back({v, u, cofacet});
    }
    std::sort(out.begin(), out.end(),
              [](const VertexEdgePair& a, const VertexEdgePair& b) {
                  return std::tie(a.v, a.u) < std::tie(b.v, b.u);
              });
    return out;
}

} // namespace morsecat
