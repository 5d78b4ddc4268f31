#pragma once

#include "morsecat/complex.hpp"
#include "morsecat/morse.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fx {

using namespace morsecat;

// P2: path on three vertices
inline SimplicialComplex P2() {
    return SimplicialComplex::from_facets({Simplex({0, 1}), Simplex({1, 2})});
}

inline MorseFunction P2_F() {
    auto res = validate_dmf(P2(), {{Simplex({0}), Rat(0)},
                                   {Simplex({1}), Rat(2)},
                                   {Simplex({0, 1}), Rat(2)},
                                   {Simplex({2}), Rat(3)},
                                   {Simplex({1, 2}), Rat(3)}});
    return *res.function;
}

// BD: boundary of the triangle
inline SimplicialComplex BD() {
    return SimplicialComplex::from_facets(
        {Simplex({0, 1}), Simplex({0, 2}), Simplex({1, 2})});
}

inline MorseFunction BD_F() {
    auto res = validate_dmf(BD(), {{Simplex({0}), Rat(0)},
                                   {Simplex({1}), Rat(1)},
                                   {Simplex({0, 1}), Rat(1)},
                                   {Simplex({2}), Rat(2)},
                                   {Simplex({0, 2}), Rat(2)},
                                   {Simplex({1, 2}), Rat(3)}});
    return *res.function;
}

// D2: full triangle
inline SimplicialComplex D2() {
    return SimplicialComplex::from_facets({Simplex({0, 1, 2})});
}

inline MorseFunction D2_F() {
    auto res = validate_dmf(D2(), {{Simplex({0}), Rat(0)},
                                   {Simplex({1}), Rat(1)},
                                   {Simplex({2}), Rat(2)},
                                   {Simplex({0, 1}), Rat(1)},
                                   {Simplex({0, 2}), Rat(3)},
                                   {Simplex({1, 2}), Rat(2)},
                                   {Simplex({0, 1, 2}), Rat(4)}});
    return *res.function;
}

// two triangles glued along an edge
inline SimplicialComplex DIAMOND() {
    return SimplicialComplex::from_facets(
        {Simplex({0, 1, 2}), Simplex({1, 2, 3})});
}

// isolated vertex, cycle 1-2-3 with pendant edge 1-4, triangle 3-4-5
inline SimplicialComplex EX21() {
    return SimplicialComplex::from_facets(
        {Simplex({0}), Simplex({1, 2}), Simplex({1, 3}), Simplex({1, 4}),
         Simplex({2, 3}), Simplex({3, 4, 5})});
}

// D: octahedron boundary minus the facet {1,2,3}; collapsible, no dominated
// vertex, and its clique complex adds exactly that facet back
inline SimplicialComplex D() {
    return SimplicialComplex::from_facets(
        {Simplex({1, 2, 4}), Simplex({2, 4, 5}), Simplex({2, 3, 5}),
         Simplex({3, 5, 6}), Simplex({1, 3, 6}), Simplex({1, 4, 6}),
         Simplex({4, 5, 6})});
}

// DP: the octahedron boundary itself
inline SimplicialComplex DP() {
    return SimplicialComplex::from_facets(
        {Simplex({1, 2, 3}), Simplex({1, 2, 4}), Simplex({2, 4, 5}),
         Simplex({2, 3, 5}), Simplex({3, 5, 6}), Simplex({1, 3, 6}),
         Simplex({1, 4, 6}), Simplex({4, 5, 6})});
}

inline std::vector<std::pair<std::string, SimplicialComplex>> all_fixtures() {
    return {{"P2", P2()},           {"BD", BD()},   {"D2", D2()},
            {"DIAMOND", DIAMOND()}, {"EX21", EX21()}, {"D", D()},
            {"DP", DP()}};
}

// fixtures small enough for brute-force oracles
inline std::vector<std::pair<std::string, SimplicialComplex>> tiny_fixtures() {
    return {{"P2", P2()}, {"BD", BD()}, {"D2", D2()}, {"DIAMOND", DIAMOND()}};
}

} // namespace fx
