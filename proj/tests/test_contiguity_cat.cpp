#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"

#include "morsecat/contiguity.hpp"

#include <algorithm>
#include <map>

using namespace morsecat;

namespace {
SimplicialComplex edge01() {
    return SimplicialComplex::from_facets({Simplex({0, 1})});
}
} // namespace

TEST_CASE("simplicial map validation") {
    SimplicialComplex BD = fx::BD();
    CHECK_THROWS_AS(SimplicialMap(BD, BD, {{0, 0}, {1, 1}}),
                    DomainError); // misses vertex 2
    CHECK_THROWS_AS(SimplicialMap(BD, BD, {{0, 0}, {1, 1}, {2, 2}, {7, 0}}),
                    DomainError); // defined outside the source
    CHECK_THROWS_AS(SimplicialMap(BD, BD, {{0, 0}, {1, 1}, {2, 9}}),
                    DomainError); // leaves the target

    // a vertex map that breaks a simplex: P2 -> P2 sending the ends of the
    // edge {0,1} onto the non-edge {0,2}
    CHECK_THROWS_WITH(SimplicialMap(fx::P2(), fx::P2(), {{0, 0}, {1, 2}, {2, 2}}),
                      "not a simplicial map: image of {0 1} is no simplex");

    SimplicialMap ok(BD, BD, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(ok.image(Simplex({0, 1})) == Simplex({1, 2}));

    // images deduplicate collapsed vertices
    SimplicialMap squash(edge01(), fx::P2(), {{0, 1}, {1, 1}});
    CHECK(squash.image(Simplex({0, 1})) == Simplex({1}));

    CHECK_THROWS_WITH(SimplicialMap::inclusion(fx::P2(), edge01()),
                      "not a subcomplex: {1 2}");
    SimplicialMap c = SimplicialMap::constant(BD, BD, 2);
    CHECK(c.image(Simplex({0, 1})) == Simplex({2}));
    CHECK_THROWS_AS(SimplicialMap::constant(BD, BD, 9), DomainError);
}

TEST_CASE("contiguity by example") {
    SimplicialComplex BD = fx::BD();
    SimplicialMap id(BD, BD, {{0, 0}, {1, 1}, {2, 2}});
    SimplicialMap rot(BD, BD, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_contiguous(id, id));
    // id and the rotation would need {0,1}∪{1,2} to be a simplex
    CHECK(!is_contiguous(id, rot));

    // inside the triangle the same pair of maps is contiguous
    SimplicialComplex D2 = fx::D2();
    SimplicialMap id2(D2, D2, {{0, 0}, {1, 1}, {2, 2}});
    SimplicialMap rot2(D2, D2, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_contiguous(id2, rot2));

    SimplicialMap incl = SimplicialMap::inclusion(edge01(), BD);
    SimplicialMap c0 = SimplicialMap::constant(edge01(), BD, 0);
    SimplicialMap c2 = SimplicialMap::constant(edge01(), BD, 2);
    CHECK(is_contiguous(incl, c0));  // {0,1}∪{0} = {0,1}
    CHECK(!is_contiguous(incl, c2)); // {0,1}∪{2} is no simplex

    CHECK_THROWS_WITH(is_contiguous(id, incl),
                      "maps have different source or target");
}

TEST_CASE("facet checking equals whole-complex checking") {
    // the library tests facets only; the oracle walks every simplex
    for (const auto& [name, K] : fx::tiny_fixtures()) {
        CAPTURE(name);
        auto maps = oracle::all_maps(K, K);
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = i; j < maps.size(); ++j)
                CHECK(is_contiguous(maps[i], maps[j]) ==
                      oracle::contiguous_all(maps[i], maps[j]));
    }
}

TEST_CASE("contiguity classes against the exhaustive oracle") {
    // every pair of simplicial self-maps of the path and of the circle
    for (const auto& [name, K] : std::vector<std::pair<std::string,
                                                       SimplicialComplex>>{
             {"P2", fx::P2()}, {"BD", fx::BD()}}) {
        CAPTURE(name);
        auto maps = oracle::all_maps(K, K);
        CAPTURE(maps.size());
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = i; j < maps.size(); ++j)
                CHECK(same_contiguity_class(maps[i], maps[j]) ==
                      oracle::same_class(maps[i], maps[j]));
    }
}

TEST_CASE("contiguity paths") {
    SimplicialComplex BD = fx::BD();
    SimplicialMap incl = SimplicialMap::inclusion(edge01(), BD);
    SimplicialMap c0 = SimplicialMap::constant(edge01(), BD, 0);
    auto path = contiguity_path(incl, c0);
    REQUIRE(path.has_value());
    REQUIRE(path->size() >= 2);
    CHECK(path->front() == incl);
    CHECK(path->back() == c0);
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        CHECK(is_contiguous((*path)[i], (*path)[i + 1]));
        // consecutive maps differ in exactly one vertex image
        int moved = 0;
        for (const auto& [v, img] : (*path)[i].vertex_map())
            moved += img != (*path)[i + 1].vertex_map().at(v);
        CHECK(moved == 1);
    }

    // the identity of the circle never reaches a constant map
    SimplicialMap id(BD, BD, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(!contiguity_path(id, SimplicialMap::constant(BD, BD, 0)).has_value());
    CHECK(!same_contiguity_class(id, SimplicialMap::constant(BD, BD, 0)));

    SimplicialMap rot(BD, BD, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(same_contiguity_class(id, rot) == oracle::same_class(id, rot));

    CHECK_THROWS_AS(contiguity_path(incl, c0, 2), BudgetError);
}

TEST_CASE("categorical subcomplexes") {
    SimplicialComplex BD = fx::BD();
    CHECK(is_categorical(edge01(), BD));
    CHECK(is_categorical(star(BD, 1), BD));
    CHECK(!is_categorical(BD, BD)); // the circle cannot squash to a point
    CHECK(is_categorical(SimplicialComplex::from_facets({Simplex({2})}), BD));

    // the chordless cycle {1,2,3} inside the larger complex
    SimplicialComplex cyc = fx::EX21().induced({1, 2, 3});
    CHECK(!is_categorical(cyc, fx::EX21()));

    // a piece spanning two connected components is never categorical
    SimplicialComplex split = SimplicialComplex::from_facets(
        {Simplex({0}), Simplex({1, 2})});
    CHECK(!is_categorical(split, fx::EX21()));

    CHECK_THROWS_WITH(is_categorical(SimplicialComplex(), BD),
                      "categorical test needs a nonempty subcomplex");
    CHECK_THROWS_AS(is_categorical(fx::P2(), edge01()), DomainError);

    // whole-complex case: categorical iff the core is a point
    CHECK(is_categorical(fx::D2(), fx::D2()));
    CHECK(is_categorical(fx::P2(), fx::P2()));
    CHECK(is_categorical(fx::DIAMOND(), fx::DIAMOND()));
    CHECK(!is_categorical(fx::D(), fx::D()));

    // agreement with the oracle over every sub-selection of facets
    for (const auto& [name, K] : fx::tiny_fixtures()) {
        CAPTURE(name);
        const std::vector<Simplex> facets = K.facets();
        for (unsigned mask = 1; mask < (1u << facets.size()); ++mask) {
            std::vector<Simplex> chosen;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if (mask & (1u << i))
                    chosen.push_back(facets[i]);
            SimplicialComplex U = SimplicialComplex::from_facets(chosen);
            CHECK(is_categorical(U, K) == oracle::categorical(U, K));
        }
    }
}

TEST_CASE("exact simplicial LS-category") {
    auto expect = [](const SimplicialComplex& K, int want) {
        ScatResult res = scat_exact(K);
        CHECK(res.value == want);
        // the cover certifies the value
        CHECK(res.cover.blocks.size() == static_cast<std::size_t>(want) + 1);
        std::size_t total = 0;
        for (const auto& block : res.cover.blocks)
            total += block.size();
        CHECK(total == K.facets().size());
        for (const SimplicialComplex& piece : res.cover.pieces)
            CHECK(is_categorical(piece, K));
    };
    expect(fx::P2(), 0);
    expect(fx::D2(), 0);
    expect(fx::DIAMOND(), 0);
    expect(fx::BD(), 1);
    expect(fx::EX21(), 2);
    expect(fx::D(), 1);
    expect(fx::DP(), 1);
}

TEST_CASE("scat equals the brute-force value on tiny complexes") {
    for (const auto& [name, K] : fx::tiny_fixtures()) {
        CAPTURE(name);
        CHECK(scat_exact(K).value == oracle::scat(K));
    }
}

TEST_CASE("scat breadth") {
    // scat 0 iff the core is a point
    for (const auto& [name, K] : fx::all_fixtures()) {
        CAPTURE(name);
        CHECK((scat_exact(K).value == 0) == has_point_core(K));
        // scat is a strong homotopy invariant; the core realizes it
        CHECK(scat_exact(core(K).complex).value == scat_exact(K).value);
    }

    CHECK_THROWS_WITH(scat_exact(SimplicialComplex()),
                      "scat of the empty complex is undefined");

    ContiguityBudget tiny;
    tiny.partitions = 1;
    CHECK_THROWS_AS(scat_exact(fx::EX21(), tiny), BudgetError);
}

TEST_CASE("scat bounds sandwich the exact value") {
    for (const auto& [name, K] : fx::all_fixtures()) {
        CAPTURE(name);
        ScatBounds b = scat_bounds(K);
        int exact = scat_exact(K).value;
        CHECK(b.lower <= exact);
        CHECK(exact <= b.upper);
        // the witness cover really is a cover by stars
        std::size_t total = 0;
        for (const auto& block : b.star_cover.blocks)
            total += block.size();
        CHECK(total == K.facets().size());
        CHECK(b.star_cover.blocks.size() ==
              static_cast<std::size_t>(b.upper) + 1);
        for (const SimplicialComplex& piece : b.star_cover.pieces)
            CHECK(is_categorical(piece, K));
    }
    CHECK(scat_bounds(fx::D2()).upper == 0);
    CHECK(scat_bounds(fx::DP()).upper == 1);
}

TEST_CASE("strong equivalence") {
    for (const auto& [name, K] : fx::all_fixtures()) {
        CAPTURE(name);
        CHECK(strong_equivalent(K, core(K).complex));
        CHECK(strong_equivalent(K, K));
    }
    SimplicialComplex point = SimplicialComplex::from_facets({Simplex({9})});
    CHECK(strong_equivalent(fx::P2(), point));
    CHECK(strong_equivalent(fx::DIAMOND(), fx::D2()));
    CHECK(!strong_equivalent(fx::BD(), point));
    CHECK(!strong_equivalent(fx::BD(), fx::P2()));
    CHECK(!strong_equivalent(fx::D(), fx::DP()));
    // the circle is its own core, as is the hexagon; different vertex counts
    SimplicialComplex hexagon = SimplicialComplex::from_vertex_lists(
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(!strong_equivalent(fx::BD(), hexagon));
}
