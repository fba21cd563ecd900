#include "doctest.h"

#include <set>

#include "e510/catalog.hpp"

using namespace e510;

TEST_CASE("family triples and parameter validation") {
    CatalogFamily f = catalog_family("1B", 2, 1);
    CHECK(f.mu == Weight(2, 0, 0, 2));
    CHECK(f.weight == Weight(3, 0, 0, 1));
    CHECK(f.degree == 1);
    CHECK(catalog_family("11").mu == Weight(0, 0, 0, 1));
    CHECK(catalog_family("11").weight == Weight(1, 0, 0, 0));
    CHECK(catalog_family("4E", 0, 2).mu == Weight(0, 0, 0, 5));
    CHECK(catalog_family("5CD").weight == Weight(3, 0, 0, 0));
    CHECK_THROWS_AS(catalog_family("9Z"), std::domain_error);
    CHECK_THROWS_AS(catalog_family("7", 1, 0), std::domain_error);
    CHECK_THROWS_AS(catalog_family("4D", 0, 1), std::domain_error);
    CHECK_THROWS_AS(catalog_family("1A", -1, 0), std::domain_error);
    CHECK(family_tags().size() == 13);
    CHECK(family_grid("2CA", {0, 1, 2}, {0, 1, 2}).size() == 1);
    CHECK(family_grid("1C", {0, 1, 2}, {0, 1, 2}).size() == 9);
    CHECK(catalog_family("1A", 1, 2).label() == "1A(m=1,n=2)");
}

TEST_CASE("every family passes on the m,n <= 2 grid") {
    int count = 0;
    for (const std::string& t : family_tags())
        for (const CatalogFamily& f : family_grid(t, {0, 1, 2}, {0, 1, 2})) {
            FamilyCheck c = verify_family(f);
            INFO(f.label() << ": " << c.detail);
            CHECK(c.singular);
            CHECK(c.weight_ok);
            CHECK(c.degree_ok);
            CHECK(c.leading_nonzero);
            ++count;
        }
    CHECK(count == 45);
}

TEST_CASE("heights") {
    CHECK(height(known_vector(catalog_family("11"))) == 9);
    CHECK(height(known_vector(catalog_family("7"))) == 7);
    CHECK(height(known_vector(catalog_family("4E", 0, 1))) == 4);
    CHECK(height(known_vector(catalog_family("2CB", 0, 0))) == 2);
    CHECK(height(known_vector(catalog_family("4D", 2))) == 4);
    CHECK(known_vector(catalog_family("11")).size() == 50);
}

TEST_CASE("known vectors match the first terms of the displays") {
    auto M = verma_module(Weight(0, 0, 0, 1));
    VermaElement w = known_vector(catalog_family("11"));
    VermaElement head = M->parse("- d12 d13 d14 d15 p2 d23 d24 d25 d35 d45 | x5*");
    auto k = head.terms().begin()->first;
    CHECK(w.terms().at(k) == head.terms().at(k));

    auto M0 = verma_module(Weight(0, 0, 0, 0));
    CHECK(known_vector(catalog_family("1A")) == M0->parse("d12 | 1"));
}

TEST_CASE("known vectors agree with the search up to scalar") {
    for (const std::string& t : {"1B", "2CB", "3CBA", "4E", "5CD", "5EA", "7", "11"}) {
        CatalogFamily f = catalog_family(t, 0, 0);
        auto certs = find_singular_vectors(f.mu, f.degree, f.weight);
        INFO(t);
        REQUIRE(certs.size() == 1);
        CHECK(certs[0].kernel_dim == 1);
        CHECK(proportional(certs[0].vectors[0], known_vector(f)));
    }
}

TEST_CASE("a corrupted transcription is rejected") {
    CatalogFamily f = catalog_family("7");
    auto M = verma_module(f.mu);
    VermaElement w = known_vector(f);
    // drop one term
    VermaElement cut(f.mu);
    bool skipped = false;
    for (const auto& [k, c] : w.terms()) {
        if (!skipped) {
            skipped = true;
            continue;
        }
        cut.add_key(k, c);
    }
    CHECK_FALSE(M->is_singular(cut, true).singular);
}

TEST_CASE("named compositions hold up to scalar") {
    auto checks = named_compositions({0, 1, 2});
    CHECK(checks.size() == 10);
    for (const CompositionCheck& c : checks) {
        INFO(c.expected->label());
        CHECK_FALSE(c.zero);
        CHECK(c.matches);
        CHECK_FALSE(c.scalar.is_zero());
    }
    CompositionCheck aa = check_composition({catalog_family("1A", 0, 1), catalog_family("1A", 0, 0)});
    CHECK(aa.zero);
    CHECK_THROWS_AS(check_composition({catalog_family("1A"), catalog_family("1B")}), std::domain_error);
}

TEST_CASE("unnamed composable pairs vanish") {
    auto pairs = composable_pairs({0, 1, 2});
    int named = 0;
    for (const CompositionCheck& c : pairs) {
        INFO(composition_json(c).dump());
        CHECK(c.pass());
        if (c.expected) ++named;
    }
    CHECK(named >= 8);
    nlohmann::json o = origin_sequence_report(pairs);
    CHECK(o["status"] == "unresolved");
    CHECK(o["second_arrow_in_catalog"] == false);
}

TEST_CASE("edge list") {
    nlohmann::json g = edge_list_json({0});
    CHECK(g["edges"].size() == 13);
    std::set<int> ids;
    for (const auto& n : g["nodes"]) ids.insert(n["id"].get<int>());
    CHECK(ids.size() == g["nodes"].size());
}

TEST_CASE("classification sweeps") {
    SweepReport r0 = classification_sweep(0, 4);
    CHECK(r0.pass());
    CHECK(std::set<std::string>(r0.matched.begin(), r0.matched.end()) ==
          std::set<std::string>{"1A(m=0,n=0)", "4D(m=0)"});

    SweepReport r1 = classification_sweep(1, 5);
    CHECK(r1.pass());
    int deg5 = 0;
    for (const SweepCell& c : r1.cells)
        if (c.degree == 5) deg5 += static_cast<int>(c.certificates.size());
    CHECK(deg5 == 1);
    CHECK(std::find(r1.matched.begin(), r1.matched.end(), "5CD") != r1.matched.end());

    SweepReport r2 = classification_sweep(2, 3);
    CHECK(r2.pass());
    std::set<std::string> tags;
    for (const std::string& s : r2.matched) tags.insert(s.substr(0, s.find('(')));
    CHECK(tags == std::set<std::string>{"1A", "1B", "1C", "2BA", "2CB", "2CA", "3CBA"});
    CHECK(sweep_json(r2)["diff"]["unexplained"].empty());
}

TEST_CASE("sweep reports resource errors per cell") {
    SearchOptions o;
    o.dim_cap = 1;
    SweepReport r = classification_sweep(0, 2, o);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.errors.empty());
    CHECK(r.cells.size() == 2);
}
