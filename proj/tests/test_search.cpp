#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "e510/search.hpp"

using namespace e510;

namespace {

bool contains(const std::vector<Weight>& ws, const Weight& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

SearchOptions quick() {
    SearchOptions o;
    o.dim_cap = 0;
    return o;
}

}  // namespace

TEST_CASE("candidate weights") {
    CHECK(contains(candidate_weights(Weight(0, 0, 0, 0), 1), Weight(0, 1, 0, 0)));
    CHECK(contains(candidate_weights(Weight(0, 0, 0, 1), 11), Weight(1, 0, 0, 0)));
    CHECK(candidate_weights(Weight(0, 0, 0, 0), 0) == std::vector<Weight>{Weight(0, 0, 0, 0)});
    for (const Weight& w : candidate_weights(Weight(1, 0, 0, 1), 3)) CHECK(w.dominant());
    CHECK_THROWS_AS(candidate_weights(Weight(-1, 0, 0, 0), 1), std::domain_error);
}

TEST_CASE("degree one in M(0,0,0,0)") {
    auto certs = find_singular_vectors(Weight(0, 0, 0, 0), 1, std::nullopt, quick());
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].weight == Weight(0, 1, 0, 0));
    CHECK(certs[0].kernel_dim == 1);
    CHECK(certs[0].checked_full_g1);
    auto M = verma_module(Weight(0, 0, 0, 0));
    CHECK(certs[0].vectors[0] == M->parse("d12 | 1"));
    CHECK_THROWS_AS(find_singular_vectors(Weight(0, 0, 0, 0), 0), std::domain_error);
}

TEST_CASE("degree eleven and degree seven") {
    auto c11 = find_singular_vectors(Weight(0, 0, 0, 1), 11, std::nullopt, quick());
    REQUIRE(c11.size() == 1);
    CHECK(c11[0].weight == Weight(1, 0, 0, 0));
    CHECK(c11[0].kernel_dim == 1);
    CHECK(height(c11[0].vectors[0]) == 9);
    CHECK(dual_pair_check(c11[0], quick()));
    auto dual = find_singular_vectors(dual_weight(c11[0].weight), 11, dual_weight(c11[0].mu), quick());
    REQUIRE(dual.size() == 1);
    CHECK(certificate_json(dual[0]) == certificate_json(c11[0]));

    auto c7 = find_singular_vectors(Weight(0, 0, 0, 2), 7, std::nullopt, quick());
    REQUIRE(c7.size() == 1);
    CHECK(c7[0].weight == Weight(2, 0, 0, 0));
    CHECK(height(c7[0].vectors[0]) == 7);
}

TEST_CASE("non-degenerate module has no low-degree singular vectors") {
    for (int d = 1; d <= 4; ++d) CHECK(find_singular_vectors(Weight(0, 1, 1, 0), d, std::nullopt, quick()).empty());
}

TEST_CASE("dual pairs") {
    auto c4 = find_singular_vectors(Weight(0, 0, 0, 0), 4, Weight(3, 0, 0, 0), quick());
    REQUIRE(c4.size() == 1);
    CHECK(dual_pair_check(c4[0], quick()));
    auto e = find_singular_vectors(Weight(0, 0, 0, 3), 4, Weight(0, 0, 0, 0), quick());
    CHECK(e.size() == 1);
    auto c1 = find_singular_vectors(Weight(0, 0, 0, 0), 1, std::nullopt, quick());
    CHECK(dual_pair_check(c1[0], quick()));
    CHECK(find_singular_vectors(Weight(0, 0, 1, 0), 1, Weight(0, 0, 0, 0), quick()).size() == 1);
}

TEST_CASE("dimension cap raises instead of truncating") {
    SearchOptions o;
    o.dim_cap = 50;
    CHECK_THROWS_AS(find_singular_vectors(Weight(0, 0, 0, 1), 11, std::nullopt, o), ResourceError);
}

TEST_CASE("determinism across runs and thread counts") {
    SearchOptions one = quick();
    one.threads = 1;
    SearchOptions four = quick();
    four.threads = 4;
    auto a = find_singular_vectors(Weight(1, 0, 0, 1), 2, std::nullopt, one);
    auto b = find_singular_vectors(Weight(1, 0, 0, 1), 2, std::nullopt, four);
    auto c = find_singular_vectors(Weight(1, 0, 0, 1), 2, std::nullopt, one);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(certificate_json(a[i]).dump() == certificate_json(b[i]).dump());
        CHECK(certificate_json(a[i]).dump() == certificate_json(c[i]).dump());
    }
}

TEST_CASE("checkpoint resume") {
    auto path = (std::filesystem::temp_directory_path() / "e510_ckpt_test.json").string();
    std::filesystem::remove(path);
    SearchOptions o = quick();
    o.checkpoint = path;
    auto first = find_singular_vectors(Weight(0, 0, 0, 2), 7, std::nullopt, o);
    REQUIRE(std::filesystem::exists(path));
    auto resumed = find_singular_vectors(Weight(0, 0, 0, 2), 7, std::nullopt, o);
    REQUIRE(first.size() == resumed.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(certificate_json(first[i]).dump() == certificate_json(resumed[i]).dump());
    {
        std::ofstream bad(path);
        bad << "{not json";
    }
    CHECK_THROWS_AS(find_singular_vectors(Weight(0, 0, 0, 2), 7, std::nullopt, o), ResourceError);
    std::filesystem::remove(path);
}

TEST_CASE("height pruning agrees with the unpruned search up to degree 6") {
    SearchOptions plain = quick();
    SearchOptions pruned = quick();
    pruned.prune_height = true;
    for (Weight mu : {Weight(0, 0, 0, 0), Weight(1, 0, 0, 0), Weight(0, 0, 0, 1), Weight(0, 0, 1, 0), Weight(0, 0, 0, 3),
                      Weight(1, 0, 0, 1), Weight(0, 0, 1, 1), Weight(0, 1, 0, 0)})
        for (int d = 1; d <= 6; ++d) {
            auto a = find_singular_vectors(mu, d, std::nullopt, plain);
            auto b = find_singular_vectors(mu, d, std::nullopt, pruned);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(certificate_json(a[i]) == certificate_json(b[i]));
        }
}

TEST_CASE("certificate JSON round trip") {
    auto certs = find_singular_vectors(Weight(0, 0, 1, 1), 3, std::nullopt, quick());
    REQUIRE(certs.size() == 1);
    auto j = certificate_json(certs[0]);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["kernel_dim"] == 1);
    SingularCertificate back = certificate_from_json(j);
    CHECK(back.vectors == certs[0].vectors);
    CHECK(back.weight == Weight(1, 1, 0, 0));
}
