#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "stairgrid/mesh.hpp"

using namespace stairgrid;

namespace {

std::vector<Perm> all_perms(int n) {
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
    std::vector<Perm> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

} // namespace

TEST_CASE("parsing and normalization of shadings") {
    const MeshPattern mp = MeshPattern::parse(Perm::parse("231"), "1,2;0,0;1,2");
    CHECK(mp.shading() ==
          std::vector<std::pair<int, int>>{{0, 0}, {1, 2}});
    CHECK(MeshPattern::parse(Perm::parse("21"), "").shading().empty());
    CHECK_THROWS_AS(MeshPattern::parse(Perm::parse("21"), "5,0"), invalid_input);
    CHECK_THROWS_AS(MeshPattern::parse(Perm::parse("21"), "1;2"), invalid_input);
}

TEST_CASE("empty shading reduces to classical containment") {
    const std::vector<Perm> pats = all_perms(3);
    for (const Perm& sigma : all_perms(5))
        for (const Perm& pat : pats) {
            const MeshPattern mp(pat, {});
            CHECK(contains_mesh(sigma, mp) == sigma.contains(pat));
        }
}

TEST_CASE("pinned containments") {
    // The shaded box (1,2) of 231 sits between the first two occurrence
    // points horizontally, above the second-largest value; 35142 still has
    // an occurrence with that region empty.
    CHECK(contains_mesh(Perm::parse("35142"),
                        MeshPattern::parse(Perm::parse("231"), "1,2")));
    // 1324's only occurrence of 132 has its top-right region occupied by 4.
    CHECK(contains_mesh(Perm::parse("1324"),
                        MeshPattern::parse(Perm::parse("132"), "")));
    CHECK_FALSE(contains_mesh(Perm::parse("1324"),
                              MeshPattern::parse(Perm::parse("132"), "3,3")));
    // A same-size host: the occurrence uses every point, so any shading works.
    CHECK(contains_mesh(Perm::parse("231"),
                        MeshPattern::parse(Perm::parse("231"), "0,0;3,3;1,1")));
}

TEST_CASE("adding shaded boxes never creates containment") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> box(0, 3);
    const std::vector<Perm> hosts = all_perms(6);
    std::uniform_int_distribution<size_t> pick(0, hosts.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Perm& sigma = hosts[pick(rng)];
        std::vector<std::pair<int, int>> small, big;
        for (int b = 0; b < 3; ++b) {
            const std::pair<int, int> s{box(rng), box(rng)};
            big.push_back(s);
            if (b < 2) small.push_back(s);
        }
        const MeshPattern narrow(Perm::parse("231"), big);
        const MeshPattern wide(Perm::parse("231"), small);
        if (contains_mesh(sigma, narrow)) CHECK(contains_mesh(sigma, wide));
    }
}

TEST_CASE("fully shaded monotone patterns pin exact structure") {
    // 21 with every box shaded: an occurrence must be the whole permutation.
    const MeshPattern all_shaded = MeshPattern::parse(
        Perm::parse("21"), "0,0;0,1;0,2;1,0;1,1;1,2;2,0;2,1;2,2");
    CHECK(contains_mesh(Perm::parse("21"), all_shaded));
    CHECK_FALSE(contains_mesh(Perm::parse("321"), all_shaded));
    CHECK_FALSE(contains_mesh(Perm::parse("213"), all_shaded));
}
