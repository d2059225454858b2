#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "stairgrid/perm.hpp"

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

TEST_CASE("parse, str and standardize") {
    CHECK(Perm::parse("2314").values() == std::vector<int>{2, 3, 1, 4});
    CHECK(Perm::parse("2314").str() == "2314");
    const Perm big = Perm::parse("10.2.1.9.3.4.5.6.7.8");
    CHECK(big.size() == 10);
    CHECK(big.at(1) == 10);
    CHECK(big.str() == "10.2.1.9.3.4.5.6.7.8");
    CHECK(Perm::standardize({9, 5, 3, 8}) == Perm::parse("4213"));
    CHECK(Perm::standardize({}) == Perm());
    CHECK_THROWS_AS(Perm::parse("1231"), invalid_input);
    CHECK_THROWS_AS(Perm(std::vector<int>{2, 3}), invalid_input);
}

TEST_CASE("position_of and left-to-right minima") {
    const Perm p = Perm::parse("659817432");
    CHECK(p.position_of(6) == 1);
    CHECK(p.position_of(1) == 5);
    CHECK(p.left_to_right_minima() == std::vector<int>{1, 2, 5});
}

TEST_CASE("containment on pinned examples") {
    CHECK(Perm::parse("2413").contains(Perm::parse("231")));
    CHECK(Perm::parse("2413").avoids(Perm::parse("321")));
    CHECK(Perm::parse("35142").contains(Perm::parse("231")));
    CHECK(Perm::parse("123456").avoids(Perm::parse("21")));
    CHECK(Perm::parse("1").contains(Perm::parse("1")));
    CHECK(Perm().avoids(Perm::parse("1")));
    // Every permutation contains the empty pattern.
    CHECK(Perm::parse("21").contains(Perm()));
}

TEST_CASE("contains equals an occurrence pinned at some max position") {
    for (const Perm& p : all_perms(5))
        for (const Perm& pat : all_perms(3)) {
            bool any = false;
            for (int pos = 1; pos <= p.size() && !any; ++pos)
                any = p.contains_with_max_at(pat, pos);
            CHECK(any == p.contains(pat));
        }
}

TEST_CASE("symmetries act bijectively and compose as expected") {
    const std::vector<Perm> s4 = all_perms(4);
    for (int sym = 0; sym < kNumSymmetries; ++sym) {
        std::set<Perm> image;
        for (const Perm& p : s4) image.insert(apply_symmetry(sym, p));
        CHECK(image.size() == s4.size());
    }
    const Perm p = Perm::parse("2513647");
    CHECK(apply_symmetry(1, p) == p.reversed());
    CHECK(apply_symmetry(2, p) == p.complemented());
    CHECK(apply_symmetry(4, p) == p.inverted());
    CHECK(p.reversed().reversed() == p);
    CHECK(p.complemented().complemented() == p);
    CHECK(p.inverted().inverted() == p);
    // Symmetries preserve containment.
    const Perm pat = Perm::parse("231");
    for (int sym = 0; sym < kNumSymmetries; ++sym)
        CHECK(apply_symmetry(sym, p).contains(apply_symmetry(sym, pat)) ==
              p.contains(pat));
}

TEST_CASE("sums, components and indecomposability") {
    CHECK(direct_sum(Perm::parse("21"), Perm::parse("1")) == Perm::parse("213"));
    CHECK(skew_sum(Perm::parse("1"), Perm::parse("12")) == Perm::parse("312"));
    for (const Perm& p : all_perms(5)) {
        Perm sum_back, skew_back;
        for (const Perm& c : sum_components(p)) sum_back = direct_sum(sum_back, c);
        for (const Perm& c : skew_components(p)) skew_back = skew_sum(skew_back, c);
        CHECK(sum_back == p);
        CHECK(skew_back == p);
        CHECK(sum_indecomposable(p) == (sum_components(p).size() == 1));
        CHECK(skew_indecomposable(p) == (skew_components(p).size() == 1));
    }
    CHECK(sum_indecomposable(Perm::parse("231")));
    CHECK_FALSE(sum_indecomposable(Perm::parse("213")));
}

TEST_CASE("bstrip removes exactly a trailing maximum") {
    CHECK(bstrip(Perm::parse("1")) == Perm());
    CHECK(bstrip(Perm::parse("213")) == Perm::parse("21"));
    CHECK(bstrip(Perm::parse("231")) == Perm::parse("231"));
    CHECK(bstrip(Perm::parse("2413")) == Perm::parse("2413"));
    CHECK(bstrip(Perm::parse("3124")) == Perm::parse("312"));
}

TEST_CASE("basis construction strips redundant patterns") {
    const Basis b({Perm::parse("123"), Perm::parse("2314")});
    CHECK(b.patterns() == std::vector<Perm>{Perm::parse("123")});
    CHECK(b.stripped() == std::vector<Perm>{Perm::parse("2314")});
    CHECK(Basis::parse("2314,3124").str() == "2314,3124");
    CHECK_THROWS_AS(Basis(std::vector<Perm>{}), invalid_input);
    CHECK_THROWS_AS(Basis::parse(""), invalid_input);
}

TEST_CASE("basis canonical is the least symmetry image") {
    const Basis b = Basis::parse("3142");
    CHECK(b.canonical() == Basis::parse("2413"));
    // {2413,3142} is fixed by every symmetry.
    const Basis fixed = Basis::parse("2413,3142");
    CHECK(fixed.symmetry_orbit().size() == 1);
    CHECK(fixed.canonical() == fixed);
}

TEST_CASE("oracle counts: Catalan, Schroeder, one excluded pattern") {
    const std::vector<long long> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    const std::vector<long long> schroeder{1, 1, 2, 6, 22, 90, 394, 1806, 8558};
    const auto av123 = enumerate_class_levels(Basis::parse("123"), 8);
    const auto av_down = enumerate_class_levels(Basis::parse("2413,3142"), 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(static_cast<long long>(av123[static_cast<size_t>(n)].size()) ==
              catalan[static_cast<size_t>(n)]);
        CHECK(static_cast<long long>(av_down[static_cast<size_t>(n)].size()) ==
              schroeder[static_cast<size_t>(n)]);
    }
    CHECK(enumerate_class(Basis::parse("4321"), 4).size() == 23);
    CHECK(enumerate_class(Basis::parse("21"), 5) ==
          std::vector<Perm>{Perm::parse("12345")});
}

TEST_CASE("oracle levels agree with single-level calls and are sorted") {
    const Basis b = Basis::parse("132");
    const auto levels = enumerate_class_levels(b, 6);
    for (int n = 0; n <= 6; ++n) {
        const auto direct = enumerate_class(b, n);
        CHECK(levels[static_cast<size_t>(n)] == direct);
        CHECK(std::is_sorted(direct.begin(), direct.end()));
        for (const Perm& p : direct) CHECK(b.avoided_by(p));
    }
    // Every size-6 member extends a size-5 member (delete the maximum).
    const auto& l5 = levels[5];
    for (const Perm& p : levels[6]) {
        std::vector<int> word;
        for (int v : p.values())
            if (v != 6) word.push_back(v);
        CHECK(std::binary_search(l5.begin(), l5.end(), Perm::standardize(word)));
    }
}

TEST_CASE("class counts are symmetry-invariant") {
    const Basis b = Basis::parse("2314,3124");
    for (int sym = 0; sym < kNumSymmetries; ++sym) {
        const Basis img = b.image(sym);
        for (int n = 0; n <= 6; ++n)
            CHECK(enumerate_class(img, n).size() == enumerate_class(b, n).size());
    }
}
