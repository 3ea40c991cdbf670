#include <doctest.h>

#include <set>
#include <string>

#include "chemtree/encoding.hpp"
#include "chemtree/enumeration.hpp"
#include "chemtree/errors.hpp"
#include "chemtree/extremal.hpp"

using namespace chemtree;

TEST_SUITE_BEGIN("enumeration");

namespace {

EnumerationRequest request(int order, bool rooted = false, bool eb = false, int max_degree = 4) {
    EnumerationRequest req;
    req.order = order;
    req.rooted = rooted;
    req.extremely_branched_only = eb;
    req.max_degree = max_degree;
    return req;
}

}  // namespace

TEST_CASE("free chemical tree counts") {
    CHECK(enumerate_chemical_trees(request(4)).size() == 2);  // path and star
    CHECK(enumerate_chemical_trees(request(7)).size() == 9);
    CHECK(enumerate_chemical_trees(request(5, false, false, 2)).size() == 1);  // forced path
}

TEST_CASE("pendent-rooted counts match the known isomer census") {
    CHECK(enumerate_pendent_rooted(request(5, true)).size() == 4);
    CHECK(enumerate_pendent_rooted(request(6, true)).size() == 8);
    CHECK(enumerate_pendent_rooted(request(7, true)).size() == 17);
}

TEST_CASE("order preconditions") {
    CHECK_THROWS_AS(enumerate_chemical_trees(request(1)), PreconditionError);
    CHECK_THROWS_AS(enumerate_pendent_rooted(request(2, true)), PreconditionError);
    CHECK_THROWS_AS(enumerate_extremely_branched_free(request(3)), PreconditionError);
    CHECK_THROWS_AS(enumerate_chemical_trees(request(21)), PreconditionError);
    EnumerationRequest bad = request(5);
    bad.max_degree = 1;
    CHECK_THROWS_AS(enumerate_chemical_trees(bad), PreconditionError);
}

TEST_CASE("extremely branched enumeration") {
    auto eb5 = enumerate_extremely_branched_free(request(5, false, true));
    REQUIRE(eb5.size() == 1);
    CHECK(canonical_form(eb5[0]) == "C(C,C,C,C)");

    auto eb6 = enumerate_extremely_branched_free(request(6, false, true));
    CHECK(eb6.size() == 1);

    // The subsequence equals the predicate filter of the full enumeration,
    // free and rooted alike.
    for (int n = 4; n <= 10; ++n) {
        std::set<std::string> filtered;
        for (const ChemicalTree& t : enumerate_chemical_trees(request(n)))
            if (is_extremely_branched(t)) filtered.insert(canonical_form(t));
        std::set<std::string> direct;
        for (const ChemicalTree& t : enumerate_extremely_branched_free(request(n, false, true)))
            direct.insert(canonical_form(t));
        REQUIRE(filtered == direct);

        std::set<std::string> filtered_rooted;
        for (const PendentRootedTree& t : enumerate_pendent_rooted(request(n, true)))
            if (is_extremely_branched(t.tree())) filtered_rooted.insert(canonical_form(t));
        std::set<std::string> direct_rooted;
        for (const PendentRootedTree& t :
             enumerate_extremely_branched_rooted(request(n, true, true)))
            direct_rooted.insert(canonical_form(t));
        REQUIRE(filtered_rooted == direct_rooted);
    }
}

TEST_CASE("rooted extremely branched censuses stay small") {
    const std::pair<int, std::size_t> expected[] = {{9, 4}, {10, 5}, {12, 10}, {13, 12}};
    for (auto [n, count] : expected) {
        CHECK(enumerate_extremely_branched_rooted(request(n, true, true)).size() == count);
    }
}

TEST_CASE("every emitted extremely branched tree obeys the exception rule") {
    for (int n = 4; n <= 11; ++n) {
        for (const ChemicalTree& t : enumerate_extremely_branched_free(request(n, false, true))) {
            int deg2 = 0, deg3 = 0;
            for (int v = 0; v < t.order(); ++v) {
                int d = t.degree(v);
                if (d == 2) ++deg2;
                if (d == 3) ++deg3;
            }
            if (n % 3 == 0) REQUIRE((deg2 == 1 && deg3 == 0));
            if (n % 3 == 1) REQUIRE((deg2 == 0 && deg3 == 1));
            if (n % 3 == 2) REQUIRE((deg2 == 0 && deg3 == 0));
        }
    }
}

TEST_CASE("no two emitted trees share a canonical form and output is sorted") {
    for (int n : {6, 8, 9}) {
        std::vector<std::string> forms;
        for (const ChemicalTree& t : enumerate_chemical_trees(request(n)))
            forms.push_back(canonical_form(t));
        for (std::size_t i = 1; i < forms.size(); ++i) REQUIRE(forms[i - 1] < forms[i]);

        std::vector<std::string> rooted_forms;
        for (const PendentRootedTree& t : enumerate_pendent_rooted(request(n, true)))
            rooted_forms.push_back(canonical_form(t));
        for (std::size_t i = 1; i < rooted_forms.size(); ++i)
            REQUIRE(rooted_forms[i - 1] < rooted_forms[i]);
    }
}

TEST_CASE("degree sum identity holds on every enumerated tree") {
    for (int n = 2; n <= 9; ++n) {
        for (const ChemicalTree& t : enumerate_chemical_trees(request(n))) {
            int sum = 0;
            for (int v = 0; v < t.order(); ++v) sum += t.degree(v);
            REQUIRE(sum == 2 * (n - 1));
        }
    }
}

TEST_CASE("streaming and collected enumerations agree") {
    for (int n : {5, 8}) {
        int streamed = 0;
        for_each_chemical_tree(n, 4, [&](const ChemicalTree&) { ++streamed; });
        CHECK(streamed == static_cast<int>(enumerate_chemical_trees(request(n)).size()));

        int rooted_streamed = 0;
        for_each_pendent_rooted(n, 4, [&](const PendentRootedTree&) { ++rooted_streamed; });
        CHECK(rooted_streamed == static_cast<int>(enumerate_pendent_rooted(request(n, true)).size()));
    }
}

TEST_CASE("rooted enumeration separates inequivalent root orbits") {
    // The four butanol skeletons: one from the path, two from the fork, one
    // from the star.
    std::vector<std::string> forms;
    for (const PendentRootedTree& t : enumerate_pendent_rooted(request(5, true)))
        forms.push_back(canonical_form(t));
    std::set<std::string> unique(forms.begin(), forms.end());
    CHECK(unique.size() == 4);
    CHECK(unique.count("O(C(C,C,C))") == 1);
    CHECK(unique.count("O(C(C(C,C)))") == 1);
}

TEST_CASE("labeled-tree oracle counts") {
    CHECK(prufer_oracle_count(4, 4) == 2);
    CHECK(prufer_oracle_count(6, 4) == 5);
    CHECK(prufer_oracle_count(8, 4) == 18);
    CHECK(prufer_oracle_count(2, 4) == 1);
    CHECK_THROWS_AS(prufer_oracle_count(11, 4), PreconditionError);
    CHECK_THROWS_AS(prufer_oracle_count(1, 4), PreconditionError);
}

TEST_CASE("main enumerator agrees with the oracle up to order 8") {
    for (int delta = 2; delta <= 4; ++delta) {
        for (int n = 2; n <= 8; ++n) {
            long long enumerated =
                static_cast<long long>(enumerate_chemical_trees(request(n, false, false, delta)).size());
            REQUIRE(enumerated == prufer_oracle_count(n, delta));
        }
    }
}

TEST_CASE("enumeration output is deterministic") {
    auto first = enumerate_pendent_rooted(request(8, true));
    auto second = enumerate_pendent_rooted(request(8, true));
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        REQUIRE(canonical_form(first[i]) == canonical_form(second[i]));
}

TEST_SUITE_END();
