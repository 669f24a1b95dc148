#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qhilb/dynkin.hpp"
#include "qhilb/errors.hpp"
#include "support.hpp"

using namespace qhilb;

TEST_CASE("classification of the sample quivers") {
    CHECK(classify(test::data_quiver("a1")).to_string() == "Dynkin A1");
    CHECK(classify(test::data_quiver("a2")).to_string() == "Dynkin A2");
    CHECK(classify(test::data_quiver("a3")).to_string() == "Dynkin A3");
    CHECK(classify(test::data_quiver("d4")).to_string() == "Dynkin D4");
    CHECK(classify(test::data_quiver("kronecker")).verdict == Verdict::ExtendedDynkin);
    CHECK(classify(test::data_quiver("triangle")).verdict == Verdict::ExtendedDynkin);
    CHECK(classify(test::data_quiver("kronecker3")).verdict == Verdict::Wild);
}

TEST_CASE("Tits form values") {
    const auto kr = test::data_quiver("kronecker");
    // (d1 - d2)^2: radical spanned by (1,1)
    for (long long a = 0; a < 4; ++a)
        for (long long b = 0; b < 4; ++b) {
            const std::vector<long long> d{a, b};
            CHECK(tits_form(kr, d) == (a - b) * (a - b));
        }
    const std::vector<long long> ones{1, 1};
    CHECK(tits_form(test::data_quiver("kronecker3"), ones) == -1);
    const std::vector<long long> wrong{1};
    CHECK_THROWS_AS(tits_form(kr, wrong), SizeMismatch);
}

TEST_CASE("extended Dynkin and wild shapes") {
    // D4-tilde: star with four arms.
    CHECK(classify(Quiver::parse("vertices 5\narrow a 1 5\narrow b 2 5\narrow c 3 5\narrow d 4 5\n"))
              .verdict == Verdict::ExtendedDynkin);
    // Star with five arms is wild.
    CHECK(classify(Quiver::parse(
                       "vertices 6\narrow a 1 6\narrow b 2 6\narrow c 3 6\narrow d 4 6\narrow e 5 6\n"))
              .verdict == Verdict::Wild);
    // E6-tilde: arms of length 2, 2, 2.
    CHECK(classify(Quiver::parse("vertices 7\narrow a 1 2\narrow b 2 7\narrow c 3 4\narrow d 4 7\n"
                                 "arrow e 5 6\narrow f 6 7\n"))
              .verdict == Verdict::ExtendedDynkin);
    // E8-tilde: arms of length 1, 2, 5 around vertex 1; one more vertex is wild.
    std::string t236 = "vertices 9\n";
    t236 += "arrow a 2 1\narrow b 3 1\narrow c 4 3\n";
    t236 += "arrow d 5 1\narrow e 6 5\narrow f 7 6\narrow g 8 7\narrow h 9 8\n";
    CHECK(classify(Quiver::parse(t236)).verdict == Verdict::ExtendedDynkin);
    std::string t237 = t236;
    t237.replace(0, 10, "vertices 10");
    t237 += "arrow i 10 9\n";
    CHECK(classify(Quiver::parse(t237)).verdict == Verdict::Wild);
}

TEST_CASE("classification is invariant under reorientation and relabeling") {
    std::mt19937 rng(7);
    for (const auto& t : standard_dynkin_types()) {
        const auto base = canonical_quiver(t);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::size_t> perm(t.rank);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto q = test::relabeled(base, perm);
            for (std::size_t k = 0; k < q.arrows().size(); ++k)
                if (rng() % 2) q = q.with_reversed(k);
            const auto cls = classify(q);
            REQUIRE(cls.is_dynkin());
            CHECK(*cls.type == t);
            // The relabeling is a graph isomorphism onto the stored diagram.
            const auto c = q.adjacency();
            const auto cd = base.adjacency();
            for (std::size_t i = 0; i < t.rank; ++i)
                for (std::size_t j = 0; j < t.rank; ++j)
                    CHECK(c(i, j) == cd(cls.relabeling[i], cls.relabeling[j]));
        }
    }
}

TEST_CASE("root data examples") {
    const auto a2 = root_data(test::data_quiver("a2"));
    CHECK(a2.positive_roots == std::vector<std::vector<long long>>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(a2.coxeter_number == 3);
    const auto a1 = root_data(test::data_quiver("a1"));
    CHECK(a1.positive_roots == std::vector<std::vector<long long>>{{1}});
    CHECK(a1.coxeter_number == 2);
    const auto d4 = root_data(test::data_quiver("d4"));
    CHECK(d4.positive_roots.size() == 12);
    CHECK(d4.coxeter_number == 6);
    CHECK_THROWS_AS(root_data(test::data_quiver("kronecker")), NotDynkin);
}

TEST_CASE("root closure equals the exhaustive bounded scan for every standard type") {
    for (const auto& t : standard_dynkin_types()) {
        CAPTURE(t.name());
        const auto q = canonical_quiver(t);
        const auto rd = root_data(q);
        const auto brute = test::exhaustive_roots(q);
        CHECK(rd.positive_roots == brute);
        CHECK(rd.coxeter_number * t.rank == 2 * brute.size());
        std::size_t expected_h = 0;
        switch (t.family) {
            case DynkinFamily::A: expected_h = t.rank + 1; break;
            case DynkinFamily::D: expected_h = 2 * t.rank - 2; break;
            case DynkinFamily::E: expected_h = t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30; break;
        }
        CHECK(rd.coxeter_number == expected_h);
    }
}

TEST_CASE("root closure handles ranks beyond the scan range") {
    const auto a12 = canonical_quiver({DynkinFamily::A, 12});
    const auto rd = root_data(a12);
    CHECK(rd.positive_roots.size() == 12 * 13 / 2);
    CHECK(rd.coxeter_number == 13);
}

TEST_CASE("Nakayama permutation examples") {
    CHECK(nakayama_matrix(test::data_quiver("a2")).matrix == IntMatrix{{0, 1}, {1, 0}});
    CHECK(nakayama_matrix(test::data_quiver("d4")).matrix.is_identity());
    CHECK(nakayama_matrix(test::data_quiver("a3")).matrix ==
          IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(nakayama_matrix(test::data_quiver("a1")).matrix.is_identity());
    CHECK_THROWS_AS(nakayama_matrix(test::data_quiver("triangle")), NotDynkin);

    // D5 with the fork tips at labels 1 and 3.
    const auto d5 = Quiver::parse("vertices 5\narrow a 1 2\narrow b 3 2\narrow c 2 4\narrow d 4 5\n");
    const auto nak = nakayama_matrix(d5);
    CHECK(nak.permutation == std::vector<std::size_t>{2, 1, 0, 3, 4});
}

TEST_CASE("P^2 = I and PC = CP for every standard type, any labeling") {
    std::mt19937 rng(11);
    for (const auto& t : standard_dynkin_types()) {
        CAPTURE(t.name());
        std::vector<std::size_t> perm(t.rank);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (const auto& q : {canonical_quiver(t), test::relabeled(canonical_quiver(t), perm)}) {
            const auto p = nakayama_matrix(q).matrix;
            const auto c = q.adjacency();
            CHECK((p * p).is_identity());
            CHECK(p * c == c * p);
        }
    }
}

TEST_CASE("sincerity and regularity") {
    const auto a2 = test::data_quiver("a2");
    const auto rd = root_data(a2);
    const auto q = Field::rationals();
    const auto f2 = Field::prime(2);
    CHECK(is_regular(a2, test::weights(q, {1, 1}), rd));
    CHECK_FALSE(is_regular(a2, test::weights(f2, {1, 1}), rd));
    CHECK_FALSE(is_regular(a2, test::weights(q, {1, 0}), rd));
    CHECK_FALSE(is_sincere(a2, test::weights(q, {1, 0})));
    CHECK(is_regular(a2, test::weights(Field::prime(5), {1, 2}), rd));
    CHECK_FALSE(is_regular(a2, test::weights(q, {1, -1}), rd));
    CHECK_THROWS_AS(is_regular(test::data_quiver("kronecker"), test::weights(q, {1, 1}), rd), NotDynkin);
    CHECK_THROWS_AS(is_sincere(a2, test::weights(q, {1, 1, 1})), SizeMismatch);
}

TEST_CASE("regular implies sincere on every standard type") {
    std::mt19937 rng(3);
    const auto f7 = Field::prime(7);
    for (const auto& t : standard_dynkin_types()) {
        const auto q = canonical_quiver(t);
        const auto rd = root_data(q);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long long> v(t.rank);
            for (auto& x : v) x = static_cast<long long>(rng() % 7);
            const auto w = test::weights(f7, v);
            if (is_regular(q, w, rd)) CHECK(is_sincere(q, w));
        }
    }
}
