#include "doctest.h"

#include <stdexcept>

#include <random>
#include <set>

#include "partid/bijection.hpp"
#include "partid/enumeration.hpp"

using namespace partid;

TEST_CASE("t-fold conjugate") {
    CHECK(t_fold_conjugate(std::vector<long long>{35, 14, 7}, 7) ==
          std::vector<long long>{21, 14, 7, 7, 7});
    CHECK(t_fold_conjugate(std::vector<long long>{}, 7).empty());
    CHECK(t_fold_conjugate(std::vector<long long>{7}, 7) ==
          std::vector<long long>{7});
    CHECK_THROWS_AS(t_fold_conjugate(std::vector<long long>{8}, 7),
                    std::invalid_argument);
}

TEST_CASE("t-fold conjugate is involutive") {
    std::mt19937 rng(20240817);
    for (long long t : {3, 5, 7}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<int> len_dist(0, 6);
            int len = len_dist(rng);
            std::vector<long long> rows;
            long long prev = 10 * t;
            for (int i = 0; i < len; ++i) {
                std::uniform_int_distribution<long long> part(1, prev / t);
                long long u = part(rng);
                rows.push_back(u * t);
                prev = u * t;
            }
            CHECK(t_fold_conjugate(t_fold_conjugate(rows, t), t) == rows);
        }
    }
}

TEST_CASE("forward map reproduces the worked example with full trace") {
    SemigroupParams p27(2, 7);
    Partition pi({84, 70, 66, 46, 40, 38, 35, 14, 10, 8, 7, 4, 2});
    auto [pi3, tr] = forward_map(pi, p27);

    CHECK(pi3 == Partition({101, 77, 67, 56, 47, 45, 17, 8, 4, 2}));
    CHECK(tr.pi1 == Partition({66, 46, 40, 38, 10, 8, 4, 2}));
    CHECK(tr.pi2 == Partition({84, 70, 35, 14, 7}));
    CHECK(tr.pi5 == Partition({84, 70}));
    CHECK(tr.pi4 == Partition({35, 14, 7}));
    CHECK(tr.pi4_star == std::vector<long long>{21, 14, 7, 7, 7});
    CHECK(tr.pi6 == Partition({87, 60, 47, 45, 17, 8, 4, 2}));
    CHECK(tr.s0 == std::vector<long long>{21, 14, 38, 18, 12, 17, -4, -6, -3, 2});
    CHECK(tr.sf == std::vector<long long>{38, 21, 18, 14, 12, 17, -4, -6, -3, 2});
    CHECK(tr.p == 8);
    CHECK(tr.k == 2);
    CHECK(tr.r == 3);
}

TEST_CASE("inverse map reproduces the worked example") {
    SemigroupParams p27(2, 7);
    Partition pi3({101, 77, 67, 56, 47, 45, 17, 8, 4, 2});
    auto [pi, tr] = inverse_map(pi3, p27);
    CHECK(pi == Partition({84, 70, 66, 46, 40, 38, 35, 14, 10, 8, 7, 4, 2}));
    CHECK(tr.pi5 == Partition({84, 70}));
    CHECK(tr.pi6 == Partition({87, 60, 47, 45, 17, 8, 4, 2}));
    CHECK(tr.pi4_star == std::vector<long long>{21, 14, 7, 7, 7});
    CHECK(tr.pi4 == Partition({35, 14, 7}));
    CHECK(tr.pi1 == Partition({66, 46, 40, 38, 10, 8, 4, 2}));
}

TEST_CASE("partitions with no multiple of t are fixed points") {
    SemigroupParams p27(2, 7);
    Partition pi({46, 40, 38, 10, 8, 4, 2});
    auto [out, tr] = forward_map(pi, p27);
    CHECK(out == pi);
    CHECK(tr.pi2.empty());
    CHECK(inverse_map(pi, p27).first == pi);
}

TEST_CASE("ties in the insertion step: the (6,3) case") {
    SemigroupParams p23(2, 3);
    Partition pi({6, 3});
    auto [out, tr] = forward_map(pi, p23);
    CHECK(out == pi);
    CHECK(tr.p == 0);
    CHECK(tr.k == 2);
    CHECK(tr.s0 == std::vector<long long>{3, 3});
    CHECK(tr.sf == std::vector<long long>{3, 3});
    CHECK(inverse_map(pi, p23).first == pi);
}

TEST_CASE("invalid inputs are rejected") {
    SemigroupParams p27(2, 7);
    CHECK_THROWS_AS(forward_map(Partition({5}), p27), std::invalid_argument);
    CHECK_THROWS_AS(inverse_map(Partition({5}), p27), std::invalid_argument);
}

TEST_CASE("round trips, bijectivity, and class-vector preservation on the grid") {
    for (auto [s, t] : {std::pair<long long, long long>{2, 3}, {2, 5}, {2, 7},
                        {3, 4}, {3, 5}}) {
        SemigroupParams params(s, t);
        for (long long n = 0; n <= 40; ++n) {
            auto c_side = enumerate_family(n, {Family::C_st, t, s});
            auto d_side = enumerate_family(n, {Family::D_st, t, s});
            std::set<Partition> image;
            for (const Partition& pi : c_side) {
                auto [pi3, tr] = forward_map(pi, params);
                CHECK(pi3.weight() == n);
                CHECK(class_vector(pi, params, Side::C) ==
                      class_vector(pi3, params, Side::D));
                CHECK(inverse_map(pi3, params).first == pi);
                image.insert(pi3);
            }
            CHECK(image.size() == c_side.size());  // injectivity
            CHECK(image == std::set<Partition>(d_side.begin(), d_side.end()));
            for (const Partition& pi3 : d_side)
                CHECK(forward_map(inverse_map(pi3, params).first, params).first == pi3);
        }
    }
}

TEST_CASE("step 4 changes differences only by multiples of t") {
    SemigroupParams p27(2, 7);
    for (long long n = 0; n <= 35; ++n)
        for (const Partition& pi : enumerate_family(n, {Family::C_st, 7, 2})) {
            auto [pi3, tr] = forward_map(pi, p27);
            const auto& a = tr.pi1.parts();
            const auto& ap = tr.pi6.parts();
            REQUIRE(a.size() == ap.size());
            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                long long before = a[i] - a[i + 1];
                long long after = ap[i] - ap[i + 1];
                CHECK((after - before) % 7 == 0);
                CHECK(after >= before);
            }
        }
}
