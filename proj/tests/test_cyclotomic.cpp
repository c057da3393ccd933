#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bchlab/cyclotomic.hpp"

using namespace bchlab;

TEST_CASE("coset orbits") {
    Coset c = coset(26, 3, 17);
    CHECK(c.members == std::vector<std::uint64_t>{17, 23, 25});
    CHECK(c.leader == 17);
    CHECK(c.size() == 3);

    CHECK(coset(26, 3, 0).members == std::vector<std::uint64_t>{0});
    CHECK(coset(13, 3, 5).members == std::vector<std::uint64_t>{2, 5, 6});
    CHECK(coset(13, 3, 5).leader == 2);

    CHECK_THROWS_AS(coset(9, 3, 1), Error);   // gcd != 1
    CHECK_THROWS_AS(coset(13, 3, 13), Error); // t out of range
}

TEST_CASE("coset_leader") {
    CHECK(coset_leader(26, 3, 25) == 17);
    CHECK(coset_leader(26, 3, 0) == 0);
    CHECK(coset_leader(8, 3, 7) == 5);
}

TEST_CASE("leader tables") {
    LeaderTable t = compute_leader_table(13, 3);
    CHECK(t.leaders == std::vector<std::uint64_t>{0, 1, 2, 4, 7});
    CHECK(t.sizes == std::vector<std::uint32_t>{1, 3, 3, 3, 3});

    LeaderTable e = compute_leader_table(8, 3);
    CHECK(e.leaders == std::vector<std::uint64_t>{0, 1, 2, 4, 5});
    CHECK(e.sizes == std::vector<std::uint32_t>{1, 2, 2, 1, 2});

    // N = q - 1: q acts as the identity, every residue is its own leader
    LeaderTable f = compute_leader_table(6, 7);
    CHECK(f.leaders.size() == 6);
    for (std::uint32_t s : f.sizes) CHECK(s == 1);
}

TEST_CASE("leaders partition Z_N") {
    for (auto [N, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {13, 3}, {26, 3}, {40, 3}, {80, 3}, {62, 5}, {124, 5}, {24, 7}, {342, 7}}) {
        LeaderTable t = compute_leader_table(N, q);
        std::uint64_t covered = 0;
        for (std::uint32_t s : t.sizes) covered += s;
        CHECK(covered == N);
    }
}

TEST_CASE("parallel leader scan matches the serial sweep") {
    for (auto [N, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{6560, 3}, {2400, 7}, {15624, 5}}) {
        LeaderTable a = compute_leader_table(N, q);
        LeaderTable b = compute_leader_table_parallel(N, q);
        CHECK(a.leaders == b.leaders);
        CHECK(a.sizes == b.sizes);
    }
}

TEST_CASE("cache round trip produces identical tables and bytes") {
    std::string dir = "/tmp/bchlab-test-cache";
    std::filesystem::remove_all(dir);
    LeaderTable fresh = leader_table(242, 3, {}, dir);
    LeaderTable cached = leader_table(242, 3, {}, dir);
    CHECK(fresh.leaders == cached.leaders);
    CHECK(fresh.sizes == cached.sizes);
    LeaderTable direct = compute_leader_table(242, 3);
    CHECK(fresh.leaders == direct.leaders);
    std::ifstream in(dir + "/leaders_N242_q3.csv");
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == leader_table_to_csv(direct));
    std::filesystem::remove_all(dir);
}

TEST_CASE("damaged cache is ignored") {
    std::string dir = "/tmp/bchlab-test-cache2";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/leaders_N26_q3.csv") << "# N=26,q=3,version=1\nleader,size\n0,1\n";
    LeaderTable t = leader_table(26, 3, {}, dir);  // incomplete file: recomputed
    CHECK(t.leaders.size() > 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("ith largest leaders") {
    LeaderTable t = compute_leader_table(13, 3);
    CHECK(ith_largest_leader(t, 1) == 7);
    CHECK(ith_largest_leader(t, 2) == 4);
    CHECK_THROWS_AS(ith_largest_leader(t, 6), Error);

    LeaderTable e = compute_leader_table(8, 3);
    CHECK(ith_largest_odd_leader(e, 1) == 5);
    LeaderTable f = compute_leader_table(26, 3);
    CHECK(ith_largest_odd_leader(f, 1) == 17);
    CHECK(coset_size(26, 3, 17) == 3);
    CHECK_THROWS_AS(ith_largest_odd_leader(e, 3), Error);
}

TEST_CASE("shift test examples") {
    CHECK(shift_test_leader(3, 3, 17));
    CHECK(shift_test_leader(3, 3, 1));
    CHECK_FALSE(shift_test_leader(3, 3, 9));  // (1,0,0) rotates to 1 < 9
    CHECK_THROWS_AS(shift_test_leader(3, 3, 0), Error);
    CHECK_THROWS_AS(shift_test_leader(3, 3, 26), Error);
}

TEST_CASE("shift test agrees with coset_leader exhaustively") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 4}, {3, 8}, {3, 10}, {5, 4}, {7, 3}}) {
        std::uint64_t N = 1;
        for (unsigned i = 0; i < m; ++i) N *= q;
        N -= 1;
        for (std::uint64_t i = 1; i <= N - 1; ++i)
            CHECK(shift_test_leader(q, m, i) == (coset_leader(N, q, i) == i));
    }
}

TEST_CASE("small leader predicate examples") {
    SmallLeaderResult r = small_leader_predicate(3, 2, 4);  // i = q^(m/2)+1
    CHECK(r.isLeader);
    CHECK(r.orbitSize == 1);
    CHECK_FALSE(small_leader_predicate(3, 3, 3).isLeader);  // q | i
    SmallLeaderResult s = small_leader_predicate(5, 3, 7);
    CHECK(s.isLeader);
    CHECK(s.orbitSize == 3);
    CHECK_THROWS_AS(small_leader_predicate(3, 3, 9), Error);   // beyond q^((m+1)/2)-1 = 8
    CHECK_THROWS_AS(small_leader_predicate(3, 2, 6), Error);   // beyond 2q^(m/2)-1 = 5
    CHECK_THROWS_AS(small_leader_predicate(3, 1, 1), Error);   // odd m needs m >= 3
}

TEST_CASE("small leader predicate agrees with orbits on its full range") {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10},
             {5, 3}, {5, 4}, {5, 5}, {7, 3}, {7, 4}, {9, 3}}) {
        std::uint64_t qm = 1;
        for (unsigned i = 0; i < m; ++i) qm *= q;
        const std::uint64_t N = qm - 1;  // 2n
        std::uint64_t cap = 1;
        if (m % 2 == 1) {
            for (unsigned i = 0; i < (m + 1) / 2; ++i) cap *= q;
            cap -= 1;
        } else {
            for (unsigned i = 0; i < m / 2; ++i) cap *= q;
            cap = 2 * cap - 1;
        }
        for (std::uint64_t i = 1; i <= cap; ++i) {
            SmallLeaderResult r = small_leader_predicate(q, m, i);
            CHECK(r.isLeader == (coset_leader(N, q, i) == i));
            if (r.isLeader) CHECK(r.orbitSize == coset_size(N, q, i));
        }
    }
}

TEST_CASE("odd leaders in range") {
    CHECK(odd_leaders_in_range(8, 3, 1, 7) == std::vector<std::uint64_t>{1, 5});
    CHECK(odd_leaders_in_range(8, 3, 5, 4).empty());  // empty interval
    CHECK(odd_leaders_in_range(26, 3, 1, 25) == std::vector<std::uint64_t>{1, 5, 7, 13, 17});
}
