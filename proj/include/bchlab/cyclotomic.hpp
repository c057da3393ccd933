#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bchlab/bigint.hpp"

namespace bchlab {

/// q-cyclotomic coset of t modulo N: the orbit of t under multiplication by q.
struct Coset {
    std::uint64_t modulus = 0;
    std::uint64_t q = 0;
    std::uint64_t leader = 0;
    std::vector<std::uint64_t> members;  ///< sorted

    std::size_t size() const { return members.size(); }
};

/// All coset leaders modulo N with orbit sizes, ascending by leader.
struct LeaderTable {
    std::uint64_t modulus = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> leaders;
    std::vector<std::uint32_t> sizes;
};

Coset coset(std::uint64_t N, std::uint64_t q, std::uint64_t t);
std::uint64_t coset_leader(std::uint64_t N, std::uint64_t q, std::uint64_t t);
std::size_t coset_size(std::uint64_t N, std::uint64_t q, std::uint64_t t);

/// Linear sweep with a visited bitmap; O(N) time, O(N) bits. Serial reference.
LeaderTable compute_leader_table(std::uint64_t N, std::uint64_t q, const Budget& budget = {});

/// OpenMP kernel: per-residue orbit-minimum test with early exit. Must produce
/// the same table as the serial sweep (compared in tests and the benchmark).
LeaderTable compute_leader_table_parallel(std::uint64_t N, std::uint64_t q, const Budget& budget = {});

/// Cached front door: consults the CSV cache (BCHLAB_CACHE, default ./cache),
/// recomputing and writing on a miss. The cache is advisory; loading must agree
/// with recomputation byte for byte.
LeaderTable leader_table(std::uint64_t N, std::uint64_t q, const Budget& budget = {},
                         std::optional<std::string> cacheDir = std::nullopt);

std::string cache_directory();
std::string leader_table_to_csv(const LeaderTable& table);

std::uint64_t ith_largest_leader(const LeaderTable& table, std::uint64_t i);
std::uint64_t ith_largest_odd_leader(const LeaderTable& table, std::uint64_t i);
std::uint32_t leader_orbit_size(const LeaderTable& table, std::uint64_t leader);

/// Digit-rotation test: i is a coset leader mod q^m - 1 iff every cyclic
/// left shift of its q-adic digit string, read as an integer, is >= i.
bool shift_test_leader(std::uint64_t q, unsigned m, std::uint64_t i);

struct SmallLeaderResult {
    bool isLeader = false;
    std::uint32_t orbitSize = 0;
};

/// Closed-form leader predicate for small i modulo 2n = q^m - 1:
/// i is a leader iff q does not divide i, with orbit size m except m/2 at
/// i = q^(m/2) + 1 for even m. Valid for i <= q^((m+1)/2) - 1 (odd m, m >= 3)
/// or i <= 2q^(m/2) - 1 (even m); OutOfRange beyond that.
SmallLeaderResult small_leader_predicate(std::uint64_t q, unsigned m, std::uint64_t i);

/// Odd coset leaders of Z_N in [a1, a2].
std::vector<std::uint64_t> odd_leaders_in_range(std::uint64_t N, std::uint64_t q, std::uint64_t a1,
                                                std::uint64_t a2, const Budget& budget = {});

}  // namespace bchlab
