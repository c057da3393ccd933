#include "bchlab/cyclotomic.hpp"

#include <omp.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bchlab {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

void check_coprime(std::uint64_t N, std::uint64_t q) {
    require(N >= 1, ErrorKind::OutOfRange, "modulus must be positive");
    require(gcd_u64(N, q) == 1, ErrorKind::NotCoprime, "gcd(N, q) must be 1");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t N) {
    return static_cast<std::uint64_t>((__int128(a) * b) % N);
}

}  // namespace

Coset coset(std::uint64_t N, std::uint64_t q, std::uint64_t t) {
    check_coprime(N, q);
    require(t < N, ErrorKind::OutOfRange, "t must satisfy 0 <= t < N");
    Coset c;
    c.modulus = N;
    c.q = q;
    std::uint64_t x = t;
    do {
        c.members.push_back(x);
        x = mulmod(x, q, N);
    } while (x != t);
    std::sort(c.members.begin(), c.members.end());
    c.leader = c.members.front();
    return c;
}

std::uint64_t coset_leader(std::uint64_t N, std::uint64_t q, std::uint64_t t) {
    check_coprime(N, q);
    require(t < N, ErrorKind::OutOfRange, "t must satisfy 0 <= t < N");
    std::uint64_t best = t, x = mulmod(t, q, N);
    while (x != t) {
        best = std::min(best, x);
        x = mulmod(x, q, N);
    }
    return best;
}

std::size_t coset_size(std::uint64_t N, std::uint64_t q, std::uint64_t t) {
    check_coprime(N, q);
    std::size_t n = 1;
    std::uint64_t x = mulmod(t % N, q, N);
    while (x != t % N) {
        ++n;
        x = mulmod(x, q, N);
    }
    return n;
}

LeaderTable compute_leader_table(std::uint64_t N, std::uint64_t q, const Budget& budget) {
    check_coprime(N, q);
    require(N <= budget.enumeration, ErrorKind::BudgetExceeded, "modulus exceeds the enumeration budget");
    LeaderTable t;
    t.modulus = N;
    t.q = q;
    std::vector<bool> seen(N, false);
    for (std::uint64_t i = 0; i < N; ++i) {
        if (seen[i]) continue;
        std::uint32_t size = 0;
        std::uint64_t x = i;
        do {
            seen[x] = true;
            ++size;
            x = mulmod(x, q, N);
        } while (x != i);
        t.leaders.push_back(i);
        t.sizes.push_back(size);
    }
    return t;
}

LeaderTable compute_leader_table_parallel(std::uint64_t N, std::uint64_t q, const Budget& budget) {
    check_coprime(N, q);
    require(N <= budget.enumeration, ErrorKind::BudgetExceeded, "modulus exceeds the enumeration budget");
    std::vector<std::uint8_t> isLeader(N, 0);
    std::vector<std::uint32_t> orbit(N, 0);
#pragma omp parallel for schedule(dynamic, 4096)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(N); ++i) {
        const std::uint64_t t0 = static_cast<std::uint64_t>(i);
        std::uint64_t x = mulmod(t0, q, N);
        std::uint32_t size = 1;
        bool leader = true;
        while (x != t0) {
            if (x < t0) {
                leader = false;
                break;
            }
            ++size;
            x = mulmod(x, q, N);
        }
        if (leader) {
            isLeader[i] = 1;
            orbit[i] = size;
        }
    }
    LeaderTable t;
    t.modulus = N;
    t.q = q;
    for (std::uint64_t i = 0; i < N; ++i) {
        if (isLeader[i]) {
            t.leaders.push_back(i);
            t.sizes.push_back(orbit[i]);
        }
    }
    return t;
}

std::string cache_directory() {
    if (const char* env = std::getenv("BCHLAB_CACHE")) return env;
    return "./cache";
}

std::string leader_table_to_csv(const LeaderTable& table) {
    std::ostringstream out;
    out << "# N=" << table.modulus << ",q=" << table.q << ",version=1\n";
    out << "leader,size\n";
    for (std::size_t i = 0; i < table.leaders.size(); ++i)
        out << table.leaders[i] << "," << table.sizes[i] << "\n";
    return out.str();
}

namespace {

std::optional<LeaderTable> load_cached(const std::string& path, std::uint64_t N, std::uint64_t q) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    std::ostringstream want;
    want << "# N=" << N << ",q=" << q << ",version=1";
    if (line != want.str()) return std::nullopt;
    if (!std::getline(in, line) || line != "leader,size") return std::nullopt;
    LeaderTable t;
    t.modulus = N;
    t.q = q;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos) return std::nullopt;
        t.leaders.push_back(std::stoull(line.substr(0, comma)));
        t.sizes.push_back(static_cast<std::uint32_t>(std::stoul(line.substr(comma + 1))));
    }
    std::uint64_t covered = 0;
    for (std::uint32_t s : t.sizes) covered += s;
    if (covered != N) return std::nullopt;  // damaged cache; recompute
    return t;
}

}  // namespace

LeaderTable leader_table(std::uint64_t N, std::uint64_t q, const Budget& budget,
                         std::optional<std::string> cacheDir) {
    const std::string dir = cacheDir.value_or(cache_directory());
    std::ostringstream name;
    name << dir << "/leaders_N" << N << "_q" << q << ".csv";
    if (auto cached = load_cached(name.str(), N, q)) return *cached;
    LeaderTable t = compute_leader_table(N, q, budget);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
        // write-then-rename; last writer wins and all writers produce identical bytes
        std::ostringstream tmp;
        tmp << name.str() << ".tmp." << ::getpid() << "." << omp_get_thread_num();
        {
            std::ofstream out(tmp.str(), std::ios::trunc);
            if (!out) return t;
            out << leader_table_to_csv(t);
        }
        std::filesystem::rename(tmp.str(), name.str(), ec);
        if (ec) std::filesystem::remove(tmp.str(), ec);
    }
    return t;
}

std::uint64_t ith_largest_leader(const LeaderTable& table, std::uint64_t i) {
    require(i >= 1 && i <= table.leaders.size(), ErrorKind::OutOfRange, "fewer than i leaders");
    return table.leaders[table.leaders.size() - i];
}

std::uint64_t ith_largest_odd_leader(const LeaderTable& table, std::uint64_t i) {
    require(i >= 1, ErrorKind::OutOfRange, "i must be >= 1");
    std::uint64_t seen = 0;
    for (std::size_t j = table.leaders.size(); j-- > 0;) {
        if (table.leaders[j] % 2 == 1 && ++seen == i) return table.leaders[j];
    }
    fail(ErrorKind::OutOfRange, "fewer than i odd leaders");
}

std::uint32_t leader_orbit_size(const LeaderTable& table, std::uint64_t leader) {
    auto it = std::lower_bound(table.leaders.begin(), table.leaders.end(), leader);
    require(it != table.leaders.end() && *it == leader, ErrorKind::OutOfRange, "not a coset leader");
    return table.sizes[static_cast<std::size_t>(it - table.leaders.begin())];
}

bool shift_test_leader(std::uint64_t q, unsigned m, std::uint64_t i) {
    const std::uint64_t N = to_u64(ipow(Int(q), m) - 1, "q^m - 1");
    require(i >= 1 && i <= N - 1, ErrorKind::OutOfRange, "i must be in [1, q^m - 2]");
    std::vector<std::uint64_t> digits(m, 0);
    std::uint64_t t = i;
    for (unsigned j = 0; j < m; ++j) {
        digits[j] = t % q;
        t /= q;
    }
    // j-left-shift of the digit string == multiply by q^j mod q^m - 1
    for (unsigned j = 1; j < m; ++j) {
        std::uint64_t v = 0;
        for (unsigned s = m; s-- > 0;) v = v * q + digits[(s + m - j) % m];
        if (v < i) return false;
    }
    return true;
}

SmallLeaderResult small_leader_predicate(std::uint64_t q, unsigned m, std::uint64_t i) {
    if (m % 2 == 1) {
        require(m >= 3, ErrorKind::OutOfRange, "odd m requires m >= 3");
        Int cap = ipow(Int(q), (m + 1) / 2) - 1;
        require(i >= 1 && Int(i) <= cap, ErrorKind::OutOfRange, "i beyond the stated range");
        return {i % q != 0, static_cast<std::uint32_t>(m)};
    }
    Int cap = 2 * ipow(Int(q), m / 2) - 1;
    require(i >= 1 && Int(i) <= cap, ErrorKind::OutOfRange, "i beyond the stated range");
    const std::uint64_t special = to_u64(ipow(Int(q), m / 2) + 1);
    if (i == special) return {true, static_cast<std::uint32_t>(m / 2)};
    return {i % q != 0, static_cast<std::uint32_t>(m)};
}

std::vector<std::uint64_t> odd_leaders_in_range(std::uint64_t N, std::uint64_t q, std::uint64_t a1,
                                                std::uint64_t a2, const Budget& budget) {
    require(a1 >= 1 && a2 < N, ErrorKind::OutOfRange, "range must satisfy 1 <= a1, a2 < N");
    std::vector<std::uint64_t> out;
    if (a1 > a2) return out;
    LeaderTable t = compute_leader_table(N, q, budget);
    for (std::uint64_t L : t.leaders)
        if (L % 2 == 1 && L >= a1 && L <= a2) out.push_back(L);
    return out;
}

}  // namespace bchlab
