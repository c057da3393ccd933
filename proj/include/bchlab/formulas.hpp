#pragma once

#include "bchlab/analysis.hpp"

namespace bchlab {
/// Closed forms for the dimension, coset-leader and weight-distribution results.
/// Everything here is pure integer arithmetic: valid far beyond enumeration
/// budgets, with preconditions enforced as errors (never silent clamping).
namespace formulas {

/// n = (q^m - 1)/2.
Int half_length(std::uint64_t q, unsigned m);

struct Lemma7Result {
    Int k;
    Int dLower;  ///< delta + 1 when q | (delta - (q+1)/2), else delta
};
/// Valid for 2 <= delta <= q^(m/2) + 1 (even m) or (q^((m+1)/2) + 1)/2 (odd m).
Lemma7Result dim_lemma7(std::uint64_t q, unsigned m, const Int& delta);

/// Designed distances realized by the four dimension-formula families.
Int lemma8_delta(std::uint64_t q, unsigned m, std::uint64_t a);    ///< ceil((a(q^m-1)/(q-1) + 1)/2)
Int lemma10_delta(std::uint64_t q, unsigned m, std::uint64_t a);   ///< ceil(a q^(m-1) / 2)
Int lemma11_delta(std::uint64_t q, unsigned m, std::uint64_t a, std::uint64_t b);
Int lemma13_delta(std::uint64_t q, unsigned m, std::uint64_t a, std::uint64_t b);
Int lemma14_delta(std::uint64_t q, unsigned m, std::uint64_t b);

/// Guards: 1 <= a < (q-1)/2, q > 3, m > 2.
Int dim_lemma8(std::uint64_t q, unsigned m, std::uint64_t a);
Int dim_lemma10(std::uint64_t q, unsigned m, std::uint64_t a);
/// Guards: 2 | m, m > 2, a >= 0, b >= 0, 1 <= a+b <= q-1, ceil((q-a-2)/2) >= 1.
Int dim_lemma11(std::uint64_t q, unsigned m, std::uint64_t a, std::uint64_t b);
/// As lemma 11 plus b >= 1.
Int dim_lemma13(std::uint64_t q, unsigned m, std::uint64_t a, std::uint64_t b);
/// Lemma 11 at a = 0, for 1 <= b <= q-1.
Int dim_lemma14(std::uint64_t q, unsigned m, std::uint64_t b);

struct LeaderValue {
    Int value;
    std::uint32_t orbitSize = 0;
};

/// i-th largest odd coset leader modulo 2n, i = 1..3 for every m, and the
/// extended index ranges by m mod 3 (i <= 7 / 10 / 6 on the stated m floors).
/// delta_3' requires q^m >= 25.
LeaderValue delta_prime_family(std::uint64_t q, unsigned m, unsigned i);

/// dim C_(n,-1,(delta_i'+1)/2,0): i*m, except (i - 2/3)*m when 3 | m.
Int dim_from_leader_index(std::uint64_t q, unsigned m, unsigned i);

/// (delta_1, delta_2): the two largest coset leaders modulo n, with orbit sizes.
std::pair<LeaderValue, LeaderValue> delta_family(std::uint64_t q, unsigned m);

enum class DistributionTable { T1, T2, T3, T4 };

struct TableResult {
    WeightEnumerator enumerator;  ///< closed-form extended-code distribution
    ParamClaim extendedClaim;     ///< [n+1, k, delta_i + 1]
    ParamClaim dualClaim;         ///< the matching theorem's dual parameters
};
/// Tables as printed; rows with equal weights accumulate. T1/T4 need even m,
/// T2/T3 odd m; T4 excludes (3,2) where delta_2 < 2 leaves no realized code.
TableResult table_weight_distribution(std::uint64_t q, unsigned m, DistributionTable table);

/// k = n - m*ceil((2 delta + 2b - 3)(q-1)/(2q)) under the shift-absorption
/// conditions 1+2(b+delta-2) <= range cap and 1+2b <= floor((b+delta-2)/q).
Int theorem23_dim(std::uint64_t q, unsigned m, std::uint64_t delta, std::uint64_t b);

struct Theorem24Bounds {
    Int dLower;  ///< = delta (the BCH bound)
    Int dUpper;
    Int delta;   ///< ceil((k delta_a - 1)/2) odd k, k delta_a / 2 even k
};
Theorem24Bounds theorem24_bounds(std::uint64_t q, std::uint64_t n, std::uint64_t kParam, std::uint64_t delta_a);

/// delta_1 - 1 < delta <= n - 1 (Theorems 33/34).
bool dually_bch_condition(std::uint64_t q, unsigned m, const Int& delta);

}  // namespace formulas
}  // namespace bchlab
