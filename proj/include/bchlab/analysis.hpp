#pragma once

#include <map>

#include "bchlab/codes.hpp"

namespace bchlab {

/// Exact weight -> count table of a linear code.
struct WeightEnumerator {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::map<std::uint64_t, Int> counts;

    Int total() const;
    /// Smallest nonzero weight with positive count; n+1 when only the zero word exists.
    std::uint64_t min_positive_weight() const;
    /// k with total == q^k; throws NonIntegerResult if total is not a power of q.
    std::uint64_t dimension() const;

    friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) {
        return a.n == b.n && a.q == b.q && a.counts == b.counts;
    }
};

/// A recorded claim about an [n, k, d] code, tagged with its source id.
struct ParamClaim {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    Int dLower = 1;
    Int dUpper = 1;
    std::optional<WeightEnumerator> table;
    std::string provenance;
};

/// Best lower bound from the longest run of consecutive root exponents:
/// consecutive residues mod n for cyclic sets, consecutive s in 1+2s (mod 2n)
/// for negacyclic sets. Empty set -> 1.
std::uint64_t bch_bound(const DefiningSet& T);

enum class Extend { No, Yes };

/// Serial reference enumerator: every message recomputed from scratch. Slow by
/// design; the parallel kernel must match it exactly.
WeightEnumerator weight_enumerator_serial(const LinearCodeModel& model, const Budget& budget = {},
                                          Extend extend = Extend::No);

/// OpenMP enumeration kernel: message space partitioned across top-digit
/// prefixes, each chunk walked with an incremental odometer. Bit-identical to
/// the serial reference.
WeightEnumerator weight_enumerator_exhaustive(const LinearCodeModel& model, const Budget& budget = {},
                                              Extend extend = Extend::No);

/// Exact dual enumerator via W_dual(z) = q^{-k} (1+(q-1)z)^n W((1-z)/(1+(q-1)z)),
/// in exact integer arithmetic. Throws NonIntegerResult for an invalid input.
WeightEnumerator macwilliams_transform(const WeightEnumerator& W);

enum class DistanceCertificate { Exact, LowerBoundOnly };

struct DistanceResult {
    std::uint64_t d = 0;
    DistanceCertificate certificate = DistanceCertificate::Exact;
};

/// Exact d when min(q^k, q^(n-k)) fits the budget (direct or dual+MacWilliams),
/// otherwise the BCH bound with a lower-bound-only certificate.
DistanceResult min_distance(const LinearCodeModel& model, const Budget& budget = {});

/// Sphere-packing feasibility of an [n, k, d]_q code (both displayed clauses).
struct SpherePackingResult {
    Int oddLhs, oddRhs;
    bool oddFeasible = true;
    bool hasEvenClause = false;
    Int evenLhs, evenRhs;
    bool evenFeasible = true;

    bool feasible() const { return oddFeasible && (!hasEvenClause || evenFeasible); }
};
SpherePackingResult sphere_packing_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

/// Dually-BCH decision for a cyclic model: the dual defining set must equal a
/// single cyclic run of consecutive exponents b, b+1, ..., b+deltaPrime-2 (mod n),
/// i.e. the dual is a BCH code whose defining set is exactly its designed window.
struct DuallyBchResult {
    bool duallyBch = false;
    std::uint64_t b = 0;
    std::uint64_t deltaPrime = 0;
};
DuallyBchResult is_dually_bch(const LinearCodeModel& model);
/// Field-free variant from the defining set of a cyclic code of length n.
DuallyBchResult is_dually_bch(const DefiningSet& T, std::uint64_t n);

}  // namespace bchlab
