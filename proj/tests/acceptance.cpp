// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bchlab/harness.hpp"

using namespace bchlab;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::shared_ptr<const ExtensionField> F(std::uint64_t q, unsigned m) {
    return ExtensionField::build(PrimePower::from_q(q), m);
}

WeightEnumerator make_enum(std::uint64_t n, std::uint64_t q,
                           std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> rows) {
    WeightEnumerator W;
    W.n = n;
    W.q = q;
    for (auto [w, c] : rows) W.counts[w] = Int(c);
    return W;
}

bool check_example_enum(std::uint64_t q, unsigned m, bool useDelta2, const WeightEnumerator& expect,
                        formulas::DistributionTable table, std::string& detail) {
    auto field = F(q, m);
    const std::uint64_t n = (field->size() - 1) / 2;
    auto [d1, d2] = formulas::delta_family(q, m);
    std::uint64_t delta = to_u64(useDelta2 ? d2.value : d1.value);
    LinearCodeModel model = generator_polynomial({n, 1, delta, 1}, field);
    WeightEnumerator W = weight_enumerator_exhaustive(model, {}, Extend::Yes);
    if (!(W == expect)) {
        detail += "enumeration mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) + "; ";
        return false;
    }
    if (!(formulas::table_weight_distribution(q, m, table).enumerator == W)) {
        detail += "table formula mismatch at q=" + std::to_string(q) + ",m=" + std::to_string(m) + "; ";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    harness::SuiteConfig cfg;  // q in {3,5,7}, table budget 2^22, enum budget 2^24

    criterion(1, "worked examples: negacyclic dimensions", [&](std::string& detail) {
        bool ok = true;
        struct Row {
            std::uint64_t q, n, delta, expect;
            Int formula;
        };
        std::vector<Row> rows{{5, 62, 16, 32, formulas::dim_lemma8(5, 3, 1)},
                              {7, 171, 58, 62, formulas::dim_lemma8(7, 3, 2)},
                              {5, 312, 105, 80, formulas::dim_lemma11(5, 4, 1, 2)},
                              {5, 312, 183, 16, formulas::dim_lemma11(5, 4, 2, 2)}};
        for (const Row& r : rows) {
            Int coset = Int(r.n) - Int(defining_set_raw(r.q, r.n, -1, r.delta, 0).size());
            if (r.formula != r.expect || coset != r.expect) {
                ok = false;
                detail += "dim C(" + std::to_string(r.n) + ",-1," + std::to_string(r.delta) +
                          ",0): formula=" + r.formula.str() + " coset=" + coset.str() + "; ";
            }
        }
        return ok;
    });

    criterion(2, "worked examples: extended weight enumerators", [&](std::string& detail) {
        bool ok = true;
        ok &= check_example_enum(3, 3, false,
                                 make_enum(14, 3, {{0, 1}, {8, 26}, {9, 26}, {11, 26}, {14, 2}}),
                                 formulas::DistributionTable::T2, detail);
        ok &= check_example_enum(5, 3, false,
                                 make_enum(63, 5, {{0, 1}, {48, 248}, {50, 124}, {53, 248}, {63, 4}}),
                                 formulas::DistributionTable::T2, detail);
        ok &= check_example_enum(3, 4, true,
                                 make_enum(41, 3,
                                           {{0, 1},
                                            {23, 280},
                                            {24, 300},
                                            {26, 336},
                                            {27, 240},
                                            {29, 600},
                                            {30, 168},
                                            {32, 240},
                                            {36, 20},
                                            {41, 2}}),
                                 formulas::DistributionTable::T4, detail);
        ok &= check_example_enum(3, 3, true,
                                 make_enum(14, 3,
                                           {{0, 1},
                                            {5, 26},
                                            {6, 156},
                                            {8, 624},
                                            {9, 494},
                                            {11, 780},
                                            {12, 78},
                                            {14, 28}}),
                                 formulas::DistributionTable::T3, detail);
        return ok;
    });

    criterion(3, "theorem-24 example: C(40,-1,5,1) is [40,28,6] via the dual route", [&](std::string& detail) {
        auto field = F(3, 4);
        LinearCodeModel model = generator_polynomial({40, -1, 5, 1}, field);
        if (model.k != 28) {
            detail = "k=" + std::to_string(model.k);
            return false;
        }
        LinearCodeModel dual = dual_code(model);
        if (dual.k != 12) {
            detail = "dual k=" + std::to_string(dual.k);
            return false;
        }
        WeightEnumerator dualW = weight_enumerator_exhaustive(dual, cfg.budget);
        WeightEnumerator primal = macwilliams_transform(dualW);
        std::uint64_t d = primal.min_positive_weight();
        auto bounds = formulas::theorem24_bounds(3, 40, 1, 10);
        bool window = Int(d) >= bounds.dLower && Int(d) <= bounds.dUpper;
        if (d != 6 || !window) {
            detail = "d=" + std::to_string(d) + (window ? "" : " outside the theorem-24 window");
            return false;
        }
        return primal.total() == ipow(Int(3), 28);
    });

    criterion(4, "coset-leader families vs brute-force tables", [&](std::string& detail) {
        std::uint64_t cells = 0, failed = 0;
        for (const char* suite : {"leaders26", "leaders15", "leaders16", "leaders18", "leaders20"}) {
            harness::VerificationReport r = harness::run_suite(suite, cfg);
            cells += r.passed + r.failed;
            failed += r.failed;
            if (r.failed) detail += std::string(suite) + " failed " + std::to_string(r.failed) + "; ";
        }
        detail += std::to_string(cells) + " cells";
        return failed == 0 && cells >= 40;
    });

    criterion(5, "dimension-formula grids vs the coset oracle", [&](std::string& detail) {
        std::uint64_t cells = 0, failed = 0;
        for (const char* suite :
             {"lemma7", "lemma8", "lemma10", "lemma11", "lemma13", "lemma14", "thm17", "thm19", "thm21", "thm23"}) {
            harness::VerificationReport r = harness::run_suite(suite, cfg);
            cells += r.passed + r.failed;
            failed += r.failed;
            if (r.failed) detail += std::string(suite) + " failed " + std::to_string(r.failed) + "; ";
        }
        detail += std::to_string(cells) + " cells";
        return failed == 0 && cells >= 50;
    });

    criterion(6, "theorem-22 code and dual at (3,3) and (3,4)", [&](std::string& detail) {
        bool ok = true;
        for (unsigned m : {3u, 4u}) {
            auto field = F(3, m);
            SparseCheckCode cc = theorem22_code(field);
            const std::uint64_t n = (field->size() - 1) / 2;
            if (cc.code.k != 2 * m) {
                ok = false;
                detail += "dim C' != 2m at m=" + std::to_string(m) + "; ";
            }
            WeightEnumerator W = weight_enumerator_exhaustive(cc.code, cfg.budget);
            std::uint64_t d = W.min_positive_weight();
            if (Int(d) < cc.dLowerClaim) {
                ok = false;
                detail += "d(C')=" + std::to_string(d) + " below the claim at m=" + std::to_string(m) + "; ";
            }
            DefiningSet Td = dual_defining_set(cc.code);
            if (n - Td.size() != n - 2 * m) {
                ok = false;
                detail += "dual dim mismatch at m=" + std::to_string(m) + "; ";
            }
            std::uint64_t dd = macwilliams_transform(W).min_positive_weight();
            if (dd < 3 || dd > 5) {
                ok = false;
                detail += "d(C'^perp)=" + std::to_string(dd) + " outside [3,5] at m=" + std::to_string(m) + "; ";
            }
        }
        SpherePackingResult r7 = sphere_packing_check(13, 7, 7, 3);
        SpherePackingResult r6 = sphere_packing_check(13, 7, 6, 3);
        if (!(r7.oddLhs == 2627 && r7.oddRhs == 729 && !r7.feasible())) {
            ok = false;
            detail += "odd-clause arithmetic; ";
        }
        if (!(r6.evenLhs == 289 && r6.evenRhs == 243 && !r6.feasible())) {
            ok = false;
            detail += "even-clause arithmetic; ";
        }
        return ok;
    });

    criterion(7, "dually-BCH law across the in-budget pairs", [&](std::string& detail) {
        harness::VerificationReport r = harness::run_suite("duallybch", cfg);
        detail = std::to_string(r.passed) + " deltas checked";
        if (r.failed || r.cases.empty()) return false;
        // the explicit negative case C_(13,1,2,2)
        DuallyBchResult neg = is_dually_bch(defining_set_raw(3, 13, 1, 2, 2), 13);
        if (neg.duallyBch) {
            detail += "; C(13,1,2,2) misclassified";
            return false;
        }
        return true;
    });

    criterion(8, "property suites", [&](std::string& detail) {
        bool ok = true;
        // g*h = x^n - lambda over a spread of specs
        for (auto [q, m, lambda, delta, b] :
             std::vector<std::tuple<std::uint64_t, unsigned, int, std::uint64_t, std::int64_t>>{
                 {3, 3, 1, 4, 1}, {3, 4, -1, 15, 2}, {5, 3, -1, 16, 0}, {7, 2, 1, 9, 1}, {9, 2, -1, 7, 1}}) {
            auto field = F(q, m);
            const std::uint64_t n = (field->size() - 1) / 2;
            LinearCodeModel model = generator_polynomial({n, lambda, delta, b}, field);
            Poly h = parity_check_polynomial(model);
            if (!(model.generator.mul(h) == Poly::x_n_minus_lambda(&field->gf_q(), n, lambda))) {
                ok = false;
                detail += "g*h recombination; ";
            }
        }
        // enumerator mass, MacWilliams involution, BCH soundness
        for (auto [q, m, lambda, delta, b] :
             std::vector<std::tuple<std::uint64_t, unsigned, int, std::uint64_t, std::int64_t>>{
                 {3, 3, 1, 5, 1}, {3, 4, -1, 25, 1}, {5, 2, 1, 7, 1}, {7, 2, -1, 18, 0}}) {
            auto field = F(q, m);
            const std::uint64_t n = (field->size() - 1) / 2;
            LinearCodeModel model = generator_polynomial({n, lambda, delta, b}, field);
            WeightEnumerator W = weight_enumerator_exhaustive(model, cfg.budget);
            if (W.total() != ipow(Int(q), model.k)) {
                ok = false;
                detail += "mass; ";
            }
            if (!(macwilliams_transform(macwilliams_transform(W)) == W)) {
                ok = false;
                detail += "involution; ";
            }
            if (W.min_positive_weight() < bch_bound(model.definingSet)) {
                ok = false;
                detail += "bch bound; ";
            }
        }
        // lemma 1: shift test <=> leader, exhaustive for q^m <= 3^8
        for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 8}, {5, 5}, {7, 4}}) {
            std::uint64_t N = 1;
            for (unsigned i = 0; i < m; ++i) N *= q;
            N -= 1;
            for (std::uint64_t i = 1; i <= N - 1; ++i) {
                if (shift_test_leader(q, m, i) != (coset_leader(N, q, i) == i)) {
                    ok = false;
                    detail += "shift test at q=" + std::to_string(q) + ",i=" + std::to_string(i) + "; ";
                    break;
                }
            }
        }
        // lemmas 5/6 on their full stated ranges
        for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
                 {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {5, 3}, {5, 4}, {5, 5}, {7, 3}, {7, 4}}) {
            std::uint64_t qm = 1;
            for (unsigned i = 0; i < m; ++i) qm *= q;
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
                bool truth = coset_leader(qm - 1, q, i) == i;
                if (r.isLeader != truth || (truth && r.orbitSize != coset_size(qm - 1, q, i))) {
                    ok = false;
                    detail += "small-leader predicate at q=" + std::to_string(q) + ",m=" + std::to_string(m) + "; ";
                    break;
                }
            }
        }
        return ok;
    });

    std::printf("%s\n", g_failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return g_failures == 0 ? 0 : 1;
}
