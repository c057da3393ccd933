#include "bchlab/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace bchlab {
namespace harness {

const char* to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::SkippedBudget: return "skipped-budget";
        case CaseStatus::SkippedPrecondition: return "skipped-precondition";
    }
    return "?";
}

std::string enumerator_to_string(const WeightEnumerator& W) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [w, c] : W.counts) {
        if (!first) out << ",";
        first = false;
        out << w << ":" << c;
    }
    out << "}";
    return out.str();
}

namespace {

std::string int_str(const Int& v) { return v.str(); }

/// n - |T| for C_(n,lambda,delta,b), by pure coset counting.
Int dim_oracle(std::uint64_t q, std::uint64_t n, int lambda, std::uint64_t delta, std::int64_t b) {
    return Int(n) - Int(defining_set_raw(q, n, lambda, delta, b).size());
}

unsigned max_m_for(std::uint64_t q, const SuiteConfig& cfg) {
    unsigned m = 1;
    Int v(q);
    while (v * q <= Int(cfg.budget.fieldTable)) {
        v *= q;
        ++m;
    }
    if (cfg.mMax) m = std::min(m, cfg.mMax);
    return m;
}

std::uint64_t half_n(std::uint64_t q, unsigned m) { return to_u64((ipow(Int(q), m) - 1) / 2); }

using Job = std::function<VerificationCase()>;

VerificationCase run_job(const Job& job) {
    try {
        return job();
    } catch (const Error& e) {
        VerificationCase c;
        c.claimId = "?";
        c.actual = e.what();
        switch (e.kind()) {
            case ErrorKind::BudgetExceeded: c.status = CaseStatus::SkippedBudget; break;
            case ErrorKind::OutOfRange:
            case ErrorKind::ConditionViolated:
            case ErrorKind::ParityMismatch: c.status = CaseStatus::SkippedPrecondition; break;
            default: c.status = CaseStatus::Fail; break;
        }
        return c;
    } catch (const std::exception& e) {
        VerificationCase c;
        c.actual = e.what();
        c.status = CaseStatus::Fail;
        return c;
    }
}

VerificationCase make_case(std::string claimId, std::string params, std::string expected, std::string actual) {
    VerificationCase c;
    c.claimId = std::move(claimId);
    c.params = std::move(params);
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.status = c.expected == c.actual ? CaseStatus::Pass : CaseStatus::Fail;
    return c;
}

// jobs that throw get the claimId/params re-attached here
struct JobList {
    std::vector<std::pair<std::string, std::string>> keys;  // (claimId, params)
    std::vector<Job> jobs;

    void add(std::string claimId, std::string params, Job job) {
        keys.emplace_back(std::move(claimId), std::move(params));
        jobs.push_back(std::move(job));
    }

    std::vector<VerificationCase> run() const {
        std::vector<VerificationCase> out(jobs.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
            VerificationCase c = run_job(jobs[i]);
            c.claimId = keys[i].first;
            c.params = keys[i].second;
            out[i] = std::move(c);
        }
        return out;
    }
};

std::string pstr(std::initializer_list<std::pair<const char*, Int>> kv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out << ",";
        first = false;
        out << k << "=" << v;
    }
    return out.str();
}

// enumeration work gate: q^k words; q^k * (n+1) enumeration work and n^2
// generator-construction work both capped at 64x the word budget
bool enum_fits(std::uint64_t q, std::uint64_t k, std::uint64_t n, const Budget& budget) {
    Int words = ipow(Int(q), k);
    Int cap = Int(budget.enumeration) * 64;
    return words <= Int(budget.enumeration) && words * (Int(n) + 1) <= cap && Int(n) * Int(n) <= cap;
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

void suite_lemma7(const SuiteConfig& cfg, JobList& jobs) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            Int cap = m % 2 == 0 ? ipow(Int(q), m / 2) + 1 : (ipow(Int(q), (m + 1) / 2) + 1) / 2;
            std::uint64_t hi = to_u64(cap);
            std::uint64_t stride = std::max<std::uint64_t>(1, (hi - 1) / 12);
            for (std::uint64_t delta = 2; delta <= hi; delta += stride) {
                jobs.add("lemma7", pstr({{"q", Int(q)}, {"m", Int(m)}, {"delta", Int(delta)}}),
                         [=] {
                             Int expect = formulas::dim_lemma7(q, m, Int(delta)).k;
                             Int actual = dim_oracle(q, half_n(q, m), -1, delta, 0);
                             return make_case("", "", int_str(expect), int_str(actual));
                         });
            }
        }
    }
}

void suite_lemma8_or_10(const SuiteConfig& cfg, JobList& jobs, bool lemma10) {
    const char* id = lemma10 ? "lemma10" : "lemma8";
    for (std::uint64_t q : cfg.qSet) {
        if (q <= 3) continue;
        for (unsigned m = 3; m <= max_m_for(q, cfg); ++m) {
            for (std::uint64_t a = 1; 2 * a < q - 1; ++a) {
                jobs.add(id, pstr({{"q", Int(q)}, {"m", Int(m)}, {"a", Int(a)}}), [=] {
                    Int expect = lemma10 ? formulas::dim_lemma10(q, m, a) : formulas::dim_lemma8(q, m, a);
                    Int delta = lemma10 ? formulas::lemma10_delta(q, m, a) : formulas::lemma8_delta(q, m, a);
                    Int actual = dim_oracle(q, half_n(q, m), -1, to_u64(delta), 0);
                    return make_case("", "", int_str(expect), int_str(actual));
                });
            }
        }
    }
}

void suite_lemma11_13_14(const SuiteConfig& cfg, JobList& jobs, int which) {
    const char* id = which == 11 ? "lemma11" : which == 13 ? "lemma13" : "lemma14";
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 4; m <= max_m_for(q, cfg); m += 2) {
            const std::uint64_t aHi = which == 14 ? 0 : (q >= 3 ? q - 3 : 0);
            for (std::uint64_t a = 0; a <= aHi; ++a) {
                const std::uint64_t bLo = (which == 11 && a >= 1) ? 0 : 1;
                for (std::uint64_t b = bLo; a + b <= q - 1; ++b) {
                    if (a + b < 1) continue;
                    std::string params = which == 14 ? pstr({{"q", Int(q)}, {"m", Int(m)}, {"b", Int(b)}})
                                                     : pstr({{"q", Int(q)}, {"m", Int(m)}, {"a", Int(a)}, {"b", Int(b)}});
                    jobs.add(id, params, [=] {
                        Int expect, delta;
                        if (which == 11) {
                            expect = formulas::dim_lemma11(q, m, a, b);
                            delta = formulas::lemma11_delta(q, m, a, b);
                        } else if (which == 13) {
                            expect = formulas::dim_lemma13(q, m, a, b);
                            delta = formulas::lemma13_delta(q, m, a, b);
                        } else {
                            expect = formulas::dim_lemma14(q, m, b);
                            delta = formulas::lemma14_delta(q, m, b);
                        }
                        Int actual = dim_oracle(q, half_n(q, m), -1, to_u64(delta), 0);
                        return make_case("", "", int_str(expect), int_str(actual));
                    });
                }
            }
        }
    }
}

void suite_leaders26(const SuiteConfig& cfg, JobList& jobs) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            jobs.add("lemma26", pstr({{"q", Int(q)}, {"m", Int(m)}}), [=] {
                auto [d1, d2] = formulas::delta_family(q, m);
                std::ostringstream expect;
                expect << "d1=" << d1.value << ",s1=" << d1.orbitSize << ";d2=" << d2.value
                       << ",s2=" << d2.orbitSize;
                LeaderTable t = cfg.useCache ? leader_table(half_n(q, m), q, cfg.budget)
                                             : compute_leader_table(half_n(q, m), q, cfg.budget);
                std::uint64_t b1 = ith_largest_leader(t, 1), b2 = ith_largest_leader(t, 2);
                std::ostringstream actual;
                actual << "d1=" << b1 << ",s1=" << leader_orbit_size(t, b1) << ";d2=" << b2
                       << ",s2=" << leader_orbit_size(t, b2);
                return make_case("", "", expect.str(), actual.str());
            });
        }
    }
}

void suite_leaders_prime(const SuiteConfig& cfg, JobList& jobs, int which) {
    // which: 15 -> i in 1..3 every m; 16/18/20 -> extended ranges on the stated m floors
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            unsigned lo = 1, hi = 3;
            if (which == 16) {
                if (m % 3 != 2 || m < 8) continue;
                lo = 2, hi = 7;
            } else if (which == 18) {
                if (m % 3 != 0 || m < 9) continue;
                lo = 2, hi = 10;
            } else if (which == 20) {
                if (m % 3 != 1 || m < 7) continue;
                lo = 2, hi = 6;
            }
            for (unsigned i = lo; i <= hi; ++i) {
                if (which == 15 && i == 3 && ipow(Int(q), m) < 25) continue;
                jobs.add("lemma" + std::to_string(which),
                         pstr({{"q", Int(q)}, {"m", Int(m)}, {"i", Int(i)}}), [=] {
                             formulas::LeaderValue lv = formulas::delta_prime_family(q, m, i);
                             std::ostringstream expect;
                             expect << lv.value << ",size=" << lv.orbitSize;
                             LeaderTable t = cfg.useCache ? leader_table(2 * half_n(q, m), q, cfg.budget)
                                                          : compute_leader_table(2 * half_n(q, m), q, cfg.budget);
                             std::uint64_t bf = ith_largest_odd_leader(t, i);
                             std::ostringstream actual;
                             actual << bf << ",size=" << leader_orbit_size(t, bf);
                             return make_case("", "", expect.str(), actual.str());
                         });
            }
        }
    }
}

void suite_thm_17_19_21(const SuiteConfig& cfg, JobList& jobs, int which) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            unsigned hi;
            if (which == 17) {
                if (m % 3 != 2 || m < 8) continue;
                hi = 7;
            } else if (which == 19) {
                if (m % 3 != 0 || m < 9) continue;
                hi = 10;
            } else {
                if (m % 3 != 1 || m < 7) continue;
                hi = 6;
            }
            for (unsigned i = 1; i <= hi; ++i) {
                jobs.add("thm" + std::to_string(which), pstr({{"q", Int(q)}, {"m", Int(m)}, {"i", Int(i)}}),
                         [=] {
                             Int expect = formulas::dim_from_leader_index(q, m, i);
                             Int dp = formulas::delta_prime_family(q, m, i).value;
                             Int actual = dim_oracle(q, half_n(q, m), -1, to_u64((dp + 1) / 2), 0);
                             return make_case("", "", int_str(expect), int_str(actual));
                         });
            }
        }
    }
}

void suite_thm22(const SuiteConfig& cfg, JobList& jobs) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 3; m <= max_m_for(q, cfg); ++m) {
            std::string params = pstr({{"q", Int(q)}, {"m", Int(m)}});
            auto field = ExtensionField::build(PrimePower::from_q(q), m, cfg.budget);
            jobs.add("thm22-dim", params, [=] {
                SparseCheckCode cc = theorem22_code(field);
                std::ostringstream expect, actual;
                expect << "k=" << 2 * m << ",dualdim=" << half_n(q, m) - 2 * m;
                actual << "k=" << cc.code.k << ",dualdim=" << cc.dualDimensionClaim;
                // dual dimension claim must also match the dual defining set
                DefiningSet Td = dual_defining_set(cc.code);
                if (half_n(q, m) - Td.size() != cc.dualDimensionClaim) actual << ",dualset-mismatch";
                return make_case("", "", expect.str(), actual.str());
            });
            const std::uint64_t n = half_n(q, m);
            if (enum_fits(q, 2 * m, n, cfg.budget)) {
                jobs.add("thm22-d", params, [=] {
                    SparseCheckCode cc = theorem22_code(field);
                    WeightEnumerator W = weight_enumerator_exhaustive(cc.code, cfg.budget);
                    std::uint64_t d = W.min_positive_weight();
                    bool ok = Int(d) >= cc.dLowerClaim && Int(bch_bound(cc.code.definingSet)) >= cc.dLowerClaim;
                    return make_case("", "", "d>=" + cc.dLowerClaim.str() + ",certified",
                                     ok ? "d>=" + cc.dLowerClaim.str() + ",certified" : "d=" + std::to_string(d));
                });
                if (n <= 512) {
                    jobs.add("thm22-duald", params, [=] {
                        SparseCheckCode cc = theorem22_code(field);
                        WeightEnumerator W = weight_enumerator_exhaustive(cc.code, cfg.budget);
                        std::uint64_t dd = macwilliams_transform(W).min_positive_weight();
                        bool ok = dd >= cc.dualDLowerClaim && dd <= cc.dualDUpperClaim;
                        return make_case("", "", "duald in [3,5]",
                                         ok ? "duald in [3,5]" : "duald=" + std::to_string(dd));
                    });
                }
            }
        }
    }
}

void suite_thm23(const SuiteConfig& cfg, JobList& jobs) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            Int cap = m % 2 == 0 ? 2 * ipow(Int(q), m / 2) - 1 : ipow(Int(q), (m + 1) / 2) - 1;
            for (std::uint64_t b = 1; b <= 3; ++b) {
                // smallest delta meeting 1+2b <= floor((b+delta-2)/q), then a couple more
                std::uint64_t d0 = to_u64(Int(q) * (1 + 2 * b) + 2 - b);
                for (std::uint64_t delta : {d0, d0 + q, d0 + 2 * q + 1}) {
                    if (Int(1) + 2 * (Int(b) + delta - 2) > cap) continue;
                    jobs.add("thm23", pstr({{"q", Int(q)}, {"m", Int(m)}, {"delta", Int(delta)}, {"b", Int(b)}}),
                             [=] {
                                 Int expect = formulas::theorem23_dim(q, m, delta, b);
                                 Int actual = dim_oracle(q, half_n(q, m), -1, delta, static_cast<std::int64_t>(b));
                                 DefiningSet lhs = defining_set_raw(q, half_n(q, m), -1, delta, static_cast<std::int64_t>(b));
                                 DefiningSet rhs = defining_set_raw(q, half_n(q, m), -1, b + delta, 0);
                                 std::string setsE = "sets-equal";
                                 std::string setsA = lhs.exponents == rhs.exponents ? "sets-equal" : "sets-differ";
                                 return make_case("", "", int_str(expect) + "," + setsE, int_str(actual) + "," + setsA);
                             });
                }
            }
        }
    }
}

void suite_thm24(const SuiteConfig& cfg, JobList& jobs) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            const std::uint64_t n = half_n(q, m);
            if (n % (q - 1) != 0) continue;
            const std::uint64_t base = n / (q - 1);
            std::shared_ptr<const ExtensionField> field;
            for (std::uint64_t delta_a = 1; delta_a <= base; ++delta_a) {
                if (base % delta_a || delta_a % 2 == 0) continue;
                if (delta_a > 4096) continue;  // keep the default grid desk-scale
                if (!field) field = ExtensionField::build(PrimePower::from_q(q), m, cfg.budget);
                for (std::uint64_t k = 1; k <= q - 1; ++k) {
                    if (k * delta_a < 4) continue;  // needs delta >= 2
                    jobs.add("thm24", pstr({{"q", Int(q)}, {"m", Int(m)}, {"delta_a", Int(delta_a)}, {"k", Int(k)}}),
                             [=] {
                                 auto bounds = formulas::theorem24_bounds(q, n, k, delta_a);
                                 require(bounds.delta >= 2 && bounds.delta <= Int(n), ErrorKind::OutOfRange,
                                         "designed distance outside [2, n]");
                                 require(bounds.delta * bounds.dUpper <= Int(cfg.budget.enumeration),
                                         ErrorKind::BudgetExceeded, "root-check work over budget");
                                 BigPoly f = theorem24_codeword(*field, delta_a, k);
                                 std::uint64_t delta = to_u64(bounds.delta);
                                 bool wtOk = Int(f.weight()) <= bounds.dUpper && f.weight() > 0;
                                 bool rootsOk = true;
                                 for (std::uint64_t i = 1; i + 1 <= delta; ++i) {
                                     if (!f.eval_at_alpha_pow(*field, static_cast<std::int64_t>(1 + 2 * i)).is_zero())
                                         rootsOk = false;
                                 }
                                 std::ostringstream actual;
                                 actual << (wtOk ? "wt<=bound" : "wt=" + std::to_string(f.weight()))
                                        << "," << (rootsOk ? "vanishes" : "nonroot");
                                 return make_case("", "", "wt<=bound,vanishes", actual.str());
                             });
                }
            }
        }
    }
}

void suite_table(const SuiteConfig& cfg, JobList& jobs, int table) {
    const formulas::DistributionTable which = table == 1   ? formulas::DistributionTable::T1
                                              : table == 2 ? formulas::DistributionTable::T2
                                              : table == 3 ? formulas::DistributionTable::T3
                                                           : formulas::DistributionTable::T4;
    const bool even = table == 1 || table == 4;
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            if ((m % 2 == 0) != even) continue;
            std::string id = "table" + std::to_string(table);
            std::string params = pstr({{"q", Int(q)}, {"m", Int(m)}});
            const std::uint64_t kTable = (table == 1 ? m / 2 : table == 2 ? m : table == 3 ? 2 * m : 3 * m / 2) + 1;
            std::shared_ptr<const ExtensionField> field;
            if (enum_fits(q, kTable, half_n(q, m), cfg.budget))
                field = ExtensionField::build(PrimePower::from_q(q), m, cfg.budget);
            jobs.add(id, params, [=] {
                formulas::TableResult tr = formulas::table_weight_distribution(q, m, which);
                const std::uint64_t k = tr.extendedClaim.k;
                require(tr.enumerator.total() == ipow(Int(q), k), ErrorKind::Internal,
                        "table counts must sum to q^k");
                const std::uint64_t n = half_n(q, m);
                require(field != nullptr, ErrorKind::BudgetExceeded, "enumeration over budget");
                std::uint64_t delta = to_u64(table <= 2 ? formulas::delta_family(q, m).first.value
                                                        : formulas::delta_family(q, m).second.value);
                require(delta >= 2, ErrorKind::OutOfRange, "delta_i < 2 leaves no realized code");
                LinearCodeModel model = generator_polynomial({n, 1, delta, 1}, field);
                WeightEnumerator W = weight_enumerator_exhaustive(model, cfg.budget, Extend::Yes);
                std::string expect = enumerator_to_string(tr.enumerator) +
                                     ",d=" + tr.extendedClaim.dLower.str();
                std::string actual = enumerator_to_string(W) + ",d=" + std::to_string(W.min_positive_weight());
                return make_case("", "", expect, actual);
            });
        }
    }
}

void suite_dualparams(const SuiteConfig& cfg, JobList& jobs) {
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
            const std::uint64_t n = half_n(q, m);
            if (n > 512) continue;
            for (int table = 1; table <= 4; ++table) {
                const bool even = table == 1 || table == 4;
                if ((m % 2 == 0) != even) continue;
                if (table == 4 && q == 3 && m == 2) continue;  // no realized code
                const formulas::DistributionTable which = table == 1   ? formulas::DistributionTable::T1
                                                          : table == 2 ? formulas::DistributionTable::T2
                                                          : table == 3 ? formulas::DistributionTable::T3
                                                                       : formulas::DistributionTable::T4;
                const std::uint64_t kTable = (table == 1 ? m / 2 : table == 2 ? m : table == 3 ? 2 * m : 3 * m / 2) + 1;
                std::shared_ptr<const ExtensionField> field;
                if (enum_fits(q, kTable, n, cfg.budget))
                    field = ExtensionField::build(PrimePower::from_q(q), m, cfg.budget);
                jobs.add("dualparams" + std::to_string(table), pstr({{"q", Int(q)}, {"m", Int(m)}}), [=] {
                    formulas::TableResult tr = formulas::table_weight_distribution(q, m, which);
                    std::uint64_t delta = to_u64(table <= 2 ? formulas::delta_family(q, m).first.value
                                                            : formulas::delta_family(q, m).second.value);
                    require(delta >= 2, ErrorKind::OutOfRange, "delta_i < 2 leaves no realized code");
                    require(field != nullptr, ErrorKind::BudgetExceeded, "enumeration over budget");
                    LinearCodeModel model = generator_polynomial({n, 1, delta, 1}, field);
                    // dual dimension from the dual defining set; exact dual d by MacWilliams
                    DefiningSet Td = dual_defining_set(model);
                    WeightEnumerator primal = weight_enumerator_exhaustive(model, cfg.budget);
                    WeightEnumerator dual = macwilliams_transform(primal);
                    std::uint64_t dd = dual.min_positive_weight();
                    std::ostringstream expect, actual;
                    expect << "dim=" << tr.dualClaim.k << ",d in [" << tr.dualClaim.dLower << ","
                           << tr.dualClaim.dUpper << "]";
                    actual << "dim=" << n - Td.size() << ",d in ["
                           << (Int(dd) >= tr.dualClaim.dLower ? tr.dualClaim.dLower.str() : std::to_string(dd))
                           << ","
                           << (Int(dd) <= tr.dualClaim.dUpper ? tr.dualClaim.dUpper.str() : std::to_string(dd))
                           << "]";
                    return make_case("", "", expect.str(), actual.str());
                });
            }
        }
    }
}

void suite_duallybch(const SuiteConfig& cfg, JobList& jobs) {
    // every in-budget pair with a full-delta sweep still cheap: n <= 1024
    for (std::uint64_t q : cfg.qSet) {
        for (unsigned m = 2; m <= max_m_for(q, cfg); ++m) {
        const std::uint64_t n = half_n(q, m);
        if (n > 1024) continue;
        const char* id = m % 2 == 1 ? "thm33" : "thm34";
        for (std::uint64_t delta = 2; delta <= n - 1; ++delta) {
            jobs.add(id, pstr({{"q", Int(q)}, {"m", Int(m)}, {"delta", Int(delta)}}), [=] {
                bool law = formulas::dually_bch_condition(q, m, Int(delta));
                DefiningSet T = defining_set_raw(q, n, 1, delta, 2);
                DuallyBchResult r = is_dually_bch(T, n);
                return make_case("", "", law ? "dually-BCH" : "not dually-BCH",
                                 r.duallyBch ? "dually-BCH" : "not dually-BCH");
            });
        }
        }
    }
}

void suite_paper_examples(const SuiteConfig& cfg, JobList& jobs) {
    // worked example after Lemma 8
    jobs.add("example-lemma8", "q=5,m=3,a=1,code=C(62,-1,16,0)", [=] {
        Int k = formulas::dim_lemma8(5, 3, 1);
        Int o = dim_oracle(5, 62, -1, 16, 0);
        return make_case("", "", "32,32", k.str() + "," + o.str());
    });
    jobs.add("example-lemma8", "q=7,m=3,a=2,code=C(171,-1,58,0)", [=] {
        Int k = formulas::dim_lemma8(7, 3, 2);
        Int o = dim_oracle(7, 171, -1, 58, 0);
        return make_case("", "", "62,62", k.str() + "," + o.str());
    });
    // worked example after Lemma 11
    jobs.add("example-lemma11", "q=5,m=4,a=1,b=2,code=C(312,-1,105,0)", [=] {
        Int k = formulas::dim_lemma11(5, 4, 1, 2);
        Int o = dim_oracle(5, 312, -1, 105, 0);
        return make_case("", "", "80,80", k.str() + "," + o.str());
    });
    jobs.add("example-lemma11", "q=5,m=4,a=2,b=2,code=C(312,-1,183,0)", [=] {
        Int k = formulas::dim_lemma11(5, 4, 2, 2);
        Int o = dim_oracle(5, 312, -1, 183, 0);
        return make_case("", "", "16,16", k.str() + "," + o.str());
    });
    // worked example after Theorem 24: C_(40,-1,5,1) is [40, 28, 6]
    jobs.add("example-thm24", "q=3,m=4,code=C(40,-1,5,1)", [=] {
        auto field = ExtensionField::build(PrimePower::make(3), 4, cfg.budget);
        LinearCodeModel model = generator_polynomial({40, -1, 5, 1}, field);
        DistanceResult d = min_distance(model, cfg.budget);
        auto bounds = formulas::theorem24_bounds(3, 40, 1, 10);
        bool window = Int(d.d) >= bounds.dLower && Int(d.d) <= bounds.dUpper;
        std::ostringstream actual;
        actual << "[40," << model.k << "," << d.d << "],"
               << (d.certificate == DistanceCertificate::Exact ? "exact" : "bound") << ","
               << (window ? "in-window" : "outside-window");
        return make_case("", "", "[40,28,6],exact,in-window", actual.str());
    });
    // worked examples after Theorem 28 (both enumerators as printed)
    jobs.add("example-thm28", "q=3,m=3,extended", [=] {
        auto field = ExtensionField::build(PrimePower::make(3), 3, cfg.budget);
        std::uint64_t d1 = to_u64(formulas::delta_family(3, 3).first.value);
        LinearCodeModel model = generator_polynomial({13, 1, d1, 1}, field);
        WeightEnumerator W = weight_enumerator_exhaustive(model, cfg.budget, Extend::Yes);
        return make_case("", "", "{0:1,8:26,9:26,11:26,14:2}", enumerator_to_string(W));
    });
    jobs.add("example-thm28", "q=5,m=3,extended", [=] {
        auto field = ExtensionField::build(PrimePower::make(5), 3, cfg.budget);
        std::uint64_t d1 = to_u64(formulas::delta_family(5, 3).first.value);
        LinearCodeModel model = generator_polynomial({62, 1, d1, 1}, field);
        WeightEnumerator W = weight_enumerator_exhaustive(model, cfg.budget, Extend::Yes);
        return make_case("", "", "{0:1,48:248,50:124,53:248,63:4}", enumerator_to_string(W));
    });
    // worked examples after Theorem 31; weights frozen from enumeration (the
    // printed example mislabels the top weight in both cases)
    jobs.add("example-thm31", "q=3,m=4,extended", [=] {
        auto field = ExtensionField::build(PrimePower::make(3), 4, cfg.budget);
        std::uint64_t d2 = to_u64(formulas::delta_family(3, 4).second.value);
        LinearCodeModel model = generator_polynomial({40, 1, d2, 1}, field);
        WeightEnumerator W = weight_enumerator_exhaustive(model, cfg.budget, Extend::Yes);
        return make_case("", "", "{0:1,23:280,24:300,26:336,27:240,29:600,30:168,32:240,36:20,41:2}",
                         enumerator_to_string(W));
    });
    jobs.add("example-thm31", "q=3,m=3,extended(table3)", [=] {
        auto field = ExtensionField::build(PrimePower::make(3), 3, cfg.budget);
        std::uint64_t d2 = to_u64(formulas::delta_family(3, 3).second.value);
        LinearCodeModel model = generator_polynomial({13, 1, d2, 1}, field);
        WeightEnumerator W = weight_enumerator_exhaustive(model, cfg.budget, Extend::Yes);
        return make_case("", "", "{0:1,5:26,6:156,8:624,9:494,11:780,12:78,14:28}", enumerator_to_string(W));
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "lemma7",    "lemma8",  "lemma10", "lemma11", "lemma13", "lemma14", "leaders15", "leaders16",
        "leaders18", "leaders20", "leaders26", "thm17", "thm19", "thm21", "thm22", "thm23",
        "thm24",     "table1",  "table2",  "table3",  "table4",  "dualparams", "duallybch", "paperExamples"};
    return names;
}

VerificationReport run_suite(const std::string& suiteId, const SuiteConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    JobList jobs;
    if (suiteId == "lemma7") suite_lemma7(cfg, jobs);
    else if (suiteId == "lemma8") suite_lemma8_or_10(cfg, jobs, false);
    else if (suiteId == "lemma10") suite_lemma8_or_10(cfg, jobs, true);
    else if (suiteId == "lemma11") suite_lemma11_13_14(cfg, jobs, 11);
    else if (suiteId == "lemma13") suite_lemma11_13_14(cfg, jobs, 13);
    else if (suiteId == "lemma14") suite_lemma11_13_14(cfg, jobs, 14);
    else if (suiteId == "leaders15") suite_leaders_prime(cfg, jobs, 15);
    else if (suiteId == "leaders16") suite_leaders_prime(cfg, jobs, 16);
    else if (suiteId == "leaders18") suite_leaders_prime(cfg, jobs, 18);
    else if (suiteId == "leaders20") suite_leaders_prime(cfg, jobs, 20);
    else if (suiteId == "leaders26") suite_leaders26(cfg, jobs);
    else if (suiteId == "thm17") suite_thm_17_19_21(cfg, jobs, 17);
    else if (suiteId == "thm19") suite_thm_17_19_21(cfg, jobs, 19);
    else if (suiteId == "thm21") suite_thm_17_19_21(cfg, jobs, 21);
    else if (suiteId == "thm22") suite_thm22(cfg, jobs);
    else if (suiteId == "thm23") suite_thm23(cfg, jobs);
    else if (suiteId == "thm24") suite_thm24(cfg, jobs);
    else if (suiteId == "table1") suite_table(cfg, jobs, 1);
    else if (suiteId == "table2") suite_table(cfg, jobs, 2);
    else if (suiteId == "table3") suite_table(cfg, jobs, 3);
    else if (suiteId == "table4") suite_table(cfg, jobs, 4);
    else if (suiteId == "dualparams") suite_dualparams(cfg, jobs);
    else if (suiteId == "duallybch") suite_duallybch(cfg, jobs);
    else if (suiteId == "paperExamples") suite_paper_examples(cfg, jobs);
    else fail(ErrorKind::UnknownSuite, "unknown suite: " + suiteId);

    VerificationReport report;
    report.suite = suiteId;
    report.cases = jobs.run();
    std::sort(report.cases.begin(), report.cases.end(), [](const VerificationCase& a, const VerificationCase& b) {
        return std::tie(a.claimId, a.params) < std::tie(b.claimId, b.params);
    });
    for (const auto& c : report.cases) {
        switch (c.status) {
            case CaseStatus::Pass: ++report.passed; break;
            case CaseStatus::Fail: ++report.failed; break;
            case CaseStatus::SkippedBudget: ++report.skippedBudget; break;
            case CaseStatus::SkippedPrecondition: ++report.skippedPrecondition; break;
        }
    }
    std::ostringstream cfgs;
    cfgs << "qSet=";
    for (std::size_t i = 0; i < cfg.qSet.size(); ++i) cfgs << (i ? "," : "") << cfg.qSet[i];
    cfgs << ";mMax=" << (cfg.mMax ? std::to_string(cfg.mMax) : "auto")
         << ";tableBudget=" << cfg.budget.fieldTable << ";enumBudget=" << cfg.budget.enumeration;
    report.config = cfgs.str();
    report.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["config"] = report.config;
        j["cases"] = nlohmann::ordered_json::array();
        for (const auto& c : report.cases) {
            j["cases"].push_back({{"claimId", c.claimId},
                                  {"params", c.params},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"status", to_string(c.status)}});
        }
        j["summary"] = {{"pass", report.passed},
                        {"fail", report.failed},
                        {"skipped-budget", report.skippedBudget},
                        {"skipped-precondition", report.skippedPrecondition}};
        return j.dump(2) + "\n";
    }
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "claimId,params,expected,actual,status\n";
        for (const auto& c : report.cases) {
            auto esc = [](const std::string& s) {
                std::string r = "\"";
                for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                return r + "\"";
            };
            out << esc(c.claimId) << "," << esc(c.params) << "," << esc(c.expected) << "," << esc(c.actual)
                << "," << to_string(c.status) << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "suite " << report.suite << " (" << report.config << ")\n";
    for (const auto& c : report.cases) {
        out << "  [" << to_string(c.status) << "] " << c.claimId << " " << c.params;
        if (c.status == CaseStatus::Fail) out << "  expected " << c.expected << "  actual " << c.actual;
        out << "\n";
    }
    out << "summary: " << report.passed << " pass, " << report.failed << " fail, " << report.skippedBudget
        << " skipped-budget, " << report.skippedPrecondition << " skipped-precondition ("
        << report.wallSeconds << "s)\n";
    out << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace harness
}  // namespace bchlab
