#include "bchlab/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace bchlab {

Int WeightEnumerator::total() const {
    Int t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::uint64_t WeightEnumerator::min_positive_weight() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return n + 1;
}

std::uint64_t WeightEnumerator::dimension() const {
    Int t = total();
    std::uint64_t k = 0;
    while (t > 1) {
        require(t % Int(q) == 0, ErrorKind::NonIntegerResult, "total count is not a power of q");
        t /= Int(q);
        ++k;
    }
    require(t == 1, ErrorKind::NonIntegerResult, "total count is not a power of q");
    return k;
}

std::uint64_t bch_bound(const DefiningSet& T) {
    if (T.exponents.empty()) return 1;
    const std::uint64_t n = T.parity == ParityClass::Odd ? T.modulus / 2 : T.modulus;
    // presence of index s (cyclic: exponent s; negacyclic: exponent 1+2s)
    std::vector<bool> present(n, false);
    for (std::uint64_t e : T.exponents)
        present[T.parity == ParityClass::Odd ? (e - 1) / 2 : e] = true;
    if (std::all_of(present.begin(), present.end(), [](bool b) { return b; })) return n + 1;
    // longest cyclic run
    std::uint64_t best = 0, cur = 0;
    for (std::uint64_t s = 0; s < 2 * n; ++s) {
        if (present[s % n]) {
            ++cur;
            best = std::max(best, std::min(cur, n));
        } else {
            cur = 0;
        }
    }
    return best + 1;
}

namespace {

struct GeneratorRows {
    std::uint64_t n = 0;       // codeword length (including parity column if extended)
    std::uint64_t k = 0;
    std::vector<Sym> rows;     // k rows of length n: x^j * g (+ parity column)
    const Subfield* gf = nullptr;
};

GeneratorRows build_rows(const LinearCodeModel& model, Extend extend) {
    GeneratorRows R;
    R.gf = model.generator.gf();
    R.k = model.k;
    R.n = model.n + (extend == Extend::Yes ? 1 : 0);
    R.rows.assign(R.k * R.n, 0);
    const auto& g = model.generator.coeffs();
    for (std::uint64_t j = 0; j < R.k; ++j) {
        Sym* row = R.rows.data() + j * R.n;
        for (std::size_t i = 0; i < g.size(); ++i) row[i + j] = g[i];
        if (extend == Extend::Yes) {
            Sym sum = 0;
            for (std::uint64_t i = 0; i < model.n; ++i) sum = R.gf->add(sum, row[i]);
            row[model.n] = R.gf->neg(sum);
        }
    }
    return R;
}

// weight-tracked row update: c += scale * row
inline void add_scaled_row(const Subfield& gf, Sym* c, const Sym* row, Sym scale, std::uint64_t n,
                           std::uint64_t& weight) {
    if (!scale) return;
    for (std::uint64_t i = 0; i < n; ++i) {
        Sym r = row[i];
        if (!r) continue;
        Sym old = c[i];
        Sym nw = gf.add(old, gf.mul(scale, r));
        c[i] = nw;
        weight += static_cast<std::uint64_t>(nw != 0) - static_cast<std::uint64_t>(old != 0);
    }
}

// Enumerate all q^k combinations with the low `digits` positions free and the
// rest fixed by `prefix`; counts indexed by weight.
void enumerate_chunk(const GeneratorRows& R, std::uint64_t freeDigits, std::uint64_t prefixIndex,
                     std::vector<std::uint64_t>& counts) {
    const Subfield& gf = *R.gf;
    const std::uint64_t q = gf.q();
    const std::uint64_t n = R.n;
    std::vector<Sym> c(n, 0);
    std::uint64_t weight = 0;
    // fixed prefix: digits freeDigits..k-1
    std::uint64_t p = prefixIndex;
    for (std::uint64_t j = freeDigits; j < R.k; ++j) {
        add_scaled_row(gf, c.data(), R.rows.data() + j * n, static_cast<Sym>(p % q), n, weight);
        p /= q;
    }
    // delta rows: deltaRow[j][d] = (elem[(d+1)%q] - elem[d]) * row_j, encoded as scales
    std::vector<Sym> deltaScale(q);
    for (std::uint64_t d = 0; d < q; ++d)
        deltaScale[d] = gf.sub(static_cast<Sym>((d + 1) % q), static_cast<Sym>(d));

    std::vector<std::uint16_t> digit(freeDigits, 0);
    counts[weight] += 1;
    std::uint64_t steps = 1;
    for (std::uint64_t j = 0; j < freeDigits; ++j) steps *= q;
    for (std::uint64_t it = 1; it < steps; ++it) {
        std::uint64_t j = 0;
        while (digit[j] == q - 1) {
            add_scaled_row(gf, c.data(), R.rows.data() + j * n, deltaScale[q - 1], n, weight);
            digit[j] = 0;
            ++j;
        }
        add_scaled_row(gf, c.data(), R.rows.data() + j * n, deltaScale[digit[j]], n, weight);
        ++digit[j];
        counts[weight] += 1;
    }
}

WeightEnumerator finish(const GeneratorRows& R, std::vector<std::uint64_t>&& counts) {
    WeightEnumerator W;
    W.n = R.n;
    W.q = R.gf->q();
    for (std::uint64_t w = 0; w < counts.size(); ++w)
        if (counts[w]) W.counts[w] = Int(counts[w]);
    return W;
}

void check_budget(const LinearCodeModel& model, const Budget& budget) {
    Int words = ipow(Int(model.generator.gf()->q()), static_cast<unsigned>(model.k));
    require(words <= Int(budget.enumeration), ErrorKind::BudgetExceeded,
            "q^k exceeds the enumeration budget");
}

}  // namespace

WeightEnumerator weight_enumerator_serial(const LinearCodeModel& model, const Budget& budget, Extend extend) {
    check_budget(model, budget);
    GeneratorRows R = build_rows(model, extend);
    const Subfield& gf = *R.gf;
    const std::uint64_t q = gf.q();
    std::uint64_t total = 1;
    for (std::uint64_t j = 0; j < R.k; ++j) total *= q;
    std::vector<std::uint64_t> counts(R.n + 1, 0);
    std::vector<Sym> c(R.n);
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        std::fill(c.begin(), c.end(), 0);
        std::uint64_t v = msg;
        for (std::uint64_t j = 0; j < R.k; ++j) {
            Sym s = static_cast<Sym>(v % q);
            v /= q;
            if (s) {
                const Sym* row = R.rows.data() + j * R.n;
                for (std::uint64_t i = 0; i < R.n; ++i) c[i] = gf.add(c[i], gf.mul(s, row[i]));
            }
        }
        std::uint64_t w = 0;
        for (Sym s : c) w += s != 0;
        counts[w] += 1;
    }
    return finish(R, std::move(counts));
}

WeightEnumerator weight_enumerator_exhaustive(const LinearCodeModel& model, const Budget& budget,
                                              Extend extend) {
    check_budget(model, budget);
    GeneratorRows R = build_rows(model, extend);
    const std::uint64_t q = R.gf->q();

    // enough prefix chunks to keep every thread busy
    std::uint64_t prefixDigits = 0, chunks = 1;
    const std::uint64_t want = 4u * static_cast<std::uint64_t>(omp_get_max_threads());
    while (prefixDigits < R.k && chunks < want) {
        chunks *= q;
        ++prefixDigits;
    }
    const std::uint64_t freeDigits = R.k - prefixDigits;

    std::vector<std::vector<std::uint64_t>> partial(chunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        std::vector<std::uint64_t> counts(R.n + 1, 0);
        enumerate_chunk(R, freeDigits, static_cast<std::uint64_t>(c), counts);
        partial[static_cast<std::size_t>(c)] = std::move(counts);
    }
    std::vector<std::uint64_t> counts(R.n + 1, 0);
    for (const auto& part : partial)
        for (std::uint64_t w = 0; w <= R.n; ++w) counts[w] += part[w];
    return finish(R, std::move(counts));
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& W) {
    const std::uint64_t n = W.n, q = W.q;
    const std::uint64_t k = W.dimension();
    const Int qk = ipow(Int(q), static_cast<unsigned>(k));
    // coefficients of sum_w A_w (1-z)^w (1+(q-1)z)^(n-w)
    std::vector<Int> acc(n + 1, 0);
    for (const auto& [w, Aw] : W.counts) {
        if (Aw == 0) continue;
        require(w <= n, ErrorKind::NonIntegerResult, "weight beyond length");
        std::vector<Int> term(n + 1, 0);
        for (std::uint64_t i = 0; i <= w; ++i) {
            Int a = binomial(w, i);
            if (i % 2 == 1) a = -a;
            for (std::uint64_t j = 0; j <= n - w; ++j) {
                term[i + j] += a * binomial(n - w, j) * ipow(Int(q - 1), j);
            }
        }
        for (std::uint64_t t = 0; t <= n; ++t) acc[t] += Aw * term[t];
    }
    WeightEnumerator out;
    out.n = n;
    out.q = q;
    for (std::uint64_t w = 0; w <= n; ++w) {
        require(acc[w] % qk == 0, ErrorKind::NonIntegerResult, "transform is not integral");
        Int c = acc[w] / qk;
        require(c >= 0, ErrorKind::NonIntegerResult, "transform produced a negative count");
        if (c > 0) out.counts[w] = c;
    }
    return out;
}

DistanceResult min_distance(const LinearCodeModel& model, const Budget& budget) {
    if (model.k == 0) return {model.n + 1, DistanceCertificate::Exact};  // zero code convention
    const std::uint64_t q = model.generator.gf()->q();
    Int direct = ipow(Int(q), static_cast<unsigned>(model.k));
    Int viaDual = ipow(Int(q), static_cast<unsigned>(model.n - model.k));
    if (direct <= Int(budget.enumeration)) {
        return {weight_enumerator_exhaustive(model, budget).min_positive_weight(), DistanceCertificate::Exact};
    }
    if (viaDual <= Int(budget.enumeration)) {
        WeightEnumerator dualW = weight_enumerator_exhaustive(dual_code(model), budget);
        return {macwilliams_transform(dualW).min_positive_weight(), DistanceCertificate::Exact};
    }
    return {bch_bound(model.definingSet), DistanceCertificate::LowerBoundOnly};
}

SpherePackingResult sphere_packing_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    require(k <= n && d >= 1 && d <= n, ErrorKind::OutOfRange, "need 0 <= k <= n and 1 <= d <= n");
    SpherePackingResult r;
    r.oddLhs = 0;
    for (std::uint64_t i = 0; i <= (d - 1) / 2; ++i) r.oddLhs += ipow(Int(q - 1), i) * binomial(n, i);
    r.oddRhs = ipow(Int(q), static_cast<unsigned>(n - k));
    r.oddFeasible = r.oddLhs <= r.oddRhs;
    if (d % 2 == 0) {
        r.hasEvenClause = true;
        r.evenLhs = 0;
        for (std::uint64_t i = 0; i <= (d - 2) / 2; ++i) r.evenLhs += ipow(Int(q - 1), i) * binomial(n - 1, i);
        require(n - k >= 1, ErrorKind::OutOfRange, "even clause needs k < n");
        r.evenRhs = ipow(Int(q), static_cast<unsigned>(n - k - 1));
        r.evenFeasible = r.evenLhs <= r.evenRhs;
    }
    return r;
}

DuallyBchResult is_dually_bch(const LinearCodeModel& model) {
    require(model.lambda == 1, ErrorKind::SpecMismatch, "dually-BCH decision applies to cyclic models");
    return is_dually_bch(model.definingSet, model.n);
}

DuallyBchResult is_dually_bch(const DefiningSet& T, std::uint64_t n) {
    require(T.parity == ParityClass::All && T.modulus == n, ErrorKind::SpecMismatch,
            "dually-BCH decision applies to cyclic defining sets");
    DefiningSet Td = dual_defining_set(T);
    if (Td.exponents.empty()) return {false, 0, 0};
    // full dual set would need delta' = n + 1, outside the [2, n] definition
    if (Td.exponents.size() == n) return {false, 0, 0};
    // the sorted exponents must form one cyclic run: exactly one gap != 1
    std::uint64_t gaps = 0, start = 0;
    for (std::size_t i = 0; i < Td.exponents.size(); ++i) {
        std::uint64_t cur = Td.exponents[i];
        std::uint64_t nxt = Td.exponents[(i + 1) % Td.exponents.size()];
        if ((nxt + n - cur) % n != 1) {
            ++gaps;
            start = nxt;
        }
    }
    if (gaps != 1) return {false, 0, 0};
    return {true, start, static_cast<std::uint64_t>(Td.exponents.size() + 1)};
}

}  // namespace bchlab
