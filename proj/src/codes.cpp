#include "bchlab/codes.hpp"

#include <algorithm>
#include <set>

namespace bchlab {

bool DefiningSet::contains(std::uint64_t e) const {
    return std::binary_search(exponents.begin(), exponents.end(), e % modulus);
}

void validate_spec(const CodeSpec& spec, const ExtensionField& field) {
    require(spec.lambda == 1 || spec.lambda == -1, ErrorKind::SpecMismatch, "lambda must be +1 or -1");
    require(spec.n == (field.size() - 1) / 2, ErrorKind::SpecMismatch, "n must equal (q^m - 1)/2 for the field");
    require(spec.delta >= 2 && spec.delta <= spec.n, ErrorKind::SpecMismatch, "delta must satisfy 2 <= delta <= n");
}

DefiningSet defining_set_raw(std::uint64_t q, std::uint64_t n, int lambda, std::uint64_t delta,
                             std::int64_t b) {
    require(lambda == 1 || lambda == -1, ErrorKind::SpecMismatch, "lambda must be +1 or -1");
    require(delta >= 2 && delta <= n, ErrorKind::SpecMismatch, "delta must satisfy 2 <= delta <= n");
    DefiningSet T;
    T.modulus = lambda == 1 ? n : 2 * n;
    T.parity = lambda == 1 ? ParityClass::All : ParityClass::Odd;
    const std::int64_t N = static_cast<std::int64_t>(T.modulus);
    std::vector<bool> mark(T.modulus, false);
    for (std::int64_t i = b; i <= b + static_cast<std::int64_t>(delta) - 2; ++i) {
        std::int64_t e = lambda == 1 ? i : 1 + 2 * i;
        std::uint64_t e0 = static_cast<std::uint64_t>(((e % N) + N) % N);
        while (!mark[e0]) {
            mark[e0] = true;
            e0 = static_cast<std::uint64_t>((__int128(e0) * q) % T.modulus);
        }
    }
    for (std::uint64_t t = 0; t < T.modulus; ++t)
        if (mark[t]) T.exponents.push_back(t);
    return T;
}

DefiningSet defining_set(const CodeSpec& spec, const ExtensionField& field) {
    validate_spec(spec, field);
    return defining_set_raw(field.base().q, spec.n, spec.lambda, spec.delta, spec.b);
}

Poly minimal_polynomial(const ExtensionField& field, std::uint64_t N, std::uint64_t exponent) {
    require((field.size() - 1) % N == 0, ErrorKind::OutOfRange, "N must divide q^m - 1");
    const std::uint64_t step = (field.size() - 1) / N;
    Coset orbit = coset(N, field.base().q, exponent % N);
    // product of (x - gamma^s) over the orbit, computed in the big field
    std::vector<FieldElement> poly{field.one()};
    for (std::uint64_t s : orbit.members) {
        FieldElement root = field.alpha_pow(static_cast<std::int64_t>(step * s));
        std::vector<FieldElement> next(poly.size() + 1, field.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], poly[i]);
            next[i] = field.add(next[i], field.mul(field.neg(root), poly[i]));
        }
        poly = std::move(next);
    }
    const Subfield& gf = field.gf_q();
    std::vector<Sym> coeffs(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) coeffs[i] = gf.index_of(poly[i]);
    return Poly(&gf, std::move(coeffs));
}

LinearCodeModel generator_polynomial(const CodeSpec& spec, std::shared_ptr<const ExtensionField> field) {
    DefiningSet T = defining_set(spec, *field);
    const Subfield& gf = field->gf_q();
    // distinct coset leaders of T
    std::set<std::uint64_t> leaders;
    for (std::uint64_t e : T.exponents) leaders.insert(coset_leader(T.modulus, field->base().q, e));
    Poly g = Poly::one(&gf);
    for (std::uint64_t L : leaders) g = g.mul(minimal_polynomial(*field, T.modulus, L));

    LinearCodeModel model;
    model.spec = spec;
    model.field = std::move(field);
    model.n = spec.n;
    model.lambda = spec.lambda;
    model.k = spec.n - T.size();
    model.definingSet = std::move(T);
    model.generator = std::move(g);
    require(model.generator.degree() == static_cast<std::int64_t>(model.definingSet.size()),
            ErrorKind::Internal, "deg g must equal |T|");
    return model;
}

Poly parity_check_polynomial(const LinearCodeModel& model) {
    const Subfield& gf = model.field->gf_q();
    return Poly::x_n_minus_lambda(&gf, model.n, model.lambda).divide_exact(model.generator);
}

DefiningSet dual_defining_set(const DefiningSet& T) {
    DefiningSet D;
    const std::uint64_t N = T.modulus;
    D.modulus = N;
    D.parity = T.parity;
    for (std::uint64_t t = 0; t < N; ++t) {
        if (D.parity == ParityClass::Odd && t % 2 == 0) continue;
        if (!T.contains(t)) D.exponents.push_back((N - t) % N);
    }
    std::sort(D.exponents.begin(), D.exponents.end());
    return D;
}

DefiningSet dual_defining_set(const LinearCodeModel& model) { return dual_defining_set(model.definingSet); }

LinearCodeModel dual_code(const LinearCodeModel& model) {
    DefiningSet Td = dual_defining_set(model);
    const Subfield& gf = model.field->gf_q();
    std::set<std::uint64_t> leaders;
    for (std::uint64_t e : Td.exponents) leaders.insert(coset_leader(Td.modulus, model.field->base().q, e));
    Poly g = Poly::one(&gf);
    for (std::uint64_t L : leaders) g = g.mul(minimal_polynomial(*model.field, Td.modulus, L));
    LinearCodeModel dual;
    dual.field = model.field;
    dual.n = model.n;
    dual.lambda = model.lambda;  // for odd q, the dual of a negacyclic code is negacyclic
    dual.k = model.n - Td.size();
    dual.definingSet = std::move(Td);
    dual.generator = std::move(g);
    return dual;
}

std::vector<Sym> extended_codeword(const Subfield& gf, const std::vector<Sym>& word) {
    std::vector<Sym> out = word;
    Sym sum = 0;
    for (Sym s : word) sum = gf.add(sum, s);
    out.push_back(gf.neg(sum));
    return out;
}

std::vector<Sym> trace_codeword(const ExtensionField& field, const std::vector<std::uint64_t>& rootExponents,
                                const std::vector<FieldElement>& coefficients) {
    require(rootExponents.size() == coefficients.size(), ErrorKind::OutOfRange,
            "one coefficient per root exponent");
    const std::uint64_t n = (field.size() - 1) / 2;
    const std::uint64_t q = field.base().q;
    std::vector<std::uint64_t> leaders;
    std::vector<unsigned> degs;
    for (std::uint64_t i : rootExponents) {
        std::uint64_t L = coset_leader(n, q, i % n);
        require(std::find(leaders.begin(), leaders.end(), L) == leaders.end(), ErrorKind::ConjugateRoots,
                "root exponents share a cyclotomic coset");
        leaders.push_back(L);
        degs.push_back(static_cast<unsigned>(coset_size(n, q, i % n)));
    }
    for (std::size_t t = 0; t < coefficients.size(); ++t)
        require(field.in_subextension(coefficients[t], degs[t]), ErrorKind::FieldMismatch,
                "coefficient not in GF(q^{m_t})");

    const std::uint64_t betaStep = (field.size() - 1) / n;
    std::vector<Sym> word(n, 0);
    const Subfield& gf = field.gf_q();
    for (std::uint64_t l = 0; l < n; ++l) {
        Sym acc = 0;
        for (std::size_t t = 0; t < rootExponents.size(); ++t) {
            if (coefficients[t].is_zero()) continue;
            // a_t * beta^{-l * i_t}
            __int128 e = -static_cast<__int128>(l) * rootExponents[t] % n;
            FieldElement betaPow = field.alpha_pow(static_cast<std::int64_t>(e) * static_cast<std::int64_t>(betaStep));
            acc = gf.add(acc, field.trace_from_subextension(field.mul(coefficients[t], betaPow), degs[t]));
        }
        word[l] = acc;
    }
    return word;
}

SparseCheckCode theorem22_code(std::shared_ptr<const ExtensionField> field) {
    const unsigned m = field->m();
    require(m >= 3, ErrorKind::OutOfRange, "theorem requires m >= 3");
    const std::uint64_t q = field->base().q;
    const std::uint64_t n = (field->size() - 1) / 2;
    const std::uint64_t N = 2 * n;
    const std::uint64_t delta1p = to_u64(ipow(Int(q), m) - ipow(Int(q), m - 1) - 1);

    Poly h = minimal_polynomial(*field, N, 1).mul(minimal_polynomial(*field, N, coset_leader(N, q, delta1p)));
    const Subfield& gf = field->gf_q();
    Poly g = Poly::x_n_minus_lambda(&gf, n, -1).divide_exact(h);

    SparseCheckCode out;
    out.code.field = field;
    out.code.n = n;
    out.code.lambda = -1;
    out.code.k = static_cast<std::uint64_t>(h.degree());
    out.code.generator = std::move(g);
    // defining set = odd residues minus the two check cosets
    DefiningSet T;
    T.modulus = N;
    T.parity = ParityClass::Odd;
    Coset c1 = coset(N, q, 1), cd = coset(N, q, delta1p);
    std::set<std::uint64_t> skip(c1.members.begin(), c1.members.end());
    skip.insert(cd.members.begin(), cd.members.end());
    for (std::uint64_t t = 1; t < N; t += 2)
        if (!skip.count(t)) T.exponents.push_back(t);
    out.code.definingSet = std::move(T);

    out.dLowerClaim = ((Int(q) - 2) * ipow(Int(q), m - 1) - 1) / 2;
    out.dualDimensionClaim = n - 2 * m;
    return out;
}

BigPoly theorem24_codeword(const ExtensionField& field, std::uint64_t delta_a, std::uint64_t kParam) {
    const std::uint64_t q = field.base().q;
    const std::uint64_t n = (field.size() - 1) / 2;
    require(n % (q - 1) == 0, ErrorKind::DivisibilityViolation, "(q-1) must divide n");
    require(delta_a >= 1 && (n / (q - 1)) % delta_a == 0, ErrorKind::DivisibilityViolation,
            "delta_a must divide n/(q-1)");
    require(delta_a % 2 == 1, ErrorKind::DivisibilityViolation,
            "delta_a must be odd (x^{n/delta_a}+1 does not divide x^n+1 otherwise)");
    require(kParam >= 1 && kParam <= q - 1, ErrorKind::OutOfRange, "k must be in [1, q-1]");

    // (x^n + 1)/(x^{n/delta_a} + 1) = sum_{i<delta_a} (-1)^i x^{(n/delta_a) i}
    const std::uint64_t stride = n / delta_a;
    BigPoly f;
    f.c.assign(n - stride + 1, field.zero());
    for (std::uint64_t i = 0; i < delta_a; ++i)
        f.c[stride * i] = i % 2 == 0 ? field.one() : field.neg(field.one());

    const std::uint64_t rounds = kParam % 2 == 1 ? (kParam - 1) / 2 : kParam / 2;
    const std::uint64_t s = n / (delta_a * (q - 1));
    for (std::uint64_t t = 1; t <= rounds; ++t) {
        FieldElement beta = field.alpha_pow(static_cast<std::int64_t>(n / (q - 1) * (2 * t - 1)));
        BigPoly next;
        next.c.assign(f.c.size() + s, field.zero());
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            if (f.c[i].is_zero()) continue;
            next.c[i + s] = field.add(next.c[i + s], f.c[i]);
            next.c[i] = field.sub(next.c[i], field.mul(beta, f.c[i]));
        }
        f = std::move(next);
    }
    return f;
}

}  // namespace bchlab
