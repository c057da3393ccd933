#include "bchlab/field.hpp"

#include <algorithm>
#include <numeric>

namespace bchlab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ConjugateRoots: return "ConjugateRoots";
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::NonIntegerResult: return "NonIntegerResult";
        case ErrorKind::ConditionViolated: return "ConditionViolated";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p), ascending coefficients, used only during
// modulus search. Elements are plain integers in [0, p).
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
    PPoly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    // reduce mod monic f
    const std::size_t D = f.size() - 1;
    for (std::size_t i = r.size(); i-- > D;) {
        std::uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < D; ++j)
            r[i - D + j] = static_cast<std::uint32_t>((r[i - D + j] + (p - f[j]) * c) % p);
    }
    r.resize(D);
    return r;
}

PPoly ppowmod(PPoly base, Int e, const PPoly& f, std::uint64_t p) {
    PPoly r(f.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = pmul_mod(r, base, f, p);
        base = pmul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead = b.back();
        std::uint64_t inv = 1;
        for (std::uint64_t k = 0; k < p - 2; ++k) inv = inv * lead % p;  // lead^(p-2)
        while (a.size() >= b.size()) {
            std::uint64_t c = std::uint64_t(a.back()) * inv % p;
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[off + j] = static_cast<std::uint32_t>((a[off + j] + (p - b[j]) * c) % p);
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const PPoly& f, std::uint64_t p) {
    const unsigned D = static_cast<unsigned>(f.size() - 1);
    PPoly x(D, 0);
    if (D == 1) return true;
    x[1] = 1;
    // x^(p^D) == x mod f
    PPoly t = ppowmod(x, ipow(Int(p), D), f, p);
    PPoly diff = t;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_factors(D)) {
        PPoly u = ppowmod(x, ipow(Int(p), static_cast<unsigned>(D / r)), f, p);
        u.resize(std::max<std::size_t>(u.size(), 2), 0);
        u[1] = static_cast<std::uint32_t>((u[1] + p - 1) % p);
        PPoly g = pgcd(u, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool root_is_primitive(const PPoly& f, std::uint64_t p, std::uint64_t order) {
    PPoly x(f.size() - 1, 0);
    if (f.size() == 2) {
        // linear: root is -c0
        std::uint64_t r = (p - f[0]) % p;
        if (r == 0) return false;
        std::uint64_t v = 1;
        for (std::uint64_t k = 1; k <= order; ++k) {
            v = v * r % p;
            if (v == 1) return k == order;
        }
        return false;
    }
    x[1] = 1;
    for (std::uint64_t r : prime_factors(order)) {
        PPoly t = ppowmod(x, Int(order / r), f, p);
        ptrim(t);
        if (t.size() == 1 && t[0] == 1) return false;
    }
    PPoly t = ppowmod(x, Int(order), f, p);
    ptrim(t);
    return t.size() == 1 && t[0] == 1;
}

}  // namespace

PrimePower PrimePower::make(std::uint64_t p, unsigned e) {
    require(p >= 3 && p % 2 == 1 && is_prime(p), ErrorKind::OutOfRange, "p must be an odd prime >= 3");
    require(e >= 1, ErrorKind::OutOfRange, "exponent must be positive");
    Int q = ipow(Int(p), e);
    PrimePower pp;
    pp.p = p;
    pp.e = e;
    pp.q = to_u64(q, "q = p^e");
    return pp;
}

PrimePower PrimePower::from_q(std::uint64_t q) {
    require(q >= 3 && q % 2 == 1, ErrorKind::OutOfRange, "q must be an odd prime power >= 3");
    std::uint64_t p = 0;
    for (std::uint64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return make(q, 1);
    unsigned e = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    require(v == 1, ErrorKind::OutOfRange, "q is not a prime power");
    return make(p, e);
}

std::vector<Sym> find_primitive_polynomial(std::uint64_t p, unsigned D, const Budget& budget) {
    require(D >= 1, ErrorKind::OutOfRange, "degree must be >= 1");
    require(p >= 3 && is_prime(p), ErrorKind::OutOfRange, "p must be an odd prime");
    Int sizeI = ipow(Int(p), D);
    require(sizeI <= Int(budget.fieldTable), ErrorKind::BudgetExceeded, "p^D exceeds the table budget");
    const std::uint64_t size = to_u64(sizeI);
    const std::uint64_t order = size - 1;

    // v encodes the tuple (c_{D-1},...,c_0) as a base-p integer.
    for (std::uint64_t v = 0; v < size; ++v) {
        PPoly f(D + 1, 0);
        f[D] = 1;
        std::uint64_t t = v;
        for (unsigned i = 0; i < D; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (f[0] == 0) continue;
        if (!is_irreducible(f, p)) continue;
        if (!root_is_primitive(f, p, order)) continue;
        std::vector<Sym> out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<Sym>(f[i]);
        return out;
    }
    fail(ErrorKind::Internal, "no primitive polynomial found");  // unreachable for valid p, D
}

std::shared_ptr<const ExtensionField> ExtensionField::build(PrimePower base, unsigned m, const Budget& budget) {
    require(m >= 1, ErrorKind::OutOfRange, "m must be >= 1");
    const unsigned D = base.e * m;
    Int sizeI = ipow(Int(base.p), D);
    require(sizeI <= Int(budget.fieldTable), ErrorKind::BudgetExceeded, "field size exceeds the table budget");

    auto field = std::shared_ptr<ExtensionField>(new ExtensionField());
    field->base_ = base;
    field->m_ = m;
    field->D_ = D;
    field->size_ = to_u64(sizeI);
    field->modulus_ = find_primitive_polynomial(base.p, D, budget);

    const std::uint64_t p = base.p;
    const std::uint64_t size = field->size_;
    field->expTable_.assign(size - 1, 0);
    field->logTable_.assign(size, -1);

    // walk alpha^k as coefficient vectors; multiply-by-x with reduction
    std::vector<std::uint32_t> cur(D, 0);
    cur[0] = 1;
    std::vector<std::uint64_t> pw(D + 1, 1);
    for (unsigned i = 1; i <= D; ++i) pw[i] = pw[i - 1] * p;
    for (std::uint64_t k = 0; k < size - 1; ++k) {
        std::uint64_t enc = 0;
        for (unsigned i = 0; i < D; ++i) enc += cur[i] * pw[i];
        require(field->logTable_[enc] < 0, ErrorKind::Internal, "alpha order defect during table build");
        field->expTable_[k] = static_cast<std::uint32_t>(enc);
        field->logTable_[enc] = static_cast<std::int64_t>(k);
        // cur *= x
        std::uint32_t lead = cur[D - 1];
        for (unsigned i = D; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (lead) {
            for (unsigned i = 0; i < D; ++i)
                cur[i] = static_cast<std::uint32_t>((cur[i] + (p - field->modulus_[i]) * std::uint64_t(lead)) % p);
        }
    }
    require(cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](std::uint32_t c) { return c == 0; }),
            ErrorKind::Internal, "alpha does not have order q^m - 1");

    // subfield GF(q) = {0} union {alpha^(j * (q^m-1)/(q-1))}
    Subfield& sf = field->subfield_;
    sf.q_ = base.q;
    sf.indexByEncoding_.assign(size, -1);
    const std::uint64_t step = (size - 1) / (base.q - 1);
    std::vector<std::pair<std::uint64_t, FieldElement>> elems;
    elems.emplace_back(0, field->zero());
    for (std::uint64_t j = 0; j < base.q - 1; ++j) {
        std::uint64_t k = j * step;
        elems.emplace_back(field->expTable_[k], FieldElement(field.get(), static_cast<std::int64_t>(k)));
    }
    std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    sf.elements_.resize(base.q);
    for (std::uint64_t i = 0; i < base.q; ++i) {
        sf.elements_[i] = elems[i].second;
        sf.indexByEncoding_[elems[i].first] = static_cast<std::int32_t>(i);
    }
    require(sf.elements_[0].is_zero() && sf.elements_[1] == field->one(), ErrorKind::Internal,
            "canonical subfield ordering must start 0, 1");

    const std::uint64_t q = base.q;
    sf.addT_.resize(q * q);
    sf.mulT_.resize(q * q);
    sf.negT_.resize(q);
    sf.invT_.resize(q);
    for (std::uint64_t i = 0; i < q; ++i) {
        sf.negT_[i] = sf.index_of(field->neg(sf.elements_[i]));
        if (i) sf.invT_[i] = sf.index_of(field->inv(sf.elements_[i]));
        for (std::uint64_t j = 0; j < q; ++j) {
            sf.addT_[i * q + j] = sf.index_of(field->add(sf.elements_[i], sf.elements_[j]));
            sf.mulT_[i * q + j] = sf.index_of(field->mul(sf.elements_[i], sf.elements_[j]));
        }
    }
    return field;
}

Sym Subfield::index_of(const FieldElement& x) const {
    const ExtensionField* f = elements_[0].owner() ? elements_[0].owner() : elements_[1].owner();
    std::int32_t idx = indexByEncoding_[f->encoding(x)];
    require(idx >= 0, ErrorKind::FieldMismatch, "element does not lie in GF(q)");
    return static_cast<Sym>(idx);
}

FieldElement ExtensionField::alpha_pow(std::int64_t k) const {
    const std::int64_t n = static_cast<std::int64_t>(size_ - 1);
    std::int64_t r = k % n;
    if (r < 0) r += n;
    return {this, r};
}

std::uint64_t ExtensionField::encoding(const FieldElement& x) const {
    check_owner(x);
    return x.is_zero() ? 0 : expTable_[x.log()];
}

FieldElement ExtensionField::from_encoding(std::uint64_t v) const {
    require(v < size_, ErrorKind::OutOfRange, "encoding out of range");
    return {this, logTable_[v]};
}

FieldElement ExtensionField::add(const FieldElement& x, const FieldElement& y) const {
    check_owner(x);
    check_owner(y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    std::uint64_t a = expTable_[x.log()], b = expTable_[y.log()];
    const std::uint64_t p = base_.p;
    std::uint64_t enc = 0, mul = 1;
    for (unsigned i = 0; i < D_; ++i) {
        enc += (a % p + b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return {this, logTable_[enc]};
}

FieldElement ExtensionField::neg(const FieldElement& x) const {
    check_owner(x);
    if (x.is_zero()) return x;
    // -1 = alpha^((q^m-1)/2) for odd q
    return {this, static_cast<std::int64_t>((x.log() + (size_ - 1) / 2) % (size_ - 1))};
}

FieldElement ExtensionField::sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }

FieldElement ExtensionField::mul(const FieldElement& x, const FieldElement& y) const {
    check_owner(x);
    check_owner(y);
    if (x.is_zero() || y.is_zero()) return zero();
    return {this, static_cast<std::int64_t>((x.log() + y.log()) % static_cast<std::int64_t>(size_ - 1))};
}

FieldElement ExtensionField::inv(const FieldElement& x) const {
    check_owner(x);
    require(!x.is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
    return {this, static_cast<std::int64_t>((size_ - 1 - x.log()) % (size_ - 1))};
}

FieldElement ExtensionField::pow(const FieldElement& x, std::int64_t k) const {
    check_owner(x);
    if (x.is_zero()) {
        require(k > 0, ErrorKind::DivisionByZero, "0^k for k <= 0");
        return zero();
    }
    const std::int64_t n = static_cast<std::int64_t>(size_ - 1);
    std::int64_t e = static_cast<std::int64_t>((__int128(x.log()) * (k % n)) % n);
    if (e < 0) e += n;
    return {this, e};
}

FieldElement ExtensionField::trace_to_subfield(const FieldElement& x, unsigned r) const {
    check_owner(x);
    require(r >= 1 && D_ % r == 0, ErrorKind::OutOfRange, "subfield degree must divide the field degree");
    if (x.is_zero()) return x;
    const std::uint64_t qr = to_u64(ipow(Int(base_.p), r) % Int(size_ - 1));
    FieldElement acc = zero();
    std::uint64_t e = static_cast<std::uint64_t>(x.log());
    const std::uint64_t n = size_ - 1;
    std::uint64_t cur = e;
    for (unsigned i = 0; i < D_ / r; ++i) {
        acc = add(acc, FieldElement(this, static_cast<std::int64_t>(cur)));
        cur = static_cast<std::uint64_t>((__int128(cur) * qr) % n);
    }
    return acc;
}

bool ExtensionField::in_subextension(const FieldElement& x, unsigned s) const {
    check_owner(x);
    require(s >= 1 && m_ % s == 0, ErrorKind::OutOfRange, "s must divide m");
    if (x.is_zero()) return true;
    // x in GF(q^s) iff x^(q^s) = x
    Int qs = ipow(Int(base_.q), s);
    std::uint64_t r = to_u64(qs % Int(size_ - 1));
    std::uint64_t e = static_cast<std::uint64_t>(x.log());
    return static_cast<std::uint64_t>((__int128(e) * r) % (size_ - 1)) == e;
}

Sym ExtensionField::trace_from_subextension(const FieldElement& x, unsigned s) const {
    check_owner(x);
    require(in_subextension(x, s), ErrorKind::FieldMismatch, "element not in GF(q^s)");
    if (x.is_zero()) return 0;
    Int qI = Int(base_.q);
    const std::uint64_t n = size_ - 1;
    std::uint64_t qmod = to_u64(qI % Int(n));
    FieldElement acc = zero();
    std::uint64_t cur = static_cast<std::uint64_t>(x.log());
    for (unsigned i = 0; i < s; ++i) {
        acc = add(acc, FieldElement(this, static_cast<std::int64_t>(cur)));
        cur = static_cast<std::uint64_t>((__int128(cur) * qmod) % n);
    }
    return subfield_.index_of(acc);
}

}  // namespace bchlab
