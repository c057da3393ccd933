#include "bchlab/poly.hpp"

#include <algorithm>

namespace bchlab {

Poly Poly::monomial(const Subfield* gf, std::size_t d, Sym coeff) {
    std::vector<Sym> c(d + 1, 0);
    c[d] = coeff;
    return Poly(gf, std::move(c));
}

Poly Poly::x_n_minus_lambda(const Subfield* gf, std::uint64_t n, int lambda) {
    require(lambda == 1 || lambda == -1, ErrorKind::OutOfRange, "lambda must be +1 or -1");
    std::vector<Sym> c(n + 1, 0);
    c[n] = 1;
    c[0] = lambda == 1 ? gf->neg(1) : Sym(1);
    return Poly(gf, std::move(c));
}

Poly Poly::add(const Poly& other) const {
    std::vector<Sym> r(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf_->add(coeff(i), other.coeff(i));
    return Poly(gf_, std::move(r));
}

Poly Poly::sub(const Poly& other) const {
    std::vector<Sym> r(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf_->sub(coeff(i), other.coeff(i));
    return Poly(gf_, std::move(r));
}

Poly Poly::mul(const Poly& other) const {
    if (is_zero() || other.is_zero()) return zero(gf_);
    std::vector<Sym> r(c_.size() + other.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            if (!other.c_[j]) continue;
            r[i + j] = gf_->add(r[i + j], gf_->mul(c_[i], other.c_[j]));
        }
    }
    return Poly(gf_, std::move(r));
}

Poly Poly::scale(Sym s) const {
    std::vector<Sym> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = gf_->mul(c_[i], s);
    return Poly(gf_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require(!divisor.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
    if (degree() < divisor.degree()) return {zero(gf_), *this};
    std::vector<Sym> rem = c_;
    std::vector<Sym> quot(c_.size() - divisor.c_.size() + 1, 0);
    const Sym leadInv = gf_->inv(divisor.c_.back());
    for (std::size_t i = quot.size(); i-- > 0;) {
        Sym c = gf_->mul(rem[i + divisor.c_.size() - 1], leadInv);
        quot[i] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j)
            rem[i + j] = gf_->sub(rem[i + j], gf_->mul(c, divisor.c_[j]));
    }
    return {Poly(gf_, std::move(quot)), Poly(gf_, std::move(rem))};
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    require(r.is_zero(), ErrorKind::NonIntegerResult, "polynomial division leaves a remainder");
    return q;
}

FieldElement Poly::eval(const ExtensionField& field, const FieldElement& x) const {
    FieldElement acc = field.zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = field.mul(acc, x);
        if (c_[i]) acc = field.add(acc, gf_->lift(c_[i]));
    }
    return acc;
}

std::uint64_t Poly::weight() const {
    return static_cast<std::uint64_t>(std::count_if(c_.begin(), c_.end(), [](Sym s) { return s != 0; }));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i >= 1) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

std::uint64_t BigPoly::weight() const {
    return static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](const FieldElement& e) { return !e.is_zero(); }));
}

FieldElement BigPoly::eval_at_alpha_pow(const ExtensionField& field, std::int64_t t) const {
    const std::int64_t order = static_cast<std::int64_t>(field.alpha_order());
    FieldElement acc = field.zero();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        std::int64_t e = static_cast<std::int64_t>((__int128(t) * static_cast<std::int64_t>(j)) % order);
        acc = field.add(acc, field.mul(c[j], field.alpha_pow(e)));
    }
    return acc;
}

FieldElement BigPoly::eval(const ExtensionField& field, const FieldElement& x) const {
    FieldElement acc = field.zero();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = field.mul(acc, x);
        acc = field.add(acc, c[i]);
    }
    return acc;
}

}  // namespace bchlab
