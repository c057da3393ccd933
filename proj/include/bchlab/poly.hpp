#pragma once

#include <string>
#include <vector>

#include "bchlab/field.hpp"

namespace bchlab {

/// Univariate polynomial over GF(q), ascending coefficients, normalized
/// (no trailing zeros; the zero polynomial has an empty coefficient vector).
class Poly {
  public:
    Poly() = default;
    Poly(const Subfield* gf, std::vector<Sym> coeffs) : gf_(gf), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Subfield* gf) { return Poly(gf, {}); }
    static Poly one(const Subfield* gf) { return Poly(gf, {1}); }
    /// x^d with coefficient c.
    static Poly monomial(const Subfield* gf, std::size_t d, Sym coeff = 1);
    /// x^n - lambda (lambda = +1 or -1), the constacyclic ring modulus.
    static Poly x_n_minus_lambda(const Subfield* gf, std::uint64_t n, int lambda);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Sym>& coeffs() const { return c_; }
    Sym coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const Subfield* gf() const { return gf_; }

    Poly add(const Poly& other) const;
    Poly sub(const Poly& other) const;
    Poly mul(const Poly& other) const;
    Poly scale(Sym s) const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact division; throws NonIntegerResult if a remainder survives.
    Poly divide_exact(const Poly& divisor) const;

    /// Evaluate at a big-field point (coefficients lifted through the subfield).
    FieldElement eval(const ExtensionField& field, const FieldElement& x) const;

    /// Hamming weight of the coefficient vector.
    std::uint64_t weight() const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Subfield* gf_ = nullptr;
    std::vector<Sym> c_;
};

/// Polynomial over the big field GF(q^m); used where coefficients can leave GF(q).
struct BigPoly {
    std::vector<FieldElement> c;  // ascending

    std::uint64_t weight() const;
    FieldElement eval(const ExtensionField& field, const FieldElement& x) const;
    /// Evaluation at alpha^t, summing only the nonzero terms; O(weight).
    FieldElement eval_at_alpha_pow(const ExtensionField& field, std::int64_t t) const;
};

}  // namespace bchlab
