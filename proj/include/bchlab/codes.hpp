#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bchlab/cyclotomic.hpp"
#include "bchlab/field.hpp"
#include "bchlab/poly.hpp"

namespace bchlab {

/// The tuple (n, lambda, delta, b); lambda = +1 cyclic, -1 negacyclic.
struct CodeSpec {
    std::uint64_t n = 0;
    int lambda = 1;
    std::uint64_t delta = 2;
    std::int64_t b = 0;
};

enum class ParityClass { All, Odd };

/// Union of q-cyclotomic cosets modulo N (= n cyclic, 2n negacyclic);
/// exponents sorted, closed under multiplication by q.
struct DefiningSet {
    std::uint64_t modulus = 0;
    ParityClass parity = ParityClass::All;
    std::vector<std::uint64_t> exponents;

    std::size_t size() const { return exponents.size(); }
    bool contains(std::uint64_t e) const;
};

/// A realized constacyclic code: generator polynomial, dimension, defining set.
struct LinearCodeModel {
    std::optional<CodeSpec> spec;  ///< empty for special constructions
    std::shared_ptr<const ExtensionField> field;
    Poly generator;
    std::uint64_t n = 0;
    int lambda = 1;
    std::uint64_t k = 0;
    DefiningSet definingSet;
};

/// Checks n = (q^m - 1)/2 and 2 <= delta <= n for the given field.
void validate_spec(const CodeSpec& spec, const ExtensionField& field);

DefiningSet defining_set(const CodeSpec& spec, const ExtensionField& field);

/// Field-free defining set from (q, n, lambda, delta, b); pure coset arithmetic.
DefiningSet defining_set_raw(std::uint64_t q, std::uint64_t n, int lambda, std::uint64_t delta,
                             std::int64_t b);

/// Monic minimal polynomial over GF(q) of gamma^exponent, where gamma is the
/// canonical primitive N-th root of unity (N in {n, 2n}).
Poly minimal_polynomial(const ExtensionField& field, std::uint64_t N, std::uint64_t exponent);

/// Realizes the code: g = product of minimal polynomials over the distinct
/// coset leaders of T (coprime for distinct cosets, so the product is the lcm).
LinearCodeModel generator_polynomial(const CodeSpec& spec, std::shared_ptr<const ExtensionField> field);

/// h(x) = (x^n - lambda)/g(x); exact by construction.
Poly parity_check_polynomial(const LinearCodeModel& model);

/// Complement-negate rule: cyclic T^perp = -(Z_n \ T); negacyclic restricted to
/// odd residues modulo 2n dito.
DefiningSet dual_defining_set(const DefiningSet& T);
DefiningSet dual_defining_set(const LinearCodeModel& model);

/// The dual as a realized code (generator from T^perp).
LinearCodeModel dual_code(const LinearCodeModel& model);

/// Appends the negated coordinate sum; output sums to zero.
std::vector<Sym> extended_codeword(const Subfield& gf, const std::vector<Sym>& word);

/// Trace-representation codeword: c_l = sum_t Tr_{q^{m_t}/q}(a_t * beta^{-l i_t}),
/// beta the primitive n-th root. Exponents i_t must be pairwise non-conjugate;
/// a_t must lie in GF(q^{m_t}), m_t = |C_{i_t}^n|.
std::vector<Sym> trace_codeword(const ExtensionField& field, const std::vector<std::uint64_t>& rootExponents,
                                const std::vector<FieldElement>& coefficients);

/// The negacyclic code with check polynomial M_1 * M_{delta_1'} and the claims
/// attached to it: dim 2m, d >= ((q-2)q^{m-1} - 1)/2, dual [n, n-2m, 3..5].
struct SparseCheckCode {
    LinearCodeModel code;
    Int dLowerClaim;
    std::uint64_t dualDimensionClaim = 0;
    std::uint64_t dualDLowerClaim = 3;
    std::uint64_t dualDUpperClaim = 5;
};
SparseCheckCode theorem22_code(std::shared_ptr<const ExtensionField> field);

/// Low-weight witness polynomial over GF(q^m):
///   f = (x^n + 1)/(x^{n/delta_a} + 1) * prod_{t=1..T} (x^{n/(delta_a(q-1))} - beta^{n(2t-1)/(q-1)}),
/// T = (k-1)/2 for odd k, k/2 for even k. Requires odd delta_a (the quotient is
/// not a polynomial otherwise), (q-1) | n, delta_a | n/(q-1), 1 <= k <= q-1.
/// The product factors can leave GF(q); weight and root-vanishing hold anyway.
BigPoly theorem24_codeword(const ExtensionField& field, std::uint64_t delta_a, std::uint64_t kParam);

}  // namespace bchlab
