#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bchlab/bigint.hpp"
#include "bchlab/error.hpp"

namespace bchlab {

/// Symbol of the small field GF(q); an index into Subfield's canonical element list.
using Sym = std::uint16_t;

/// An odd prime power q = p^e.
struct PrimePower {
    std::uint64_t p = 3;
    unsigned e = 1;
    std::uint64_t q = 3;

    /// Validates primality and oddness, computes q. Throws OutOfRange for p < 3 or p even/composite.
    static PrimePower make(std::uint64_t p, unsigned e = 1);

    /// q as a prime power from a bare value (factors q; must be an odd prime power).
    static PrimePower from_q(std::uint64_t q);
};

class ExtensionField;

/// Element of GF(q^m): ZERO or an exponent of the fixed primitive element alpha.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const ExtensionField* owner, std::int64_t rep) : owner_(owner), rep_(rep) {}

    bool is_zero() const { return rep_ < 0; }
    std::int64_t log() const {
        require(rep_ >= 0, ErrorKind::DivisionByZero, "log of zero element");
        return rep_;
    }
    const ExtensionField* owner() const { return owner_; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.owner_ == b.owner_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    const ExtensionField* owner_ = nullptr;
    std::int64_t rep_ = -1;  // -1 encodes zero; otherwise exponent in [0, q^m-2]
};

/// Canonical view of the subfield GF(q) inside GF(q^m), with dense index tables.
///
/// Elements are indexed 0..q-1 in ascending order of their coefficient-vector
/// encoding over GF(p); for prime q this is the natural 0,1,...,p-1 labeling.
/// Index 0 is the zero element and index 1 the one element.
class Subfield {
  public:
    std::uint64_t q() const { return q_; }
    FieldElement lift(Sym s) const { return elements_[s]; }
    Sym add(Sym a, Sym b) const { return addT_[a * q_ + b]; }
    Sym mul(Sym a, Sym b) const { return mulT_[a * q_ + b]; }
    Sym neg(Sym a) const { return negT_[a]; }
    Sym inv(Sym a) const {
        require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
        return invT_[a];
    }
    Sym sub(Sym a, Sym b) const { return add(a, neg(b)); }

    /// Index of a big-field element; throws FieldMismatch when it is not in GF(q).
    Sym index_of(const FieldElement& x) const;

  private:
    friend class ExtensionField;
    std::uint64_t q_ = 0;
    std::vector<FieldElement> elements_;
    std::vector<std::int32_t> indexByEncoding_;  // -1 where not a subfield element
    std::vector<Sym> addT_, mulT_, negT_, invT_;
};

/// Searches monic degree-D polynomials over GF(p) in canonical coefficient order
/// (tuple (c_{D-1},...,c_0) read as a base-p integer, ascending) and returns the
/// first one whose root is primitive. Coefficients ascending, length D+1, monic.
std::vector<Sym> find_primitive_polynomial(std::uint64_t p, unsigned D, const Budget& budget = {});

/// GF(q^m) = GF(p)[x]/(f) for the canonical primitive f of degree D = e*m, with
/// log/antilog tables and the designated subfield GF(q). Immutable once built;
/// all operations are pure and safe for concurrent readers.
class ExtensionField {
  public:
    static std::shared_ptr<const ExtensionField> build(PrimePower base, unsigned m, const Budget& budget = {});

    const PrimePower& base() const { return base_; }
    unsigned m() const { return m_; }
    unsigned degree() const { return D_; }                       ///< e*m, degree over GF(p)
    std::uint64_t size() const { return size_; }                 ///< q^m
    std::uint64_t alpha_order() const { return size_ - 1; }      ///< q^m - 1
    const std::vector<Sym>& modulus() const { return modulus_; } ///< ascending coefficients

    FieldElement zero() const { return {this, -1}; }
    FieldElement one() const { return {this, 0}; }
    FieldElement alpha() const { return {this, size_ > 2 ? 1 : 0}; }
    /// alpha^k with k reduced mod q^m - 1 (k may be negative).
    FieldElement alpha_pow(std::int64_t k) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement inv(const FieldElement& x) const;
    FieldElement pow(const FieldElement& x, std::int64_t k) const;

    /// Trace onto the subfield GF(p^r): sum of x^(p^(r*i)), i < D/r. Requires r | D.
    FieldElement trace_to_subfield(const FieldElement& x, unsigned r) const;

    /// Trace from the subfield GF(q^s) containing x down to GF(q), as a GF(q) symbol.
    /// Requires s | m and x in GF(q^s); used by the trace representation of codes.
    Sym trace_from_subextension(const FieldElement& x, unsigned s) const;

    /// Membership test for the subfield chain: is x in GF(q^s)? (s | m)
    bool in_subextension(const FieldElement& x, unsigned s) const;

    const Subfield& gf_q() const { return subfield_; }

    /// Coefficient-vector encoding (base-p integer) of an element; bijective.
    std::uint64_t encoding(const FieldElement& x) const;
    FieldElement from_encoding(std::uint64_t v) const;

  private:
    ExtensionField() = default;
    void check_owner(const FieldElement& x) const {
        require(x.owner() == this, ErrorKind::FieldMismatch, "element from a different field");
    }

    PrimePower base_;
    unsigned m_ = 0, D_ = 0;
    std::uint64_t size_ = 0;
    std::vector<Sym> modulus_;
    std::vector<std::uint32_t> expTable_;   // k -> encoding of alpha^k
    std::vector<std::int64_t> logTable_;    // encoding -> k (or -1 for zero)
    Subfield subfield_;
};

}  // namespace bchlab
