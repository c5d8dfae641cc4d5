#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffstark/errors.hpp"

namespace ffstark {

// The finite field F_{p^a} with exp/log tables.
//
// Elements are packed base-p digit vectors: the element sum c_i * x^i (with x
// the class of the defining polynomial's variable) is stored as the integer
// sum c_i * p^i, so values range over [0, q).  The defining polynomial is the
// lexicographically smallest monic primitive polynomial of degree a over F_p
// (ordered by packed coefficient value), so x always generates the
// multiplicative group and the choice is reproducible from (p, a) alone.
class SmallField {
public:
    using Elt = std::uint32_t;

    // Cached per (p, a); the registry owns the instances.
    static const SmallField& get(long p, int a);

    long p() const { return p_; }
    int degree() const { return a_; }
    long size() const { return q_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    // The class of x; a generator of the multiplicative group by construction.
    Elt gen() const { return a_ == 1 ? exp_[1] : static_cast<Elt>(p_); }

    Elt add(Elt x, Elt y) const;
    Elt neg(Elt x) const;
    Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }
    Elt mul(Elt x, Elt y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }
    Elt inv(Elt x) const {
        if (x == 0) throw validation_error("inverse of zero field element");
        return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
    }
    Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }
    Elt pow(Elt x, long long e) const;

    // Discrete log base gen(); throws on 0.
    long log(Elt x) const {
        if (x == 0) throw validation_error("log of zero field element");
        return log_[x];
    }
    Elt exp(long long k) const {
        long long m = k % (q_ - 1);
        if (m < 0) m += q_ - 1;
        return exp_[m];
    }

    long elt_order(Elt x) const;

    // x^(p^times), the arithmetic Frobenius iterated.
    Elt frobenius(Elt x, long times = 1) const;

    std::vector<int> coords(Elt x) const;
    Elt from_coords(const std::vector<int>& c) const;
    // Image of n under Z -> F_p -> F_q.
    Elt from_int(long long n) const;

    // Coefficients (ascending, in F_p) of the defining polynomial.
    const std::vector<int>& defining_poly() const { return defining_; }
    std::string defining_poly_string() const;

    // "0", "1", "w", "w+1", ... ("w" = class of x).  Prime fields print digits.
    std::string to_string(Elt x) const;

private:
    SmallField(long p, int a);

    long p_;
    int a_;
    long q_;
    std::vector<int> defining_;  // ascending coeffs, degree a, monic
    std::vector<Elt> exp_;       // exp_[k] = gen^k, k in [0, 2(q-1))
    std::vector<long> log_;      // log_[x] for x != 0
};

using FqElt = SmallField::Elt;

// Deterministic embedding F_{p^a} -> F_{p^b} (a | b): x maps to the first
// root (in packed element order) of the small field's defining polynomial.
class FieldEmbedding {
public:
    FieldEmbedding(const SmallField& from, const SmallField& to);

    const SmallField& from() const { return *from_; }
    const SmallField& to() const { return *to_; }
    FqElt map(FqElt x) const;

private:
    const SmallField* from_;
    const SmallField* to_;
    std::vector<FqElt> gen_powers_;  // images of x^i, i < a
};

}  // namespace ffstark
