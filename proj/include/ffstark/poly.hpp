#pragma once

#include <map>
#include <string>
#include <vector>

#include "ffstark/smallfield.hpp"

namespace ffstark {

// Dense univariate polynomial over a SmallField.  Canonical form: no trailing
// zero coefficients; the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() : F_(nullptr) {}
    explicit Poly(const SmallField& F) : F_(&F) {}
    Poly(const SmallField& F, std::vector<FqElt> coeffs);
    static Poly zero(const SmallField& F) { return Poly(F); }
    static Poly constant(const SmallField& F, FqElt c);
    static Poly one(const SmallField& F) { return constant(F, F.one()); }
    // t^k
    static Poly monomial(const SmallField& F, int k, FqElt c);
    static Poly x(const SmallField& F) { return monomial(F, 1, F.one()); }

    const SmallField& field() const { return *F_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    FqElt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<FqElt>& coeffs() const { return c_; }
    FqElt leading() const;
    bool is_monic() const { return !is_zero() && leading() == F_->one(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(FqElt c) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // by degree, then packed coeffs (for determinism)

    // Division with remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& f) const;

    Poly monic() const;
    Poly derivative() const;
    FqElt eval(FqElt x) const;
    Poly pow(long e) const;
    Poly powmod(BigInt e, const Poly& mod) const;
    Poly mulmod(const Poly& o, const Poly& mod) const { return (*this * o) % mod; }

    // Apply the field Frobenius x -> x^(p^times) to every coefficient.
    Poly coeff_frobenius(long times) const;
    // Map coefficients through an embedding into a larger field.
    Poly map_coeffs(const FieldEmbedding& emb) const;

    static Poly gcd(const Poly& a, const Poly& b);
    // g = gcd = u*a + v*b
    static Poly xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v);

    bool is_irreducible() const;
    // Monic irreducible factors with multiplicities; input nonzero.
    std::map<Poly, int> factor() const;
    // Multiplicity of the irreducible p in *this.
    int valuation(const Poly& p) const;

    // Inverse mod m (gcd must be 1).
    Poly invmod(const Poly& m) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    const SmallField* F_;
    std::vector<FqElt> c_;
};

// All monic irreducible polynomials of the exact degree d over F.
std::vector<Poly> monic_irreducibles(const SmallField& F, int d);

// Count of monic irreducibles of degree d (necklace / Moebius count).
BigInt irreducible_count(long q, int d);

}  // namespace ffstark
