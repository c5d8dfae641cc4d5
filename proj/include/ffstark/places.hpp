#pragma once

#include <vector>

#include "ffstark/poly.hpp"

namespace ffstark {

// A place of the rational function field F_q(t): a monic irreducible
// polynomial, or the place at infinity (degree 1).
class Place {
public:
    static Place infinity(const SmallField& F) { return Place(&F); }
    static Place finite(Poly monic_irreducible);

    bool is_infinity() const { return infinite_; }
    const Poly& prime() const;
    int degree() const { return infinite_ ? 1 : prime_.degree(); }
    const SmallField& field() const { return *F_; }
    // Order of the residue field, q^deg.
    BigInt norm() const { return big_pow(F_->size(), degree()); }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;  // infinity first, then poly order

    std::string to_string() const;

private:
    explicit Place(const SmallField* F) : F_(F), infinite_(true) {}
    const SmallField* F_;
    bool infinite_;
    Poly prime_;
};

// All places of degree <= max_degree: infinity plus every monic irreducible.
std::vector<Place> enumerate_places(const SmallField& F, int max_degree);

// ord_v of a nonzero polynomial (multiplicity of the prime; at infinity,
// -deg f).
int place_valuation(const Poly& f, const Place& v);

}  // namespace ffstark
