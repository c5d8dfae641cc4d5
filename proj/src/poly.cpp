#include "ffstark/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ffstark/errors.hpp"
#include "ffstark/numbers.hpp"

namespace ffstark {

Poly::Poly(const SmallField& F, std::vector<FqElt> coeffs) : F_(&F), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const SmallField& F, FqElt c) {
    Poly r(F);
    if (c != 0) r.c_ = {c};
    return r;
}

Poly Poly::monomial(const SmallField& F, int k, FqElt c) {
    Poly r(F);
    if (c != 0) {
        r.c_.assign(k + 1, 0);
        r.c_[k] = c;
    }
    return r;
}

FqElt Poly::leading() const {
    if (is_zero()) throw validation_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = F_->neg(c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*F_);
    Poly r(*F_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(FqElt c) const {
    Poly r(*F_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = F_->mul(x, c);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
    return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw validation_error("division by zero polynomial");
    Poly q(*F_), r = *this;
    if (r.degree() >= d.degree()) q.c_.assign(r.degree() - d.degree() + 1, 0);
    FqElt lead_inv = F_->inv(d.leading());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        FqElt c = F_->mul(r.leading(), lead_inv);
        q.c_[k] = c;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[k + i] = F_->sub(r.c_[k + i], F_->mul(c, d.c_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

bool Poly::divides(const Poly& f) const { return f.divmod(*this).second.is_zero(); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(F_->inv(leading()));
}

Poly Poly::derivative() const {
    Poly r(*F_);
    if (degree() < 1) return r;
    r.c_.assign(degree(), 0);
    for (int i = 1; i <= degree(); ++i) {
        FqElt m = F_->from_int(i);
        r.c_[i - 1] = F_->mul(c_[i], m);
    }
    r.trim();
    return r;
}

FqElt Poly::eval(FqElt x) const {
    FqElt acc = 0;
    for (int i = degree(); i >= 0; --i) acc = F_->add(F_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::pow(long e) const {
    Poly r = Poly::one(*F_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::powmod(BigInt e, const Poly& mod) const {
    Poly r = Poly::one(*F_), b = *this % mod;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

Poly Poly::coeff_frobenius(long times) const {
    Poly r = *this;
    for (auto& c : r.c_) c = F_->frobenius(c, times);
    return r;
}

Poly Poly::map_coeffs(const FieldEmbedding& emb) const {
    Poly r(emb.to());
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = emb.map(c_[i]);
    r.trim();
    return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
    const SmallField& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) {
        u = s0;
        v = t0;
        return r0;
    }
    FqElt c = F.inv(r0.leading());
    u = s0.scaled(c);
    v = t0.scaled(c);
    return r0.monic();
}

Poly Poly::invmod(const Poly& m) const {
    Poly u(*F_), v(*F_);
    Poly g = xgcd(*this % m, m, u, v);
    if (g.degree() != 0) throw validation_error("invmod: not invertible");
    return u % m;
}

bool Poly::is_irreducible() const {
    int d = degree();
    if (d < 1) return false;
    const SmallField& F = *F_;
    Poly f = monic();
    Poly x = Poly::x(F);
    BigInt q = F.size();
    Poly xq = x;
    for (int i = 0; i < d; ++i) xq = xq.powmod(q, f);
    if (!((xq - x) % f).is_zero()) return false;
    for (const BigInt& rb : prime_factors(BigInt(d))) {
        int r = static_cast<int>(rb);
        Poly xe = x;
        for (int i = 0; i < d / r; ++i) xe = xe.powmod(q, f);
        Poly g = gcd(xe - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d.  Deterministic: sweeps candidate polynomials in packed order.
void edf(const Poly& f, int d, std::vector<Poly>& out) {
    const SmallField& F = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    long q = F.size();
    long p = F.p();
    BigInt qd = big_pow(q, d);
    for (long packed = 1;; ++packed) {
        // candidate h of degree < f.degree(), coefficients from packed counter
        std::vector<FqElt> cs;
        long t = packed;
        while (t) {
            cs.push_back(static_cast<FqElt>(t % q));
            t /= q;
        }
        if (static_cast<int>(cs.size()) > f.degree()) throw identity_failure("edf: sweep exhausted");
        Poly h(F, cs);
        Poly g;
        if (p != 2) {
            Poly e = h.powmod((qd - 1) / 2, f);
            g = Poly::gcd(e - Poly::one(F), f);
        } else {
            // trace map over F_2: sum h^(2^i), i < (log2 q) * d
            long bits = 0;
            long qq = q;
            while (qq > 1) {
                qq /= 2;
                ++bits;
            }
            Poly tr = Poly::zero(F), cur = h % f;
            for (long i = 0; i < bits * d; ++i) {
                tr = (tr + cur) % f;
                cur = (cur * cur) % f;
            }
            g = Poly::gcd(tr, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out);
            edf(f / g, d, out);
            return;
        }
    }
}

}  // namespace

std::map<Poly, int> Poly::factor() const {
    if (is_zero()) throw validation_error("factor: zero input");
    const SmallField& F = *F_;
    std::map<Poly, int> result;
    Poly f = monic();
    if (f.degree() == 0) return result;

    // squarefree part handling via repeated gcd with derivative
    // (desk scale: peel multiplicities by direct division at the end instead)
    Poly work = f;
    // distinct-degree on the squarefree radical
    Poly rad = f / Poly::gcd(f, f.derivative());
    if (rad.degree() == 0) {
        // f is a p-th power: f(t) = g(t^p) with coefficient roots
        long p = F.p();
        std::vector<FqElt> cs;
        for (int i = 0; i <= f.degree() / p; ++i) {
            FqElt c = f.coeff(static_cast<int>(i * p));
            // p-th root in F_q: c^(q/p)
            cs.push_back(F.pow(c, F.size() / p));
        }
        Poly g(F, cs);
        for (auto& [fac, m] : g.factor()) result[fac] += m * static_cast<int>(p);
        // distribute original leading coefficient multiplicity is handled by monic()
        return result;
    }

    std::vector<Poly> irreducibles;
    {
        Poly r = rad;
        Poly x = Poly::x(F);
        Poly xq = x;
        BigInt q = F.size();
        for (int d = 1; r.degree() >= 1; ++d) {
            if (2 * d > r.degree()) {
                irreducibles.push_back(r);
                break;
            }
            xq = xq.powmod(q, r);
            Poly g = Poly::gcd(xq - x, r);
            if (g.degree() > 0) {
                edf(g, d, irreducibles);
                r = r / g;
                xq = xq % r;
            }
        }
    }
    // remaining multiplicities (covers inseparable leftovers too)
    Poly rem = f;
    for (const Poly& fac : irreducibles) {
        int m = 0;
        while (fac.divides(rem)) {
            rem = rem / fac;
            ++m;
        }
        result[fac.monic()] = m;
    }
    if (rem.degree() > 0) {
        for (auto& [fac, m] : rem.factor()) result[fac] += m;
    }
    return result;
}

int Poly::valuation(const Poly& p) const {
    if (is_zero()) throw validation_error("valuation of zero polynomial");
    int v = 0;
    Poly r = *this;
    while (p.divides(r)) {
        r = r / p;
        ++v;
    }
    return v;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FqElt c = coeff(i);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = F_->to_string(c);
        bool needs_paren = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            if (c != F_->one()) os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<Poly> monic_irreducibles(const SmallField& F, int d) {
    BigInt total = big_pow(F.size(), d);
    if (total > (1 << 22)) throw resource_error("monic_irreducibles: q^d too large to enumerate");
    std::vector<Poly> out;
    long n = static_cast<long>(total);
    for (long packed = 0; packed < n; ++packed) {
        std::vector<FqElt> cs(d + 1, 0);
        long t = packed;
        for (int i = 0; i < d; ++i) {
            cs[i] = static_cast<FqElt>(t % F.size());
            t /= F.size();
        }
        cs[d] = F.one();
        Poly f(F, cs);
        if (f.is_irreducible()) out.push_back(f);
    }
    return out;
}

BigInt irreducible_count(long q, int d) {
    // (1/d) * sum_{e | d} mu(e) q^(d/e)
    auto mu = [](int n) {
        int r = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                r = -r;
            }
        }
        if (n > 1) r = -r;
        return r;
    };
    BigInt s = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        int m = mu(e);
        if (m) s += m * big_pow(q, d / e);
    }
    return s / d;
}

}  // namespace ffstark
