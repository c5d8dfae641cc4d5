#include "ffstark/smallfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ffstark/numbers.hpp"

namespace ffstark {

namespace {

// Bootstrap polynomial arithmetic over F_p (coefficient vectors, ascending).
using PVec = std::vector<long>;

PVec ptrim(PVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

PVec pmulmod(const PVec& x, const PVec& y, const PVec& mod, long p) {
    PVec r(x.size() + y.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    }
    // reduce mod the monic polynomial `mod`
    int d = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
        long c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (int j = 0; j < d; ++j) r[i - d + j] = ((r[i - d + j] - c * mod[j]) % p + p) % p;
    }
    r.resize(d);
    return r;
}

PVec ppowmod(PVec base, BigInt e, const PVec& mod, long p) {
    PVec r(mod.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, long p) {
    a = ptrim(a);
    b = ptrim(b);
    while (!b.empty()) {
        // a mod b
        long lead_inv = 1;
        {
            long lb = b.back(), t = 1;
            // Fermat inverse
            long e = p - 2, base = lb % p;
            while (e) {
                if (e & 1) t = t * base % p;
                base = base * base % p;
                e >>= 1;
            }
            lead_inv = t;
        }
        while (a.size() >= b.size() && !a.empty()) {
            long c = a.back() * lead_inv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
            a = ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool pirreducible(const PVec& f, long p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    PVec x = {0, 1};
    // x^(p^d) == x mod f
    PVec xp = x;
    for (int i = 0; i < d; ++i) xp = ppowmod(xp, p, f, p);
    PVec diff = xp;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    if (!ptrim(diff).empty()) return false;
    // gcd(x^(p^(d/r)) - x, f) == 1 for every prime r | d
    for (const BigInt& rb : prime_factors(BigInt(d))) {
        int r = static_cast<int>(rb);
        PVec xe = x;
        for (int i = 0; i < d / r; ++i) xe = ppowmod(xe, p, f, p);
        PVec g = xe;
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        PVec gg = pgcd(g, f, p);
        if (!(gg.size() == 1)) return false;
    }
    return true;
}

bool pprimitive_x(const PVec& f, long p) {
    // order of x mod f equals p^deg - 1
    int d = static_cast<int>(f.size()) - 1;
    BigInt q1 = big_pow(p, d) - 1;
    for (const BigInt& r : prime_factors(q1)) {
        PVec e = ppowmod({0, 1}, q1 / r, f, p);
        e = ptrim(e);
        if (e.size() == 1 && e[0] == 1) return false;
    }
    return true;
}

long smallest_primitive_root(long p) {
    if (p == 2) return 1;
    BigInt p1 = p - 1;
    auto fac = prime_factors(p1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (const BigInt& r : fac) {
            long e = static_cast<long>(p1 / r);
            long t = 1, b = g % p;
            while (e) {
                if (e & 1) t = t * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (t == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw identity_failure("no primitive root found");
}

std::mutex g_registry_mutex;
std::map<std::pair<long, int>, std::unique_ptr<SmallField>> g_registry;

}  // namespace

const SmallField& SmallField::get(long p, int a) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto key = std::make_pair(p, a);
    auto it = g_registry.find(key);
    if (it == g_registry.end())
        it = g_registry.emplace(key, std::unique_ptr<SmallField>(new SmallField(p, a))).first;
    return *it->second;
}

SmallField::SmallField(long p, int a) : p_(p), a_(a) {
    if (p < 2 || a < 1) throw validation_error("SmallField: need prime p >= 2, a >= 1");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw validation_error("SmallField: p not prime");
    BigInt qb = big_pow(p, a);
    if (qb > (1 << 21)) throw resource_error("SmallField: q exceeds table bound 2^21");
    q_ = static_cast<long>(qb);

    if (a == 1) {
        defining_ = {static_cast<int>((p - smallest_primitive_root(p)) % p), 1};
        // x - g with g the smallest primitive root; element repr is the residue itself
        exp_.resize(2 * (q_ - 1));
        log_.assign(q_, 0);
        long g = smallest_primitive_root(p);
        long v = 1;
        for (long k = 0; k < q_ - 1; ++k) {
            exp_[k] = static_cast<Elt>(v);
            log_[v] = k;
            v = v * g % p;
        }
        for (long k = 0; k < q_ - 1; ++k) exp_[q_ - 1 + k] = exp_[k];
        return;
    }

    // find the defining polynomial: smallest packed-coefficient monic primitive poly
    PVec f;
    for (long packed = 0;; ++packed) {
        if (packed >= q_) throw identity_failure("no primitive polynomial found");
        PVec cand(a + 1, 0);
        cand[a] = 1;
        long t = packed;
        for (int i = 0; i < a; ++i) {
            cand[i] = t % p;
            t /= p;
        }
        if (pirreducible(cand, p) && pprimitive_x(cand, p)) {
            f = cand;
            break;
        }
    }
    defining_.assign(f.begin(), f.end());

    // powers of x fill the multiplicative group
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    PVec cur(a, 0);
    cur[0] = 1;
    for (long k = 0; k < q_ - 1; ++k) {
        long packed = 0;
        for (int i = a - 1; i >= 0; --i) packed = packed * p + cur[i];
        exp_[k] = static_cast<Elt>(packed);
        log_[packed] = k;
        cur = pmulmod(cur, {0, 1}, f, p);
    }
    for (long k = 0; k < q_ - 1; ++k) exp_[q_ - 1 + k] = exp_[k];
}

SmallField::Elt SmallField::add(Elt x, Elt y) const {
    if (p_ == 2) return x ^ y;
    Elt r = 0;
    long mult = 1;
    for (int i = 0; i < a_; ++i) {
        long dx = (x / mult) % p_, dy = (y / mult) % p_;
        r += static_cast<Elt>(((dx + dy) % p_) * mult);
        mult *= p_;
    }
    return r;
}

SmallField::Elt SmallField::neg(Elt x) const {
    if (p_ == 2) return x;
    Elt r = 0;
    long mult = 1;
    for (int i = 0; i < a_; ++i) {
        long dx = (x / mult) % p_;
        r += static_cast<Elt>(((p_ - dx) % p_) * mult);
        mult *= p_;
    }
    return r;
}

SmallField::Elt SmallField::pow(Elt x, long long e) const {
    if (x == 0) {
        if (e < 0) throw validation_error("0 to negative power");
        return e == 0 ? one() : 0;
    }
    long long m = (static_cast<long long>(log_[x]) * (e % (q_ - 1))) % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
}

long SmallField::elt_order(Elt x) const {
    if (x == 0) throw validation_error("order of zero");
    long n = q_ - 1;
    long l = log_[x];
    long g = std::gcd(n, l == 0 ? n : l);
    return n / g;
}

SmallField::Elt SmallField::frobenius(Elt x, long times) const {
    Elt r = x;
    for (long i = 0; i < times; ++i) r = pow(r, p_);
    return r;
}

std::vector<int> SmallField::coords(Elt x) const {
    std::vector<int> c(a_);
    long t = x;
    for (int i = 0; i < a_; ++i) {
        c[i] = static_cast<int>(t % p_);
        t /= p_;
    }
    return c;
}

SmallField::Elt SmallField::from_coords(const std::vector<int>& c) const {
    long packed = 0;
    for (int i = a_ - 1; i >= 0; --i) {
        int d = i < static_cast<int>(c.size()) ? c[i] : 0;
        packed = packed * p_ + ((d % p_) + p_) % p_;
    }
    return static_cast<Elt>(packed);
}

SmallField::Elt SmallField::from_int(long long n) const {
    long r = static_cast<long>(((n % p_) + p_) % p_);
    return static_cast<Elt>(r);
}

std::string SmallField::defining_poly_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = a_; i >= 0; --i) {
        int c = defining_[i];
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string SmallField::to_string(Elt x) const {
    if (a_ == 1) return std::to_string(x);
    if (x == 0) return "0";
    auto c = coords(x);
    std::ostringstream os;
    bool first = true;
    for (int i = a_ - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FieldEmbedding::FieldEmbedding(const SmallField& from, const SmallField& to)
    : from_(&from), to_(&to) {
    if (from.p() != to.p() || to.degree() % from.degree() != 0)
        throw validation_error("FieldEmbedding: not a subfield pair");
    if (&from == &to) {
        gen_powers_.resize(from.degree());
        FqElt pw = to.one();
        for (int i = 0; i < from.degree(); ++i) {
            gen_powers_[i] = pw;
            pw = to.mul(pw, to.gen());
        }
        return;
    }
    // find the first root of `from`'s defining polynomial in `to`
    const auto& def = from.defining_poly();
    FqElt root = 0;
    bool found = false;
    for (long cand = 0; cand < to.size(); ++cand) {
        FqElt acc = 0;
        for (int i = from.degree(); i >= 0; --i) {
            acc = to.mul(acc, static_cast<FqElt>(cand));
            acc = to.add(acc, to.from_int(def[i]));
        }
        if (acc == 0) {
            root = static_cast<FqElt>(cand);
            found = true;
            break;
        }
    }
    if (!found) throw identity_failure("FieldEmbedding: defining polynomial has no root");
    gen_powers_.resize(from.degree());
    FqElt pw = to.one();
    for (int i = 0; i < from.degree(); ++i) {
        gen_powers_[i] = pw;
        pw = to.mul(pw, root);
    }
}

FqElt FieldEmbedding::map(FqElt x) const {
    if (from_->degree() == 1) {
        // prime-field elements are residues, not generator coordinates
        long r = 0;
        // residue value of x in F_p: x is the packed residue itself
        r = static_cast<long>(x);
        return to_->from_int(r);
    }
    auto c = from_->coords(x);
    FqElt acc = 0;
    for (int i = 0; i < from_->degree(); ++i) {
        if (!c[i]) continue;
        acc = to_->add(acc, to_->mul(to_->from_int(c[i]), gen_powers_[i]));
    }
    return acc;
}

}  // namespace ffstark
