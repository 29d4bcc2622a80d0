#pragma once
// Small prime and prime-power fields with exact table-driven arithmetic.
// Elements are integers in [0, q); for extension degree k > 1 an element
// packs its polynomial coefficients little-endian in base p. The supported
// extension moduli are fixed for bit-exact reproducibility:
//   GF(4) = F2[x]/(x^2+x+1), GF(8) = F2[x]/(x^3+x+1), GF(9) = F3[x]/(x^2+1).

#include <memory>
#include <vector>

#include "econe/errors.hpp"

namespace econe {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int next_prime(int n) {
    int m = n + 1;
    while (!is_prime(m)) ++m;
    return m;
}

class Fq {
public:
    static Fq prime(int p) { return Fq(p, {}); }

    /// modulus holds coefficients c0..ck of a monic irreducible of degree k.
    static Fq extension(int p, std::vector<int> modulus) { return Fq(p, std::move(modulus)); }

    /// q prime, or one of the fixed extension orders 4, 8, 9.
    static Fq of_order(int q) {
        if (is_prime(q)) return prime(q);
        switch (q) {
            case 4: return extension(2, {1, 1, 1});
            case 8: return extension(2, {1, 1, 0, 1});
            case 9: return extension(3, {1, 0, 1});
            default: throw bad_argument("unsupported field order " + std::to_string(q));
        }
    }

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return t_->add[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return t_->neg[a]; }
    int mul(int a, int b) const { return t_->mul[a * q_ + b]; }
    int inv(int a) const {
        if (a == 0) throw bad_argument("inverse of zero");
        return t_->inv[a];
    }
    /// Image of an ordinary integer in the prime subfield.
    int scalar(long long m) const {
        long long r = m % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }

    bool operator==(const Fq& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Fq& o) const { return !(*this == o); }

private:
    struct Tables {
        std::vector<int> add, mul, neg, inv;
    };

    Fq(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (!is_prime(p_)) throw bad_argument("field characteristic must be prime");
        k_ = modulus_.empty() ? 1 : static_cast<int>(modulus_.size()) - 1;
        if (k_ < 1 || k_ > 3) throw bad_argument("extension degree must be 1..3");
        q_ = 1;
        for (int i = 0; i < k_; ++i) q_ *= p_;
        if (q_ > 1024) throw bad_argument("field order too large");
        if (k_ > 1) {
            if (modulus_.back() != 1) throw bad_argument("modulus must be monic");
            // Degree 2 or 3 is irreducible over F_p iff it has no root.
            for (int r = 0; r < p_; ++r) {
                long long val = 0, pw = 1;
                for (int c : modulus_) {
                    val = (val + c * pw) % p_;
                    pw = (pw * r) % p_;
                }
                if (val % p_ == 0)
                    throw bad_argument("modulus is reducible over F_p (root found)");
            }
        }
        build_tables();
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    int pack(const std::vector<int>& d) const {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    }

    void build_tables() {
        auto t = std::make_shared<Tables>();
        t->add.assign(q_ * q_, 0);
        t->mul.assign(q_ * q_, 0);
        t->neg.assign(q_, 0);
        t->inv.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            auto da = digits(a);
            std::vector<int> dn(k_);
            for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
            t->neg[a] = pack(dn);
            for (int b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<int> ds(k_);
                for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
                t->add[a * q_ + b] = pack(ds);
                // Polynomial product reduced by the modulus.
                std::vector<int> prod(2 * k_ - 1, 0);
                for (int i = 0; i < k_; ++i)
                    for (int j = 0; j < k_; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int d = 2 * k_ - 2; d >= k_; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    for (int i = 0; i < k_; ++i)
                        prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_ * p_) % p_;
                }
                prod.resize(k_);
                t->mul[a * q_ + b] = pack(prod);
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (t->mul[a * q_ + b] == 1) {
                    t->inv[a] = b;
                    break;
                }
        t_ = std::move(t);
    }

    int p_ = 0, k_ = 1, q_ = 0;
    std::vector<int> modulus_;
    std::shared_ptr<const Tables> t_;
};

}  // namespace econe
