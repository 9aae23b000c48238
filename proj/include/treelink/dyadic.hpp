#pragma once

#include <stdexcept>
#include <string>

namespace treelink {

// Exact dyadic rational num / 2^exp with exp >= 0, kept normalized (num odd
// or zero).  Only the operations a piecewise-linear evaluation needs are
// provided: addition, subtraction, comparison and multiplication by a power
// of two, all of which are exact on dyadics.  The numerator lives in
// __int128 and the exponent is capped so no shift can overflow.
class Dyadic {
public:
    static constexpr int max_exponent = 120;

    Dyadic() = default;
    Dyadic(long long integer) : num_(integer) {}

    // k / 2^e
    static Dyadic scaled(long long k, int e) {
        if (e < 0 || e > max_exponent)
            throw std::overflow_error("Dyadic: exponent " + std::to_string(e) + " out of range");
        Dyadic d;
        d.num_ = k;
        d.exp_ = e;
        d.normalize();
        return d;
    }

    bool is_zero() const { return num_ == 0; }
    int exponent() const { return exp_; }

    Dyadic operator+(const Dyadic& o) const {
        int e = exp_ > o.exp_ ? exp_ : o.exp_;
        Dyadic r;
        r.num_ = shifted(num_, e - exp_) + shifted(o.num_, e - o.exp_);
        r.exp_ = e;
        r.normalize();
        return r;
    }

    Dyadic operator-() const {
        Dyadic r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }

    // Exact multiplication by 2^s (s may be negative; the result is still a
    // dyadic, only the exponent moves).
    Dyadic times_pow2(int s) const {
        Dyadic r = *this;
        if (r.num_ == 0) return r;
        r.exp_ -= s;
        if (r.exp_ < 0) {
            r.num_ = shifted(r.num_, -r.exp_);
            r.exp_ = 0;
        }
        r.normalize();
        return r;
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return shifted(a.num_, e - a.exp_) < shifted(b.num_, e - b.exp_);
    }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    // "k/2^e" for diagnostics.
    std::string to_string() const {
        std::string s = int128_to_string(num_);
        if (exp_ == 0) return s;
        return s + "/2^" + std::to_string(exp_);
    }

    double approx() const {
        double v = static_cast<double>(num_);
        for (int i = 0; i < exp_; ++i) v /= 2.0;
        return v;
    }

private:
    __int128 num_ = 0;
    int exp_ = 0;

    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
        if (exp_ > max_exponent)
            throw std::overflow_error("Dyadic: exponent exceeds guard after normalization");
    }

    static __int128 shifted(__int128 v, int s) {
        if (s < 0 || s > 124) throw std::overflow_error("Dyadic: shift out of range");
        if (v != 0 && s > 0) {
            __int128 mag = v < 0 ? -v : v;
            // keep 2^126 headroom for one subsequent addition
            if (mag > (static_cast<__int128>(1) << (125 - s)))
                throw std::overflow_error("Dyadic: numerator overflow");
        }
        return v << s;
    }

    static std::string int128_to_string(__int128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        std::string out;
        while (m > 0) {
            out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
            m /= 10;
        }
        return neg ? "-" + out : out;
    }
};

}  // namespace treelink
