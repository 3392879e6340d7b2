#pragma once

// One-variable integer Laurent polynomials. Used for R-, Kazhdan-Lusztig and
// KLV polynomials; no zero coefficients are ever stored.

#include <map>
#include <string>

namespace superdual {

class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(long long c, int exp = 0) {
        if (c != 0) coeffs_[exp] = c;
    }

    static Laurent monomial(long long c, int exp) { return Laurent(c, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    long long coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? 0 : it->second;
    }

    int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    void add(long long c, int exp) {
        if (c == 0) return;
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            coeffs_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs_) add(c, e);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs_) add(-c, e);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add(ca * cb, ea + eb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Substitute var -> var^{-1}.
    Laurent bar() const {
        Laurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    Laurent shifted(int d) const {
        Laurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + d] = c;
        return r;
    }

    long long eval_one() const {
        long long s = 0;
        for (auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // Stable text form, e.g. "1+2q+q^3" or "q^-1+q".
    std::string str(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [e, c] : coeffs_) {
            long long a = c;
            if (!first) out += (a < 0) ? "-" : "+";
            else if (a < 0) out += "-";
            first = false;
            long long mag = a < 0 ? -a : a;
            if (e == 0) {
                out += std::to_string(mag);
            } else {
                if (mag != 1) out += std::to_string(mag);
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

  private:
    std::map<int, long long> coeffs_;
};

}  // namespace superdual
