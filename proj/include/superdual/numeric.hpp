#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace superdual {

using Rat = mpq_class;
using Big = mpz_class;

// Domain-level failures (bad weights, bad diagrams, bad sequences). CLI maps
// these to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hard caps tripped (slice too large, depth too deep). CLI exit code 3.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(s);
    } else {
        r = Rat(s.substr(0, slash)) / Rat(s.substr(slash + 1));
    }
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw DomainError("expected a small integer, got " + rat_str(r));
    return r.get_num().get_si();
}

}  // namespace superdual
