#pragma once

// Exact rational scalar layer: canonical arbitrary-precision rationals plus the
// hypergeometric building blocks (Pochhammer symbols, terminating 4F3 sums)
// used by every polynomial evaluation. No floating point anywhere.

#include <gmpxx.h>

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace racah {

using Q = mpq_class;

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidityError : std::runtime_error {
    explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

inline Q rat(long num, long den = 1) {
    if (den == 0) throw PoleError("rational with zero denominator");
    Q q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p"; bases other than 10 are not accepted.
inline Q parse_rational(const std::string& s) {
    if (s.empty()) throw ValidityError("empty rational literal");
    Q q;
    if (q.set_str(s, 10) != 0)
        throw ValidityError("bad rational literal: " + s);
    if (q.get_den() == 0) throw PoleError("zero denominator in literal: " + s);
    q.canonicalize();
    return q;
}

// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Rising factorial a(a+1)...(a+k-1); 1 for k = 0.
inline Q pochhammer(const Q& a, long k) {
    if (k < 0) throw ValidityError("pochhammer: negative index");
    Q r = 1;
    Q f = a;
    for (long i = 0; i < k; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

// kappa(n, c) = (n+c)(n+c-1).
inline Q kappa(const Q& n, const Q& c) {
    return (n + c) * (n + c - 1);
}

// Terminating 4F3 at unit argument, summed through k = terminationDegree.
// The termination index is explicit: several numerator parameters may be
// nonpositive integers simultaneously and the series must stop at the degree
// index, not at the smallest of them.
inline Q hyp4f3_terminating(const std::array<Q, 4>& num,
                            const std::array<Q, 3>& den,
                            long terminationDegree) {
    if (terminationDegree < 0)
        throw ValidityError("hyp4f3: negative termination degree");
    Q sum = 0;
    Q term = 1;  // product of ratios through index k-1, divided by k!
    for (long k = 0; k <= terminationDegree; ++k) {
        sum += term;
        if (k == terminationDegree) break;
        Q t = 1;
        for (const Q& a : num) t *= a + k;
        Q d = 1;
        for (const Q& b : den) d *= b + k;
        if (d == 0)
            throw PoleError("hyp4f3: denominator Pochhammer vanishes at k=" +
                            std::to_string(k + 1));
        term *= t / d / (k + 1);
    }
    return sum;
}

}  // namespace racah
