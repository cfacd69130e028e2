#ifndef BLOWUP_MONOMIAL_HPP
#define BLOWUP_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "blowup/order.hpp"

namespace blowup {

/// Exponent vector, length = ring arity.
struct Monomial {
    std::vector<std::uint32_t> exp;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exp(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

    std::size_t arity() const { return exp.size(); }

    unsigned degree() const {
        unsigned d = 0;
        for (auto e : exp) d += e;
        return d;
    }

    unsigned degree_range(std::size_t lo, std::size_t hi) const {
        unsigned d = 0;
        for (std::size_t i = lo; i < hi && i < exp.size(); ++i) d += exp[i];
        return d;
    }

    bool is_one() const {
        for (auto e : exp)
            if (e) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }

    /// this / o; requires o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= o.exp[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exp.size(); ++i)
            if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
        return r;
    }

    static Monomial var(std::size_t arity, std::size_t i, std::uint32_t e = 1) {
        Monomial m(arity);
        m.exp[i] = e;
        return m;
    }
};

namespace detail {

// reverse-lex tie break on [lo, hi): a > b when the last differing
// exponent is *smaller* in a
inline int revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    }
    return 0;
}

inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = a.degree_range(lo, hi), db = b.degree_range(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    return revlex_tail(a, b, lo, hi);
}

} // namespace detail

/// Three-way comparison: 1 if a > b, -1 if a < b, 0 if equal.
inline int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    const std::size_t n = a.arity();
    switch (ord.kind) {
        case MonomialOrder::Kind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
            return 0;
        case MonomialOrder::Kind::grevlex:
            return detail::grevlex_range(a, b, 0, n);
        case MonomialOrder::Kind::block: {
            int c = detail::grevlex_range(a, b, 0, ord.block_split);
            if (c) return c;
            return detail::grevlex_range(a, b, ord.block_split, n);
        }
    }
    return 0;
}

} // namespace blowup

#endif
