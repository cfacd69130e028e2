#include "blowup/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace blowup {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
        throw argument_error("polynomials live in different rings");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.mono.arity() != ring_->arity())
            throw argument_error("monomial arity does not match ring");
    normalize();
}

void Polynomial::normalize() {
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return compare(a.mono, b.mono, ord) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring->arity()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t power) {
    if (index >= ring->arity()) throw argument_error("variable index out of range");
    Polynomial p(ring);
    if (power == 0) return constant(std::move(ring), 1);
    p.terms_.push_back({Monomial::var(ring->arity(), index, power), Rational(1)});
    return p;
}

Polynomial Polynomial::from_term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (m.arity() != ring->arity()) throw argument_error("monomial arity does not match ring");
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

std::optional<unsigned> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare(terms_[i].mono, o.terms_[j].mono, ord);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    const auto& ord = ring_->order();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return compare(a, b, ord) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.try_emplace(std::move(m), 0);
            it->second += a.coeff * b.coeff;
        }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, 1);
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!ring_->same_as(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw argument_error("monic of zero polynomial");
    return *this * (Rational(1) / terms_.front().coeff);
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    mpz_class den(1);
    for (const auto& t : terms_) {
        mpz_class d = t.coeff.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    mpz_class content(0);
    for (const auto& t : terms_) {
        mpz_class num = t.coeff.get_num() * (den / t.coeff.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(den, content);
    scale.canonicalize();
    Polynomial r = *this * scale;
    if (r.terms_.front().coeff < 0) r = -r;
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->arity()) throw argument_error("point arity mismatch");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

namespace {

void print_rational(std::ostream& os, const Rational& q) {
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
}

void print_term(std::ostream& os, const PolyRing& ring, const Term& t, bool abs_coeff) {
    Rational c = abs_coeff ? Rational(abs(t.coeff)) : t.coeff;
    bool printed_coeff = false;
    if (t.mono.is_one() || c != 1) {
        print_rational(os, c);
        printed_coeff = true;
    }
    bool first = !printed_coeff;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
        auto e = t.mono.exp[i];
        if (!e) continue;
        if (!first) os << "*";
        first = false;
        os << ring.vars()[i];
        if (e > 1) os << "^" << e;
    }
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (i == 0) {
            if (t.coeff < 0) os << "-";
            print_term(os, *ring_, t, true);
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
            print_term(os, *ring_, t, true);
        }
    }
    return os.str();
}

Polynomial Polynomial::map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ring_->arity()) throw argument_error("variable map arity mismatch");
    Polynomial r(target);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->arity());
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (var_map[i] >= target->arity()) throw argument_error("variable map out of range");
            m.exp[var_map[i]] += t.mono.exp[i];
        }
        r.terms_.push_back({std::move(m), t.coeff});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::extend_to(const RingPtr& target) const {
    std::vector<std::size_t> var_map(ring_->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
        std::size_t j = target->index_of(ring_->vars()[i]);
        if (j == PolyRing::npos)
            throw argument_error("target ring lacks variable '" + ring_->vars()[i] + "'");
        var_map[i] = j;
    }
    return map_to(target, var_map);
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index) {
    if (var_index >= f.ring()->arity()) throw argument_error("derivative index out of range");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        auto e = t.mono.exp[var_index];
        if (!e) continue;
        Monomial m = t.mono;
        m.exp[var_index] -= 1;
        out.push_back({std::move(m), t.coeff * e});
    }
    return Polynomial(f.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (images.size() != f.ring()->arity())
        throw argument_error("substitution needs one image per variable");
    for (std::size_t i = 1; i < images.size(); ++i) require_same_ring(images[0], images[i]);
    RingPtr target = images.empty() ? f.ring() : images[0].ring();
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.mono.exp[i]) prod = prod * images[i].pow(t.mono.exp[i]);
        acc = acc + prod;
    }
    return acc;
}

std::optional<unsigned> order_at_point(const Polynomial& f, const std::vector<Rational>& p) {
    if (p.size() != f.ring()->arity()) throw argument_error("point arity mismatch");
    if (f.is_zero()) return std::nullopt;
    std::vector<Polynomial> images;
    images.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        images.push_back(Polynomial::variable(f.ring(), i) +
                         Polynomial::constant(f.ring(), p[i]));
    Polynomial shifted = substitute(f, images);
    unsigned best = ~0u;
    for (const auto& t : shifted.terms()) best = std::min(best, t.mono.degree());
    return best;
}

} // namespace blowup
