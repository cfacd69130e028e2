#include "blowup/ideal_ops.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "blowup/config.hpp"

namespace blowup {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same_as(*J.ring())) throw argument_error("ideals live in different rings");
}

std::string ideal_key(const Ideal& I) {
    std::ostringstream os;
    for (const auto& v : I.ring()->vars()) os << v << ',';
    os << '|' << I.ring()->order().name() << '|';
    for (const auto& g : I.gens()) os << g.str() << ';';
    return os.str();
}

bool contains_exact(const std::vector<Polynomial>& v, const Polynomial& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

} // namespace

RingPtr extended_ring(const RingPtr& ring, const std::string& base, std::size_t count,
                      bool prepend, std::vector<std::string>* created) {
    std::vector<std::string> fresh;
    std::size_t counter = 0;
    while (fresh.size() < count) {
        std::string name = base + std::to_string(counter++);
        if (ring->index_of(name) != PolyRing::npos) continue;
        fresh.push_back(name);
    }
    std::vector<std::string> vars;
    if (prepend) {
        vars = fresh;
        vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    } else {
        vars = ring->vars();
        vars.insert(vars.end(), fresh.begin(), fresh.end());
    }
    if (created) *created = fresh;
    return make_ring(std::move(vars), ring->order().kind == MonomialOrder::Kind::block
                                          ? MonomialOrder::grevlex()
                                          : ring->order());
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero() && !contains_exact(gens, g)) gens.push_back(g);
    for (const auto& g : J.gens())
        if (!g.is_zero() && !contains_exact(gens, g)) gens.push_back(g);
    if (gens.empty()) return Ideal::zero(I.ring());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& a : I.nonzero_gens())
        for (const auto& b : J.nonzero_gens()) {
            Polynomial p = a * b;
            if (!contains_exact(gens, p)) gens.push_back(std::move(p));
        }
    if (gens.empty()) return Ideal::zero(I.ring());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned n) {
    if (n == 0) throw argument_error("ideal power requires n >= 1");
    auto base = I.nonzero_gens();
    if (base.empty()) return Ideal::zero(I.ring());
    // all monomials of degree n in the generators, lexicographic index order
    std::vector<Polynomial> gens;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        Polynomial p = base[pick[0]];
        for (unsigned k = 1; k < n; ++k) p = p * base[pick[k]];
        if (!contains_exact(gens, p)) gens.push_back(std::move(p));
        // next non-decreasing index tuple
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && pick[pos] == base.size() - 1) --pos;
        if (pos < 0) break;
        std::size_t v = pick[pos] + 1;
        for (std::size_t k = pos; k < n; ++k) pick[k] = v;
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal interreduced(const Ideal& I) {
    auto basis = groebner_basis(I).basis;
    if (basis.empty()) return Ideal::zero(I.ring());
    return Ideal(I.ring(), std::move(basis));
}

Ideal minimal_generators(const Ideal& I, const Ideal& relations) {
    std::vector<Polynomial> gens = groebner_basis(I).basis;
    if (gens.empty()) return Ideal::zero(I.ring());
    Ideal full = ideal_sum(I, relations);
    // drop from the largest leading monomial down: small generators are the
    // likely local parameters and should survive
    for (std::size_t k = gens.size(); k-- > 0 && gens.size() > 1;) {
        std::vector<Polynomial> rest;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != k) rest.push_back(gens[i]);
        Ideal candidate = ideal_sum(Ideal(I.ring(), rest), relations);
        if (equal_ideals(candidate, full)) gens = std::move(rest);
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal intersection(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    const RingPtr& ring = I.ring();
    RingPtr ext = extended_ring(ring, "t@", 1, /*prepend=*/true);
    std::vector<std::size_t> var_map(ring->arity());
    for (std::size_t i = 0; i < ring->arity(); ++i) var_map[i] = i + 1;
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.nonzero_gens()) gens.push_back(t * g.map_to(ext, var_map));
    for (const auto& g : J.nonzero_gens()) gens.push_back(one_minus_t * g.map_to(ext, var_map));
    auto gb = groebner_basis(Ideal(ext, std::move(gens)), MonomialOrder::block(1));
    std::vector<std::size_t> back(ext->arity(), 0);
    for (std::size_t i = 0; i < ring->arity(); ++i) back[i + 1] = i;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis) {
        bool uses_t = false;
        for (const auto& term : g.terms())
            if (term.mono.exp[0]) {
                uses_t = true;
                break;
            }
        if (!uses_t) kept.push_back(g.map_to(ring, back));
    }
    if (kept.empty()) return Ideal::zero(ring);
    return Ideal(ring, std::move(kept));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw argument_error("division by zero polynomial");
    Polynomial h = f;
    Polynomial q = Polynomial::zero(f.ring());
    while (!h.is_zero()) {
        if (!g.leading().mono.divides(h.leading().mono))
            throw argument_error("polynomial is not an exact multiple");
        Polynomial t = Polynomial::from_term(f.ring(), h.leading().mono / g.leading().mono,
                                             h.leading().coeff / g.leading().coeff);
        q = q + t;
        h = h - t * g;
    }
    return q;
}

namespace {

Ideal colon_single(const Ideal& I, const Polynomial& g) {
    if (g.is_constant()) return interreduced(I); // g is a nonzero constant: (I : g) = I
    Ideal meet = intersection(I, Ideal::principal(g));
    if (meet.is_zero()) return Ideal::zero(I.ring());
    std::vector<Polynomial> gens;
    for (const auto& k : meet.gens()) gens.push_back(divide_exact(k, g));
    return Ideal(I.ring(), std::move(gens));
}

} // namespace

Ideal quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    if (J.is_zero()) throw argument_error("colon by the zero ideal");
    auto gens = J.nonzero_gens();
    Ideal acc = colon_single(I, gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (acc.is_zero()) break;
        acc = intersection(acc, colon_single(I, gens[i]));
    }
    return interreduced(acc);
}

std::pair<Ideal, unsigned> saturation(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    if (J.is_zero()) throw argument_error("saturation by the zero ideal");
    Ideal prev = interreduced(I);
    for (unsigned k = 0; k <= limits().saturation_cap; ++k) {
        Ideal next = quotient(prev, J);
        if (equal_ideals(next, prev)) return {prev, k};
        prev = std::move(next);
    }
    throw resource_error("saturation cap exceeded");
}

Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop) {
    const RingPtr& ring = I.ring();
    if (drop.empty()) return interreduced(I);
    if (drop.size() >= ring->arity()) throw argument_error("cannot drop every variable");
    for (auto d : drop)
        if (d >= ring->arity()) throw argument_error("drop index out of range");

    // permuted ring: dropped variables first
    std::vector<std::string> vars;
    std::vector<std::size_t> var_map(ring->arity()); // old index -> permuted index
    for (auto d : drop) {
        var_map[d] = vars.size();
        vars.push_back(ring->vars()[d]);
    }
    std::size_t ndrop = vars.size();
    for (std::size_t i = 0; i < ring->arity(); ++i) {
        if (drop.count(i)) continue;
        var_map[i] = vars.size();
        vars.push_back(ring->vars()[i]);
    }
    RingPtr perm = make_ring(vars, MonomialOrder::grevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : I.nonzero_gens()) gens.push_back(g.map_to(perm, var_map));
    if (gens.empty()) return Ideal::zero(ring);
    auto gb = groebner_basis(Ideal(perm, std::move(gens)), MonomialOrder::block(ndrop));

    std::vector<std::size_t> back(ring->arity());
    for (std::size_t i = 0; i < ring->arity(); ++i) back[var_map[i]] = i;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis) {
        bool uses_dropped = false;
        for (const auto& term : g.terms())
            for (std::size_t i = 0; i < ndrop && !uses_dropped; ++i)
                if (term.mono.exp[i]) uses_dropped = true;
        if (!uses_dropped) kept.push_back(g.map_to(ring, back));
    }
    if (kept.empty()) return Ideal::zero(ring);
    return Ideal(ring, std::move(kept));
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (!f.ring()->same_as(*I.ring())) throw argument_error("radical membership: ring mismatch");
    if (f.is_zero()) return true;
    const RingPtr& ring = I.ring();
    RingPtr ext = extended_ring(ring, "t@", 1, /*prepend=*/false);
    std::vector<std::size_t> var_map(ring->arity());
    for (std::size_t i = 0; i < ring->arity(); ++i) var_map[i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : I.nonzero_gens()) gens.push_back(g.map_to(ext, var_map));
    Polynomial t = Polynomial::variable(ext, ext->arity() - 1);
    gens.push_back(Polynomial::constant(ext, 1) - t * f.map_to(ext, var_map));
    return contains_one(Ideal(ext, std::move(gens)));
}

int dimension(const Ideal& I) {
    static std::mutex mu;
    static std::map<std::string, int> memo;
    const std::string key = ideal_key(I);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto gb = groebner_basis(I);
    if (gb.is_unit()) {
        std::lock_guard<std::mutex> lock(mu);
        memo.emplace(key, -1);
        return -1;
    }
    const std::size_t n = I.ring()->arity();
    if (gb.basis.empty()) return static_cast<int>(n); // zero ideal
    // supports of the leading monomials
    std::vector<std::uint64_t> supports;
    for (const auto& g : gb.basis) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.leading().mono.exp[i]) s |= (1ull << i);
        supports.push_back(s);
    }
    if (n > 24) throw resource_error("dimension: too many variables");
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool independent = true;
        for (auto s : supports)
            if ((s & ~mask) == 0) { // leading monomial supported inside the set
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcountll(mask));
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, best);
    return best;
}

namespace {

// dense univariate over Q, index = degree
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly to_univariate(const Polynomial& f, std::size_t var) {
    UniPoly p;
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < t.mono.arity(); ++i)
            if (i != var && t.mono.exp[i])
                throw argument_error("polynomial is not univariate");
        std::size_t d = t.mono.exp[var];
        if (p.size() <= d) p.resize(d + 1, Rational(0));
        p[d] += t.coeff;
    }
    uni_trim(p);
    return p;
}

Polynomial from_univariate(const RingPtr& ring, const UniPoly& p, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t d = 0; d < p.size(); ++d)
        if (p[d] != 0)
            terms.push_back({Monomial::var(ring->arity(), var, static_cast<std::uint32_t>(d)),
                             p[d]});
    return Polynomial(ring, std::move(terms));
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    uni_trim(d);
    return d;
}

UniPoly uni_divide(const UniPoly& a, const UniPoly& b) { // exact
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    UniPoly r = a;
    while (r.size() >= b.size() && !r.empty()) {
        Rational c = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        uni_trim(r);
    }
    if (!r.empty()) throw argument_error("inexact univariate division");
    return q;
}

} // namespace

Ideal radical_zero_dim(const Ideal& I) {
    if (dimension(I) != 0) throw argument_error("radical_zero_dim: ideal is not zero-dimensional");
    static std::mutex mu;
    static std::map<std::string, Ideal> memo;
    const std::string key = ideal_key(I);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->arity();
    Ideal acc = interreduced(I);
    for (std::size_t v = 0; v < n; ++v) {
        std::set<std::size_t> drop;
        for (std::size_t i = 0; i < n; ++i)
            if (i != v) drop.insert(i);
        Ideal eliminant = n == 1 ? acc : eliminate(acc, drop);
        UniPoly g;
        for (const auto& e : eliminant.nonzero_gens()) {
            UniPoly u = to_univariate(e, v);
            g = g.empty() ? u : uni_gcd(std::move(g), u);
        }
        if (g.empty())
            throw argument_error("radical_zero_dim: no univariate eliminant (not zero-dimensional?)");
        UniPoly der = uni_derivative(g);
        UniPoly common = uni_gcd(g, der);
        UniPoly sqfree = common.size() <= 1 ? g : uni_divide(g, common);
        acc = ideal_sum(acc, Ideal::principal(from_univariate(ring, sqfree, v)));
    }
    Ideal result = interreduced(acc);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, result);
    return result;
}

} // namespace blowup
