#include "blowup/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "blowup/config.hpp"

namespace blowup {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    if (gens_.empty()) throw argument_error("ideal needs at least one generator");
    for (const auto& g : gens_)
        if (!g.ring()->same_as(*ring_))
            throw argument_error("ideal generator in wrong ring");
}

Ideal Ideal::zero(RingPtr ring) {
    auto z = Polynomial::zero(ring);
    return Ideal(std::move(ring), {z});
}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
}

Ideal Ideal::principal(Polynomial f) {
    auto ring = f.ring();
    return Ideal(std::move(ring), {std::move(f)});
}

std::vector<Polynomial> Ideal::nonzero_gens() const {
    std::vector<Polynomial> out;
    for (const auto& g : gens_)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

namespace {

// Buchberger works on integer-cleared polynomials sorted descending under the
// requested order. Conversions happen at the boundary.

struct ZTerm {
    Monomial mono;
    mpz_class coeff;
};

struct ZPoly {
    std::vector<ZTerm> terms; // descending, nonzero
    const Monomial& lm() const { return terms.front().mono; }
    const mpz_class& lc() const { return terms.front().coeff; }
    bool zero() const { return terms.empty(); }
};

bool same_terms(const ZPoly& a, const ZPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].mono != b.terms[i].mono || a.terms[i].coeff != b.terms[i].coeff)
            return false;
    return true;
}

void make_primitive(ZPoly& p) {
    if (p.terms.empty()) return;
    mpz_class g(0);
    for (const auto& t : p.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    bool flip = p.terms.front().coeff < 0;
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& t : p.terms) t.coeff /= g;
}

ZPoly to_zpoly(const Polynomial& f, const MonomialOrder& ord) {
    ZPoly p;
    if (f.is_zero()) return p;
    mpz_class den(1);
    for (const auto& t : f.terms()) {
        mpz_class d = t.coeff.get_den(), g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    p.terms.reserve(f.terms().size());
    for (const auto& t : f.terms())
        p.terms.push_back({t.mono, mpz_class(t.coeff.get_num() * (den / t.coeff.get_den()))});
    std::sort(p.terms.begin(), p.terms.end(), [&](const ZTerm& a, const ZTerm& b) {
        return compare(a.mono, b.mono, ord) > 0;
    });
    make_primitive(p);
    return p;
}

Polynomial from_zpoly(const RingPtr& ring, const ZPoly& p) {
    std::vector<Term> terms;
    terms.reserve(p.terms.size());
    for (const auto& t : p.terms) terms.push_back({t.mono, Rational(t.coeff)});
    return Polynomial(ring, std::move(terms));
}

// p - (c * m) * q  merged in one pass; both descending under ord
ZPoly submul(const ZPoly& p, const mpz_class& c, const Monomial& m, const ZPoly& q,
             const MonomialOrder& ord) {
    ZPoly r;
    r.terms.reserve(p.terms.size() + q.terms.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        Monomial qm = q.terms[j].mono * m;
        int cmp = compare(p.terms[i].mono, qm, ord);
        if (cmp > 0) {
            r.terms.push_back(p.terms[i++]);
        } else if (cmp < 0) {
            r.terms.push_back({std::move(qm), mpz_class(-c * q.terms[j].coeff)});
            ++j;
        } else {
            mpz_class v = p.terms[i].coeff - c * q.terms[j].coeff;
            if (v != 0) r.terms.push_back({p.terms[i].mono, std::move(v)});
            ++i, ++j;
        }
    }
    for (; i < p.terms.size(); ++i) r.terms.push_back(p.terms[i]);
    for (; j < q.terms.size(); ++j)
        r.terms.push_back({q.terms[j].mono * m, mpz_class(-c * q.terms[j].coeff)});
    return r;
}

// joint content normalization: keeps (rem, h) primitive as a pair so the
// cross-multiplications below cannot blow up coefficient sizes
void normalize_pair(ZPoly& rem, ZPoly& h) {
    mpz_class g(0);
    for (const auto& t : rem.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) return;
    }
    for (const auto& t : h.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& t : rem.terms) t.coeff /= g;
    for (auto& t : h.terms) t.coeff /= g;
}

// Full normal form over Z (result primitive; remainder scaling is harmless
// because callers only care about the ideal element up to a scalar).
ZPoly reduce_z(ZPoly h, const std::vector<ZPoly>& basis, const MonomialOrder& ord) {
    ZPoly rem;
    unsigned steps = 0;
    while (!h.zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.zero() || !g.lm().divides(h.lm())) continue;
            Monomial m = h.lm() / g.lm();
            mpz_class a, ca, cg;
            mpz_gcd(a.get_mpz_t(), h.lc().get_mpz_t(), g.lc().get_mpz_t());
            ca = g.lc() / a; // multiply h (and rem) by this
            cg = h.lc() / a;
            if (ca != 1) {
                for (auto& t : h.terms) t.coeff *= ca;
                for (auto& t : rem.terms) t.coeff *= ca;
            }
            h = submul(h, cg, m, g, ord);
            if ((++steps & 7u) == 0) normalize_pair(rem, h);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(h.terms.front());
            h.terms.erase(h.terms.begin());
        }
    }
    make_primitive(rem);
    return rem;
}

ZPoly spoly(const ZPoly& f, const ZPoly& g, const MonomialOrder& ord) {
    Monomial u = Monomial::lcm(f.lm(), g.lm());
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    mpz_class cf = g.lc() / d;
    ZPoly left;
    left.terms.reserve(f.terms.size());
    Monomial mf = u / f.lm();
    for (const auto& t : f.terms) left.terms.push_back({t.mono * mf, mpz_class(cf * t.coeff)});
    return submul(left, mpz_class(f.lc() / d), u / g.lm(), g, ord);
}

struct PairKey {
    unsigned deg;
    Monomial lcm;
    std::size_t i, j;
};

std::vector<Polynomial> buchberger(const Ideal& I, const MonomialOrder& ord) {
    const RingPtr& ring = I.ring();
    std::vector<ZPoly> basis;
    for (const auto& g : I.gens()) {
        ZPoly z = to_zpoly(g, ord);
        if (!z.zero()) basis.push_back(std::move(z));
    }
    if (basis.empty()) return {};

    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = compare(a.lcm, b.lcm, ord);
        if (c) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<PairKey> pending;

    // Gebauer-Moeller pair update: prune old pairs whose lcm factors through
    // the new lead (B), then keep only lcm-minimal new pairs (M), one per lcm
    // value (F), and none whose group admits coprime leads (T).
    auto add_element_pairs = [&](std::size_t t) {
        const Monomial& lt = basis[t].lm();
        std::erase_if(pending, [&](const PairKey& pk) {
            if (!lt.divides(pk.lcm)) return false;
            Monomial li = Monomial::lcm(basis[pk.i].lm(), lt);
            Monomial lj = Monomial::lcm(basis[pk.j].lm(), lt);
            return li != pk.lcm && lj != pk.lcm;
        });
        std::vector<PairKey> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i) {
            Monomial u = Monomial::lcm(basis[i].lm(), lt);
            cand.push_back({u.degree(), std::move(u), i, t});
        }
        // M: drop candidates whose lcm is properly divisible by another's
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < cand.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm)
                    drop[a] = true;
            }
        // F/T: group the survivors by lcm; a group containing a coprime pair
        // dies entirely, otherwise its first member survives
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            bool coprime_in_group = false;
            std::size_t rep = a;
            for (std::size_t b = a; b < cand.size(); ++b) {
                if (drop[b] || cand[b].lcm != cand[a].lcm) continue;
                if (b != a) drop[b] = true;
                if (cand[b].lcm == basis[cand[b].i].lm() * lt) coprime_in_group = true;
            }
            if (!coprime_in_group) pending.push_back(cand[rep]);
        }
    };

    {
        // seed: treat generators as inserted one by one
        std::size_t n = basis.size();
        std::vector<ZPoly> staged(basis.begin(), basis.end());
        basis.clear();
        basis.push_back(std::move(staged[0]));
        for (std::size_t k = 1; k < n; ++k) {
            basis.push_back(std::move(staged[k]));
            add_element_pairs(basis.size() - 1);
        }
    }

    const auto& caps = limits();
    std::size_t processed = 0;
    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (pair_less(pending[k], pending[best])) best = k;
        PairKey pk = std::move(pending[best]);
        pending.erase(pending.begin() + best);
        const ZPoly& f = basis[pk.i];
        const ZPoly& g = basis[pk.j];
        // coprime leading monomials: S-polynomial reduces to zero
        if (pk.lcm == f.lm() * g.lm()) continue;
        if (++processed > caps.gb_pair_cap)
            throw resource_error("groebner pair cap exceeded");
        if (pk.deg > caps.gb_degree_cap)
            throw resource_error("groebner degree cap exceeded");
        ZPoly s = spoly(f, g, ord);
        ZPoly r = reduce_z(std::move(s), basis, ord);
        if (r.zero()) continue;
        basis.push_back(std::move(r));
        add_element_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<ZPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            if (basis[j].lm().divides(basis[i].lm())) {
                if (basis[j].lm() == basis[i].lm())
                    keep = j > i; // equal leads: keep the earlier one
                else
                    keep = false;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // interreduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<ZPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            ZPoly r = reduce_z(minimal[i], others, ord);
            if (!same_terms(r, minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
        std::erase_if(minimal, [](const ZPoly& p) { return p.zero(); });
    }

    std::sort(minimal.begin(), minimal.end(), [&](const ZPoly& a, const ZPoly& b) {
        return compare(a.lm(), b.lm(), ord) < 0;
    });

    // monic with respect to the basis order (z.lc() is that leading coefficient)
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& z : minimal)
        out.push_back(from_zpoly(ring, z) * (Rational(1) / Rational(z.lc())));
    return out;
}

} // namespace

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order) {
    const auto& cache = I.cache();
    if (cache) {
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->bases.find(order.name());
        if (it != cache->bases.end()) return {I, order, it->second};
    }
    auto basis = buchberger(I, order);
    if (cache) {
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->bases.emplace(order.name(), basis);
    }
    return {I, order, std::move(basis)};
}

GroebnerBasis groebner_basis(const Ideal& I) { return groebner_basis(I, I.ring()->order()); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!f.ring()->same_as(*G.ideal.ring()))
        throw argument_error("normal form: polynomial in wrong ring");
    const MonomialOrder& ord = G.order;
    // work in a ring carrying the basis order so leading terms line up
    RingPtr work = f.ring();
    bool reorder = !(ord == f.ring()->order());
    if (reorder) work = make_ring(f.ring()->vars(), ord);
    auto lift = [&](const Polynomial& p) { return reorder ? p.extend_to(work) : p; };
    std::vector<Polynomial> basis;
    basis.reserve(G.basis.size());
    for (const auto& g : G.basis) basis.push_back(lift(g));

    Polynomial h = lift(f);
    Polynomial rem = Polynomial::zero(work);
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !g.leading().mono.divides(h.leading().mono)) continue;
            Monomial m = h.leading().mono / g.leading().mono;
            Polynomial t = Polynomial::from_term(work, std::move(m),
                                                 h.leading().coeff / g.leading().coeff);
            h = h - t * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::from_term(work, h.leading().mono, h.leading().coeff);
            rem = rem + t;
            h = h - t;
        }
    }
    return reorder ? rem.extend_to(f.ring()) : rem;
}

bool contains_one(const Ideal& I) { return groebner_basis(I).is_unit(); }

bool equal_ideals(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same_as(*B.ring())) return false;
    auto ga = groebner_basis(A).basis;
    auto gb = groebner_basis(B).basis;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
    return normal_form(f, groebner_basis(I)).is_zero();
}

} // namespace blowup
