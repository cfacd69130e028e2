#include "blowup/smoothness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "blowup/config.hpp"

namespace blowup {

namespace {

// presentations recur heavily across snc subset checks and re-verification;
// the Jacobian sum is content-keyed and shared
std::string presentation_key(const QuotientPresentation& P) {
    std::ostringstream os;
    for (const auto& v : P.ring->vars()) os << v << ',';
    os << '|' << P.ring->order().name() << '|';
    for (const auto& g : P.relations.gens()) os << g.str() << ';';
    return os.str();
}

std::mutex jac_mu;
std::map<std::string, Ideal>& jac_memo() {
    static std::map<std::string, Ideal> memo;
    return memo;
}

} // namespace

JacobianData jacobian_data(const QuotientPresentation& P) {
    JacobianData jd{P, {}};
    for (const auto& f : P.relations.nonzero_gens()) {
        std::vector<Polynomial> row;
        row.reserve(P.ring->arity());
        for (std::size_t v = 0; v < P.ring->arity(); ++v)
            row.push_back(partial_derivative(f, v));
        jd.matrix.push_back(std::move(row));
    }
    return jd;
}

namespace {

Polynomial det_rec(const PolyMatrix& M, const std::vector<std::size_t>& rows,
                   std::vector<std::size_t> cols, const RingPtr& ring) {
    const std::size_t r = rows.size();
    if (r == 0) return Polynomial::constant(ring, 1);
    if (r == 1) return M[rows[0]][cols[0]];
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t j = 0; j < r; ++j) {
        const Polynomial& pivot = M[rows[0]][cols[j]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < r; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Polynomial minor = det_rec(M, sub_rows, std::move(sub_cols), ring);
        Polynomial term = pivot * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Ideal minors_ideal(const PolyMatrix& M, const RingPtr& ring, unsigned r,
                   const std::vector<std::size_t>& rows) {
    if (r != rows.size()) throw argument_error("minors: r must equal the number of rows");
    const std::size_t ncols = M.empty() ? (r == 0 ? 0 : throw argument_error("minors: empty matrix"))
                                        : M[0].size();
    if (r == 0) return Ideal::unit(ring);
    if (r > ncols) throw argument_error("minors: r exceeds the column count");
    for (auto i : rows)
        if (i >= M.size()) throw argument_error("minors: row index out of range");

    std::vector<Polynomial> gens;
    std::vector<std::size_t> cols(r);
    for (std::size_t i = 0; i < r; ++i) cols[i] = i;
    while (true) {
        Polynomial d = det_rec(M, rows, cols, ring);
        if (!d.is_zero()) gens.push_back(std::move(d));
        // next column combination
        int pos = static_cast<int>(r) - 1;
        while (pos >= 0 && cols[pos] == ncols - r + pos) --pos;
        if (pos < 0) break;
        ++cols[pos];
        for (std::size_t k = pos + 1; k < r; ++k) cols[k] = cols[k - 1] + 1;
    }
    if (gens.empty()) return Ideal::zero(ring);
    return Ideal(ring, std::move(gens));
}

Ideal jacobian_ideal(const QuotientPresentation& P) {
    const RingPtr& ring = P.ring;
    auto rels = P.relations.nonzero_gens();
    if (rels.empty()) return Ideal::unit(ring); // polynomial rings are smooth

    const std::string key = presentation_key(P);
    {
        std::lock_guard<std::mutex> lock(jac_mu);
        auto it = jac_memo().find(key);
        if (it != jac_memo().end()) return it->second;
    }

    JacobianData jd = jacobian_data(P);
    const std::size_t l = rels.size();
    const std::size_t n = ring->arity();
    Ideal J(ring, rels);

    // Subsets in descending size: the full subset has colon (1) and its
    // maximal minors alone certify smoothness in the common case, at which
    // point the sum is already the unit ideal and nothing else changes it.
    std::vector<Polynomial> acc;
    for (const auto& rpoly : rels) acc.push_back(rpoly);
    if (l > 62) throw resource_error("jacobian ideal: too many relations");
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 1; m < (1ull << l); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });

    unsigned since_check = 0;
    for (auto mask : masks) {
        const unsigned r = static_cast<unsigned>(__builtin_popcountll(mask));
        if (r > n) continue; // no r x r minors exist
        std::vector<std::size_t> rows;
        std::vector<Polynomial> sub;
        for (std::size_t i = 0; i < l; ++i)
            if (mask & (1ull << i)) {
                rows.push_back(i);
                sub.push_back(rels[i]);
            }
        Ideal H = minors_ideal(jd.matrix, ring, r, rows);
        if (H.is_zero()) continue;
        Ideal contribution = [&] {
            if (r == l) return interreduced(H); // (J : J) = (1)
            Ideal colon = quotient(Ideal(ring, sub), J);
            if (colon.is_zero()) return Ideal::zero(ring);
            return ideal_product(colon, H);
        }();
        bool grew = false;
        for (const auto& g : contribution.nonzero_gens()) {
            acc.push_back(g);
            grew = true;
        }
        // the full-row contribution alone certifies most smooth presentations;
        // afterwards check the unit only every few contributions
        if (grew && (r == l || ++since_check >= 4)) {
            since_check = 0;
            if (contains_one(Ideal(ring, acc))) {
                Ideal unit = Ideal::unit(ring);
                std::lock_guard<std::mutex> lock(jac_mu);
                jac_memo().emplace(key, unit);
                return unit;
            }
        }
    }
    Ideal result = interreduced(Ideal(ring, std::move(acc)));
    if (contains_one(result)) result = Ideal::unit(ring);
    std::lock_guard<std::mutex> lock(jac_mu);
    jac_memo().emplace(key, result);
    return result;
}

SmoothnessVerdict is_smooth(const QuotientPresentation& P) {
    Ideal H = jacobian_ideal(P);
    SmoothnessVerdict v;
    if (contains_one(H)) {
        v.smooth = true;
        v.witness = Ideal::unit(P.ring);
        v.summary = "the Jacobian ideal contains 1";
    } else {
        v.smooth = false;
        v.witness = interreduced(ideal_sum(H, P.relations));
        v.summary = "Jacobian ideal is proper; its zero set is the singular locus";
    }
    return v;
}

Ideal singular_locus_ideal(const QuotientPresentation& P) {
    return interreduced(ideal_sum(jacobian_ideal(P), P.relations));
}

Ideal rank_singular_locus(const QuotientPresentation& P) {
    const RingPtr& ring = P.ring;
    auto rels = P.relations.nonzero_gens();
    if (rels.empty()) return Ideal::unit(ring); // polynomial rings are smooth

    static std::mutex mu;
    static std::map<std::string, Ideal> memo;
    const std::string key = presentation_key(P);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto remember = [&](Ideal result) {
        std::lock_guard<std::mutex> lock(mu);
        memo.emplace(key, result);
        return result;
    };

    const int d = dimension(P.relations);
    if (d < 0) return remember(Ideal::unit(ring)); // empty scheme
    const std::size_t n = ring->arity();
    const std::size_t codim = n - static_cast<std::size_t>(d);
    if (codim == 0) return remember(Ideal::unit(ring));

    JacobianData jd = jacobian_data(P);
    const std::size_t l = rels.size();
    if (codim > l || codim > n) // rank can never reach codim: nothing is smooth
        return remember(interreduced(P.relations));

    std::vector<Polynomial> gens = rels;
    // all codim x codim minors over every row choice
    std::vector<std::size_t> rows(codim);
    for (std::size_t i = 0; i < codim; ++i) rows[i] = i;
    while (true) {
        for (const auto& m :
             minors_ideal(jd.matrix, ring, static_cast<unsigned>(codim), rows).nonzero_gens())
            gens.push_back(m);
        int pos = static_cast<int>(codim) - 1;
        while (pos >= 0 && rows[pos] == l - codim + pos) --pos;
        if (pos < 0) break;
        ++rows[pos];
        for (std::size_t k = pos + 1; k < codim; ++k) rows[k] = rows[k - 1] + 1;
    }
    return remember(interreduced(Ideal(ring, std::move(gens))));
}

namespace {

// all partial derivatives of order <= k, f included (multi-indices in
// non-decreasing variable order to avoid duplicates)
void partials_up_to(const Polynomial& f, unsigned k, std::size_t from_var,
                    std::vector<Polynomial>& out) {
    out.push_back(f);
    if (k == 0) return;
    for (std::size_t v = from_var; v < f.ring()->arity(); ++v) {
        Polynomial d = partial_derivative(f, v);
        if (d.is_zero()) continue;
        std::vector<Polynomial> sub;
        partials_up_to(d, k - 1, v, sub);
        for (auto& p : sub) out.push_back(std::move(p));
    }
}

} // namespace

std::pair<unsigned, Ideal> max_order_locus(const Polynomial& f) {
    if (f.is_zero() || f.is_constant())
        throw argument_error("max order locus requires a nonconstant polynomial");
    const unsigned deg = *f.degree();
    for (unsigned mu = deg; mu >= 2; --mu) {
        std::vector<Polynomial> gens;
        partials_up_to(f, mu - 1, 0, gens);
        Ideal I(f.ring(), std::move(gens));
        if (!contains_one(I)) {
            Ideal locus = dimension(I) == 0 ? radical_zero_dim(I) : interreduced(I);
            return {mu, std::move(locus)};
        }
    }
    return {1, Ideal::principal(f)};
}

std::pair<unsigned, Ideal> max_order_locus_on(const QuotientPresentation& P, const Polynomial& h) {
    if (P.trivial_relations()) return max_order_locus(h);
    if (h.is_zero()) throw argument_error("max order locus of the zero section");

    // points of multiplicity >= 2 are exactly the singular points of the
    // curve on the (smooth) surface; the curve is a hypersurface there, so
    // the rank locus applies
    Ideal curve = ideal_sum(P.relations, Ideal::principal(h));
    Ideal sing = rank_singular_locus({P.ring, curve});
    if (contains_one(sing)) return {1, Ideal::principal(h)};
    if (dimension(sing) != 0)
        throw argument_error("max order locus: singular locus is positive-dimensional "
                             "(curve not reduced on this chart?)");
    Ideal S = radical_zero_dim(sing);

    // peel points of low multiplicity: V(rel + S^d) is the d-th infinitesimal
    // neighborhood of the points, so ((rel + S^d) : h) cuts exactly the
    // points where h has order < d
    Ideal locus = S;
    unsigned mu = 2;
    while (true) {
        if (mu >= limits().gb_degree_cap)
            throw resource_error("max order locus: multiplicity search cap");
        unsigned d = mu + 1;
        Ideal neighborhood = ideal_sum(P.relations, ideal_power(S, d));
        Ideal low = quotient(neighborhood, Ideal::principal(h));
        Ideal next = saturation(locus, low).first;
        if (contains_one(next)) break;
        locus = std::move(next);
        ++mu;
    }
    return {mu, locus};
}

} // namespace blowup
