#ifndef BLOWUP_IDEAL_HPP
#define BLOWUP_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Finitely generated ideal. Generator order is preserved: downstream chart
/// construction indexes charts by it. The zero ideal is represented by a
/// single zero generator.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);
    static Ideal principal(Polynomial f);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const {
        for (const auto& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    /// Nonzero generators, in order.
    std::vector<Polynomial> nonzero_gens() const;

    // cached reduced Groebner bases, keyed by order name (write-once per key)
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Polynomial>> bases;
    };
    const std::shared_ptr<Cache>& cache() const { return cache_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Presentation of a quotient ring: polynomials over Q modulo `relations`.
/// A polynomial ring itself is presented by the zero ideal.
struct QuotientPresentation {
    RingPtr ring;
    Ideal relations;

    QuotientPresentation() = default;
    explicit QuotientPresentation(RingPtr r) : ring(std::move(r)), relations(Ideal::zero(ring)) {}
    QuotientPresentation(RingPtr r, Ideal rel) : ring(std::move(r)), relations(std::move(rel)) {
        if (!relations.ring()->same_as(*ring))
            throw argument_error("relations live in a different ring");
    }

    bool trivial_relations() const { return relations.is_zero(); }
};

} // namespace blowup

#endif
