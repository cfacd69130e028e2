#ifndef BLOWUP_RING_HPP
#define BLOWUP_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/order.hpp"

namespace blowup {

/// A polynomial ring over the rationals: ordered distinct variable names plus
/// a monomial order. Immutable; shared by all values living in it. Two rings
/// are compatible when their names and order agree structurally.
class PolyRing {
public:
    PolyRing(std::vector<std::string> vars, MonomialOrder ord)
        : vars_(std::move(vars)), order_(ord) {
        if (vars_.empty()) throw argument_error("ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw argument_error("empty variable name");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw argument_error("duplicate variable '" + vars_[i] + "'");
        }
        if (order_.kind == MonomialOrder::Kind::block &&
            (order_.block_split == 0 || order_.block_split >= vars_.size()))
            throw argument_error("block order split out of range");
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }

    /// Index of a variable name, or npos.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return npos;
    }

    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && order_ == o.order_;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> vars,
                         MonomialOrder ord = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(std::move(vars), ord);
}

} // namespace blowup

#endif
