#ifndef BLOWUP_ORDER_HPP
#define BLOWUP_ORDER_HPP

#include <cstddef>
#include <string>

#include "blowup/errors.hpp"

namespace blowup {

/// A monomial order: a multiplicative total order on exponent vectors with 1
/// minimal. `block(k)` is the elimination order whose first block is the
/// leading k variables (graded reverse lex on each block, block-wise).
struct MonomialOrder {
    enum class Kind { lex, grevlex, block };

    Kind kind = Kind::grevlex;
    std::size_t block_split = 0; // only meaningful for Kind::block

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

    bool operator==(const MonomialOrder&) const = default;

    std::string name() const {
        switch (kind) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::block: return "block:" + std::to_string(block_split);
        }
        return "?";
    }

    /// Parses "lex", "grevlex" or "block:<k>".
    static MonomialOrder from_name(const std::string& s) {
        if (s == "lex") return lex();
        if (s == "grevlex") return grevlex();
        if (s.rfind("block:", 0) == 0) {
            std::size_t k = std::stoul(s.substr(6));
            return block(k);
        }
        throw argument_error("unknown monomial order '" + s + "'");
    }
};

} // namespace blowup

#endif
