#pragma once

#include <string>

#include "corrcancel/ring.hpp"

namespace corrcancel {

// Monomial order on exponent vectors of a fixed ring.
//  - Lex: variable 0 strongest.
//  - DegRevLex: total degree, ties by reverse lexicographic.
//  - Block: the masked block first (by degrevlex within the block), then the
//    rest by degrevlex.  Any monomial touching the block beats any monomial
//    that does not, so this is an elimination order for the block.
class MonOrder {
  public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonOrder lex() { return MonOrder(Kind::Lex, 0); }
    static MonOrder degrevlex() { return MonOrder(Kind::DegRevLex, 0); }
    static MonOrder block(VarMask first_block) { return MonOrder(Kind::Block, first_block); }

    Kind kind() const { return kind_; }
    VarMask first_block() const { return block_; }

    // >0 if a > b, 0 if equal, <0 if a < b.
    int cmp(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }

    std::string cache_key() const;

  private:
    MonOrder(Kind k, VarMask b) : kind_(k), block_(b) {}

    Kind kind_;
    VarMask block_;
};

}  // namespace corrcancel
