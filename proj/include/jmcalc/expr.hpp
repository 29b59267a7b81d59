#pragma once

#include <string>
#include <vector>

#include "jmcalc/gatom.hpp"
#include "jmcalc/gl.hpp"
#include "jmcalc/segment.hpp"

namespace jmcalc {

// Product of segment factors induced with an anchor-side class:
// d1 x ... x dk |x atom. Factors commute here, so they are kept sorted.
class InducedExpr {
public:
    InducedExpr() = default;
    InducedExpr(std::vector<Segment> gl, GAtom atom);
    static InducedExpr of_atom(GAtom atom) { return InducedExpr({}, std::move(atom)); }

    const std::vector<Segment>& gl() const { return gl_; }
    const GAtom& atom() const { return atom_; }
    bool is_atom() const { return gl_.empty(); }

    CuspSupport abs_support() const;
    std::string str() const;

    bool operator==(const InducedExpr& o) const { return gl_ == o.gl_ && atom_ == o.atom_; }
    bool operator<(const InducedExpr& o) const {
        if (gl_ != o.gl_) return gl_ < o.gl_;
        return atom_ < o.atom_;
    }

private:
    std::vector<Segment> gl_;
    GAtom atom_;
};

// One tensor term of a restriction row: general-linear part and anchor part.
struct GGTerm {
    GLTerm gl;
    GAtom g;

    std::string str() const;

    bool operator==(const GGTerm& o) const { return gl == o.gl && g == o.g; }
    bool operator<(const GGTerm& o) const {
        if (!(gl == o.gl)) return gl < o.gl;
        return g < o.g;
    }
};

// Parses the command-line expression syntax:
//   d(x,y)  d(x)  seg(x,y)          segment factors (half-odd arguments)
//   sigma  ds(a)  seg+(lo,hi)  seg-(lo,hi)                anchor classes
//   tri+(a,b,c)  tri-bca(a,b,c)  tri-abc(a,b,c)
//   L(d(..),d(..); <atom>)                                 quotient classes
//   ind(d(..)*d(..), <atom>)        induction, nests in the second slot
// Whitespace is free. Throws std::invalid_argument on malformed input.
InducedExpr parse_expr(const std::string& text);

}  // namespace jmcalc
