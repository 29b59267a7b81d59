#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "jmcalc/oracle.hpp"
#include "jmcalc/segment.hpp"

namespace jmcalc {

// Multiplicity interval [lo, hi]; hi == kInf encodes an open upper bound.
// Exact values have lo == hi.
struct Mult {
    static constexpr long kInf = std::numeric_limits<long>::max();

    long lo = 0;
    long hi = kInf;

    static constexpr Mult exact(long n) { return {n, n}; }
    static constexpr Mult at_least(long n) { return {n, kInf}; }
    static constexpr Mult unknown() { return {0, kInf}; }

    constexpr bool is_exact() const { return lo == hi; }
    constexpr bool is_zero() const { return hi == 0; }

    friend constexpr bool operator==(Mult, Mult) = default;

    Mult operator+(Mult o) const;
    // Interval difference clamped at zero; exactness survives only when both
    // sides are exact.
    Mult operator-(Mult o) const;
    Mult operator*(Mult o) const;
    Mult scaled(long k) const;
    // Intersection of two enclosures of the same quantity; throws if they are
    // disjoint, since that means one of the bounds was unsound.
    Mult meet(Mult o) const;
    std::string str() const;
};

// One factor of a general-linear term: a single segment representation or
// the quotient attached to a linked pair of segments.
struct GLFactor {
    enum class Kind { Delta, LPair };

    Kind kind = Kind::Delta;
    Segment d1;
    Segment d2;  // LPair only

    static GLFactor delta(Segment d);
    static GLFactor lpair(Segment a, Segment b);

    CuspSupport support() const;
    GLFactor contragredient() const;
    std::string str() const;

    friend bool operator==(const GLFactor&, const GLFactor&) = default;
    friend auto operator<=>(const GLFactor& a, const GLFactor& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.d1 <=> b.d1; c != 0) return c;
        return a.d2 <=> b.d2;
    }
};

// Formal product of factors, kept sorted; the empty product is the unit.
class GLTerm {
public:
    GLTerm() = default;
    explicit GLTerm(std::vector<GLFactor> factors);
    static GLTerm unit() { return GLTerm(); }
    static GLTerm of_deltas(const std::vector<Segment>& deltas);

    // Appends and re-sorts; empty segments are silently dropped.
    void push_delta(const Segment& d);
    void push(const GLFactor& f);

    bool is_unit() const { return factors_.empty(); }
    const std::vector<GLFactor>& factors() const { return factors_; }
    // All factors are plain segments.
    bool pure_deltas() const;
    std::vector<Segment> deltas() const;
    CuspSupport support() const;
    GLTerm contragredient() const;
    std::string str() const;

    friend bool operator==(const GLTerm&, const GLTerm&) = default;
    friend auto operator<=>(const GLTerm& a, const GLTerm& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<GLFactor> factors_;
};

// True when no two segments in the list are linked, i.e. the full product is
// irreducible.
bool is_irreducible_product(const std::vector<Segment>& deltas);

// Composition classes of d1 x d2: one term when unlinked, otherwise the
// union-intersection product plus the linked-pair quotient. Every class has
// coefficient one.
std::vector<GLTerm> pair_decompose(const Segment& d1, const Segment& d2);

// Multiplicity of the irreducible class named by `target` inside the product
// named by `ambient`. Target factors must name one irreducible: plain
// segments pairwise unlinked, or a lone linked-pair quotient.
Mult contains_gl(const GLTerm& target, const GLTerm& ambient);

}  // namespace jmcalc
