#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmcalc/halfint.hpp"

namespace jmcalc {

// Label of the self-dual cuspidal unit twisted along a segment. The library
// computes with a single label, but every binary operation still insists the
// labels agree.
struct CuspLabel {
    int id = 0;
    friend constexpr auto operator<=>(CuspLabel, CuspLabel) = default;
};

// Multiset of exponents, the cuspidal-support bookkeeping device.
class CuspSupport {
public:
    CuspSupport() = default;

    void add(HalfInt x, long mult = 1);
    long count(HalfInt x) const;
    long total() const;
    bool empty() const { return counts_.empty(); }

    CuspSupport& operator+=(const CuspSupport& o);
    CuspSupport operator+(const CuspSupport& o) const;

    // Multiset with every exponent replaced by its absolute value.
    CuspSupport abs() const;

    friend bool operator==(const CuspSupport&, const CuspSupport&) = default;

    const std::map<HalfInt, long>& counts() const { return counts_; }
    std::string str() const;

private:
    std::map<HalfInt, long> counts_;
};

// Closed exponent interval [low, high], or the distinguished empty value.
// Endpoints always lie in Z + 1/2 here; the factory rejects integers.
class Segment {
public:
    // Default-constructed segments are empty.
    Segment() = default;
    static Segment make(HalfInt low, HalfInt high, CuspLabel rho = {});
    static Segment empty(CuspLabel rho = {});

    bool is_empty() const { return empty_; }
    HalfInt low() const { require_nonempty(); return low_; }
    HalfInt high() const { require_nonempty(); return high_; }
    CuspLabel rho() const { return rho_; }

    long cardinality() const;
    // Center (low+high)/2; errors on the empty segment.
    Quarter e_center() const;
    // [-high, -low]; the empty segment is fixed.
    Segment contragredient() const;
    bool contains(const Segment& other) const;
    CuspSupport support() const;
    // Exponents listed high to low; empty list for the empty segment.
    std::vector<HalfInt> word() const;

    friend bool operator==(const Segment& a, const Segment& b) {
        if (a.empty_ != b.empty_ || a.rho_ != b.rho_) return false;
        return a.empty_ || (a.low_ == b.low_ && a.high_ == b.high_);
    }
    friend auto operator<=>(const Segment& a, const Segment& b) {
        if (auto c = a.empty_ <=> b.empty_; c != 0) return c;
        if (a.empty_) return a.rho_.id <=> b.rho_.id;
        if (auto c = a.low_ <=> b.low_; c != 0) return c;
        if (auto c = a.high_ <=> b.high_; c != 0) return c;
        return a.rho_.id <=> b.rho_.id;
    }

    std::string str() const;

private:
    void require_nonempty() const {
        if (empty_) throw std::logic_error("operation needs a nonempty segment");
    }

    HalfInt low_, high_;
    CuspLabel rho_;
    bool empty_ = true;
};

// Union is a segment and neither side contains the other.
bool is_linked(const Segment& d1, const Segment& d2);
// Defined only when the union is a segment (overlapping or adjacent inputs).
Segment seg_union(const Segment& d1, const Segment& d2);
// May be empty; inputs must overlap or at least be union-compatible.
Segment seg_intersection(const Segment& d1, const Segment& d2);

// All splits (upper piece [z+1, high], lower piece [low, z]) for
// z = low-1 .. high. The empty segment yields the single pair (empty, empty).
std::vector<std::pair<Segment, Segment>> comult_delta(const Segment& d);

}  // namespace jmcalc
