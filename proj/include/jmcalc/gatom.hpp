#pragma once

#include <map>
#include <string>
#include <vector>

#include "jmcalc/gl.hpp"
#include "jmcalc/segment.hpp"

namespace jmcalc {

// Irreducible classes on the anchor-group side. Everything the calculus can
// produce at one-half reducibility is one of these shapes.
enum class AtomKind {
    Cuspidal,        // the anchor unit itself
    StrictDS,        // square-integrable attached to one strictly positive run
    SegPlus,         // signed subquotient of a balanced-or-lopsided segment
    SegMinus,
    TriplePlus,      // square-integrable with three blocks, signs (+,+,+)
    TripleMinusBCA,  // three blocks, signs (+,-,-)
    TripleMinusABC,  // three blocks, signs (-,-,+)
    LanglandsG,      // quotient with strictly positive general-linear data
};

// One irreducible class, kept in canonical form so equality is structural.
class GAtom {
public:
    GAtom() = default;  // the anchor unit

    static GAtom cuspidal();
    static GAtom strict_ds(HalfInt a);
    static GAtom seg_pm(HalfInt lo, HalfInt hi, bool plus);
    static GAtom triple(HalfInt a, HalfInt b, HalfInt c, AtomKind kind);
    static GAtom langlands(std::vector<Segment> gl, GAtom temp);

    AtomKind kind() const { return kind_; }
    const std::vector<HalfInt>& params() const { return params_; }
    // LanglandsG accessors.
    const std::vector<Segment>& gl_data() const;
    const GAtom& temp_part() const;

    bool is_tempered() const;
    // Absolute-value exponent multiset riding on top of the anchor.
    CuspSupport abs_support() const;
    std::string str() const;

    bool operator==(const GAtom& o) const;
    bool operator<(const GAtom& o) const;

private:
    AtomKind kind_ = AtomKind::Cuspidal;
    std::vector<HalfInt> params_;
    std::vector<Segment> gl_;
    std::vector<GAtom> temp_;  // size one for LanglandsG
};

// Block sizes (doubled parameter plus one) contributed on top of the anchor.
// Defined for the square-integrable kinds only.
std::vector<long> jordan_of(const GAtom& a);
// Sign character on those blocks; same restriction.
std::map<long, int> epsilon_of(const GAtom& a);

// The dual fixes every class here; layer lists reverse.
GAtom dual_atom(const GAtom& a);

// Integer combination of classes with nonnegative coefficients.
class RGSum {
public:
    RGSum() = default;
    RGSum(std::initializer_list<GAtom> atoms);

    void add(const GAtom& a, long mult = 1);
    long coeff(const GAtom& a) const;
    bool contains(const GAtom& a) const { return coeff(a) > 0; }
    bool empty() const { return terms_.empty(); }
    // Number of distinct classes.
    std::size_t size() const { return terms_.size(); }
    long total() const;

    RGSum operator+(const RGSum& o) const;
    RGSum& operator+=(const RGSum& o);
    RGSum scaled(long k) const;

    const std::map<GAtom, long>& terms() const { return terms_; }
    std::string str() const;

    friend bool operator==(const RGSum&, const RGSum&) = default;

private:
    std::map<GAtom, long> terms_;
};

// Pointwise max(0, x - y) over classes.
RGSum floor_plus(const RGSum& x, const RGSum& y);
// Every coefficient of x bounded by the matching coefficient of y.
bool sum_leq(const RGSum& x, const RGSum& y);

std::vector<RGSum> dualize_layers(const std::vector<RGSum>& layers);

// Signed subquotient of d([lo,hi]) |x anchor, resolving out-of-range symbols
// to zero and negative centers through the contragredient flip.
RGSum resolve_seg_pm(HalfInt lo, HalfInt hi, bool plus);
// Quotient symbol attached to d([lo,hi]) |x anchor; zero when the center
// vanishes, flipped when it is negative.
RGSum resolve_L(HalfInt lo, HalfInt hi);

// Full class list of d |x anchor, one coefficient each.
RGSum classify_seg_induced(const Segment& d);

}  // namespace jmcalc
