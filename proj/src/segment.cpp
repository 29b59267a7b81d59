#include "jmcalc/segment.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace jmcalc {

void CuspSupport::add(HalfInt x, long mult) {
    if (mult == 0) return;
    long& c = counts_[x];
    c += mult;
    if (c < 0) throw std::logic_error("negative multiplicity in support multiset");
    if (c == 0) counts_.erase(x);
}

long CuspSupport::count(HalfInt x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
}

long CuspSupport::total() const {
    long t = 0;
    for (auto& [x, c] : counts_) t += c;
    return t;
}

CuspSupport& CuspSupport::operator+=(const CuspSupport& o) {
    for (auto& [x, c] : o.counts_) add(x, c);
    return *this;
}

CuspSupport CuspSupport::operator+(const CuspSupport& o) const {
    CuspSupport r = *this;
    r += o;
    return r;
}

CuspSupport CuspSupport::abs() const {
    CuspSupport r;
    for (auto& [x, c] : counts_) r.add(x.twice() < 0 ? -x : x, c);
    return r;
}

std::string CuspSupport::str() const {
    std::string s = "{";
    bool first = true;
    for (auto& [x, c] : counts_) {
        for (long i = 0; i < c; ++i) {
            if (!first) s += ",";
            s += x.str();
            first = false;
        }
    }
    s += "}";
    return s;
}

Segment Segment::make(HalfInt low, HalfInt high, CuspLabel rho) {
    if (low.is_integer() || high.is_integer())
        throw std::invalid_argument(
            fmt::format("segment endpoints must be half-odd: [{},{}]", low.str(), high.str()));
    if (high < low) return empty(rho);
    Segment s;
    s.low_ = low;
    s.high_ = high;
    s.rho_ = rho;
    s.empty_ = false;
    return s;
}

Segment Segment::empty(CuspLabel rho) {
    Segment s;
    s.rho_ = rho;
    return s;
}

long Segment::cardinality() const {
    if (empty_) return 0;
    return (high_ - low_).twice() / 2 + 1;
}

Quarter Segment::e_center() const {
    require_nonempty();
    return Quarter::from_halfint_sum(low_, high_);
}

Segment Segment::contragredient() const {
    if (empty_) return *this;
    return make(-high_, -low_, rho_);
}

bool Segment::contains(const Segment& other) const {
    if (other.is_empty()) return true;
    if (empty_) return false;
    return low_ <= other.low_ && other.high_ <= high_;
}

CuspSupport Segment::support() const {
    CuspSupport s;
    if (empty_) return s;
    for (HalfInt x = low_; x <= high_; x += HalfInt(1)) s.add(x);
    return s;
}

std::vector<HalfInt> Segment::word() const {
    std::vector<HalfInt> w;
    if (empty_) return w;
    for (HalfInt x = high_; x >= low_; x -= HalfInt(1)) w.push_back(x);
    return w;
}

std::string Segment::str() const {
    if (empty_) return "d()";
    if (low_ == high_) return fmt::format("d({})", low_.str());
    return fmt::format("d({},{})", low_.str(), high_.str());
}

bool is_linked(const Segment& d1, const Segment& d2) {
    if (d1.is_empty() || d2.is_empty()) return false;
    if (d1.rho() != d2.rho()) return false;
    if (d1.contains(d2) || d2.contains(d1)) return false;
    const Segment& a = d1.low() <= d2.low() ? d1 : d2;
    const Segment& b = d1.low() <= d2.low() ? d2 : d1;
    // Union is a segment iff b starts no later than one past a's end.
    return b.low() <= a.high() + HalfInt(1);
}

Segment seg_union(const Segment& d1, const Segment& d2) {
    if (d1.is_empty()) return d2;
    if (d2.is_empty()) return d1;
    if (d1.rho() != d2.rho()) throw std::logic_error("union across distinct cuspidal labels");
    const Segment& a = d1.low() <= d2.low() ? d1 : d2;
    const Segment& b = d1.low() <= d2.low() ? d2 : d1;
    if (b.low() > a.high() + HalfInt(1))
        throw std::logic_error(fmt::format("union of {} and {} is not a segment", d1.str(), d2.str()));
    return Segment::make(a.low(), std::max(a.high(), b.high()), d1.rho());
}

Segment seg_intersection(const Segment& d1, const Segment& d2) {
    if (d1.is_empty() || d2.is_empty()) return Segment::empty(d1.rho());
    if (d1.rho() != d2.rho()) throw std::logic_error("intersection across distinct cuspidal labels");
    HalfInt lo = std::max(d1.low(), d2.low());
    HalfInt hi = std::min(d1.high(), d2.high());
    if (hi < lo) return Segment::empty(d1.rho());
    return Segment::make(lo, hi, d1.rho());
}

std::vector<std::pair<Segment, Segment>> comult_delta(const Segment& d) {
    std::vector<std::pair<Segment, Segment>> out;
    if (d.is_empty()) {
        out.emplace_back(d, d);
        return out;
    }
    for (HalfInt z = d.low() - HalfInt(1); z <= d.high(); z += HalfInt(1)) {
        Segment upper = z == d.high() ? Segment::empty(d.rho())
                                      : Segment::make(z + HalfInt(1), d.high(), d.rho());
        Segment lower = z < d.low() ? Segment::empty(d.rho())
                                    : Segment::make(d.low(), z, d.rho());
        out.emplace_back(upper, lower);
    }
    return out;
}

}  // namespace jmcalc
