#include "jmcalc/gatom.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace jmcalc {

namespace {

HalfInt half() { return HalfInt::half(); }

void require_half_odd_at_least_half(HalfInt x, const char* what) {
    if (!x.is_half_odd() || x < half())
        throw std::invalid_argument(fmt::format("{} must be half-odd and >= 1/2, got {}", what, x.str()));
}

}  // namespace

GAtom GAtom::cuspidal() { return GAtom(); }

GAtom GAtom::strict_ds(HalfInt a) {
    require_half_odd_at_least_half(a, "run end");
    GAtom g;
    g.kind_ = AtomKind::StrictDS;
    g.params_ = {a};
    return g;
}

GAtom GAtom::seg_pm(HalfInt lo, HalfInt hi, bool plus) {
    // Valid data: 1/2 <= -lo <= hi. Both signs exist on all of it.
    if (!lo.is_half_odd() || !hi.is_half_odd() || -lo < half() || hi < -lo)
        throw std::invalid_argument(
            fmt::format("signed segment class needs 1/2 <= -lo <= hi, got [{},{}]", lo.str(), hi.str()));
    GAtom g;
    g.kind_ = plus ? AtomKind::SegPlus : AtomKind::SegMinus;
    g.params_ = {lo, hi};
    return g;
}

GAtom GAtom::triple(HalfInt a, HalfInt b, HalfInt c, AtomKind kind) {
    if (kind != AtomKind::TriplePlus && kind != AtomKind::TripleMinusBCA &&
        kind != AtomKind::TripleMinusABC)
        throw std::invalid_argument("not a three-block kind");
    std::vector<HalfInt> p = {a, b, c};
    std::sort(p.begin(), p.end());
    require_half_odd_at_least_half(p[0], "block parameter");
    if (!p[1].is_half_odd() || !p[2].is_half_odd() || p[0] == p[1] || p[1] == p[2])
        throw std::invalid_argument("three-block class needs distinct half-odd parameters");
    GAtom g;
    g.kind_ = kind;
    g.params_ = std::move(p);
    return g;
}

GAtom GAtom::langlands(std::vector<Segment> gl, GAtom temp) {
    if (gl.empty()) throw std::invalid_argument("quotient class needs general-linear data");
    for (auto& d : gl) {
        if (d.is_empty() || !d.e_center().positive())
            throw std::invalid_argument(
                fmt::format("quotient data must have positive center: {}", d.str()));
    }
    if (!temp.is_tempered()) throw std::invalid_argument("quotient anchor part must be tempered");
    // Canonical order: center descending, then low endpoint ascending.
    std::sort(gl.begin(), gl.end(), [](const Segment& x, const Segment& y) {
        if (x.e_center() != y.e_center()) return y.e_center() < x.e_center();
        return x.low() < y.low();
    });
    GAtom g;
    g.kind_ = AtomKind::LanglandsG;
    g.gl_ = std::move(gl);
    g.temp_.push_back(std::move(temp));
    return g;
}

const std::vector<Segment>& GAtom::gl_data() const {
    if (kind_ != AtomKind::LanglandsG) throw std::logic_error("not a quotient class");
    return gl_;
}

const GAtom& GAtom::temp_part() const {
    if (kind_ != AtomKind::LanglandsG) throw std::logic_error("not a quotient class");
    return temp_.front();
}

bool GAtom::is_tempered() const { return kind_ != AtomKind::LanglandsG; }

CuspSupport GAtom::abs_support() const {
    CuspSupport s;
    switch (kind_) {
        case AtomKind::Cuspidal:
            break;
        case AtomKind::StrictDS:
            s += Segment::make(half(), params_[0]).support();
            break;
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            s += Segment::make(params_[0], params_[1]).support().abs();
            break;
        case AtomKind::TriplePlus:
        case AtomKind::TripleMinusBCA:
        case AtomKind::TripleMinusABC:
            for (HalfInt p : params_) s += Segment::make(half(), p).support();
            break;
        case AtomKind::LanglandsG:
            for (auto& d : gl_) s += d.support().abs();
            s += temp_.front().abs_support();
            break;
    }
    return s;
}

std::string GAtom::str() const {
    switch (kind_) {
        case AtomKind::Cuspidal:
            return "sigma";
        case AtomKind::StrictDS:
            return fmt::format("ds({})", params_[0].str());
        case AtomKind::SegPlus:
            return fmt::format("seg+({},{})", params_[0].str(), params_[1].str());
        case AtomKind::SegMinus:
            return fmt::format("seg-({},{})", params_[0].str(), params_[1].str());
        case AtomKind::TriplePlus:
            return fmt::format("tri+({},{},{})", params_[0].str(), params_[1].str(), params_[2].str());
        case AtomKind::TripleMinusBCA:
            return fmt::format("tri-bca({},{},{})", params_[0].str(), params_[1].str(),
                               params_[2].str());
        case AtomKind::TripleMinusABC:
            return fmt::format("tri-abc({},{},{})", params_[0].str(), params_[1].str(),
                               params_[2].str());
        case AtomKind::LanglandsG: {
            std::string s = "L(";
            for (auto& d : gl_) s += d.str() + ",";
            s.back() = ';';
            s += " " + temp_.front().str() + ")";
            return s;
        }
    }
    return "?";
}

bool GAtom::operator==(const GAtom& o) const {
    return kind_ == o.kind_ && params_ == o.params_ && gl_ == o.gl_ && temp_ == o.temp_;
}

bool GAtom::operator<(const GAtom& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (params_ != o.params_) return params_ < o.params_;
    if (gl_ != o.gl_) return gl_ < o.gl_;
    return temp_ < o.temp_;
}

std::vector<long> jordan_of(const GAtom& a) {
    auto block = [](HalfInt x) { return x.twice() + 1; };
    switch (a.kind()) {
        case AtomKind::StrictDS:
            return {block(a.params()[0])};
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            return {block(-a.params()[0]), block(a.params()[1])};
        case AtomKind::TriplePlus:
        case AtomKind::TripleMinusBCA:
        case AtomKind::TripleMinusABC:
            return {block(a.params()[0]), block(a.params()[1]), block(a.params()[2])};
        default:
            throw std::logic_error("block data exists only for square-integrable classes");
    }
}

std::map<long, int> epsilon_of(const GAtom& a) {
    auto blocks = jordan_of(a);
    std::sort(blocks.begin(), blocks.end());
    std::map<long, int> eps;
    switch (a.kind()) {
        case AtomKind::StrictDS:
            eps[blocks[0]] = +1;
            break;
        case AtomKind::SegPlus:
            eps[blocks[0]] = +1;
            eps[blocks[1]] = +1;
            break;
        case AtomKind::SegMinus:
            eps[blocks[0]] = -1;
            eps[blocks[1]] = -1;
            break;
        case AtomKind::TriplePlus:
            eps[blocks[0]] = +1;
            eps[blocks[1]] = +1;
            eps[blocks[2]] = +1;
            break;
        case AtomKind::TripleMinusBCA:
            eps[blocks[0]] = +1;
            eps[blocks[1]] = -1;
            eps[blocks[2]] = -1;
            break;
        case AtomKind::TripleMinusABC:
            eps[blocks[0]] = -1;
            eps[blocks[1]] = -1;
            eps[blocks[2]] = +1;
            break;
        default:
            throw std::logic_error("sign data exists only for square-integrable classes");
    }
    return eps;
}

GAtom dual_atom(const GAtom& a) { return a; }

RGSum::RGSum(std::initializer_list<GAtom> atoms) {
    for (auto& a : atoms) add(a);
}

void RGSum::add(const GAtom& a, long mult) {
    if (mult == 0) return;
    long& c = terms_[a];
    c += mult;
    if (c < 0) throw std::logic_error("negative class coefficient");
    if (c == 0) terms_.erase(a);
}

long RGSum::coeff(const GAtom& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

long RGSum::total() const {
    long t = 0;
    for (auto& [a, c] : terms_) t += c;
    return t;
}

RGSum RGSum::operator+(const RGSum& o) const {
    RGSum r = *this;
    r += o;
    return r;
}

RGSum& RGSum::operator+=(const RGSum& o) {
    for (auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

RGSum RGSum::scaled(long k) const {
    RGSum r;
    if (k == 0) return r;
    for (auto& [a, c] : terms_) r.add(a, c * k);
    return r;
}

std::string RGSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [a, c] : terms_) {
        if (!first) s += " + ";
        if (c != 1) s += fmt::format("{}*", c);
        s += a.str();
        first = false;
    }
    return s;
}

RGSum floor_plus(const RGSum& x, const RGSum& y) {
    RGSum r;
    for (auto& [a, c] : x.terms()) {
        long d = c - y.coeff(a);
        if (d > 0) r.add(a, d);
    }
    return r;
}

bool sum_leq(const RGSum& x, const RGSum& y) {
    for (auto& [a, c] : x.terms())
        if (c > y.coeff(a)) return false;
    return true;
}

std::vector<RGSum> dualize_layers(const std::vector<RGSum>& layers) {
    return {layers.rbegin(), layers.rend()};
}

RGSum resolve_seg_pm(HalfInt lo, HalfInt hi, bool plus) {
    RGSum out;
    if (hi < lo) {  // empty symbol: plus collapses to the anchor, minus to zero
        if (plus) out.add(GAtom::cuspidal());
        return out;
    }
    if (Quarter::from_halfint_sum(lo, hi).negative()) return resolve_seg_pm(-hi, -lo, plus);
    if (lo > HalfInt::half()) return out;  // no signed classes this far right
    if (lo == HalfInt::half()) {
        if (plus) out.add(GAtom::strict_ds(hi));
        return out;
    }
    out.add(GAtom::seg_pm(lo, hi, plus));
    return out;
}

RGSum resolve_L(HalfInt lo, HalfInt hi) {
    RGSum out;
    if (hi < lo) {
        out.add(GAtom::cuspidal());
        return out;
    }
    Quarter e = Quarter::from_halfint_sum(lo, hi);
    if (e.negative()) return resolve_L(-hi, -lo);
    if (!e.positive()) return out;  // balanced segment carries no quotient class
    out.add(GAtom::langlands({Segment::make(lo, hi)}, GAtom::cuspidal()));
    return out;
}

RGSum classify_seg_induced(const Segment& d) {
    RGSum out;
    if (d.is_empty()) {
        out.add(GAtom::cuspidal());
        return out;
    }
    if (d.e_center().negative()) return classify_seg_induced(d.contragredient());
    HalfInt lo = d.low(), hi = d.high();
    if (lo > HalfInt::half()) {
        out.add(GAtom::langlands({d}, GAtom::cuspidal()));
        return out;
    }
    if (lo == HalfInt::half()) {
        out.add(GAtom::strict_ds(hi));
        out.add(GAtom::langlands({d}, GAtom::cuspidal()));
        return out;
    }
    out.add(GAtom::seg_pm(lo, hi, true));
    out.add(GAtom::seg_pm(lo, hi, false));
    if (-lo < hi) out.add(GAtom::langlands({d}, GAtom::cuspidal()));
    return out;
}

}  // namespace jmcalc
