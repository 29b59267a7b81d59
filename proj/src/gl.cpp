#include "jmcalc/gl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace jmcalc {

Mult Mult::operator+(Mult o) const {
    long l = lo + o.lo;
    long h = (hi == kInf || o.hi == kInf) ? kInf : hi + o.hi;
    return {l, h};
}

Mult Mult::operator-(Mult o) const {
    long l = (o.hi == kInf) ? 0 : lo - o.hi;
    if (l < 0) l = 0;
    long h = (hi == kInf) ? kInf : hi - o.lo;
    if (h < 0) h = 0;
    if (l > h) l = h;
    return {l, h};
}

Mult Mult::operator*(Mult o) const {
    long l = lo * o.lo;
    long h;
    if (hi == 0 || o.hi == 0) {
        h = 0;
    } else if (hi == kInf || o.hi == kInf) {
        h = kInf;
    } else {
        h = hi * o.hi;
    }
    return {l, h};
}

Mult Mult::scaled(long k) const {
    if (k == 0) return exact(0);
    return {lo * k, hi == kInf ? kInf : hi * k};
}

Mult Mult::meet(Mult o) const {
    Mult r{std::max(lo, o.lo), std::min(hi, o.hi)};
    if (r.lo > r.hi) {
        throw std::logic_error(
            fmt::format("disjoint multiplicity bounds {} and {}", str(), o.str()));
    }
    return r;
}

std::string Mult::str() const {
    if (is_exact()) return std::to_string(lo);
    if (hi == kInf) return fmt::format(">={}", lo);
    return fmt::format("[{},{}]", lo, hi);
}

GLFactor GLFactor::delta(Segment d) {
    if (d.is_empty()) throw std::logic_error("unit cannot be a product factor");
    GLFactor f;
    f.kind = Kind::Delta;
    f.d1 = std::move(d);
    return f;
}

GLFactor GLFactor::lpair(Segment a, Segment b) {
    if (!is_linked(a, b))
        throw std::logic_error(
            fmt::format("quotient factor needs linked segments: {} {}", a.str(), b.str()));
    GLFactor f;
    f.kind = Kind::LPair;
    f.d1 = std::min(a, b);
    f.d2 = std::max(a, b);
    return f;
}

CuspSupport GLFactor::support() const {
    CuspSupport s = d1.support();
    if (kind == Kind::LPair) s += d2.support();
    return s;
}

GLFactor GLFactor::contragredient() const {
    if (kind == Kind::Delta) return delta(d1.contragredient());
    return lpair(d1.contragredient(), d2.contragredient());
}

std::string GLFactor::str() const {
    if (kind == Kind::Delta) return d1.str();
    return fmt::format("Lp({},{})", d1.str(), d2.str());
}

GLTerm::GLTerm(std::vector<GLFactor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

GLTerm GLTerm::of_deltas(const std::vector<Segment>& deltas) {
    GLTerm t;
    for (auto& d : deltas) t.push_delta(d);
    return t;
}

void GLTerm::push_delta(const Segment& d) {
    if (d.is_empty()) return;
    push(GLFactor::delta(d));
}

void GLTerm::push(const GLFactor& f) {
    factors_.push_back(f);
    std::sort(factors_.begin(), factors_.end());
}

bool GLTerm::pure_deltas() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const GLFactor& f) { return f.kind == GLFactor::Kind::Delta; });
}

std::vector<Segment> GLTerm::deltas() const {
    std::vector<Segment> out;
    for (auto& f : factors_) {
        if (f.kind != GLFactor::Kind::Delta)
            throw std::logic_error("term still carries a quotient factor");
        out.push_back(f.d1);
    }
    return out;
}

CuspSupport GLTerm::support() const {
    CuspSupport s;
    for (auto& f : factors_) s += f.support();
    return s;
}

GLTerm GLTerm::contragredient() const {
    std::vector<GLFactor> fs;
    fs.reserve(factors_.size());
    for (auto& f : factors_) fs.push_back(f.contragredient());
    return GLTerm(std::move(fs));
}

std::string GLTerm::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "*";
        s += factors_[i].str();
    }
    return s;
}

bool is_irreducible_product(const std::vector<Segment>& deltas) {
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t j = i + 1; j < deltas.size(); ++j)
            if (is_linked(deltas[i], deltas[j])) return false;
    return true;
}

std::vector<GLTerm> pair_decompose(const Segment& d1, const Segment& d2) {
    std::vector<GLTerm> out;
    if (!is_linked(d1, d2)) {
        out.push_back(GLTerm::of_deltas({d1, d2}));
        return out;
    }
    GLTerm merged;
    merged.push_delta(seg_union(d1, d2));
    merged.push_delta(seg_intersection(d1, d2));
    out.push_back(std::move(merged));
    out.push_back(GLTerm({GLFactor::lpair(d1, d2)}));
    return out;
}

namespace {

// Signed word multiset of the class named by `target`: plain segments
// contribute their descending word, a linked-pair quotient contributes the
// two-stream shuffle minus the union-intersection shuffle.
std::map<Word, long> signed_words(const GLTerm& target) {
    std::vector<std::size_t> lpairs;
    std::vector<Word> base;
    const auto& fs = target.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].kind == GLFactor::Kind::LPair)
            lpairs.push_back(i);
        else
            base.push_back(fs[i].d1.word());
    }
    std::map<Word, long> out;
    // Inclusion-exclusion over the quotient factors.
    for (std::size_t mask = 0; mask < (std::size_t{1} << lpairs.size()); ++mask) {
        std::vector<Word> streams = base;
        int sign = 1;
        for (std::size_t k = 0; k < lpairs.size(); ++k) {
            const GLFactor& f = fs[lpairs[k]];
            if (mask & (std::size_t{1} << k)) {
                sign = -sign;
                streams.push_back(seg_union(f.d1, f.d2).word());
                Segment inter = seg_intersection(f.d1, f.d2);
                if (!inter.is_empty()) streams.push_back(inter.word());
            } else {
                streams.push_back(f.d1.word());
                streams.push_back(f.d2.word());
            }
        }
        for (auto& [w, c] : shuffle_streams(streams)) out[w] += sign * c;
    }
    return out;
}

// Word-count upper bound: each copy of the target consumes its own word
// multiplicities, and every other constituent contributes nonnegatively.
long upper_by_words(const GLTerm& target, const std::vector<Word>& ambient_streams) {
    long best = Mult::kInf;
    for (auto& [w, c] : signed_words(target)) {
        if (c <= 0) continue;
        long n = count_shuffles_equal(w, ambient_streams);
        best = std::min(best, n / c);
        if (best == 0) break;
    }
    return best;
}

bool unlinked_with_all(const Segment& f, const std::vector<Segment>& rest) {
    for (auto& g : rest)
        if (is_linked(f, g)) return false;
    return true;
}

// Lower bound: repeatedly merge one linked ambient pair into its union and
// intersection, dropping the quotient branch, until a terminal state decides.
// Each merge only discards nonnegative contributions.
long lower_by_merges(const std::vector<Segment>& target, bool target_is_lpair,
                     const GLTerm& quotient_target, std::vector<Segment> state,
                     std::map<std::vector<Segment>, long>& memo) {
    std::sort(state.begin(), state.end());
    if (auto it = memo.find(state); it != memo.end()) return it->second;

    long result = 0;
    if (!target_is_lpair && state == target) {
        result = 1;
    } else if (target_is_lpair && GLTerm::of_deltas(state) ==
                                      GLTerm::of_deltas({quotient_target.factors()[0].d1,
                                                         quotient_target.factors()[0].d2})) {
        result = 1;
    } else if (is_irreducible_product(state)) {
        result = 0;
    } else {
        for (std::size_t i = 0; i < state.size() && result == 0; ++i) {
            for (std::size_t j = i + 1; j < state.size() && result == 0; ++j) {
                if (!is_linked(state[i], state[j])) continue;
                std::vector<Segment> next;
                for (std::size_t k = 0; k < state.size(); ++k)
                    if (k != i && k != j) next.push_back(state[k]);
                next.push_back(seg_union(state[i], state[j]));
                Segment inter = seg_intersection(state[i], state[j]);
                if (!inter.is_empty()) next.push_back(inter);
                result = std::max(result, lower_by_merges(target, target_is_lpair, quotient_target,
                                                          std::move(next), memo));
            }
        }
    }
    memo.emplace(std::move(state), result);
    return result;
}

}  // namespace

Mult contains_gl(const GLTerm& target, const GLTerm& ambient) {
    if (target.support() != ambient.support()) return Mult::exact(0);
    if (ambient.is_unit()) return Mult::exact(1);  // equal supports force target == unit

    // Rewrite ambient quotient factors through their defining two-term sum.
    const auto& afs = ambient.factors();
    for (std::size_t i = 0; i < afs.size(); ++i) {
        if (afs[i].kind != GLFactor::Kind::LPair) continue;
        std::vector<GLFactor> rest;
        for (std::size_t k = 0; k < afs.size(); ++k)
            if (k != i) rest.push_back(afs[k]);
        GLTerm full(rest), merged(rest);
        full.push_delta(afs[i].d1);
        full.push_delta(afs[i].d2);
        merged.push_delta(seg_union(afs[i].d1, afs[i].d2));
        merged.push_delta(seg_intersection(afs[i].d1, afs[i].d2));
        return contains_gl(target, full) - contains_gl(target, merged);
    }

    std::vector<Segment> amb = ambient.deltas();

    // Validate the target actually names one irreducible class.
    bool lpair_target = false;
    if (target.pure_deltas()) {
        if (!is_irreducible_product(target.deltas()))
            throw std::logic_error(fmt::format("target {} has linked factors", target.str()));
    } else if (target.factors().size() == 1) {
        lpair_target = true;
    } else {
        throw std::logic_error(
            fmt::format("unsupported mixed target {}", target.str()));
    }

    std::vector<Segment> tgt = lpair_target ? std::vector<Segment>{} : target.deltas();

    // Cancel common factors that are unlinked with everything else in sight.
    if (!lpair_target) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < amb.size() && !changed; ++i) {
                auto it = std::find(tgt.begin(), tgt.end(), amb[i]);
                if (it == tgt.end()) continue;
                std::vector<Segment> arest, trest;
                for (std::size_t k = 0; k < amb.size(); ++k)
                    if (k != i) arest.push_back(amb[k]);
                for (auto jt = tgt.begin(); jt != tgt.end(); ++jt)
                    if (jt != it) trest.push_back(*jt);
                if (unlinked_with_all(amb[i], arest) && unlinked_with_all(amb[i], trest)) {
                    amb = std::move(arest);
                    tgt = std::move(trest);
                    changed = true;
                }
            }
        }
        if (amb.empty()) return Mult::exact(1);  // everything cancelled
    }

    GLTerm reduced_target = lpair_target ? target : GLTerm::of_deltas(tgt);

    // Fast exits on the reduced problem.
    std::sort(amb.begin(), amb.end());
    if (!lpair_target) {
        std::vector<Segment> ts = tgt;
        std::sort(ts.begin(), ts.end());
        if (ts == amb) return Mult::exact(1);
    } else {
        const GLFactor& f = target.factors()[0];
        std::vector<Segment> pair = {std::min(f.d1, f.d2), std::max(f.d1, f.d2)};
        if (amb == pair) return Mult::exact(1);
    }
    if (is_irreducible_product(amb)) return Mult::exact(0);

    std::vector<Word> amb_streams;
    for (auto& d : amb) amb_streams.push_back(d.word());
    long hi = upper_by_words(reduced_target, amb_streams);
    if (hi == 0) return Mult::exact(0);

    std::map<std::vector<Segment>, long> memo;
    std::vector<Segment> ts = tgt;
    std::sort(ts.begin(), ts.end());
    long lo = lower_by_merges(ts, lpair_target, reduced_target, amb, memo);
    return {lo, hi};
}

}  // namespace jmcalc
