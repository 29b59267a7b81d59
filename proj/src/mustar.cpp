#include "jmcalc/mustar.hpp"

#include <fmt/format.h>

#include "jmcalc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace jmcalc {

namespace {

const HalfInt kHalf = HalfInt::half();

// x * y as a term: drops empty slots, merges a linked pair into its quotient
// factor, and otherwise keeps the plain product (which is irreducible for
// every unlinked or nested pair this file produces).
GLTerm lp_or_product(const Segment& x, const Segment& y) {
    GLTerm t;
    if (!x.is_empty() && !y.is_empty() && is_linked(x, y)) {
        t.push(GLFactor::lpair(x, y));
        return t;
    }
    t.push_delta(x);
    t.push_delta(y);
    return t;
}

// True when the term names a single composition class of its product.
bool one_class_gl(const GLTerm& gl) {
    return gl.pure_deltas() ? is_irreducible_product(gl.deltas())
                            : gl.factors().size() == 1;
}

bool square_integrable(const GAtom& g) {
    switch (g.kind()) {
        case AtomKind::Cuspidal:
        case AtomKind::StrictDS:
        case AtomKind::TriplePlus:
        case AtomKind::TripleMinusBCA:
        case AtomKind::TripleMinusABC:
            return true;
        default:
            return false;
    }
}

// One exponent word guaranteed to lie under the class in the minimal Jacquet
// direction: its canonical witness term, flattened left to right.
Word sample_word(const GAtom& g) {
    auto seg_word = [](Segment d, Word& w) {
        Word u = d.word();
        w.insert(w.end(), u.begin(), u.end());
    };
    Word w;
    switch (g.kind()) {
        case AtomKind::Cuspidal:
            break;
        case AtomKind::StrictDS:
            seg_word(Segment::make(kHalf, g.params()[0]), w);
            break;
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            seg_word(Segment::make(g.params()[0], g.params()[1]), w);
            break;
        case AtomKind::TriplePlus:
        case AtomKind::TripleMinusABC:
            seg_word(Segment::make(-g.params()[0], g.params()[1]), w);
            seg_word(Segment::make(kHalf, g.params()[2]), w);
            break;
        case AtomKind::TripleMinusBCA:
            seg_word(Segment::make(-g.params()[1], g.params()[2]), w);
            seg_word(Segment::make(kHalf, g.params()[0]), w);
            break;
        case AtomKind::LanglandsG: {
            for (auto& d : g.gl_data()) seg_word(d.contragredient(), w);
            Word t = sample_word(g.temp_part());
            w.insert(w.end(), t.begin(), t.end());
            break;
        }
    }
    return w;
}

using RowMap = std::map<std::pair<GLTerm, InducedExpr>, long>;

void add_row(RowMap& rows, GLTerm gl, InducedExpr rest, long coeff) {
    if (coeff == 0) return;
    rows[{std::move(gl), std::move(rest)}] += coeff;
}

void add_rows_for(RowMap& rows, GLTerm gl, const RGSum& rest_classes, long coeff) {
    for (auto& [atom, m] : rest_classes.terms())
        add_row(rows, gl, InducedExpr::of_atom(atom), coeff * m);
}

std::vector<MuRow> collect(const RowMap& rows) {
    std::vector<MuRow> out;
    out.reserve(rows.size());
    for (auto& [key, coeff] : rows) out.push_back({key.first, key.second, coeff});
    return out;
}

// Rows of the strictly-positive-half-line class with top exponent c: one
// term per split point, the lower run staying on the anchor side.
void strict_ds_rows(RowMap& rows, HalfInt c) {
    for (HalfInt j = -kHalf; j <= c; j += 1) {
        GLTerm gl;
        gl.push_delta(Segment::make(j + 1, c));
        GAtom rest = (j < kHalf) ? GAtom::cuspidal() : GAtom::strict_ds(j);
        add_row(rows, std::move(gl), InducedExpr::of_atom(rest), 1);
    }
}

// Rows of the signed segment class on [-a, c] (stored as [lo, hi] with
// a = -lo): a reflected-prefix sum landing on the anchor unit, a sign-
// preserving middle sum, and a quotient-remainder sum.
void seg_pm_rows(RowMap& rows, HalfInt lo, HalfInt hi, bool plus) {
    HalfInt a = -lo, c = hi;
    HalfInt up1 = plus ? -kHalf : HalfInt::from_twice(-3);
    for (HalfInt i = -a - 1; i <= up1; i += 1) {
        GLTerm gl;
        gl.push_delta(Segment::make(-i, a));
        gl.push_delta(Segment::make(i + 1, c));
        add_row(rows, std::move(gl), InducedExpr::of_atom(GAtom::cuspidal()), 1);
    }
    for (HalfInt i = -a - 1; i <= a; i += 1) {
        for (HalfInt j = i + 1; j <= c; j += 1) {
            GLTerm gl;
            gl.push_delta(Segment::make(-i, a));
            gl.push_delta(Segment::make(j + 1, c));
            add_rows_for(rows, std::move(gl), resolve_seg_pm(i + 1, j, plus), 1);
        }
        for (HalfInt j = i + 1; j <= a; j += 1) {
            if (i.twice() + j.twice() >= -2) continue;
            GLTerm gl;
            gl.push_delta(Segment::make(-i, a));
            gl.push_delta(Segment::make(j + 1, c));
            add_rows_for(rows, std::move(gl), resolve_L(i + 1, j), 1);
        }
    }
}

// Rows of the one-segment quotient class on [-a, c] over the anchor unit:
// a sum landing on the anchor and a sum keeping a smaller quotient class.
void langlands_rows(RowMap& rows, HalfInt lo, HalfInt hi) {
    HalfInt a = -lo, c = hi;
    for (HalfInt i = kHalf; i <= c; i += 1) {
        add_row(rows, lp_or_product(Segment::make(-i, a), Segment::make(i + 1, c)),
                InducedExpr::of_atom(GAtom::cuspidal()), 1);
    }
    for (HalfInt i = -a - 1; i <= c; i += 1) {
        for (HalfInt j = i + 1; j <= c; j += 1) {
            if (i.twice() + j.twice() < 0) continue;
            add_rows_for(rows, lp_or_product(Segment::make(-i, a), Segment::make(j + 1, c)),
                         resolve_L(i + 1, j), 1);
        }
    }
}

}  // namespace

bool has_closed_rows(const GAtom& atom) {
    switch (atom.kind()) {
        case AtomKind::Cuspidal:
        case AtomKind::StrictDS:
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            return true;
        case AtomKind::LanglandsG:
            return atom.gl_data().size() == 1 && atom.temp_part().kind() == AtomKind::Cuspidal;
        default:
            return false;
    }
}

std::vector<MuRow> atom_mu_rows(const GAtom& atom) {
    RowMap rows;
    switch (atom.kind()) {
        case AtomKind::Cuspidal:
            add_row(rows, GLTerm::unit(), InducedExpr::of_atom(atom), 1);
            break;
        case AtomKind::StrictDS:
            strict_ds_rows(rows, atom.params()[0]);
            break;
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            seg_pm_rows(rows, atom.params()[0], atom.params()[1],
                        atom.kind() == AtomKind::SegPlus);
            break;
        case AtomKind::LanglandsG: {
            if (!has_closed_rows(atom))
                throw std::logic_error(
                    fmt::format("no closed row list for {}", atom.str()));
            const Segment& d = atom.gl_data()[0];
            langlands_rows(rows, d.low(), d.high());
            break;
        }
        default:
            throw std::logic_error(fmt::format("no closed row list for {}", atom.str()));
    }
    return collect(rows);
}

WordMultiset gl_torus_words(const GLTerm& term) {
    long total = 0;
    for (auto& f : term.factors()) {
        total += f.d1.cardinality();
        if (f.kind == GLFactor::Kind::LPair) total += f.d2.cardinality();
    }
    if (total > word_cap())
        throw std::length_error(
            fmt::format("word expansion of length {} exceeds cap {}", total, word_cap()));

    std::vector<std::size_t> lpairs;
    std::vector<Word> base;
    const auto& fs = term.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].kind == GLFactor::Kind::LPair)
            lpairs.push_back(i);
        else
            base.push_back(fs[i].d1.word());
    }
    std::map<Word, long> signed_out;
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
        for (auto& [w, c] : shuffle_streams(streams)) signed_out[w] += sign * c;
    }
    WordMultiset out;
    for (auto& [w, c] : signed_out) {
        if (c < 0)
            throw std::logic_error(
                fmt::format("negative word count {} for {}", c, word_str(w)));
        if (c > 0) out[w] = c;
    }
    return out;
}

std::optional<InducedExpr> defining_host(const GAtom& atom) {
    switch (atom.kind()) {
        case AtomKind::Cuspidal:
            return std::nullopt;
        case AtomKind::StrictDS:
            return InducedExpr({Segment::make(kHalf, atom.params()[0])}, GAtom::cuspidal());
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            return InducedExpr({Segment::make(atom.params()[0], atom.params()[1])},
                               GAtom::cuspidal());
        case AtomKind::TriplePlus:
        case AtomKind::TripleMinusABC: {
            HalfInt a = atom.params()[0], b = atom.params()[1], c = atom.params()[2];
            return InducedExpr({Segment::make(-a, b)}, GAtom::strict_ds(c));
        }
        case AtomKind::TripleMinusBCA: {
            HalfInt a = atom.params()[0], b = atom.params()[1], c = atom.params()[2];
            return InducedExpr({Segment::make(-b, c)}, GAtom::strict_ds(a));
        }
        case AtomKind::LanglandsG:
            return InducedExpr(atom.gl_data(), atom.temp_part());
    }
    return std::nullopt;
}

std::vector<GGTerm> atom_certificates(const GAtom& atom) {
    std::vector<GGTerm> out;
    auto push = [&out](GLTerm gl, GAtom g) { out.push_back({std::move(gl), std::move(g)}); };
    switch (atom.kind()) {
        case AtomKind::Cuspidal:
            break;
        case AtomKind::StrictDS:
            push(GLTerm::of_deltas({Segment::make(kHalf, atom.params()[0])}), GAtom::cuspidal());
            break;
        case AtomKind::SegPlus:
        case AtomKind::SegMinus:
            push(GLTerm::of_deltas({Segment::make(atom.params()[0], atom.params()[1])}),
                 GAtom::cuspidal());
            break;
        case AtomKind::TriplePlus: {
            HalfInt a = atom.params()[0], b = atom.params()[1], c = atom.params()[2];
            push(GLTerm::of_deltas({Segment::make(-a, b)}), GAtom::strict_ds(c));
            push(GLTerm::of_deltas({Segment::make(-b, c)}), GAtom::strict_ds(a));
            push(GLTerm::of_deltas({Segment::make(kHalf, a)}), GAtom::seg_pm(-b, c, true));
            break;
        }
        case AtomKind::TripleMinusBCA: {
            HalfInt a = atom.params()[0], b = atom.params()[1], c = atom.params()[2];
            push(GLTerm::of_deltas({Segment::make(-b, c)}), GAtom::strict_ds(a));
            push(GLTerm::of_deltas({Segment::make(kHalf, a)}), GAtom::seg_pm(-b, c, false));
            break;
        }
        case AtomKind::TripleMinusABC: {
            HalfInt a = atom.params()[0], b = atom.params()[1], c = atom.params()[2];
            push(GLTerm::of_deltas({Segment::make(-a, b)}), GAtom::strict_ds(c));
            break;
        }
        case AtomKind::LanglandsG: {
            GLTerm gl;
            for (auto& d : atom.gl_data()) gl.push_delta(d.contragredient());
            push(std::move(gl), atom.temp_part());
            break;
        }
    }
    return out;
}

const std::vector<MuRow>& JacquetEngine::mu_rows(const InducedExpr& host) {
    if (auto it = rows_.find(host); it != rows_.end()) return it->second;

    RowMap rows;
    for (auto& r : atom_mu_rows(host.atom()))
        rows[{r.gl, r.rest}] += r.coeff;

    for (const Segment& d : host.gl()) {
        HalfInt x = d.low(), y = d.high();
        long n = d.cardinality();
        RowMap next;
        for (auto& [key, coeff] : rows) {
            for (long i = 0; i <= n; ++i) {
                for (long j = 0; j <= i; ++j) {
                    Segment flip = Segment::make(HalfInt(static_cast<int>(i)) - y, -x);
                    Segment top = Segment::make(y + 1 - HalfInt(static_cast<int>(j)), y);
                    Segment mid =
                        Segment::make(y + 1 - HalfInt(static_cast<int>(i)), y - HalfInt(static_cast<int>(j)));
                    GLTerm gl = key.first;
                    gl.push_delta(flip);
                    gl.push_delta(top);
                    std::vector<Segment> rest_gl = key.second.gl();
                    if (!mid.is_empty()) rest_gl.push_back(mid);
                    add_row(next, std::move(gl), InducedExpr(std::move(rest_gl), key.second.atom()),
                            coeff);
                }
            }
        }
        rows = std::move(next);
    }
    return rows_.emplace(host, collect(rows)).first->second;
}

Mult JacquetEngine::mult_in_mustar(const GGTerm& target, const InducedExpr& host) {
    if (target.gl.is_unit()) return gcontains(target.g, host);
    CuspSupport need = target.gl.support().abs() + target.g.abs_support();
    if (!(need == host.abs_support())) return Mult::exact(0);
    if (host.is_atom() && !has_closed_rows(host.atom()))
        return atom_upper(target, host.atom());

    CuspSupport tgl_support = target.gl.support();
    Mult total = Mult::exact(0);
    for (auto& row : mu_rows(host)) {
        if (row.gl.is_unit()) continue;
        if (!(row.gl.support() == tgl_support)) continue;
        Mult m = contains_gl(target.gl, row.gl);
        if (m.is_zero()) continue;
        total = total + (m * gcontains(target.g, row.rest)).scaled(row.coeff);
    }
    return total;
}

Mult JacquetEngine::gcontains(const GAtom& target, const InducedExpr& host) {
    if (!(target.abs_support() == host.abs_support())) return Mult::exact(0);
    if (host.is_atom()) return Mult::exact(host.atom() == target ? 1 : 0);

    Key key{target, host};
    if (auto it = gmemo_.find(key); it != gmemo_.end()) return it->second;
    if (inflight_.count(key)) {
        ++guard_trips_;
        return Mult::unknown();
    }

    inflight_.insert(key);
    long trips0 = guard_trips_;
    Mult acc = Mult::unknown();
    try {
        acc = gcontains_routes(target, host);
    } catch (...) {
        inflight_.erase(key);
        throw;
    }
    inflight_.erase(key);
    if (acc.is_exact() || guard_trips_ == trips0) gmemo_.emplace(std::move(key), acc);
    return acc;
}

Mult JacquetEngine::gcontains_routes(const GAtom& target, const InducedExpr& host) {
    // A quotient class appears exactly once in the product carrying its own
    // name: same factor multiset over the same tempered anchor.
    if (target.kind() == AtomKind::LanglandsG && host.atom() == target.temp_part()) {
        std::vector<Segment> hgl = host.gl();
        std::vector<Segment> tgl = target.gl_data();
        std::sort(hgl.begin(), hgl.end());
        std::sort(tgl.begin(), tgl.end());
        if (hgl == tgl) return Mult::exact(1);
    }

    // An exact table decides outright.
    if (auto dec = ledger_.decompose(host)) return Mult::exact(dec->coeff(target));

    Mult acc = Mult::unknown();

    // Peel one factor whose product with the anchor is tabulated, and
    // distribute over the table's classes.
    if (host.gl().size() >= 2) {
        for (std::size_t k = 0; k < host.gl().size(); ++k) {
            auto sub = InducedExpr({host.gl()[k]}, host.atom());
            auto dec = ledger_.decompose(sub);
            if (!dec) continue;
            std::vector<Segment> remaining;
            for (std::size_t l = 0; l < host.gl().size(); ++l)
                if (l != k) remaining.push_back(host.gl()[l]);
            Mult sum = Mult::exact(0);
            for (auto& [chi, m] : dec->terms())
                sum = sum + gcontains(target, InducedExpr(remaining, chi)).scaled(m);
            acc = acc.meet(sum);
            if (acc.is_exact()) return acc;
        }
    }

    // Swap the anchor class for its defining host minus the sibling classes.
    if (host.atom().kind() != AtomKind::Cuspidal) {
        if (auto def = defining_host(host.atom())) {
            if (auto dec = ledger_.decompose(*def); dec && dec->coeff(host.atom()) == 1) {
                std::vector<Segment> big_gl = host.gl();
                big_gl.insert(big_gl.end(), def->gl().begin(), def->gl().end());
                Mult m = gcontains(target, InducedExpr(std::move(big_gl), def->atom()));
                for (auto& [chi, mm] : dec->terms()) {
                    if (chi == host.atom()) continue;
                    m = m - gcontains(target, InducedExpr(host.gl(), chi)).scaled(mm);
                }
                acc = acc.meet(m);
                if (acc.is_exact()) return acc;
            }
        }
    }

    // Witness terms of the target cap its multiplicity from above.
    if (has_closed_rows(host.atom())) {
        for (auto& cert : target_witnesses(target)) {
            Mult ub = mult_in_mustar(cert, host);
            acc = acc.meet({0, ub.hi});
            if (acc.is_exact()) return acc;
        }
    }

    // Factor-chain moves reach tabulated hosts from below.
    acc = acc.meet(Mult::at_least(chain_lower(target, host)));
    return acc;
}

long JacquetEngine::chain_lower(const GAtom& target, const InducedExpr& host) {
    constexpr std::size_t kStateCap = 20000;
    long best = 0;
    std::set<std::vector<Segment>> seen;
    std::deque<std::vector<Segment>> queue;
    auto push = [&](std::vector<Segment> v) {
        std::sort(v.begin(), v.end());
        if (seen.size() < kStateCap && seen.insert(v).second) queue.push_back(std::move(v));
    };
    push(host.gl());
    while (!queue.empty()) {
        std::vector<Segment> st = std::move(queue.front());
        queue.pop_front();
        if (auto dec = ledger_.decompose(InducedExpr(st, host.atom())))
            best = std::max(best, dec->coeff(target));
        for (std::size_t k = 0; k < st.size(); ++k) {
            std::vector<Segment> v = st;
            v[k] = v[k].contragredient();
            push(std::move(v));
        }
        for (std::size_t k = 0; k < st.size(); ++k) {
            for (std::size_t l = k + 1; l < st.size(); ++l) {
                if (!is_linked(st[k], st[l])) continue;
                std::vector<Segment> v;
                for (std::size_t m = 0; m < st.size(); ++m)
                    if (m != k && m != l) v.push_back(st[m]);
                v.push_back(seg_union(st[k], st[l]));
                Segment inter = seg_intersection(st[k], st[l]);
                if (!inter.is_empty()) v.push_back(inter);
                push(std::move(v));
            }
        }
    }
    return best;
}

Mult JacquetEngine::atom_upper(const GGTerm& target, const GAtom& g) {
    // No exponent word under a square-integrable class has a partial sum that
    // drops to zero or below, so a target term carrying such a word cannot
    // appear in its restriction.
    if (square_integrable(g) && target.gl.pure_deltas()) {
        Word w;
        for (auto& d : target.gl.deltas()) {
            Word u = d.word();
            w.insert(w.end(), u.begin(), u.end());
        }
        Word t = sample_word(target.g);
        w.insert(w.end(), t.begin(), t.end());
        if (!casselman_positive(w)) return Mult::exact(0);
    }

    // Without a row list for g, cap the term through hosts that contain g at
    // least once: its defining host and every table row listing it.
    Mult out = Mult::unknown();
    if (auto def = defining_host(g)) out = out.meet({0, mult_in_mustar(target, *def).hi});
    for (auto& row : ledger_.rows()) {
        if (out.is_zero()) break;
        if (row.classes.coeff(g) < 1) continue;
        out = out.meet({0, mult_in_mustar(target, row.host).hi});
    }
    return out;
}

std::vector<GGTerm> JacquetEngine::target_witnesses(const GAtom& target) {
    // Terms that sit inside the target's restriction with multiplicity at
    // least one; each caps the target's multiplicity in any host from above.
    // Classes with a row list donate every row naming one irreducible
    // general-linear factor. Other quotient classes are probed through their
    // defining host: a candidate row survives when its count there strictly
    // exceeds the combined caps of the sibling classes.
    if (auto it = witnesses_.find(target); it != witnesses_.end()) return it->second;
    if (winflight_.count(target)) return atom_certificates(target);

    if (has_closed_rows(target)) {
        std::vector<GGTerm> certs;
        for (auto& row : atom_mu_rows(target)) {
            if (row.gl.is_unit() || !row.rest.is_atom()) continue;
            if (one_class_gl(row.gl)) certs.push_back({row.gl, row.rest.atom()});
        }
        return witnesses_.emplace(target, std::move(certs)).first->second;
    }

    std::vector<GGTerm> found = atom_certificates(target);
    auto def = defining_host(target);
    std::optional<RGSum> dec;
    if (def) dec = ledger_.decompose(*def);
    if (!dec || dec->coeff(target) != 1)
        return witnesses_.emplace(target, std::move(found)).first->second;

    winflight_.insert(target);
    long trips0 = guard_trips_;
    std::set<std::pair<GLTerm, GAtom>> seen;
    for (auto& c : found) seen.insert({c.gl, c.g});
    for (auto& row : mu_rows(*def)) {
        if (row.gl.is_unit() || !one_class_gl(row.gl)) continue;
        std::vector<GAtom> rest_atoms;
        if (row.rest.is_atom()) {
            rest_atoms.push_back(row.rest.atom());
        } else if (auto rd = ledger_.decompose(row.rest)) {
            for (auto& [chi, m] : rd->terms())
                if (m > 0) rest_atoms.push_back(chi);
        }
        for (auto& chi : rest_atoms) {
            if (!seen.insert({row.gl, chi}).second) continue;
            GGTerm w{row.gl, chi};
            Mult m = mult_in_mustar(w, *def);
            for (auto& [sib, mm] : dec->terms()) {
                if (sib == target) continue;
                m = m - mult_in_mustar(w, InducedExpr::of_atom(sib)).scaled(mm);
                if (m.lo < 1) break;
            }
            if (m.lo >= 1) found.push_back(std::move(w));
        }
    }
    winflight_.erase(target);
    if (guard_trips_ == trips0) witnesses_.emplace(target, found);
    return found;
}

WordMultiset JacquetEngine::full_words(const InducedExpr& host) {
    WordMultiset out;
    for (auto& row : mu_rows(host)) {
        if (!row.rest.is_atom() || row.rest.atom().kind() != AtomKind::Cuspidal) continue;
        for (auto& [w, c] : gl_torus_words(row.gl)) out[w] += c * row.coeff;
    }
    return out;
}

}  // namespace jmcalc
