#include "jmcalc/ledger.hpp"

#include <fmt/core.h>

#include <stdexcept>
#include <utility>

namespace jmcalc {

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);

Segment seg(HalfInt lo, HalfInt hi) { return Segment::make(lo, hi); }

GAtom L_of(std::vector<Segment> gl, GAtom temp = GAtom::cuspidal()) {
    return GAtom::langlands(std::move(gl), std::move(temp));
}

// The Langlands class carried by the host itself.
GAtom L_self(const InducedExpr& host) {
    return L_of(host.gl(), host.atom());
}

}  // namespace

InducedExpr normalize_host(const InducedExpr& e) {
    std::vector<Segment> fs;
    fs.reserve(e.gl().size());
    for (const auto& d : e.gl()) {
        fs.push_back(d.e_center().negative() ? d.contragredient() : d);
    }
    return InducedExpr(std::move(fs), e.atom());
}

Ledger::Ledger(HalfInt a, HalfInt b, HalfInt c) : a_(a), b_(b), c_(c) {
    if (!(a.is_half_odd() && b.is_half_odd() && c.is_half_odd())) {
        throw std::invalid_argument(
            fmt::format("ledger parameters must be half-odd, got ({}, {}, {})",
                        a.str(), b.str(), c.str()));
    }
    if (!(kHalf <= a && a < b && b < c)) {
        throw std::invalid_argument(fmt::format(
            "ledger parameters must satisfy 1/2 <= a < b < c, got ({}, {}, {})",
            a.str(), b.str(), c.str()));
    }
}

Ledger Ledger::at(HalfInt a, HalfInt b, HalfInt c) {
    Ledger led(a, b, c);
    const GAtom sigma = GAtom::cuspidal();

    auto add = [&led](std::string name, InducedExpr host, bool derived = false) {
        auto classes = led.decompose(host);
        if (!classes) {
            throw std::logic_error(
                fmt::format("named row {} does not match any pattern", name));
        }
        led.rows_.push_back(
            LedgerRow{std::move(name), std::move(host), *std::move(classes), derived});
    };

    add("strict-rtimes-sigma", InducedExpr({seg(kHalf, a)}, sigma));
    add("seg-rtimes-sigma", InducedExpr({seg(-b, c)}, sigma));
    add("strict-a-rtimes-ds-b", InducedExpr({seg(kHalf, a)}, GAtom::strict_ds(b)));
    add("strict-b-rtimes-ds-a", InducedExpr({seg(kHalf, b)}, GAtom::strict_ds(a)));
    add("strict-b-rtimes-ds-b", InducedExpr({seg(kHalf, b)}, GAtom::strict_ds(b)));
    add("seg-bc-rtimes-ds-a", InducedExpr({seg(-b, c)}, GAtom::strict_ds(a)));
    add("seg-ab-rtimes-ds-c", InducedExpr({seg(-a, b)}, GAtom::strict_ds(c)));
    add("seg-rtimes-sigma_b", InducedExpr({seg(-a, c)}, GAtom::strict_ds(b)));
    add("strict-a-rtimes-segplus-bc",
        InducedExpr({seg(kHalf, a)}, GAtom::seg_pm(-b, c, true)));
    add("strict-a-rtimes-segminus-bc",
        InducedExpr({seg(kHalf, a)}, GAtom::seg_pm(-b, c, false)));
    add("strict-b-rtimes-segplus-ac",
        InducedExpr({seg(kHalf, b)}, GAtom::seg_pm(-a, c, true)),
        /*derived=*/true);
    add("strict-b-rtimes-segminus-ac",
        InducedExpr({seg(kHalf, b)}, GAtom::seg_pm(-a, c, false)),
        /*derived=*/true);
    add("seg-times-strict", InducedExpr({seg(-b, c), seg(kHalf, a)}, sigma));
    return led;
}

const LedgerRow* Ledger::find(const std::string& name) const {
    for (const auto& row : rows_) {
        if (row.name == name) return &row;
    }
    return nullptr;
}

std::optional<RGSum> Ledger::decompose(const InducedExpr& host) const {
    const InducedExpr n = normalize_host(host);
    if (n.is_atom()) return RGSum{n.atom()};

    const auto& fs = n.gl();
    const GAtom& anchor = n.atom();

    if (fs.size() == 1) {
        const Segment& d = fs.front();
        const HalfInt lo = d.low();
        const HalfInt hi = d.high();

        if (anchor.kind() == AtomKind::Cuspidal) {
            return classify_seg_induced(d);
        }

        if (anchor.kind() == AtomKind::StrictDS) {
            const HalfInt z = anchor.params().front();
            if (lo == kHalf) {
                const HalfInt x = hi;
                if (x < z) {
                    return RGSum{GAtom::seg_pm(-x, z, true), L_of({d}, anchor)};
                }
                if (x == z) {
                    return RGSum{GAtom::seg_pm(-x, x, true), L_of({d}, anchor)};
                }
                // x > z: two half-line hosts share a pair of quotients.
                return RGSum{GAtom::seg_pm(-z, x, true),
                             L_of({seg(-z, x)}),
                             L_of({seg(kHalf, z)}, GAtom::strict_ds(x)),
                             L_of({d}, anchor)};
            }
            if (lo <= -kHalf) {
                const HalfInt x = -lo;
                const HalfInt y = hi;
                if (x == y || z == x || z == y) return std::nullopt;
                if (z < x) {
                    return RGSum{GAtom::triple(z, x, y, AtomKind::TriplePlus),
                                 GAtom::triple(z, x, y, AtomKind::TripleMinusBCA),
                                 L_of({d}, anchor)};
                }
                if (z < y) {
                    return RGSum{GAtom::triple(x, z, y, AtomKind::TriplePlus),
                                 L_of({d}, anchor),
                                 L_of({seg(-x, z)}, GAtom::strict_ds(y)),
                                 L_of({seg(-z, y)}, GAtom::strict_ds(x))};
                }
                return RGSum{GAtom::triple(x, y, z, AtomKind::TriplePlus),
                             GAtom::triple(x, y, z, AtomKind::TripleMinusABC),
                             L_of({d}, anchor)};
            }
            return std::nullopt;
        }

        if (anchor.kind() == AtomKind::SegPlus ||
            anchor.kind() == AtomKind::SegMinus) {
            const bool plus = anchor.kind() == AtomKind::SegPlus;
            const HalfInt y = -anchor.params()[0];
            const HalfInt z = anchor.params()[1];
            if (lo != kHalf || y >= z) return std::nullopt;
            const HalfInt x = hi;
            if (x == y || x == z) return std::nullopt;
            if (x < y) {
                const AtomKind tri =
                    plus ? AtomKind::TriplePlus : AtomKind::TripleMinusBCA;
                return RGSum{GAtom::triple(x, y, z, tri), L_of({d}, anchor)};
            }
            if (x < z) {
                if (plus) {
                    return RGSum{
                        L_of({d}, anchor),
                        GAtom::triple(y, x, z, AtomKind::TriplePlus),
                        L_of({seg(kHalf, y)}, GAtom::seg_pm(-x, z, true)),
                        L_of({seg(-y, x)}, GAtom::strict_ds(z))};
                }
                return RGSum{
                    L_of({d}, anchor),
                    L_of({seg(kHalf, y)}, GAtom::seg_pm(-x, z, false))};
            }
            return std::nullopt;
        }

        return std::nullopt;
    }

    if (fs.size() == 2 && anchor.kind() == AtomKind::Cuspidal) {
        // Two copies of the one-letter half-line factor.
        if (fs[0] == fs[1] && fs[0].low() == kHalf && fs[0].high() == kHalf) {
            return RGSum{GAtom::seg_pm(-kHalf, kHalf, true),
                         GAtom::seg_pm(-kHalf, kHalf, false),
                         L_of({fs[0]}, GAtom::strict_ds(kHalf)),
                         L_self(n)};
        }

        // One strictly positive half-line factor, one balanced-negative factor.
        const Segment* half = nullptr;
        const Segment* wide = nullptr;
        for (const auto& d : fs) {
            if (d.low() == kHalf) {
                half = &d;
            } else if (d.low() <= -kHalf) {
                wide = &d;
            }
        }
        if (!half || !wide) return std::nullopt;
        const HalfInt x = half->high();
        const HalfInt y = -wide->low();
        const HalfInt z = wide->high();
        if (!(x < y && y < z)) return std::nullopt;
        return RGSum{L_of({*half}, GAtom::seg_pm(-y, z, true)),
                     L_of({*half}, GAtom::seg_pm(-y, z, false)),
                     GAtom::triple(x, y, z, AtomKind::TriplePlus),
                     GAtom::triple(x, y, z, AtomKind::TripleMinusBCA),
                     L_of({*wide}, GAtom::strict_ds(x)),
                     L_self(n)};
    }

    return std::nullopt;
}

}  // namespace jmcalc
