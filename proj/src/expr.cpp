#include "jmcalc/expr.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace jmcalc {

InducedExpr::InducedExpr(std::vector<Segment> gl, GAtom atom) : atom_(std::move(atom)) {
    for (auto& d : gl)
        if (!d.is_empty()) gl_.push_back(d);
    std::sort(gl_.begin(), gl_.end());
}

CuspSupport InducedExpr::abs_support() const {
    CuspSupport s = atom_.abs_support();
    for (auto& d : gl_) s += d.support().abs();
    return s;
}

std::string InducedExpr::str() const {
    if (gl_.empty()) return atom_.str();
    std::string prod;
    for (std::size_t i = 0; i < gl_.size(); ++i) {
        if (i) prod += "*";
        prod += gl_[i].str();
    }
    return fmt::format("ind({}, {})", prod, atom_.str());
}

std::string GGTerm::str() const { return fmt::format("{} (x) {}", gl.str(), g.str()); }

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    InducedExpr parse() {
        InducedExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    InducedExpr expr() {
        skip_ws();
        if (try_keyword("ind")) {
            expect('(');
            std::vector<Segment> gl = gl_product();
            expect(',');
            InducedExpr inner = expr();  // nested induction flattens
            expect(')');
            for (auto& d : inner.gl()) gl.push_back(d);
            return InducedExpr(std::move(gl), inner.atom());
        }
        return InducedExpr::of_atom(atom());
    }

    std::vector<Segment> gl_product() {
        std::vector<Segment> out;
        out.push_back(delta());
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            out.push_back(delta());
            skip_ws();
        }
        return out;
    }

    Segment delta() {
        skip_ws();
        if (!try_keyword("d") && !try_keyword("seg")) fail("expected a segment factor");
        expect('(');
        skip_ws();
        if (peek() == ')') {
            ++pos_;
            return Segment::empty();
        }
        HalfInt lo = half_value();
        HalfInt hi = lo;
        skip_ws();
        if (peek() == ',') {
            ++pos_;
            hi = half_value();
        }
        expect(')');
        return Segment::make(lo, hi);
    }

    GAtom atom() {
        skip_ws();
        if (try_keyword("sigma")) return GAtom::cuspidal();
        if (try_keyword("ds")) {
            auto p = params(1);
            return GAtom::strict_ds(p[0]);
        }
        if (try_keyword("seg+")) {
            auto p = params(2);
            return GAtom::seg_pm(p[0], p[1], true);
        }
        if (try_keyword("seg-")) {
            auto p = params(2);
            return GAtom::seg_pm(p[0], p[1], false);
        }
        if (try_keyword("tri-bca")) {
            auto p = params(3);
            return GAtom::triple(p[0], p[1], p[2], AtomKind::TripleMinusBCA);
        }
        if (try_keyword("tri-abc")) {
            auto p = params(3);
            return GAtom::triple(p[0], p[1], p[2], AtomKind::TripleMinusABC);
        }
        if (try_keyword("tri+")) {
            auto p = params(3);
            return GAtom::triple(p[0], p[1], p[2], AtomKind::TriplePlus);
        }
        if (try_keyword("L")) {
            expect('(');
            std::vector<Segment> gl;
            gl.push_back(delta());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                gl.push_back(delta());
                skip_ws();
            }
            expect(';');
            GAtom temp = atom();
            expect(')');
            return GAtom::langlands(std::move(gl), std::move(temp));
        }
        fail("expected an anchor-side class");
    }

    std::vector<HalfInt> params(int n) {
        expect('(');
        std::vector<HalfInt> out;
        for (int i = 0; i < n; ++i) {
            if (i) expect(',');
            out.push_back(half_value());
        }
        expect(')');
        return out;
    }

    HalfInt half_value() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                text_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        try {
            return HalfInt::parse(text_.substr(start, pos_ - start));
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (text_.compare(pos_, kw.size(), kw) != 0) return false;
        std::size_t end = pos_ + kw.size();
        // Keywords are delimited by '(' or end so that e.g. "seg" does not
        // swallow the start of "seg+".
        if (end < text_.size()) {
            char c = text_[end];
            bool kw_is_word = std::isalpha(static_cast<unsigned char>(kw.back()));
            if (kw_is_word && (std::isalnum(static_cast<unsigned char>(c)) || c == '+' ||
                               c == '-' || c == '_'))
                return false;
        }
        pos_ = end;
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(fmt::format("expected '{}'", c));
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument(
            fmt::format("parse error at offset {}: {} in \"{}\"", pos_, why, text_));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

InducedExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace jmcalc
