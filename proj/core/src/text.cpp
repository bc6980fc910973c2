#include "supcone/text.hpp"

#include <cctype>

#include "supcone/errors.hpp"

namespace supcone {

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) throw ParseError(pos, std::string("'") + c + "'");
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (text.compare(pos, kw.size(), kw) != 0) return false;
        pos += kw.size();
        return true;
    }
    void expect_keyword(const std::string& kw) {
        if (!try_keyword(kw)) throw ParseError(pos, "'" + kw + "'");
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) throw ParseError(start, "digits");
        return Integer(text.substr(start, pos - start));
    }

    Rational rational() {
        skip_ws();
        bool neg = false;
        if (try_consume('-'))
            neg = true;
        else
            try_consume('+');
        Integer num = integer();
        Integer den(1);
        if (try_consume('/')) {
            std::size_t den_pos = pos;
            den = integer();
            if (den == 0) throw ParseError(den_pos, "nonzero denominator");
        }
        Rational q(num, den);
        return neg ? Rational(-q) : q;
    }

    ExtReal extreal() {
        skip_ws();
        if (try_keyword("+inf")) return ExtReal::pos_inf();
        if (try_keyword("-inf")) {
            return ExtReal::neg_inf();
        }
        return ExtReal(rational());
    }

    bool bit() {
        skip_ws();
        if (try_consume('0')) return false;
        if (try_consume('1')) return true;
        throw ParseError(pos, "'0' or '1'");
    }

    Poly poly() {
        expect_keyword("poly");
        expect('[');
        std::vector<Rational> coeffs;
        if (!try_consume(']')) {
            coeffs.push_back(rational());
            while (try_consume(',')) coeffs.push_back(rational());
            expect(']');
        }
        return Poly(std::move(coeffs));
    }

    TreeFn fn() {
        skip_ws();
        if (try_keyword("const")) return TreeFn::constant(extreal());
        if (try_keyword("split")) {
            expect('(');
            TreeFn zero = fn();
            expect(',');
            TreeFn one = fn();
            expect(')');
            return TreeFn::split(zero, one);
        }
        if (try_keyword("ramp")) {
            expect('(');
            bool dir = bit();
            expect(';');
            std::vector<ExtReal> prefix;
            if (peek() != ';') {
                prefix.push_back(extreal());
                while (try_consume(',')) prefix.push_back(extreal());
            }
            expect(';');
            Poly tail = poly();
            expect(')');
            if (prefix.empty()) return TreeFn::ramp_unextended(dir, std::move(tail));
            return TreeFn::ramp_sequence(dir, prefix, std::move(tail));
        }
        throw ParseError(pos, "'const', 'split' or 'ramp'");
    }

    FlatFn flat() {
        expect_keyword("flat");
        expect_keyword("d");
        expect('=');
        Integer d = integer();
        if (d < 0 || d > 24) throw ParseError(pos, "depth in [0, 24]");
        FlatFn result;
        result.depth = d.convert_to<std::size_t>();
        result.values.clear();
        expect('[');
        result.values.push_back(extreal());
        while (try_consume(',')) result.values.push_back(extreal());
        expect(']');
        if (result.values.size() != (std::size_t{1} << result.depth))
            throw ParseError(pos, std::to_string(std::size_t{1} << result.depth) +
                                      " values for depth " + std::to_string(result.depth));
        return result;
    }

    std::string word() {
        skip_ws();
        if (try_consume('e')) return std::string();
        std::size_t start = pos;
        while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
        if (pos == start) throw ParseError(start, "binary word or 'e'");
        return text.substr(start, pos - start);
    }

    void expect_done() {
        if (!at_end()) throw ParseError(pos, "end of input");
    }
};

}  // namespace

std::string print_poly(const Poly& p) {
    std::string s = "poly[";
    if (p.coeffs().empty()) {
        s += "0";
    } else {
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (i) s += ", ";
            s += rational_str(p.coeffs()[i]);
        }
    }
    return s + "]";
}

std::string print_fn(const TreeFn& u) {
    if (const LeafRule* l = u.leaf()) {
        if (const ExtReal* c = std::get_if<ExtReal>(l)) return "const " + c->str();
        const RampLeaf& r = std::get<RampLeaf>(*l);
        return std::string("ramp(") + r.dir_char() + "; ; " + print_poly(r.poly) + ")";
    }
    return "split(" + print_fn(u.child(false)) + ", " + print_fn(u.child(true)) + ")";
}

std::string print_fn(const FlatFn& u) {
    std::string s = "flat d=" + std::to_string(u.depth) + " [";
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        if (i) s += ", ";
        s += u.values[i].str();
    }
    return s + "]";
}

TreeFn parse_treefn(const std::string& text) {
    Scanner scan{text};
    TreeFn result = scan.fn();
    scan.expect_done();
    return extend_from_dense(result);
}

FlatFn parse_flatfn(const std::string& text) {
    Scanner scan{text};
    FlatFn result = scan.flat();
    scan.expect_done();
    return result;
}

std::variant<TreeFn, FlatFn> parse_any_fn(const std::string& text) {
    Scanner probe{text};
    probe.skip_ws();
    if (probe.text.compare(probe.pos, 4, "flat") == 0) return parse_flatfn(text);
    return parse_treefn(text);
}

ClopenSet parse_clopen(const std::string& text) {
    Scanner scan{text};
    scan.expect('{');
    std::vector<Cell> cells;
    if (!scan.try_consume('}')) {
        cells.push_back(Cell(scan.word()));
        while (scan.try_consume(',')) cells.push_back(Cell(scan.word()));
        scan.expect('}');
    }
    scan.expect_done();
    return ClopenSet::of(std::move(cells));
}

PointRef parse_point(const std::string& text) {
    Scanner scan{text};
    scan.skip_ws();
    std::string prefix;
    if (scan.peek() != '(') prefix = scan.word();
    if (scan.try_consume('(')) {
        bool b = scan.bit();
        scan.expect(')');
        scan.expect('^');
        scan.expect_keyword("w");
        scan.expect_done();
        return PointRef(BranchPoint(prefix, b ? '1' : '0'));
    }
    scan.expect_done();
    return PointRef(Cell(prefix));
}

}  // namespace supcone
