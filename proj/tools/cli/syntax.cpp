#include "syntax.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace zxf::cli {

ParseError::ParseError(std::string message, std::size_t pos)
    : DomainError("parse error at column " + std::to_string(pos + 1) + ": " + message), position(pos) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, unsigned long cap) : text_(text), cap_(cap) {}

    IntPoly parse() {
        skip_space();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        return peek() == '[' ? parse_list() : parse_sum();
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // Digits only; whitespace may separate them from what precedes but not split them.
    std::optional<std::string> digits() {
        skip_space();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    IntPoly parse_list() {
        ++pos_;
        std::vector<Integer> coeffs;
        if (accept(']')) return finish(IntPoly(std::move(coeffs)));
        do {
            bool negative = false;
            if (accept('-'))
                negative = true;
            else
                accept('+');
            const std::size_t at = pos_;
            auto d = digits();
            if (!d) throw ParseError("expected an integer", at);
            Integer c(*d, 10);
            coeffs.push_back(negative ? Integer(-c) : c);
        } while (accept(','));
        skip_space();
        if (!accept(']')) throw ParseError("expected ',' or ']'", pos_);
        return finish(IntPoly(std::move(coeffs)));
    }

    IntPoly parse_sum() {
        std::map<unsigned long, Integer> terms;
        bool first = true;
        for (;;) {
            skip_space();
            if (at_end()) break;
            bool negative = false;
            if (accept('-'))
                negative = true;
            else if (!accept('+') && !first)
                throw ParseError("expected '+' or '-'", pos_);
            first = false;
            parse_term(negative, terms);
        }
        std::vector<Integer> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
        for (auto& [e, c] : terms) coeffs[e] = std::move(c);
        return IntPoly(std::move(coeffs));
    }

    void parse_term(bool negative, std::map<unsigned long, Integer>& terms) {
        auto d = digits();
        Integer c = d ? Integer(*d, 10) : Integer(1);
        unsigned long e = 0;
        const bool star = d && accept('*');
        if (accept('x') || accept('X')) {
            e = 1;
            if (accept('^')) {
                skip_space();
                const std::size_t at = pos_;
                auto ed = digits();
                if (!ed) throw ParseError("expected an exponent", at);
                if (ed->size() > 12 || std::stoull(*ed) > cap_)
                    throw ParseError("exponent exceeds the cap of " + std::to_string(cap_), at);
                e = std::stoul(*ed);
            }
        } else if (!d || star) {
            skip_space();
            throw ParseError("expected a coefficient or 'x'", pos_);
        }
        terms[e] += negative ? Integer(-c) : c;
    }

    IntPoly finish(IntPoly f) {
        skip_space();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

    std::string_view text_;
    unsigned long cap_;
    std::size_t pos_ = 0;
};

void append_term(std::string& out, const Integer& c, std::size_t e) {
    if (c == 0) return;
    const Integer mag = abs(c);
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (mag != 1 || e == 0) out += mag.get_str();
    if (e >= 1) out += "x";
    if (e >= 2) out += "^" + std::to_string(e);
}

}  // namespace

IntPoly parse_polynomial(std::string_view text, unsigned long exponent_cap) {
    return Parser(text, exponent_cap).parse();
}

std::string render(const IntPoly& f) {
    std::string out;
    const auto& c = f.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) append_term(out, c[e], e);
    return out.empty() ? "0" : out;
}

std::string render(const TruncatedSeries& s) {
    return render(s.to_poly()) + " + O(x^" + std::to_string(s.order()) + ")";
}

}  // namespace zxf::cli
