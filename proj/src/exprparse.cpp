#include "partalg/exprparse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "partalg/error.hpp"

namespace partalg {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    bool match(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& what) {
        fail("syntax", what + " at byte offset " + std::to_string(pos));
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) error("expected integer");
        return std::stol(std::string(text.substr(start, pos - start)));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    LinComb expr() {
        LinComb acc = chain();
        while (true) {
            skip_ws();
            if (match("+"))
                acc = acc + chain();
            else if (match("-"))
                acc = acc - chain();
            else
                break;
        }
        return acc;
    }

    LinComb chain() {
        LinComb acc = tens();
        while (true) {
            skip_ws();
            if (match("∘") || match(";"))
                acc = compose_lin(acc, tens());
            else
                break;
        }
        return acc;
    }

    LinComb tens() {
        LinComb acc = atom();
        while (true) {
            skip_ws();
            if (match("⊗") || match("(x)"))
                acc = tensor_lin(acc, atom());
            else
                break;
        }
        return acc;
    }

    LinComb atom() {
        LinComb v = primary();
        while (match("*")) v = flip_lin(v);
        return v;
    }

    LinComb scalar(const Poly& p) { return LinComb(gens::empty(), p); }

    LinComb primary() {
        skip_ws();
        if (pos >= text.size()) error("unexpected end of expression");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar(Poly::constant(integer()));
        if (match("(")) {
            LinComb v = expr();
            if (!match(")")) error("expected ')'");
            return v;
        }
        if (text.substr(pos, 2) == "P[") return diagram_literal();
        // delta monomial or generator call
        std::size_t save = pos;
        if (match("δ")) return delta_power();
        std::string name = ident();
        if (name.empty()) error("expected diagram, scalar or generator");
        if (name == "d" || name == "delta") return delta_power();
        if (!match("(")) {
            pos = save;
            error("expected '(' after generator name '" + name + "'");
        }
        std::vector<long> args;
        if (!match(")")) {
            args.push_back(integer());
            while (match(",")) args.push_back(integer());
            if (!match(")")) error("expected ')' after generator arguments");
        }
        return generator(name, args);
    }

    LinComb delta_power() {
        int e = 1;
        if (match("^")) e = static_cast<int>(integer());
        return scalar(Poly::monomial(e));
    }

    LinComb diagram_literal() {
        skip_ws();
        std::size_t start = pos;
        // Scan the literal: P[n,m]: followed by parenthesised blocks.
        std::size_t p = pos;
        while (p < text.size() && text[p] != ':') ++p;
        if (p >= text.size()) error("malformed diagram literal");
        ++p;  // past ':'
        while (true) {
            while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
            if (p >= text.size() || text[p] != '(') break;
            while (p < text.size() && text[p] != ')') ++p;
            if (p >= text.size()) error("unterminated block in diagram literal");
            ++p;
        }
        Diagram d = parse_diagram(text.substr(start, p - start));
        pos = p;
        return LinComb(d);
    }

    LinComb generator(const std::string& name, const std::vector<long>& args) {
        auto need = [&](std::size_t k) {
            if (args.size() != k)
                fail("syntax", "generator " + name + " expects " + std::to_string(k) +
                                   " argument(s)");
        };
        auto a = [&](std::size_t i) { return static_cast<int>(args[i]); };
        if (name == "one" || name == "id") {
            need(1);
            return LinComb(gens::identity(a(0)));
        }
        if (name == "sigma") {
            need(2);
            return LinComb(gens::sigma(a(0), a(1)));
        }
        if (name == "U") {
            need(2);
            return LinComb(gens::u_at(a(0), a(1)));
        }
        if (name == "b") {
            need(1);
            return LinComb(gens::b(a(0)));
        }
        if (name == "b0") {
            need(1);
            return LinComb(gens::b0(a(0)));
        }
        if (name == "w") {
            need(1);
            return LinComb(gens::w(a(0)));
        }
        if (name == "wstar") {
            need(1);
            return LinComb(gens::w_star(a(0)));
        }
        if (name == "W") {
            need(2);
            return LinComb(gens::W(a(0), a(1)));
        }
        if (name == "Wb") {
            need(2);
            return LinComb(gens::Wb(a(0), a(1)));
        }
        if (name == "Wbbar") {
            need(2);
            return LinComb(gens::Wb_bar(a(0), a(1)));
        }
        if (name == "A1") {
            need(1);
            return LinComb(gens::A1(a(0)));
        }
        if (name == "A12") {
            need(1);
            return LinComb(gens::A12(a(0)));
        }
        if (name == "E0") {
            need(1);
            return LinComb(gens::E0(a(0)));
        }
        if (name == "E1") {
            need(1);
            return LinComb(gens::E1(a(0)));
        }
        if (name == "omega") {
            need(1);
            return LinComb(gens::omega(a(0)));
        }
        if (name == "a") {
            need(3);
            return LinComb(gens::a_gen(a(0), a(1), a(2)));
        }
        if (name == "asym") {
            need(1);
            return antisymmetrizer(a(0));
        }
        fail("syntax", "unknown generator '" + name + "'");
    }

    LinComb antisymmetrizer(int k) {
        if (k < 1) fail("range", "asym needs k >= 1");
        LinComb acc(k, k);
        std::vector<int> image(k);
        for (int i = 0; i < k; ++i) image[i] = i + 1;
        do {
            int inv = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (image[i] > image[j]) ++inv;
            acc.add_term(gens::perm(image), Poly::constant(inv % 2 == 0 ? 1 : -1));
        } while (std::next_permutation(image.begin(), image.end()));
        return acc;
    }
};

}  // namespace

LinComb parse_expression(std::string_view text) {
    Parser p{text};
    LinComb v = p.expr();
    if (!p.at_end()) p.error("trailing input after expression");
    return v;
}

}  // namespace partalg
