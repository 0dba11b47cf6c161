#include "warrant/sexpr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace warrant {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    std::shared_ptr<const std::string> file;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(*file, line, col, msg);
    }

    Sexpr next() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        Sexpr node;
        node.line = line;
        node.col = col;
        node.file = file;
        char c = text[pos];
        if (c == '(') {
            advance();
            node.is_atom = false;
            for (;;) {
                skip_ws();
                if (pos >= text.size()) {
                    throw ParseError(*file, node.line, node.col,
                                     "unterminated list");
                }
                if (text[pos] == ')') {
                    advance();
                    break;
                }
                node.items.push_back(next());
            }
            return node;
        }
        if (c == ')') fail("unexpected ')'");
        node.is_atom = true;
        while (pos < text.size()) {
            c = text[pos];
            if (c == '(' || c == ')' || c == ';' ||
                std::isspace(static_cast<unsigned char>(c))) {
                break;
            }
            node.atom.push_back(c);
            advance();
        }
        return node;
    }
};

} // namespace

const std::string& Sexpr::as_atom(const std::string& what) const {
    if (!is_atom) fail("expected " + what + ", got a list");
    return atom;
}

const Sexpr& Sexpr::nth(std::size_t i, const std::string& what) const {
    if (is_atom || i >= items.size()) fail("expected " + what);
    return items[i];
}

std::string Sexpr::to_string() const {
    if (is_atom) return atom;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i].to_string();
    }
    out += ')';
    return out;
}

void Sexpr::fail(const std::string& msg) const {
    throw ParseError(file ? *file : "<input>", line, col, msg);
}

std::vector<Sexpr> parse_sexprs(std::string_view text, const std::string& file) {
    Lexer lex;
    lex.text = text;
    lex.file = std::make_shared<const std::string>(file);
    std::vector<Sexpr> out;
    while (!lex.eof()) out.push_back(lex.next());
    return out;
}

Sexpr parse_sexpr(std::string_view text, const std::string& file) {
    auto all = parse_sexprs(text, file);
    if (all.size() != 1) {
        throw ParseError(file, 1, 1,
                         "expected exactly one expression, got " +
                             std::to_string(all.size()));
    }
    return all[0];
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace warrant
