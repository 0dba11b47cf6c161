#ifndef WARRANT_SEXPR_HPP
#define WARRANT_SEXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "warrant/errors.hpp"

namespace warrant {

// S-expression node. All input file formats (domains, instances,
// abstractions, policies, formulas) are S-expressions; parsers in
// parse.hpp work on this tree.
struct Sexpr {
    bool is_atom = false;
    std::string atom;          // valid when is_atom
    std::vector<Sexpr> items;  // valid when !is_atom
    int line = 0;              // 1-based source location of the first token
    int col = 0;
    std::shared_ptr<const std::string> file;  // shared by all nodes of one parse

    bool is_list() const { return !is_atom; }
    std::size_t size() const { return items.size(); }
    const Sexpr& operator[](std::size_t i) const { return items[i]; }

    // Accessors that throw ParseError (with this node's location) when the
    // shape is not the expected one.
    const std::string& as_atom(const std::string& what) const;
    const Sexpr& nth(std::size_t i, const std::string& what) const;

    std::string to_string() const;

    [[noreturn]] void fail(const std::string& msg) const;
};

// Parses a sequence of top-level S-expressions. `;` starts a comment that
// runs to end of line. `file` is used in error locations only.
std::vector<Sexpr> parse_sexprs(std::string_view text, const std::string& file);

// Like parse_sexprs but requires exactly one top-level expression.
Sexpr parse_sexpr(std::string_view text, const std::string& file);

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

} // namespace warrant

#endif
