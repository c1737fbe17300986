#pragma once

// Set-expression language:
//
//   expr  := union
//   union := diff ('|' diff)*
//   diff  := inter ('\' inter)*
//   inter := unary ('&' unary)*
//   unary := '~' unary | atom
//   atom  := 'N' | 'N1' | 'sigma' '(' int ')' | 'M' '(' int ')'
//          | 'class' '(' int ',' int ')' | 'ap' '(' int ',' int ')'
//          | '{' int (',' int)* '}' | '(' expr ')'
//
// Binary operators are left-associative; whitespace is insignificant.

#include "cotop/error.hpp"
#include "cotop/perset.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cotop::expr {

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t offset, std::vector<std::string> expected,
               const std::string& what)
        : Error(kind, what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    /// Empty for semantic errors.
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

enum class Op {
    Naturals,
    NaturalsFromTwo,
    Sigma,       // args: n
    Multiples,   // args: n
    Class,       // args: a, m
    Ap,          // args: a, b
    Literal,     // args: elements in source order
    Complement,  // lhs
    Intersect,
    Difference,
    Union,
};

struct Node {
    Op op;
    std::vector<u64> args;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

class SetExpr {
public:
    explicit SetExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    const Node& root() const { return *root_; }

    friend bool operator==(const SetExpr& a, const SetExpr& b);

private:
    std::shared_ptr<const Node> root_;
};

SetExpr parse_expr(std::string_view text);

/// Canonical source text with the fewest parentheses that reparse to the
/// same tree.
std::string render(const SetExpr& e);

EPSet evaluate(const SetExpr& e);

}  // namespace cotop::expr
