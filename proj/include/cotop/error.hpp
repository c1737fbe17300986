#pragma once

#include <stdexcept>
#include <string>

namespace cotop {

enum class ErrorKind {
    Range,         // 64-bit overflow or a size beyond what the engine materializes
    Precondition,  // argument outside an operation's domain
    Parse,         // set-expression syntax error
    Semantic,      // well-formed expression violating an atom constraint
    Io,            // file could not be read or has a malformed line
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace cotop
