#pragma once
#include <stdexcept>
#include <string>

namespace bs {

// Exit-code categories used by the CLI: parse 2, unsupported 3, undecided 4, domain 5.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an exact answer needs a root outside every real quadratic tower.
struct UnsupportedExtension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition failures carry a short machine-readable kind.
struct DomainError : std::runtime_error {
    std::string kind;
    DomainError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

}  // namespace bs
