#pragma once

#include <stdexcept>
#include <string>

namespace dihloops {

// Input violates a documented invariant (bad modulus, non-Latin table,
// alpha^2 != 1 with m > 2, ...). The CLI maps this to exit code 2.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured size cap. Exit code 3.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input: group grammar, morphism grammar, table files,
// command-line flags. Exit code 1.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dihloops
