#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

/* Error kinds map onto CLI exit codes: usage -> 1, validation/cap -> 2,
 * consistency -> 3. A consistency error means a quantity the construction
 * proves to be zero (e.g. the boundary of U_n) came out nonzero. */
struct Error : std::runtime_error {
    enum class Kind { usage, validation, cap, consistency };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error usage_error(const std::string& m) { return Error(Error::Kind::usage, m); }
inline Error validation_error(const std::string& m) { return Error(Error::Kind::validation, m); }
inline Error cap_error(const std::string& m) { return Error(Error::Kind::cap, m); }
inline Error consistency_error(const std::string& m) { return Error(Error::Kind::consistency, m); }

}  // namespace ainf
