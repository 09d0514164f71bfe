#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

enum class Errc {
    invalid_argument = 1,
    parse = 2,
    regime = 3,
    size_limit = 4,
    budget_exhausted = 5,
    io = 6,
    inconsistent = 7,
    unsupported = 8,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// The const char* overload keeps hot call sites allocation-free; message
// strings that need formatting should be built inside an unlikely branch.
inline void require(bool cond, Errc code, const char* what) {
    if (!cond) [[unlikely]]
        fail(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace ramsey
