#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace memetrack {

// All recoverable failures (bad input files, invalid configs, out-of-contract
// calls) surface as memetrack::Error. The CLI maps them to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void append_all(std::ostringstream&) {}

template <typename T, typename... Rest>
void append_all(std::ostringstream& os, T&& v, Rest&&... rest) {
    os << std::forward<T>(v);
    append_all(os, std::forward<Rest>(rest)...);
}
}  // namespace detail

template <typename... Parts>
[[noreturn]] void fail(Parts&&... parts) {
    std::ostringstream os;
    detail::append_all(os, std::forward<Parts>(parts)...);
    throw Error(os.str());
}

template <typename... Parts>
void require(bool cond, Parts&&... parts) {
    if (!cond) fail(std::forward<Parts>(parts)...);
}

}  // namespace memetrack
