#ifndef PARTALG_ERROR_HPP
#define PARTALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace partalg {

// Domain-level failures map to CLI exit code 2. `kind` is a stable
// machine-readable token: parity, capacity, shape, nodes, syntax, range,
// internal.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw DomainError(kind, message);
}

}  // namespace partalg

#endif
