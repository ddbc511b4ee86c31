#ifndef ANNG_ERRORS_HPP
#define ANNG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anng {

/// Invalid values or violated preconditions. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource limit was exceeded. Never a silent truncation.
class BudgetError : public DomainError {
public:
    explicit BudgetError(const std::string& msg) : DomainError(msg) {}
};

} // namespace anng

#endif
