#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perron {

/// A digit word breaks the validity bound c_i >= r_{i-1} + 1.
/// `index` is 1-based (the digit position), 0 when the error is not positional.
class ValidityError : public std::invalid_argument {
public:
    ValidityError(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace perron
