#ifndef XPA_ERRORS_HPP
#define XPA_ERRORS_HPP

#include <stdexcept>

namespace xpa {

/// Input larger than an exact algorithm's configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative solver exhausted its budget.
class NotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace xpa

#endif
