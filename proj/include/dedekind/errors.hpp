#ifndef DEDEKIND_ERRORS_HPP
#define DEDEKIND_ERRORS_HPP

#include <stdexcept>

namespace dedekind {

// A caller violated a documented precondition (bad denominator, non-coprime
// arguments, out-of-range parameter, ...).
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An identity or structural invariant that must hold by construction failed.
// Seeing this means a bug in the library, not in the caller.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dedekind

#endif // DEDEKIND_ERRORS_HPP
