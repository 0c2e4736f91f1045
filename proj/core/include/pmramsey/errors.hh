#ifndef PMRAMSEY_ERRORS_HH
#define PMRAMSEY_ERRORS_HH

#include <stdexcept>
#include <string>

namespace pmramsey {

/// Bad arguments or malformed input files.
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A search ran out of its node or wall-clock budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computation routes produced different answers.
class InconsistentRoutes : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace pmramsey

#endif
