#ifndef CATREC_ERRORS_HPP
#define CATREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catrec {

// Exit-code contract: input errors -> 2, check failures -> 1, budget -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};
struct StructureError : Error {
    using Error::Error;
};
struct FieldError : Error {
    using Error::Error;
};
struct InputError : Error {
    using Error::Error;
};
struct SizeError : Error {
    using Error::Error;
};
struct SamplingError : Error {
    using Error::Error;
};
struct PrimeCollisionError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace catrec

#endif
