#include "surreal/precision.hpp"

#include "surreal/error.hpp"

namespace surreal {

void PrecisionContext::validate() const
{
    if (series_order < 1)
        raise(ErrorKind::domain_error, "series order must be at least 1");
    if (tail_expand < 1)
        raise(ErrorKind::domain_error, "tail expansion must be at least 1");
    if (kappa_depth < 0)
        raise(ErrorKind::domain_error, "kappa depth must be non-negative");
    if (fuel < 1)
        raise(ErrorKind::domain_error, "fuel must be at least 1");
}

} // namespace surreal
