#include "tiso/numerics.hpp"

#include <string>

#include "tiso/errors.hpp"

namespace tiso::numerics {

double bisect(const std::function<double(double)>& f, Interval bracket, double tol) {
    double lo = bracket.lo, hi = bracket.hi;
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0)
        return lo;
    if (f_hi == 0)
        return hi;
    if ((f_lo > 0) == (f_hi > 0))
        throw RootNotFound("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0)
            return mid;
        if ((f_mid > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace tiso::numerics
