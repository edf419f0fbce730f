#pragma once

#include "angelesco/numerics.hpp"

namespace angelesco {

/// Weight |x|^beta e^{-x^r} on the r-star, the union of the rays
/// t omega^{j-1}, t > 0, with omega = e^{2 pi i / r}. beta > -1 so that every
/// ray integral converges.
struct StarWeight {
    int r;
    Real beta;

    StarWeight(int r_, Real beta_) : r(r_), beta(std::move(beta_)) {
        if (r < 1) throw std::domain_error("StarWeight: r must be >= 1");
        if (!(beta > -1)) throw std::domain_error("StarWeight: beta must be > -1");
    }

    Complex omega(long j) const { return root_of_unity(r, j); }
};

}  // namespace angelesco
