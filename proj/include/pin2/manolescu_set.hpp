#pragma once

#include <string>

#include "pin2/rational.hpp"

namespace pin2 {

// The quadruple (alpha, beta, gamma, delta) of half-integers attached to a
// space or complex, with alpha >= beta >= gamma and gamma <= delta <= alpha.
struct ManolescuSet {
    Rational alpha, beta, gamma, delta;

    bool operator==(const ManolescuSet& o) const {
        return alpha == o.alpha && beta == o.beta && gamma == o.gamma && delta == o.delta;
    }
    bool operator!=(const ManolescuSet& o) const { return !(*this == o); }

    bool invariants_hold() const {
        return alpha >= beta && beta >= gamma && gamma <= delta && delta <= alpha;
    }

    std::string str() const {
        return "(" + alpha.str() + ", " + beta.str() + ", " + gamma.str() + ", " + delta.str() +
               ")";
    }
};

}  // namespace pin2
