#include "pin2/galgebra.hpp"

namespace pin2 {

GAlgebraElement GAlgebraElement::operator*(const GAlgebraElement& o) const {
    // Monomial products from the defining relations:
    //   (j^a)(j^c s^d)   = j^(a+c) s^d
    //   (j^a s)(j^c)     = j^a (s j^c) = j^(a+3c) s
    //   (j^a s)(j^c s)   = j^(a+3c) s^2 = 0
    GAlgebraElement out;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 2; ++b) {
            if (!coeff(a, b)) continue;
            for (int c = 0; c < 4; ++c) {
                for (int d = 0; d < 2; ++d) {
                    if (!o.coeff(c, d)) continue;
                    if (b == 0) {
                        out.bits_ ^= 1u << bit(a + c, d);
                    } else if (d == 0) {
                        out.bits_ ^= 1u << bit(a + 3 * c, 1);
                    }
                }
            }
        }
    }
    return out;
}

GAlgebraElement GAlgebraElement::boundary() const {
    // d(j^a s) = j^a (1 + j^2) = j^a + j^(a+2); degree-zero monomials die.
    GAlgebraElement out;
    for (int a = 0; a < 4; ++a) {
        if (!coeff(a, 1)) continue;
        out.bits_ ^= 1u << bit(a, 0);
        out.bits_ ^= 1u << bit(a + 2, 0);
    }
    return out;
}

int GAlgebraElement::degree() const {
    int deg = -1;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 2; ++b) {
            if (!coeff(a, b)) continue;
            if (deg == -1)
                deg = b;
            else if (deg != b)
                return -1;
        }
    }
    return deg;
}

std::string GAlgebraElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 4; ++a) {
            if (!coeff(a, b)) continue;
            if (!out.empty()) out += "+";
            if (a == 0 && b == 0) {
                out += "1";
            } else {
                if (a == 1)
                    out += "j";
                else if (a > 1)
                    out += "j" + std::to_string(a);
                if (b == 1) out += "s";
            }
        }
    }
    return out;
}

GAlgebraElement galg_mul(const GAlgebraElement& a, const GAlgebraElement& b) { return a * b; }

GAlgebraElement galg_boundary(const GAlgebraElement& a) { return a.boundary(); }

}  // namespace pin2
