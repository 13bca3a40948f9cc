#pragma once

#include <cstdint>
#include <string>

namespace pin2 {

// An element of the group algebra F2[s,j]/(sj = j^3 s, s^2 = 0, j^4 = 1),
// the CW chain algebra of Pin(2). Basis: the eight monomials j^a s^b with
// a in 0..3 and b in 0..1; monomial j^a s^b has degree b. The differential
// is the derivation with ds = 1 + j^2 and dj = 0.
class GAlgebraElement {
  public:
    GAlgebraElement() : bits_(0) {}

    static GAlgebraElement zero() { return GAlgebraElement(); }
    static GAlgebraElement one() { return monomial(0, 0); }
    static GAlgebraElement j() { return monomial(1, 0); }
    static GAlgebraElement s() { return monomial(0, 1); }
    static GAlgebraElement monomial(int a, int b) {
        GAlgebraElement e;
        e.bits_ = static_cast<uint8_t>(1u << bit(a, b));
        return e;
    }

    bool coeff(int a, int b) const { return (bits_ >> bit(a, b)) & 1; }
    bool is_zero() const { return bits_ == 0; }

    GAlgebraElement operator+(const GAlgebraElement& o) const {
        GAlgebraElement e;
        e.bits_ = bits_ ^ o.bits_;
        return e;
    }
    GAlgebraElement operator*(const GAlgebraElement& o) const;
    bool operator==(const GAlgebraElement& o) const { return bits_ == o.bits_; }
    bool operator!=(const GAlgebraElement& o) const { return bits_ != o.bits_; }

    // The derivation determined by ds = 1 + j^2, dj = 0.
    GAlgebraElement boundary() const;

    // Degree of a homogeneous element (all monomials share one s-exponent);
    // returns -1 for zero or inhomogeneous elements.
    int degree() const;

    std::string str() const;

  private:
    static int bit(int a, int b) { return ((a % 4 + 4) % 4) + 4 * (b & 1); }
    uint8_t bits_;
};

GAlgebraElement galg_mul(const GAlgebraElement& a, const GAlgebraElement& b);
GAlgebraElement galg_boundary(const GAlgebraElement& a);

}  // namespace pin2
