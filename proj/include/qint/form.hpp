#pragma once

#include <array>
#include <cstdint>

#include "qint/quaternion.hpp"

namespace qint {

// Exterior form on R^4 with quaternion coefficients.
//
// Generators dx1..dx4 are real and anticommute; coefficients are quaternions
// that commute with the generators and multiply left to right under the
// wedge: (a w1) ^ (b w2) = (a b) (w1 ^ w2). A form is stored densely as one
// quaternion per generator subset, indexed by bitmask (bit m-1 <-> dx_m).
class Form {
  public:
    Form() = default;

    static Form one_form(const std::array<Quat, 4>& coeffs) {
        Form f;
        for (int m = 0; m < 4; ++m) f.c_[1u << m] = coeffs[m];
        return f;
    }

    const Quat& coeff(unsigned mask) const { return c_[mask]; }
    Quat& coeff(unsigned mask) { return c_[mask]; }

    Form operator+(const Form& o) const {
        Form r;
        for (int k = 0; k < 16; ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }
    Form operator-(const Form& o) const {
        Form r;
        for (int k = 0; k < 16; ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }
    Form scaled(double s) const {
        Form r;
        for (int k = 0; k < 16; ++k) r.c_[k] = c_[k] * s;
        return r;
    }
    Form lmul(const Quat& q) const {
        Form r;
        for (int k = 0; k < 16; ++k) r.c_[k] = q * c_[k];
        return r;
    }
    Form rmul(const Quat& q) const {
        Form r;
        for (int k = 0; k < 16; ++k) r.c_[k] = c_[k] * q;
        return r;
    }
    // q_left * coeff * q_right on every coefficient
    Form sandwich(const Quat& ql, const Quat& qr) const {
        Form r;
        for (int k = 0; k < 16; ++k) r.c_[k] = ql * c_[k] * qr;
        return r;
    }

    Form wedge(const Form& o) const;

    double max_abs() const {
        double m = 0.0;
        for (int k = 0; k < 16; ++k) m = std::max(m, c_[k].max_abs());
        return m;
    }

    // sign of merging two disjoint index sets, 0 when they overlap
    static int merge_sign(unsigned a, unsigned b);

  private:
    std::array<Quat, 16> c_{};  // value-initialized to zero
};

inline constexpr unsigned kDvolMask = 0xF;  // dx1 ^ dx2 ^ dx3 ^ dx4

// fixed 1-forms on H (dzeta, its conjugate, channel pieces)
Form dzeta();       // e dx1 + i dx2 + j dx3 + k dx4
Form dzeta_c();     // e dx1 - i dx2 - j dx3 - k dx4
Form dt_form();     // e dx1 + i dx2
Form dtc_form();    // e dx1 - i dx2
Form du_form();     // e dx3 + i dx4
Form duc_form();    // e dx3 - i dx4
Form dzeta_u();     // j dx3 + k dx4
Form dzeta_uc();    // j dx3 - k dx4

// degree-1 factors of the reproducing kernel
Form omega1(const Quat& q);  // conj(q) * dzeta_c  (coefficient on the left)
Form nu1(const Quat& q);     // dzeta_c * conj(q)  (coefficient on the right)

// degree-2 invariant forms
Form omega2();  // (j dzeta_c j) ^ (j dzeta j)
Form nu2();     // dzeta_c ^ dzeta_c

}  // namespace qint
