#include "qint/form.hpp"

#include <bit>

namespace qint {

int Form::merge_sign(unsigned a, unsigned b) {
    if (a & b) return 0;
    // inversions between the sorted lists: for each generator in b, count the
    // generators of a with larger index
    int inv = 0;
    for (int m = 0; m < 4; ++m) {
        if (b & (1u << m)) inv += std::popcount(a >> (m + 1));
    }
    return (inv & 1) ? -1 : 1;
}

Form Form::wedge(const Form& o) const {
    Form r;
    for (unsigned a = 0; a < 16; ++a) {
        if (c_[a].max_abs() == 0.0) continue;
        for (unsigned b = 0; b < 16; ++b) {
            const int s = merge_sign(a, b);
            if (s == 0) continue;
            const Quat p = c_[a] * o.c_[b];
            r.c_[a | b] += (s > 0) ? p : -p;
        }
    }
    return r;
}

Form dzeta() { return Form::one_form({QE, QI, QJ, QK}); }
Form dzeta_c() { return Form::one_form({QE, -QI, -QJ, -QK}); }
Form dt_form() { return Form::one_form({QE, QI, Quat{}, Quat{}}); }
Form dtc_form() { return Form::one_form({QE, -QI, Quat{}, Quat{}}); }
Form du_form() { return Form::one_form({Quat{}, Quat{}, QE, QI}); }
Form duc_form() { return Form::one_form({Quat{}, Quat{}, QE, -QI}); }
Form dzeta_u() { return Form::one_form({Quat{}, Quat{}, QJ, QK}); }
Form dzeta_uc() { return Form::one_form({Quat{}, Quat{}, QJ, -QK}); }

Form omega1(const Quat& q) { return dzeta_c().lmul(q.conj()); }
Form nu1(const Quat& q) { return dzeta_c().rmul(q.conj()); }

Form omega2() {
    const Form a = dzeta_c().sandwich(QJ, QJ);
    const Form b = dzeta().sandwich(QJ, QJ);
    return a.wedge(b);
}

Form nu2() {
    const Form d = dzeta_c();
    return d.wedge(d);
}

}  // namespace qint
