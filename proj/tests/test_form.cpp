#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qint/form.hpp"
#include "qint/numeric.hpp"
#include "qint/quaternion.hpp"

using namespace qint;

namespace {

Quat rand_quat(Rng& rng) { return {rng.normal(), rng.normal(), rng.normal(), rng.normal()}; }

Form rand_one_form(Rng& rng) {
    return Form::one_form({rand_quat(rng), rand_quat(rng), rand_quat(rng), rand_quat(rng)});
}

Form four_dvol(const Quat& c) {
    Form f;
    f.coeff(kDvolMask) = c * 4.0;
    return f;
}

}  // namespace

TEST_CASE("merge_sign") {
    CHECK(Form::merge_sign(0b0001, 0b0010) == 1);   // dx1 ^ dx2
    CHECK(Form::merge_sign(0b0010, 0b0001) == -1);  // dx2 ^ dx1
    CHECK(Form::merge_sign(0b0001, 0b0001) == 0);   // repeated generator
    CHECK(Form::merge_sign(0b0011, 0b1100) == 1);   // dx12 ^ dx34
    CHECK(Form::merge_sign(0b0101, 0b1010) == -1);  // dx13 ^ dx24: one inversion
    CHECK(Form::merge_sign(0b0110, 0b1001) == 1);   // dx23 ^ dx14: two inversions
    CHECK(Form::merge_sign(0, 0b1111) == 1);        // scalar ^ dvol
}

TEST_CASE("wedge degree rule for real-coefficient one-forms") {
    // with scalar (span e) coefficients the classical anticommutation holds
    Rng rng(21);
    for (int s = 0; s < 20; ++s) {
        const Form f = Form::one_form({QE * rng.normal(), QE * rng.normal(),
                                       QE * rng.normal(), QE * rng.normal()});
        const Form g = Form::one_form({QE * rng.normal(), QE * rng.normal(),
                                       QE * rng.normal(), QE * rng.normal()});
        CHECK((f.wedge(g) + g.wedge(f)).max_abs() < 1e-14);
        CHECK(f.wedge(f).max_abs() < 1e-14);
    }
}

TEST_CASE("constant-form identity suite") {
    const Quat zero{};
    const Form DA = Form::one_form({QE, QI, zero, zero});
    const Form DAC = Form::one_form({QE, -QI, zero, zero});
    const Form DB = Form::one_form({zero, zero, QE, QI});
    const Form DBC = Form::one_form({zero, zero, QE, -QI});
    const Form DBJ = DB.rmul(QJ);
    const Form DBCJ = DBC.rmul(QJ);

    CHECK(DBJ.wedge(DBCJ).max_abs() == 0.0);

    const Form rhs6 = Form{} - DAC.wedge(DBJ) - DBJ.wedge(DAC) - DB.wedge(DBC);
    CHECK((nu2() - rhs6).max_abs() == 0.0);

    const Form rhs7 = DA.wedge(DAC) + DA.wedge(DBC).rmul(QJ).scaled(2.0) - DB.wedge(DBC);
    CHECK((omega2() - rhs7).max_abs() == 0.0);

    const Form rhs8 = DA.wedge(DAC) - DA.wedge(DB).rmul(QJ).scaled(2.0) + DB.wedge(DBC);
    CHECK((dzeta().wedge(dzeta_c()) - rhs8).max_abs() == 0.0);
    CHECK(dzeta().wedge(dzeta_c()).wedge(omega2()).max_abs() == 0.0);

    const Form lhs9 = nu2().wedge(omega2());
    const Form rhs9 = DA.wedge(DAC).wedge(DB).wedge(DBC).scaled(-1.0);
    CHECK((lhs9 - rhs9).max_abs() == 0.0);
    CHECK((lhs9 - four_dvol(QE)).max_abs() == 0.0);
    // the pairing commutes at degree two
    CHECK((omega2().wedge(nu2()) - four_dvol(QE)).max_abs() == 0.0);
}

TEST_CASE("component tables of omega2 and nu2") {
    const Form om = omega2();
    CHECK((om.coeff(0b0011) - QI * -2.0).max_abs() == 0.0);  // dx12
    CHECK((om.coeff(0b0101) - QJ * 2.0).max_abs() == 0.0);   // dx13
    CHECK((om.coeff(0b1001) - QK * -2.0).max_abs() == 0.0);  // dx14
    CHECK((om.coeff(0b0110) - QK * 2.0).max_abs() == 0.0);   // dx23
    CHECK((om.coeff(0b1010) - QJ * 2.0).max_abs() == 0.0);   // dx24
    CHECK((om.coeff(0b1100) - QI * 2.0).max_abs() == 0.0);   // dx34

    const Form nu = nu2();
    CHECK((nu.coeff(0b0110) - QK * 2.0).max_abs() == 0.0);   // dx23
    CHECK((nu.coeff(0b1010) - QJ * -2.0).max_abs() == 0.0);  // dx24
    CHECK((nu.coeff(0b1100) - QI * 2.0).max_abs() == 0.0);   // dx34
    CHECK(nu.coeff(0b0011).max_abs() == 0.0);
    CHECK(nu.coeff(0b0101).max_abs() == 0.0);
    CHECK(nu.coeff(0b1001).max_abs() == 0.0);
}

TEST_CASE("channel four-form volumes") {
    const Form a = dtc_form().wedge(du_form()).wedge(dt_form()).wedge(duc_form());
    CHECK((a - four_dvol(-QE)).max_abs() == 0.0);
    const Form b = du_form().wedge(dtc_form()).wedge(dt_form()).wedge(duc_form());
    CHECK((b - four_dvol(QE)).max_abs() == 0.0);
}

TEST_CASE("plain and paired readings of the vanishing statements") {
    const Form DZ = dzeta();
    const Form DZC = dzeta_c();
    const Form JDZC = DZC.lmul(QJ);
    const Form JDZ = DZ.lmul(QJ);
    const Form JDZCJ = DZC.sandwich(QJ, QJ);
    const Form JDZJ = DZ.sandwich(QJ, QJ);
    const Form DZJ = DZ.rmul(QJ);
    const Form DZCJ = DZC.rmul(QJ);

    // paired readings all vanish exactly
    CHECK(DZJ.wedge(JDZC).wedge(DZC).wedge(DZ).max_abs() == 0.0);
    CHECK(DZ.wedge(DZC).wedge(JDZC).wedge(DZ).max_abs() == 0.0);
    CHECK(DZ.wedge(DZC).wedge(DZCJ).wedge(JDZ).max_abs() == 0.0);
    CHECK(DZ.wedge(DZC).wedge(DZC).wedge(DZ).max_abs() == 0.0);
    CHECK(DZ.wedge(JDZCJ).wedge(JDZCJ).wedge(DZ).max_abs() == 0.0);
    CHECK(DZJ.wedge(JDZC).wedge(JDZCJ).wedge(JDZJ).max_abs() == 0.0);

    // plain readings pin to the recorded dvol coefficients
    const Quat p1 = DZ.wedge(JDZC).wedge(DZC).wedge(DZ).coeff(kDvolMask);
    CHECK((p1 - QJ * -8.0).max_abs() == 0.0);
    CHECK(DZ.wedge(DZC).wedge(JDZC).wedge(DZ).max_abs() == 0.0);
    const Quat p3 = DZ.wedge(DZC).wedge(DZC).wedge(JDZ).coeff(kDvolMask);
    CHECK((p3 - QJ * 8.0).max_abs() == 0.0);
    CHECK(DZ.wedge(DZC).wedge(DZC).wedge(DZ).max_abs() == 0.0);
    const Quat p5 = DZ.wedge(JDZC).wedge(JDZC).wedge(DZ).coeff(kDvolMask);
    CHECK((p5 - QE * 8.0).max_abs() == 0.0);
    const Quat p6 = DZ.wedge(JDZC).wedge(JDZCJ).wedge(JDZJ).coeff(kDvolMask);
    CHECK((p6 - QJ * -8.0).max_abs() == 0.0);
}

TEST_CASE("sign rule worked example") {
    Form jdx2, idx1, kdx12;
    jdx2.coeff(0b0010) = QJ;
    idx1.coeff(0b0001) = QI;
    kdx12.coeff(0b0011) = QK;
    CHECK((jdx2.wedge(idx1) - kdx12).max_abs() == 0.0);
}

TEST_CASE("coefficient parse rule and pullouts") {
    Rng rng(22);
    for (int s = 0; s < 30; ++s) {
        const Form f = rand_one_form(rng);
        const Form g = rand_one_form(rng);
        const Quat a = rand_quat(rng);
        // f ^ (a g) = (f a) ^ g: the left coefficient of the right factor
        // slides across the wedge as a right factor of f
        CHECK((f.wedge(g.lmul(a)) - f.rmul(a).wedge(g)).max_abs() < 1e-12);
        // left coefficient of the left factor pulls out front
        CHECK((f.lmul(a).wedge(g) - f.wedge(g).lmul(a)).max_abs() < 1e-12);
        // right coefficient of the right factor pulls out back
        CHECK((f.wedge(g.rmul(a)) - f.wedge(g).rmul(a)).max_abs() < 1e-12);
    }
}

TEST_CASE("wedge associativity and bilinearity") {
    Rng rng(23);
    for (int s = 0; s < 20; ++s) {
        const Form f = rand_one_form(rng);
        const Form g = rand_one_form(rng);
        const Form h = rand_one_form(rng);
        CHECK((f.wedge(g).wedge(h) - f.wedge(g.wedge(h))).max_abs() < 1e-12);
        CHECK(((f + g).wedge(h) - (f.wedge(h) + g.wedge(h))).max_abs() < 1e-12);
        CHECK((f.wedge(g + h) - (f.wedge(g) + f.wedge(h))).max_abs() < 1e-12);
    }
}

TEST_CASE("kernel factor forms") {
    Rng rng(24);
    for (int s = 0; s < 20; ++s) {
        const Quat q = rand_quat(rng);
        // omega1 carries conj(q) on the left of dzeta_c, nu1 on the right
        CHECK((omega1(q) - dzeta_c().lmul(q.conj())).max_abs() == 0.0);
        CHECK((nu1(q) - dzeta_c().rmul(q.conj())).max_abs() == 0.0);
    }
}
