#include "support/algebras.hpp"
#include "support/catchext.hpp"

using namespace iqg;
using namespace iqg::testsupport;

TEST_CASE("matrix arithmetic") {
    QMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = RatFunc(1);
    b.at(1, 0) = RatFunc(1);
    QMatrix ab = a * b;
    CHECK(ab.at(0, 0) == RatFunc(1));
    CHECK(ab.at(1, 1) == RatFunc(0));
    QMatrix ba = b * a;
    CHECK(ba.at(1, 1) == RatFunc(1));
    CHECK(QMatrix::identity(2) * a == a);
    CHECK((a - a).is_zero());
    CHECK((qpow(1) * a).at(0, 1) == qpow(1));

    QMatrix k = QMatrix::kron(a, QMatrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 2) == RatFunc(1));
    CHECK(k.at(1, 3) == RatFunc(1));

    QMatrix s(1, 2);
    CHECK_THROWS_AS(a * s, std::logic_error);

    QMatrix p(2, 2);
    p.at(0, 1) = qpow(1);
    CHECK(p.to_string() == "(1,2)=q");
    CHECK(QMatrix(2, 2).to_string() == "0");
}

TEST_CASE("simple modules on the divided-power basis") {
    auto alg = make_algebra(a2());
    Rep m = module_L(*alg, 0, 2);
    CHECK(m.dim == 3);
    CHECK(m.K.at(0, 0) == qpow(2));
    CHECK(m.K.at(1, 1) == RatFunc(1));
    CHECK(m.K.at(2, 2) == qpow(-2));
    CHECK(m.E.at(0, 1) == qint(2, 1));
    CHECK(m.E.at(1, 2) == qint(1, 1));
    CHECK(m.F.at(1, 0) == qint(1, 1));
    CHECK(m.F.at(2, 1) == qint(2, 1));
    CHECK(m.character == LaurentPoly::monomial(1, 2) + LaurentPoly(1) +
                             LaurentPoly::monomial(1, -2));

    auto b = make_algebra(b2());
    Rep n = module_L(*b, 0, 1);
    CHECK(n.K.at(0, 0) == qpow(2));
    CHECK(n.E.at(0, 1) == RatFunc(1));

    CHECK_THROWS_AS(module_L(*alg, 0, -1), std::invalid_argument);
}

TEST_CASE("tensor products decompose by characters") {
    auto alg = make_algebra(a2());
    Rep l1 = module_L(*alg, 0, 1);
    Rep t = tensor_rep(*alg, l1, l1);
    CHECK(t.dim == 4);
    CHECK(t.character == module_L(*alg, 0, 2).character + module_L(*alg, 0, 0).character);

    Rep mixed = tensor_rep(*alg, l1, module_L(*alg, 0, 2));
    CHECK(mixed.character ==
          module_L(*alg, 0, 3).character + module_L(*alg, 0, 1).character);

    Rep other = module_L(*alg, 1, 1);
    CHECK_THROWS_AS(tensor_rep(*alg, l1, other), std::invalid_argument);
}

TEST_CASE("evaluation is a homomorphism") {
    auto alg = make_algebra(a2());
    Rep m = module_L(*alg, 0, 3);
    CHECK(act(alg->one(), m) == QMatrix::identity(m.dim));

    const RatFunc d = qpow(1) - qpow(-1);
    QMatrix comm = act(alg->E(0) * alg->F(0) - alg->F(0) * alg->E(0), m);
    CHECK(comm == (RatFunc(1) / d) * (m.K - m.Kinv));

    const UElement x = alg->B(0) * alg->B(0);
    const UElement y = alg->B(0) * alg->Ktilde_inv(0);
    CHECK(act(x * y, m) == act(x, m) * act(y, m));
    CHECK(act(x + y, m) == act(x, m) + act(y, m));

    CHECK_THROWS_AS(act(alg->E(1), m), std::invalid_argument);
    CHECK_THROWS_AS(act(alg->Ktilde(1), m), std::invalid_argument);
}

TEST_CASE("divided powers annihilate the small modules") {
    auto alg = make_algebra(a2());
    for (int n = 0; n <= 3; ++n) {
        Rep m = module_L(*alg, 0, n);
        CHECK(act(idivided_power(*alg, 0, n + 1, parity_of(n)), m).is_zero());
        VerificationReport r = verify_annihilation(*alg, 0, n, 1);
        CHECK(r.verified);
        CHECK(r.claim == "annihilation");
    }

    /* the opposite parity label does not annihilate */
    Rep l1 = module_L(*alg, 0, 1);
    CHECK_FALSE(act(idivided_power(*alg, 0, 2, Parity::even), l1).is_zero());

    auto b = make_algebra(b2());
    CHECK(act(idivided_power(*b, 0, 3, Parity::even), module_L(*b, 0, 2)).is_zero());
}

TEST_CASE("annihilation on tensor powers") {
    auto alg = make_algebra(a2());
    VerificationReport r = verify_annihilation(*alg, 0, 1, 2);
    CHECK(r.verified);
    CHECK(r.case_id == "annihilation[i=1,n=1,k=2]");

    VerificationReport m = verify_mixed_annihilation(*alg, 0, {1, 2});
    CHECK(m.verified);
    CHECK(m.claim == "mixed-annihilation");
    CHECK(m.case_id == "mixed-annihilation[i=1,w=1+2]");

    CHECK_THROWS_AS(verify_mixed_annihilation(*alg, 0, {}), std::invalid_argument);
}
