#include <doctest.h>

#include <algorithm>

#include "schurlab/lambda_ring.hpp"
#include "schurlab/schur_ring.hpp"

using namespace schurlab;

namespace {

SymFunc s(std::initializer_list<int> parts) { return SymFunc::schur(Partition(parts)); }

} // namespace

TEST_CASE("binomial ring") {
    auto Z = LambdaRing::binomial_ring();
    RingElement three = Z->from_coords({3});
    CHECK(Z->lambda_op(three, 2) == Z->from_coords({3}));
    CHECK(Z->lambda_op(three, 3) == Z->from_coords({1}));
    CHECK(Z->lambda_op(three, 4).is_zero());
    // negative arguments use the falling-factorial binomial
    RingElement neg = Z->from_coords({-3});
    CHECK(Z->lambda_op(neg, 2) == Z->from_coords({6}));
    // s_(2,1)(2) = e2(2) e1(2) - e3(2) = 1*2 - 0 = 2
    CHECK(Z->apply_symfunc(s({2, 1}), Z->from_coords({2})) == Z->from_coords({2}));
    // sigma^k(r) = binomial(r+k-1, k)
    CHECK(Z->sigma_op(three, 2) == Z->from_coords({6}));

    // nonnegative integers are even of their own degree, negatives are odd
    auto ev = even_odd_analysis(three, 8);
    CHECK(ev.even_degree == 3);
    CHECK_FALSE(ev.odd_degree.has_value());
    auto od = even_odd_analysis(neg, 8);
    CHECK(od.odd_degree == 3);
    CHECK_FALSE(od.even_degree.has_value());
}

TEST_CASE("free ring lambda operations") {
    auto L = LambdaRing::free_ring();
    RingElement a = L->generator();
    for (int n = 0; n <= 6; ++n)
        CHECK(L->lambda_op(a, n) == L->from_sym(SymFunc::e(n)));
    // sigma^n(a) = h_n
    for (int n = 0; n <= 6; ++n)
        CHECK(L->sigma_op(a, n) == L->from_sym(SymFunc::h(n)));
    // the universal element: s_pi(a) = s_pi
    for (int n = 0; n <= 5; ++n)
        for (auto& pi : partitions_of(n)) {
            CHECK(L->apply_symfunc(SymFunc::schur(pi), a) == L->from_sym(SymFunc::schur(pi)));
            CHECK(L->schur_value(pi, a) == L->from_sym(SymFunc::schur(pi)));
        }
}

TEST_CASE("schur quotient (2,1): the worked example") {
    auto R = LambdaRing::schur_quotient(Partition{2, 1});
    RingElement x = R->generator();
    RingElement y = R->lambda_op(x, 2);
    CHECK(y == R->from_sym(s({1, 1})));
    CHECK(R->lambda_op(x, 3) == R->from_sym(s({1, 1, 1})));
    CHECK(R->lambda_op(x, 3) == x * y);
    CHECK(R->lambda_op(x, 4) == y * y);
    // lambda^{2i}(x) = y^i, lambda^{2i+1}(x) = x y^i
    RingElement ypow = R->one();
    for (int i = 1; i <= 3; ++i) {
        ypow = ypow * y;
        CHECK(R->lambda_op(x, 2 * i) == ypow);
        CHECK(R->lambda_op(x, 2 * i + 1) == x * ypow);
    }
    // y^2 = x^2 y, both sides s_(1,1,1,1)
    CHECK(y * y == x * x * y);
    CHECK(y * y == R->from_sym(s({1, 1, 1, 1})));

    // lambda^n(gen) is e_n reduced, for every quotient
    for (auto lambda : {Partition{2, 2}, Partition{3, 1}, Partition{1, 1, 1}}) {
        auto Q = LambdaRing::schur_quotient(lambda);
        RingElement g = Q->generator();
        for (int n = 1; n <= 6; ++n)
            CHECK(Q->lambda_op(g, n) ==
                  Q->from_sym(reduce_mod_ideal(SymFunc::e(n), lambda)));
    }
}

TEST_CASE("I_lambda is a lambda-ideal") {
    // lambda^k of an ideal element stays in the ideal: reduce to 0.
    auto F = LambdaRing::free_ring(9);
    for (auto& pi : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
        for (auto& g : {SymFunc::one(), SymFunc::e(1)}) {
            SymFunc ideal_elem = multiply(SymFunc::schur(pi), g, 9);
            RingElement lifted = F->from_sym(ideal_elem);
            for (int k = 1; k <= 2 && k * lifted.degree() <= 9; ++k) {
                RingElement lk = F->lambda_op(lifted, k);
                CHECK(reduce_mod_ideal(lk.sym(), Partition{2, 1}).is_zero());
            }
        }
    }
}

TEST_CASE("odd free ring") {
    auto R = LambdaRing::odd_free(1);
    RingElement b = R->generator();
    for (int k = 2; k <= 6; ++k) CHECK(R->sigma_op(b, k).is_zero());
    CHECK(R->sigma_op(b, 1) == b);
    // lambda^n(b) = b^n
    RingElement pow = R->one();
    for (int n = 1; n <= 6; ++n) {
        pow = pow * b;
        CHECK(R->lambda_op(b, n) == pow);
    }

    auto R2 = LambdaRing::odd_free(2);
    RingElement b2 = R2->generator();
    CHECK(R2->sigma_op(b2, 2) == R2->var(1));
    CHECK(R2->sigma_op(b2, 3).is_zero());
    // defining identity sum_{i+j=n} (-1)^i lambda^i sigma^j = 0 for n >= 1
    auto lam = R2->lambda_series_of(b2, 5);
    auto sig = R2->sigma_series_of(b2, 5);
    for (int n = 1; n <= 4; ++n) {
        RingElement acc = R2->zero();
        for (int i = 0; i <= n; ++i) {
            RingElement term = lam[i] * sig[n - i];
            acc = i % 2 == 0 ? acc + term : acc - term;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("even free ring and split") {
    auto E = LambdaRing::even_free(2);
    RingElement a = E->generator();
    CHECK(E->lambda_op(a, 1) == a);
    CHECK(E->lambda_op(a, 2) == E->var(1));
    CHECK(E->lambda_op(a, 3).is_zero());

    auto S = LambdaRing::split_ring(2);
    RingElement l1 = S->var(0), l2 = S->var(1);
    RingElement sum = l1 + l2;
    CHECK(S->lambda_op(sum, 2) == l1 * l2);
    CHECK(S->lambda_op(sum, 3).is_zero());
    CHECK(S->lambda_op(l1, 2).is_zero());
}

TEST_CASE("lambda-ring laws on sample elements") {
    // lambda^n(x+y), lambda^n(xy) = P_n, lambda^m(lambda^n x) = P_{m,n}
    auto T = LambdaRing::tensor({LambdaRing::even_free(2), LambdaRing::odd_free(1)});
    RingElement x = T->var(0) + T->var(2); // a1 + b1
    RingElement y = T->var(1) - T->one() * Int(2); // a2 - 2

    struct Ops {
        const LambdaRing* R;
        RingElement zero() const { return R->zero(); }
        RingElement one() const { return R->one(); }
        RingElement scalar(const Int& c) const { return R->from_int(c); }
        RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
        RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
        RingElement neg(const RingElement& a) const { return -a; }
        bool is_zero(const RingElement& a) const { return a.is_zero(); }
    } ops{T.get()};

    auto lx = T->lambda_series_of(x, 7), ly = T->lambda_series_of(y, 7);
    for (int n = 1; n <= 4; ++n) {
        // sum law
        RingElement sum_rule = T->zero();
        for (int i = 0; i <= n; ++i) sum_rule = sum_rule + lx[i] * ly[n - i];
        CHECK(T->lambda_op(x + y, n) == sum_rule);
        // product law
        CHECK(T->lambda_op(x * y, n) == product_polynomial(n).evaluate(lx, ly, ops));
    }
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; m * n <= 6; ++n) {
            std::vector<RingElement> lx_long = T->lambda_series_of(x, m * n + 1);
            CHECK(T->lambda_op(T->lambda_op(x, n), m) ==
                  composition_polynomial(m, n).evaluate(lx_long, {}, ops));
        }
}

TEST_CASE("lambda-ring laws in Schur-native rings") {
    // composite elements exercise the e-word decomposition: sums, products,
    // negative coefficients
    struct Ops {
        const LambdaRing* R;
        RingElement zero() const { return R->zero(); }
        RingElement one() const { return R->one(); }
        RingElement scalar(const Int& c) const { return R->from_int(c); }
        RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
        RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
        RingElement neg(const RingElement& a) const { return -a; }
        bool is_zero(const RingElement& a) const { return a.is_zero(); }
    };
    for (RingPtr R : {LambdaRing::free_ring(), LambdaRing::schur_quotient(Partition{2, 2})}) {
        Ops ops{R.get()};
        RingElement g = R->generator();
        RingElement x = g + R->one() * Int(-2);
        RingElement y = R->lambda_op(g, 2) - g;
        auto lx = R->lambda_series_of(x, 5), ly = R->lambda_series_of(y, 5);
        for (int n = 1; n <= 3; ++n) {
            RingElement sum_rule = R->zero();
            for (int i = 0; i <= n; ++i) sum_rule = sum_rule + lx[i] * ly[n - i];
            CHECK(R->lambda_op(x + y, n) == sum_rule);
            CHECK(R->lambda_op(x * y, n) == product_polynomial(n).evaluate(lx, ly, ops));
        }
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; m * n <= 4; ++n) {
                auto lx_long = R->lambda_series_of(x, m * n + 1);
                CHECK(R->lambda_op(R->lambda_op(x, n), m) ==
                      composition_polynomial(m, n).evaluate(lx_long, {}, ops));
            }
    }
}

TEST_CASE("lambda-ring laws in a line-polynomial ring") {
    auto A = LambdaRing::line_poly(LambdaRing::schur_quotient(Partition{2, 1}, 8));
    RingElement x = A->embed_base(A->line_base()->generator());
    RingElement a = A->generator();
    RingElement y = x + a;
    auto lx = A->lambda_series_of(x, 5), la = A->lambda_series_of(a, 5);
    for (int n = 1; n <= 4; ++n) {
        RingElement sum_rule = A->zero();
        for (int i = 0; i <= n; ++i) sum_rule = sum_rule + lx[i] * la[n - i];
        CHECK(A->lambda_op(y, n) == sum_rule);
    }
    // the adjoined generator is a line: lambda^n(a x) = lambda^n(x) a^n
    for (int n = 1; n <= 3; ++n) {
        RingElement apow = A->one();
        for (int i = 0; i < n; ++i) apow = apow * a;
        CHECK(A->lambda_op(a * x, n) == A->lambda_op(x, n) * apow);
    }
}

TEST_CASE("schur values across presentations") {
    // quotient: anything containing the quotient partition dies
    auto Q = LambdaRing::schur_quotient(Partition{2, 1});
    CHECK(Q->schur_value(Partition{2, 2}, Q->generator()).is_zero());

    // tensor Lambda_1 (x) Lambda_{-1}: s_(2,2)(a+b) = 0
    auto T = LambdaRing::tensor({LambdaRing::even_free(1), LambdaRing::odd_free(1)});
    RingElement x = T->var(0) + T->var(1);
    CHECK(T->schur_value(Partition{2, 2}, x).is_zero());
    CHECK_FALSE(T->schur_value(Partition{2, 1}, x).is_zero());

    // lambda2-3 table ring: s_(1,1,1)(x) = lambda^3(x) != 0
    auto TR = LambdaRing::table_lambda2_3();
    RingElement tx = TR->generator();
    CHECK_FALSE(TR->schur_value(Partition{1, 1, 1}, tx).is_zero());
    CHECK(TR->schur_value(Partition{1, 1}, tx).is_zero());

    // schur_value (sigma determinant) agrees with apply_symfunc (e-words)
    for (int n = 0; n <= 5; ++n)
        for (auto& pi : partitions_of(n)) {
            CHECK(T->schur_value(pi, x) == T->apply_symfunc(SymFunc::schur(pi), x));
            CHECK(Q->schur_value(pi, Q->generator()) ==
                  Q->apply_symfunc(SymFunc::schur(pi), Q->generator()));
        }
}

TEST_CASE("check_bound") {
    auto Q = LambdaRing::schur_quotient(Partition{2, 1});
    auto rep = check_bound(Q->generator(), Partition{2, 1}, 8);
    CHECK(rep.holds_up_to_N);
    CHECK(rep.witnesses.empty());

    auto TR = LambdaRing::table_lambda2_3();
    RingElement x = TR->generator();
    auto fail = check_bound(x, Partition{1, 1}, 6);
    CHECK_FALSE(fail.holds_up_to_N);
    REQUIRE(!fail.witnesses.empty());
    // s_(1,1,1)(x) = lambda^3(x) witnesses the failure; s_(2,1)(x) = -x b^2
    // fails too and precedes it in canonical order.
    CHECK(std::any_of(fail.witnesses.begin(), fail.witnesses.end(),
                      [](const BoundWitness& w) { return w.pi == Partition{1, 1, 1}; }));

    auto hold = check_bound(x, Partition{2, 2}, 8);
    CHECK(hold.holds_up_to_N);

    // threaded evaluation returns the same report
    auto fail4 = check_bound(x, Partition{1, 1}, 6, 4);
    CHECK(fail4.holds_up_to_N == fail.holds_up_to_N);
    REQUIRE(fail4.witnesses.size() == fail.witnesses.size());
    for (size_t i = 0; i < fail4.witnesses.size(); ++i)
        CHECK(fail4.witnesses[i].pi == fail.witnesses[i].pi);
}

TEST_CASE("even/odd analysis") {
    auto S = LambdaRing::split_ring(2);
    auto rep = even_odd_analysis(S->var(0) + S->var(1), 8);
    CHECK(rep.even_degree == 2);
    CHECK_FALSE(rep.odd_degree.has_value());

    auto O = LambdaRing::odd_free(1);
    auto orep = even_odd_analysis(O->generator(), 8);
    CHECK(orep.odd_degree == 1);
    CHECK_FALSE(orep.even_degree.has_value());

    auto Q = LambdaRing::schur_quotient(Partition{2, 1});
    auto qrep = even_odd_analysis(Q->generator(), 8);
    CHECK_FALSE(qrep.even_degree.has_value());
    CHECK_FALSE(qrep.odd_degree.has_value());
    // the same holds for integer multiples of the generator
    auto q2 = even_odd_analysis(Q->generator() * Int(2), 6);
    CHECK_FALSE(q2.even_degree.has_value());
    CHECK_FALSE(q2.odd_degree.has_value());

    CHECK(even_odd_analysis(S->zero(), 4).even_degree == 0);
}

TEST_CASE("negation through series inversion: lambda^i(-x) = (-1)^i sigma^i(x)") {
    auto T = LambdaRing::tensor({LambdaRing::even_free(2), LambdaRing::odd_free(1)});
    RingElement x = T->var(0) + T->var(2) * Int(-2);
    auto sig = T->sigma_series_of(x, 7);
    auto neg = T->lambda_series_of(-x, 7);
    for (int i = 0; i <= 6; ++i) {
        RingElement want = i % 2 == 0 ? sig[i] : -sig[i];
        CHECK(neg[i] == want);
    }
}

TEST_CASE("corollary lambda22 image identity") {
    // In Z[a,b] = Lambda_1 (x) Lambda_{-1}: lambda^{n+1}(a+b) = (a+b) b^n.
    auto T = LambdaRing::tensor({LambdaRing::even_free(1), LambdaRing::odd_free(1)});
    RingElement a = T->var(0), b = T->var(1);
    RingElement x = a + b;
    RingElement bpow = T->one();
    for (int n = 0; n <= 6; ++n) {
        CHECK(T->lambda_op(x, n + 1) == x * bpow);
        bpow = bpow * b;
    }
}

TEST_CASE("table ring lambda2-3") {
    auto R = LambdaRing::table_lambda2_3();
    RingElement x = R->generator();
    for (int i = 1; i <= 3; ++i) {
        CHECK(R->lambda_op(x, 2 * i).is_zero());
        CHECK_FALSE(R->lambda_op(x, 2 * i + 1).is_zero());
    }
    // x is not nilpotent
    RingElement pow = R->one();
    for (int n = 1; n <= 6; ++n) {
        pow = pow * x;
        CHECK_FALSE(pow.is_zero());
    }
    // the basis truncation is honest: far products overflow
    CHECK_THROWS_AS(
        [&] {
            RingElement p = R->one();
            for (int i = 0; i < 13; ++i) p = p * x;
            return p;
        }(),
        CapExceeded);
}

TEST_CASE("table ring for I_(2)+I_(1,1)") {
    auto R = LambdaRing::table_i2_plus_i11();
    RingElement u = R->generator();
    CHECK((u * u).is_zero());
    CHECK(R->lambda_op(u, 2).is_zero());
    auto rep = even_odd_analysis(u, 6);
    CHECK(rep.even_degree == 1);
    CHECK(rep.odd_degree == 1);
}

TEST_CASE("caps and preconditions") {
    auto Q = LambdaRing::schur_quotient(Partition{2, 1});
    CHECK_THROWS_AS(Q->lambda_op(Q->generator(), 13), CapExceeded);
    RingElement deg2 = Q->lambda_op(Q->generator(), 2);
    CHECK_THROWS_AS(Q->lambda_op(deg2, 7), CapExceeded);
    CHECK_THROWS_AS(Q->generator() + LambdaRing::free_ring()->generator(),
                    PreconditionError);
    CHECK_THROWS_AS(LambdaRing::tensor({LambdaRing::binomial_ring()}), PreconditionError);
}
