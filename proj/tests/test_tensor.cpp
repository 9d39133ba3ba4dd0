#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mag/field.hpp"
#include "mag/tensor.hpp"

using namespace mag;

TEST_CASE("point validation") {
    CHECK_THROWS_AS(Point{1.0}, TensorError);
    CHECK_THROWS_AS((Point{1.0, std::nan("")}), TensorError);
    Point p{1.0, 2.0, 3.0};
    CHECK(p.dim() == 3);
    CHECK(p.shifted(1, 0.5)[1] == doctest::Approx(2.5));
    CHECK(p[1] == doctest::Approx(2.0)); // shifted() copies
}

TEST_CASE("tensor storage and arithmetic") {
    Tensor t(3, {up(), down()});
    t(0, 1) = 2.0;
    t(2, 2) = -5.0;
    CHECK(t.rank() == 2);
    CHECK(t.max_abs() == doctest::Approx(5.0));

    Tensor s = t;
    s += t;
    CHECK(s(0, 1) == doctest::Approx(4.0));
    s -= t;
    CHECK(s(2, 2) == doctest::Approx(-5.0));
    s *= -2.0;
    CHECK(s(0, 1) == doctest::Approx(-4.0));

    Tensor other(3, {up(), down(), down()});
    CHECK_THROWS_AS(t += other, TensorError);
}

TEST_CASE("contraction requires opposite variance and same basis") {
    Tensor v(2, {up()});
    v(0) = 3.0;
    v(1) = 4.0;
    Tensor w(2, {down()});
    w(0) = 1.0;
    w(1) = 2.0;
    Tensor s = contract(v, w, {{0, 0}});
    CHECK(s.rank() == 0);
    CHECK(s.values()[0] == doctest::Approx(11.0));

    Tensor u(2, {up()});
    CHECK_THROWS_AS(contract(v, u, {{0, 0}}), TensorError);
    Tensor f(2, {down(Basis::frame)});
    CHECK_THROWS_AS(contract(v, f, {{0, 0}}), TensorError);
}

TEST_CASE("matrix contraction") {
    Tensor m(2, {up(), down()});
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 3.0;
    m(1, 1) = 4.0;
    Tensor v(2, {up()});
    v(0) = 1.0;
    v(1) = -1.0;
    Tensor mv = contract(m, v, {{1, 0}});
    CHECK(mv(0) == doctest::Approx(-1.0));
    CHECK(mv(1) == doctest::Approx(-1.0));
}

TEST_CASE("trace") {
    Tensor m(3, {up(), down()});
    m(0, 0) = 1.0;
    m(1, 1) = 2.0;
    m(2, 2) = 3.0;
    m(0, 2) = 9.0;
    Tensor t = trace(m, 0, 1);
    CHECK(t.rank() == 0);
    CHECK(t.values()[0] == doctest::Approx(6.0));
}

TEST_CASE("metric inversion") {
    Tensor g(2, {down(), down()});
    g(0, 0) = 4.0;
    g(1, 1) = -0.25;
    Tensor gi = invert_metric(g);
    CHECK(gi(0, 0) == doctest::Approx(0.25));
    CHECK(gi(1, 1) == doctest::Approx(-4.0));
    CHECK(gi.slots()[0].var == Var::up);

    Tensor deg(2, {down(), down()});
    deg(0, 0) = 1.0;
    deg(0, 1) = 1.0;
    deg(1, 0) = 1.0;
    deg(1, 1) = 1.0;
    CHECK_THROWS_AS(invert_metric(deg), DegenerateMetricError);
}

TEST_CASE("rank-2 inversion flips slots") {
    Tensor e(2, {up(), down(Basis::frame)});
    e(0, 0) = 2.0;
    e(1, 1) = 4.0;
    e(0, 1) = 1.0;
    Tensor d = invert_rank2(e);
    CHECK(d.slots()[0].var == Var::up);
    CHECK(d.slots()[0].basis == Basis::frame);
    CHECK(d.slots()[1].var == Var::down);
    // d * e = identity
    Tensor id = contract(d, e, {{1, 0}});
    CHECK(id(0, 0) == doctest::Approx(1.0));
    CHECK(id(0, 1) == doctest::Approx(0.0));
    CHECK(id(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("finite-difference derivative with Richardson") {
    TensorField f;
    f.eval = [](const Point& p) {
        Tensor t(2, {up()});
        t(0) = std::sin(p[0]) * p[1];
        t(1) = p[0] * p[0] * p[0];
        return t;
    };
    Point p{0.7, 1.3};
    Tensor d0 = partial_derivative(f, p, 0);
    CHECK(d0(0) == doctest::Approx(std::cos(0.7) * 1.3).epsilon(1e-10));
    CHECK(d0(1) == doctest::Approx(3.0 * 0.49).epsilon(1e-10));
    Tensor d1 = partial_derivative(f, p, 1);
    CHECK(d1(0) == doctest::Approx(std::sin(0.7)).epsilon(1e-10));
    CHECK(d1(1) == doctest::Approx(0.0));
    CHECK_THROWS_AS(partial_derivative(f, p, 5), DifferentiationError);
}

TEST_CASE("noise widens the step of nested derivatives") {
    // Second derivative through the FD fallback stays accurate because the
    // derived field records its own (larger) evaluation noise.
    TensorField f;
    f.eval = [](const Point& p) { return Tensor::scalar(std::exp(p[0])); };
    TensorField df = f.derivative(0);
    CHECK(df.noise > f.noise);
    TensorField ddf = df.derivative(0);
    Point p{0.4, 0.0};
    CHECK(ddf(p).values()[0] == doctest::Approx(std::exp(0.4)).epsilon(1e-7));
}

TEST_CASE("constant field has exact zero derivative") {
    Tensor v(3, {up()});
    v(1) = 7.0;
    TensorField f = constant_field(v);
    TensorField d = f.derivative(2);
    CHECK(d(Point{1.0, 2.0, 3.0}).max_abs() == 0.0);
}
