#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bdl/errors.hpp"
#include "bdl/laurent.hpp"
#include "bdl/samples.hpp"

using namespace bdl;

namespace {

LaurentPoly t(int p = 1) { return LaurentPoly::variable(1, 0, p); }
LaurentPoly c1(long c) { return LaurentPoly::constant(1, c); }
LaurentPoly q2() { return LaurentPoly::variable(2, 0); }
LaurentPoly t2() { return LaurentPoly::variable(2, 1); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK((t() + c1(1)) * (t() - c1(1)) == t(2) - c1(1));
  CHECK(power(t(-1), 3) == t(-3));
  CHECK(power(q2() + t2(), 2) == q2() * q2() + q2() * t2() * Integer(2) + t2() * t2());
  CHECK((t() - t()).is_zero());
  CHECK(power(t() + c1(1), 0).is_one());
  CHECK_THROWS_AS(t() + q2(), DomainError);
  CHECK((t(2) * Integer(3) - c1(2) + t(-1)).to_string() == "3*t^2 - 2 + t^-1");
}

TEST_CASE("norms and traces") {
  CHECK(norm(t(2) * Integer(3) - c1(2) + t(-1)) == 6);

  const LaurentMatrix a{{t(), c1(1)}, {LaurentPoly(1), c1(2)}};
  CHECK(norm_of_trace(a) == 3);
  CHECK(trace_of_norm(a) == 3);
  CHECK(matrix_norm(a) == std::vector<std::vector<Integer>>{{1, 1}, {0, 2}});

  // ||t - t^2 + 1 - t|| vs ||t|| + ||1 - t^2 - t||: cancellation across the diagonal.
  const LaurentMatrix b{{t(), c1(0)}, {c1(0), c1(1) - t(2) - t()}};
  CHECK(norm_of_trace(b) == 2);
  CHECK(trace_of_norm(b) == 4);

  CHECK_THROWS_AS(trace(LaurentMatrix(2, 3, 1)), DomainError);
}

TEST_CASE("norm of trace never exceeds trace of norms") {
  samples::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentMatrix a = samples::random_laurent_matrix(rng, 3, 1, 4, 5);
    CHECK(norm_of_trace(a) <= trace_of_norm(a));
  }
}

TEST_CASE("norm inequalities and shift invariance") {
  samples::Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int vars = rng.uniform(1, 3);
    const LaurentPoly f = samples::random_laurent(rng, vars, rng.uniform(0, 3), 5);
    const LaurentPoly g = samples::random_laurent(rng, vars, rng.uniform(0, 3), 5);
    CHECK(norm(f * g) <= norm(f) * norm(g));
    CHECK(norm(f + g) <= norm(f) + norm(g));
    Exponent shift(vars);
    for (int& s : shift) s = rng.uniform(-5, 5);
    CHECK(norm(f.shifted(shift)) == norm(f));
    CHECK(norm(f * LaurentPoly::monomial(shift, -1)) == norm(f));
  }
}

TEST_CASE("evaluation on the torus") {
  const Complex minus_one[] = {{-1.0, 0.0}};
  CHECK(std::abs(eval(t(), minus_one) - Complex(-1.0, 0.0)) < 1e-15);

  // 1 - t - t^-1 at e^{i theta} is real and equals 1 - 2 cos(theta).
  for (double theta : {0.0, 0.3, 1.0, 2.0, std::numbers::pi}) {
    const Complex pt[] = {std::polar(1.0, theta)};
    const Complex v = eval(c1(1) - t() - t(-1), pt);
    CHECK(std::abs(v.imag()) < 1e-14);
    CHECK(v.real() == doctest::Approx(1.0 - 2.0 * std::cos(theta)).epsilon(1e-14));
  }

  const Complex ii[] = {{0.0, 1.0}, {0.0, 1.0}};
  CHECK(std::abs(eval(q2() * t2(), ii) - Complex(-1.0, 0.0)) < 1e-15);

  const Complex off[] = {{1.1, 0.0}};
  CHECK_THROWS_AS(eval(t(), off), DomainError);
  const Complex slightly_off[] = {{1.0 + 1e-9, 0.0}};
  CHECK_NOTHROW(eval(t(), slightly_off));
  const Complex wrong_arity[] = {{1.0, 0.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(eval(t(), wrong_arity), DomainError);
}

TEST_CASE("evaluation properties") {
  samples::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int vars = rng.uniform(1, 2);
    const LaurentMatrix a = samples::random_laurent_matrix(rng, 2, vars, 2, 4);
    const LaurentMatrix b = samples::random_laurent_matrix(rng, 2, vars, 2, 4);
    std::vector<Complex> pt(vars);
    for (auto& x : pt) x = std::polar(1.0, (rng.next() % 100000) * 2e-5 * std::numbers::pi);
    CHECK(std::abs(eval(a(0, 0), pt)) <= norm(a(0, 0)).get_d() + 1e-9);
    const ComplexMatrix lhs = matrix_eval(a * b, pt);
    const ComplexMatrix rhs = matrix_eval(a, pt) * matrix_eval(b, pt);
    CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("exact inverse and characteristic polynomial") {
  const LaurentMatrix s1{{-t(), c1(1)}, {c1(0), c1(1)}};
  const LaurentMatrix inv = inverse(s1);
  CHECK(inv == LaurentMatrix{{-t(-1), t(-1)}, {c1(0), c1(1)}});
  CHECK((s1 * inv).is_identity());

  // det(xI - A) for [[2,1],[1,1]] is x^2 - 3x + 1.
  const LaurentMatrix fib{{c1(2), c1(1)}, {c1(1), c1(1)}};
  const auto cp = characteristic_polynomial(fib);
  CHECK(cp[0] == c1(1));
  CHECK(cp[1] == c1(-3));
  CHECK(cp[2] == c1(1));

  CHECK_THROWS_AS(inverse(LaurentMatrix{{c1(2), c1(0)}, {c1(0), c1(1)}}), DomainError);
}
