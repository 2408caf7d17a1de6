#include <doctest.h>

#include <cmath>
#include <random>

#include "cfdim/solver.hpp"
#include "cfdim/transfer.hpp"

using namespace cfdim;

namespace {
GridFunction ones(int cells = 32) { return GridFunction::constant(cells); }
}

TEST_CASE("apply: counting at s=0 and single-term values") {
  TransferOperator k7(Alphabet::from_ints({7}), 0.0);
  CHECK(apply(k7, ones(), 0.5) == doctest::Approx(1.0));

  TransferOperator f123(Alphabet::from_ints({1, 2, 3}), 0.0);
  for (double x : {0.0, 0.25, 0.7, 1.0})
    CHECK(apply(f123, ones(), x) == doctest::Approx(3.0));

  TransferOperator one(Alphabet::from_ints({1}), 0.5);
  CHECK(apply(one, ones(), 0.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(apply(one, ones(), 1.5), DomainError);
}

TEST_CASE("apply positivity and monotonicity") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> X(0.0, 1.0);
  Alphabet f = Alphabet::from_ints({1, 3, 7});
  Alphabet g = Alphabet::from_ints({1, 2, 3, 7, 9});
  TransferOperator opf(f, 0.4), opg(g, 0.4);
  GridFunction small = ones(), large = ones();
  for (double& v : large.mutable_values()) v *= 2.5;
  for (int i = 0; i < 50; ++i) {
    double x = X(rng);
    double a = apply(opf, small, x);
    CHECK(a > 0.0);
    CHECK(a <= apply(opf, large, x));   // monotone in f
    CHECK(a <= apply(opg, small, x));   // monotone in F
  }
}

TEST_CASE("apply is decreasing in s") {
  Alphabet f = Alphabet::from_ints({2, 5});
  GridFunction w = ones();
  double prev = apply(TransferOperator(f, 0.05), w, 0.3);
  for (double s : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    double cur = apply(TransferOperator(f, s), w, 0.3);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("apply_squared basics") {
  CHECK(apply_squared(TransferOperator(Alphabet::from_ints({1}), 0.0), ones(), 0.0) ==
        doctest::Approx(1.0));
  CHECK(apply_squared(TransferOperator(Alphabet::from_ints({1, 2}), 0.0), ones(), 0.0) ==
        doctest::Approx(4.0));

  // L^2 f == L(Lf) pointwise: nest apply exactly through the maps
  TransferOperator op(Alphabet::from_ints({1, 2}), 0.531);
  GridFunction f = ones();
  auto nested = [&](double x) {
    double acc = 0.0;
    for (const BigInt& b : op.alphabet.elements()) {
      double bd = mpz_get_d(b.get_mpz_t());
      acc += std::pow(bd + x, -2.0 * op.s.mid()) * apply(op, f, 1.0 / (bd + x));
    }
    return acc;
  };
  CHECK(apply_squared(op, f, 0.3) == doctest::Approx(nested(0.3)).epsilon(1e-12));
}

TEST_CASE("apply_squared equals nested apply on a 32-point grid for random alphabets") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> E(1, 40);
  for (double s : {0.2, 0.5, 0.9}) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long> elems;
      int sz = 2 + static_cast<int>(rng() % 4);
      for (int i = 0; i < sz; ++i) elems.push_back(E(rng));
      Alphabet f = Alphabet::from_ints(elems);
      TransferOperator op(f, s);
      GridFunction w = ones(64);
      for (int j = 0; j <= 32; ++j) {
        double x = j / 32.0;
        double nested = 0.0;
        for (const BigInt& b : op.alphabet.elements()) {
          double bd = mpz_get_d(b.get_mpz_t());
          nested += std::pow(bd + x, -2.0 * s) * apply(op, w, 1.0 / (bd + x));
        }
        CHECK(apply_squared(op, w, x) == doctest::Approx(nested).epsilon(1e-10));
      }
    }
  }
  CHECK_THROWS_AS(
      apply_squared(TransferOperator(Alphabet::power(2, 5).with_infinite_tail(), 0.5),
                    ones(), 0.0),
      ParamError);
}

TEST_CASE("closed-form eigenpair") {
  auto golden = closed_form_eigenpair(1.0, 0.5);
  CHECK(golden.lambda_root.contains((1.0 + std::sqrt(5.0)) / 2.0));
  CHECK(golden.lambda_root.width() < 1e-14);

  auto zero_s = closed_form_eigenpair(1.0, 0.0);
  CHECK(zero_s.eigenvalue.contains(1.0));
  CHECK(zero_s.eigenvalue.width() < 1e-14);

  auto mu2 = closed_form_eigenpair(2.0, 0.5);
  CHECK(mu2.lambda_root.contains(1.0 + std::sqrt(2.0)));
  CHECK(mu2.eigenvalue.contains(1.0 / (1.0 + std::sqrt(2.0))));

  CHECK_THROWS_AS(closed_form_eigenpair(0.0, 0.5), ParamError);
}

TEST_CASE("closed-form eigenfunction has small residual on a 64-point grid") {
  for (auto [mu, s] : {std::pair{1.0, 0.5}, {2.0, 0.5}, {3.0, 0.77}, {1.0, 0.123}}) {
    auto pair = closed_form_eigenpair(mu, s);
    double lambda = pair.lambda_root.mid();
    double ev = pair.eigenvalue.mid();
    for (int i = 0; i <= 64; ++i) {
      double x = i / 64.0;
      double v = std::pow(lambda + x, -2.0 * s);
      double lv = std::pow(mu + x, -2.0 * s) *
                  std::pow(lambda + 1.0 / (mu + x), -2.0 * s);
      CHECK(std::abs(lv - ev * v) / v < 1e-12);
    }
  }
}

TEST_CASE("log lipschitz factor") {
  TransferOperator g1(Alphabet::from_ints({1, 5}), 0.5);
  CHECK(log_lipschitz_factor(g1, 0.3, 0.3) == doctest::Approx(1.0));
  TransferOperator s1(Alphabet::from_ints({1}), 1.0);
  CHECK(log_lipschitz_factor(s1, 0.0, 1.0) == doctest::Approx(std::exp(2.0)));
  TransferOperator g4(Alphabet::from_ints({4, 9}), 0.5);
  CHECK(log_lipschitz_factor(g4, 0.0, 1.0) == doctest::Approx(std::exp(0.25)));
}

TEST_CASE("tail majorant dominates the true tail") {
  // geometric: explicit check of the worked constant e^{4s/2^3}/(2^{2s}-1)
  Alphabet p2 = Alphabet::power(2, 3).with_infinite_tail();  // {2,4,8}+tail
  TailMajorant t = TailMajorant::for_family(p2);
  CHECK(t.kind == TailMajorant::Kind::Geometric);
  CHECK(t.anchor == 8);
  Interval c = t.coefficient(Interval(0.67), BigInt(2));
  // coefficient * (anchor+x)^{-2s} bounds the tail sum; compare against the
  // crude paper-style form e^{4s/8}/(2^{2s}-1) with gamma=2 refinement
  CHECK(c.hi < std::exp(4 * 0.67 / 8.0) / (std::pow(2.0, 2 * 0.67) - 1.0) + 1e-9);

  // monomial: partial sums of the true tail never exceed the majorant
  Alphabet m6 = Alphabet::monomial(6, 1).with_infinite_tail();  // anchor 1
  TailMajorant tm = TailMajorant::for_family(m6);
  CHECK(tm.kind == TailMajorant::Kind::Monomial);
  for (double s : {0.265, 0.3, 0.5}) {
    Interval coeff = tm.coefficient(Interval(s), BigInt(1));
    for (double x : {0.0, 0.5, 1.0}) {
      double partial = 0.0;
      for (long n = 2; n <= 10000; ++n)
        partial += std::pow(std::pow(static_cast<double>(n), 6.0) + x, -2.0 * s);
      // w == 1 candidate: bound is coeff * (anchor+x)^{-2s} * 1
      double bound = coeff.hi * std::pow(1.0 + x, -2.0 * s);
      CHECK(partial <= bound);
    }
  }
  CHECK_THROWS_AS(tm.coefficient(Interval(0.05), BigInt(1)), DivergentTailError);

  Alphabet p3 = Alphabet::power(3, 4).with_infinite_tail();
  CHECK_THROWS_AS(TailMajorant::for_family(p3).coefficient(Interval(0.0), BigInt(3)),
                  DivergentTailError);
}

TEST_CASE("apply_enclosure wraps the plain value and the infinite sum") {
  Alphabet f = Alphabet::from_ints({1, 4, 9});
  TransferOperator op(f, 0.4);
  GridFunction w = ones();
  for (double x : {0.0, 0.33, 1.0}) {
    Interval e = apply_enclosure(op, w, x);
    CHECK(e.contains(apply(op, w, x)));
    CHECK(e.width() < 1e-12);
  }

  // with tail: enclosure must contain a long partial sum of the true series
  SolverConfig cfg;
  cfg.mesh_size = 64;
  Alphabet m2 = Alphabet::monomial(2, 6).with_infinite_tail();
  TransferOperator opt(m2, 0.6);
  GridFunction wl = power_iterate(opt, cfg);
  for (double x : {0.0, 0.5}) {
    Interval e = apply_enclosure(opt, wl, x);
    double partial = 0.0;
    for (long n = 1; n <= 3000; ++n)
      partial += std::pow(n * n + x, -1.2) * wl(1.0 / (n * n + x));
    CHECK(e.lo <= partial);
    CHECK(partial <= e.hi);
  }
}
