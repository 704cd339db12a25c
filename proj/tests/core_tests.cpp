#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsr/fixtures.hpp"
#include "lsr/lss.hpp"
#include "lsr/numerics.hpp"
#include "lsr/realization.hpp"
#include "lsr/word.hpp"
#include "test_support.hpp"

using namespace lsr;

namespace {

ModeWord W(const char* text) { return ModeWord::parse(text); }

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("enumeration order") {
    const auto two = enumerate_words(2, 2);
    const std::vector<ModeWord> expected = {W("-"), W("1"),  W("2"), W("11"),
                                            W("12"), W("21"), W("22")};
    REQUIRE(two.size() == expected.size());
    for (std::size_t i = 0; i < two.size(); ++i) CHECK(two[i] == expected[i]);

    const auto unary = enumerate_words(1, 3);
    REQUIRE(unary.size() == 4);
    CHECK(unary[0] == W("-"));
    CHECK(unary[3] == W("111"));
  }

  TEST_CASE("word counts") {
    CHECK(word_count(2, 0) == 1);
    CHECK(word_count(2, 3) == 15);   // (2^4 - 1) / (2 - 1)
    CHECK(word_count(3, 2) == 13);   // (3^3 - 1) / 2
    CHECK(word_count(1, 5) == 6);
    CHECK(word_count(2, -1) == 0);
    CHECK_THROWS_AS(word_count(2, 80), CapacityError);
  }

  TEST_CASE("ordering properties") {
    test::Rng rng(7);
    const auto words = enumerate_words(3, 3);
    CHECK(words.front().empty());
    for (std::size_t i = 1; i < words.size(); ++i)
      CHECK(word_less(words[i - 1], words[i]));
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> mode(1, 3);
    for (int it = 0; it < 50; ++it) {
      const ModeWord& v = words[pick(rng)];
      CHECK(word_less(v, v.append(mode(rng))));
    }
  }

  TEST_CASE("rank and word_at invert each other") {
    for (int d : {1, 2, 3}) {
      for (std::int64_t r = 0; r < 40; ++r) {
        const ModeWord w = word_at(r, d);
        CHECK(word_rank(w, d) == r);
      }
    }
    const auto words = enumerate_words(2, 4);
    for (std::size_t i = 0; i < words.size(); ++i)
      CHECK(word_rank(words[i], 2) == static_cast<std::int64_t>(i));
  }

  TEST_CASE("sub_word") {
    const ModeWord v = W("1221");
    CHECK(v.sub_word(1, 0) == W("-"));
    CHECK(v.sub_word(2, 2) == W("2"));
    CHECK(v.sub_word(0, 3) == v);
    CHECK(v.sub_word(1, 2) == W("22"));
    CHECK_THROWS(v.sub_word(0, 9));
  }

  TEST_CASE("parse and str") {
    CHECK(W("-").empty());
    CHECK(W("212").letters() == std::vector<int>{2, 1, 2});
    CHECK(W("212").str() == "212");
    CHECK(ModeWord{}.str() == "-");
    CHECK_THROWS_AS(ModeWord::parse("1a2"), SchemaError);
    CHECK_THROWS_AS(ModeWord::parse("102"), SchemaError);
  }

  TEST_CASE("hybrid word invariants") {
    CHECK_THROWS_AS(HybridWord(W("12"), {Vector::Zero(1)}), DimensionError);
    CHECK_THROWS_AS(HybridWord(W("-"), {}), DimensionError);
    CHECK_THROWS_AS(HybridWord(W("12"), {Vector::Zero(1), Vector::Zero(2)}),
                    DimensionError);
    const HybridWord w = HybridWord::zero_inputs(W("121"), 2);
    CHECK(w.size() == 3);
    CHECK(w.input_dim() == 2);
    CHECK(HybridWord().empty());
  }
}

TEST_SUITE("lss_core") {
  TEST_CASE("word matrix product") {
    const auto sys = fixtures::demo_system();
    CHECK(word_matrix_product(sys.transitions(), W("-"))
              .isApprox(Matrix::Identity(3, 3)));

    // product for "12" applies mode 1 first, mode 2 last
    Matrix expected(3, 3);
    expected << 0, 0, 1,
                0, 0, 2,
                0, 0, 1;
    CHECK(word_matrix_product(sys.transitions(), W("12")).isApprox(expected));

    // scalar family: every product collapses to a power
    const double alpha = 0.7;
    std::vector<Matrix> scaled{alpha * Matrix::Identity(2, 2),
                               alpha * Matrix::Identity(2, 2)};
    for (const ModeWord& w : enumerate_words(2, 4))
      CHECK(word_matrix_product(scaled, w).isApprox(
          std::pow(alpha, w.size()) * Matrix::Identity(2, 2)));

    CHECK_THROWS_AS(word_matrix_product(sys.transitions(), W("13")), ModeError);
  }

  TEST_CASE("product anti-homomorphism") {
    test::Rng rng(11);
    std::vector<Matrix> mats{test::random_matrix(rng, 3, 3),
                             test::random_matrix(rng, 3, 3)};
    const auto words = enumerate_words(2, 3);
    for (const ModeWord& u : words)
      for (const ModeWord& v : words)
        CHECK(word_matrix_product(mats, u + v)
                  .isApprox(word_matrix_product(mats, v) *
                                word_matrix_product(mats, u),
                            1e-12));
  }

  TEST_CASE("simulate_state") {
    const auto sys = fixtures::demo_system();
    const Vector x0 = sys.initial_state();
    CHECK(simulate_state(sys, x0, HybridWord()) == x0);

    Vector one_step = simulate_state(
        sys, x0, HybridWord::zero_inputs(W("1"), 1));
    Vector expected(3);
    expected << 1, 0, 0;
    CHECK(one_step.isApprox(expected));

    SwitchedLinearSystem zero({Matrix::Zero(2, 2)}, {Matrix::Zero(2, 1)},
                              {Matrix::Zero(1, 2)}, Vector::Zero(2));
    CHECK(simulate_state(zero, Vector::Zero(2),
                         HybridWord::zero_inputs(W("111"), 1))
              .isZero());

    CHECK_THROWS_AS(simulate_state(sys, Vector::Zero(2), HybridWord()),
                    DimensionError);
  }

  TEST_CASE("state semigroup property") {
    test::Rng rng(13);
    const auto sys = test::random_system(rng, 4, 2, 2, 1);
    for (int it = 0; it < 20; ++it) {
      const ModeWord m1 = word_at(1 + it % 14, 2);
      const ModeWord m2 = word_at(1 + (it * 7) % 14, 2);
      HybridWord w1(m1, [&] {
        std::vector<Vector> u;
        for (int i = 0; i < m1.size(); ++i) u.push_back(test::random_vector(rng, 2));
        return u;
      }());
      HybridWord w2(m2, [&] {
        std::vector<Vector> u;
        for (int i = 0; i < m2.size(); ++i) u.push_back(test::random_vector(rng, 2));
        return u;
      }());
      const Vector x = test::random_vector(rng, 4);
      CHECK(simulate_state(sys, x, w1 + w2)
                .isApprox(simulate_state(sys, simulate_state(sys, x, w1), w2),
                          1e-12));
    }
  }

  TEST_CASE("simulate_output basics") {
    const auto sys = fixtures::demo_system();
    const Vector x0 = sys.initial_state();
    CHECK(simulate_output(sys, x0, HybridWord::zero_inputs(W("11"), 1))(0) ==
          doctest::Approx(1.0));
    CHECK(simulate_output(sys, x0, HybridWord::zero_inputs(W("1"), 1))(0) ==
          doctest::Approx(0.0));
    CHECK(simulate_output(sys, Vector::Zero(3),
                          HybridWord::zero_inputs(W("212"), 1))
              .isZero());
    CHECK_THROWS(simulate_output(sys, x0, HybridWord()));

    const auto traj =
        simulate_trajectory(sys, x0, HybridWord::zero_inputs(W("11"), 1));
    REQUIRE(traj.size() == 2);
    CHECK(traj[1](0) == doctest::Approx(1.0));
  }

  TEST_CASE("output matches the explicit expansion") {
    test::Rng rng(17);
    for (int it = 0; it < 10; ++it) {
      const auto sys = test::random_system(rng, 3, 2, 2, 2);
      for (const ModeWord& v : enumerate_words(2, 8)) {
        if (v.empty() || it % 3) continue;  // thin out the long-word sweep
        std::vector<Vector> inputs;
        for (int i = 0; i < v.size(); ++i)
          inputs.push_back(test::random_vector(rng, 2));
        const HybridWord w(v, inputs);
        const Vector lhs = simulate_output(sys, sys.initial_state(), w);
        const Vector rhs = test::closed_form_output(sys, sys.initial_state(), w);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  TEST_CASE("output is affine in each input") {
    test::Rng rng(19);
    const auto sys = test::random_system(rng, 3, 2, 2, 1);
    const ModeWord v = W("2121");
    std::vector<Vector> base;
    for (int i = 0; i < 4; ++i) base.push_back(test::random_vector(rng, 2));
    const HybridWord w(v, base);
    for (int k = 0; k < 4; ++k) {
      Vector e = Vector::Zero(2);
      e(k % 2) = 1.0;
      const Vector y0 = simulate_output(sys, sys.initial_state(), w);
      const Vector y1 = simulate_output(sys, sys.initial_state(),
                                        w.with_input(k, base[k] + e));
      const Vector y2 = simulate_output(sys, sys.initial_state(),
                                        w.with_input(k, base[k] + 2.0 * e));
      CHECK((y2 - y0 - 2.0 * (y1 - y0)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("io_map wraps simulation") {
    const auto sys = fixtures::demo_system();
    const IoOracle f = io_map(sys);
    const HybridWord w = HybridWord::zero_inputs(W("21"), 1);
    CHECK(f(w).isApprox(simulate_output(sys, sys.initial_state(), w)));
    CHECK_THROWS(f(HybridWord()));
  }

  TEST_CASE("zero-dimensional system") {
    SwitchedLinearSystem empty({Matrix(0, 0)}, {Matrix(0, 1)}, {Matrix(1, 0)},
                               Vector(0));
    CHECK(empty.state_dim() == 0);
    CHECK(simulate_output(empty, Vector(0), HybridWord::zero_inputs(W("11"), 1))
              .isZero());
  }

  TEST_CASE("check_morphism") {
    const auto sys = fixtures::demo_system();
    const auto identity = check_morphism(sys, sys, Matrix::Identity(3, 3));
    CHECK(identity.ok);
    CHECK(identity.max_residual == doctest::Approx(0.0));

    test::Rng rng(23);
    const Matrix s = test::random_invertible(rng, 3);
    const auto conj = test::conjugate(sys, s);
    CHECK(check_morphism(sys, conj, s, 1e-9).ok);
    CHECK_FALSE(check_morphism(sys, conj, Matrix::Zero(3, 3), 1e-9).ok);

    CHECK_THROWS_AS(check_morphism(sys, conj, Matrix::Zero(2, 3)),
                    DimensionError);
  }
}

TEST_SUITE("numerics") {
  TEST_CASE("rank decisions") {
    CHECK(rank_decision(Matrix::Zero(4, 3), 1e-9).rank == 0);
    test::Rng rng(29);
    const Vector u = test::random_vector(rng, 5);
    const Vector v = test::random_vector(rng, 4);
    CHECK(rank_decision(u * v.transpose(), 1e-9).rank == 1);
    CHECK(rank_decision(Matrix::Identity(4, 4), 1e-9).rank == 4);
  }

  TEST_CASE("factorization residual bound") {
    test::Rng rng(31);
    for (int it = 0; it < 10; ++it) {
      const Matrix left = test::random_matrix(rng, 6, 3);
      const Matrix right = test::random_matrix(rng, 3, 7);
      const Matrix h = left * right;
      const RankFactorization fac = rank_factorize(h, 1e-9);
      CHECK(fac.rank == 3);
      const double sigma_max = fac.singular_values(0);
      const double bound = 10.0 * fac.rank *
                           std::numeric_limits<double>::epsilon() * sigma_max *
                           std::min(h.rows(), h.cols());
      CHECK((h - fac.left * fac.right).cwiseAbs().maxCoeff() <= bound);
    }
  }

  TEST_CASE("pseudoinverse") {
    CHECK(pseudoinverse(Matrix::Identity(3, 3), 1e-9)
              .isApprox(Matrix::Identity(3, 3)));
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    Matrix d_pinv = pseudoinverse(d, 1e-9);
    CHECK(d_pinv(0, 0) == doctest::Approx(0.5));
    CHECK(d_pinv(1, 1) == doctest::Approx(0.0));

    test::Rng rng(37);
    const Matrix m = test::random_matrix(rng, 6, 3);
    const Matrix mp = pseudoinverse(m, 1e-9);
    CHECK((mp * m).isApprox(Matrix::Identity(3, 3), 1e-10));
    // the four defining identities
    CHECK((m * mp * m).isApprox(m, 1e-10));
    CHECK((mp * m * mp).isApprox(mp, 1e-10));
    CHECK((m * mp).isApprox((m * mp).transpose(), 1e-10));
    CHECK((mp * m).isApprox((mp * m).transpose(), 1e-10));
  }

  TEST_CASE("bases and complements") {
    test::Rng rng(41);
    const Matrix m = test::random_matrix(rng, 5, 2);
    const Matrix img = image_basis(m, 1e-9);
    CHECK(img.cols() == 2);
    CHECK((img.transpose() * img).isApprox(Matrix::Identity(2, 2), 1e-12));

    Matrix wide(2, 4);
    wide << 1, 0, 1, 0,
            0, 1, 0, 1;
    const Matrix ker = kernel_basis(wide, 1e-9);
    CHECK(ker.cols() == 2);
    CHECK((wide * ker).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(orth_complement(Matrix::Identity(3, 3), 1e-9).cols() == 0);
    CHECK(orth_complement(Matrix(3, 0), 1e-9).cols() == 3);
  }

  TEST_CASE("intersection and principal angles") {
    test::Rng rng(43);
    const Matrix v = image_basis(test::random_matrix(rng, 5, 3), 1e-9);
    const Matrix self = intersect_subspaces(v, v, 1e-9);
    CHECK(self.cols() == 3);
    CHECK(principal_angles(self, v, 1e-9).maxCoeff() < 1e-9);
    CHECK(same_subspace(self, v, 1e-9, 1e-9));

    // two planes in R^3 that share exactly one line
    Matrix p1(3, 2), p2(3, 2);
    p1 << 1, 0, 0, 1, 0, 0;
    p2 << 1, 0, 0, 0, 0, 1;
    const Matrix line = intersect_subspaces(p1, p2, 1e-9);
    REQUIRE(line.cols() == 1);
    CHECK(std::abs(line(0, 0)) == doctest::Approx(1.0));
    CHECK_FALSE(same_subspace(p1, p2, 1e-9, 1e-9));
  }

  TEST_CASE("observability kernel of the demo system is trivial") {
    CHECK(kernel_basis(obs_matrix(fixtures::demo_system()), 1e-9).cols() == 0);
  }
}
