#include <catch2/catch_amalgamated.hpp>

#include "tanaka/matq.hpp"
#include "tanaka/rng.hpp"
#include "tanaka/subspace.hpp"

using namespace tanaka;

namespace {

// Independent rank oracle: exhaustive search for the largest nonvanishing minor.
Rational minor_det(const MatQ& m, const std::vector<std::size_t>& ri,
                   const std::vector<std::size_t>& ci) {
  MatQ sub(ri.size(), ci.size());
  for (std::size_t a = 0; a < ri.size(); ++a)
    for (std::size_t b = 0; b < ci.size(); ++b) sub(a, b) = m(ri[a], ci[b]);
  return det(sub);
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      cur[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

std::size_t rank_by_minors(const MatQ& m) {
  const std::size_t maxr = std::min(m.rows(), m.cols());
  for (std::size_t k = maxr; k >= 1; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    for (const auto& ri : rs)
      for (const auto& ci : cs)
        if (!minor_det(m, ri, ci).is_zero()) return k;
  }
  return 0;
}

MatQ random_matq(RatSampler& s, std::size_t rows, std::size_t cols) {
  MatQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.rational();
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[exactla]") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational("22/7") == Rational(22, 7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  // Recomputing a sum along two different parenthesizations agrees exactly.
  RatSampler s(7);
  for (int t = 0; t < 50; ++t) {
    Rational a = s.rational(), b = s.rational(), c = s.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("rref on identity and zero matrices", "[exactla]") {
  const RrefResult id = rref(MatQ::identity(3));
  CHECK(id.r == MatQ::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.rank == 3);

  const RrefResult z = rref(MatQ(3, 3));
  CHECK(z.r == MatQ(3, 3));
  CHECK(z.pivots.empty());
  CHECK(z.rank == 0);
}

TEST_CASE("rref rank agrees with exhaustive minor oracle", "[exactla]") {
  RatSampler s(20240);
  for (int t = 0; t < 8; ++t) {
    MatQ m = random_matq(s, 4, 6);
    if (t % 2 == 0) {  // plant a dependency to vary the rank
      for (std::size_t j = 0; j < 6; ++j) m(3, j) = m(0, j) + m(1, j);
    }
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("rref is idempotent", "[exactla]") {
  RatSampler s(99);
  for (int t = 0; t < 6; ++t) {
    const MatQ m = random_matq(s, 3, 5);
    const MatQ r1 = rref(m).r;
    CHECK(rref(r1).r == r1);
  }
}

TEST_CASE("kernel basics and rank-nullity", "[exactla]") {
  CHECK(kernel(MatQ::identity(4)).cols() == 0);
  CHECK(kernel(MatQ(2, 5)).cols() == 5);

  RatSampler s(5);
  for (int t = 0; t < 6; ++t) {
    const MatQ m = random_matq(s, 3, 7);
    const MatQ k = kernel(m);
    CHECK(k.cols() + rank(m) == 7);
    const MatQ prod = m * k;
    CHECK(prod.is_zero());
  }
}

TEST_CASE("subspace canonical form is representation independent", "[exactla]") {
  // Same plane from two different spanning sets.
  const Subspace a = Subspace::span_vectors(
      3, {{Rational(1), Rational(0), Rational(1)},
          {Rational(0), Rational(1), Rational(1)}});
  const Subspace b = Subspace::span_vectors(
      3, {{Rational(1), Rational(1), Rational(2)},
          {Rational(2), Rational(-1), Rational(1)},
          {Rational(3), Rational(0), Rational(3)}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
}

TEST_CASE("subspace sum and intersection", "[exactla]") {
  const Subspace a = Subspace::span_vectors(
      4, {{Rational(1), Rational(0), Rational(0), Rational(0)},
          {Rational(0), Rational(1), Rational(0), Rational(0)}});
  SECTION("a with itself") {
    CHECK(a.sum(a) == a);
    CHECK(a.intersection(a) == a);
  }
  SECTION("complementary coordinate subspaces") {
    const Subspace b = Subspace::span_vectors(
        4, {{Rational(0), Rational(0), Rational(1), Rational(0)},
            {Rational(0), Rational(0), Rational(0), Rational(1)}});
    CHECK(a.sum(b) == Subspace::full(4));
    CHECK(a.intersection(b).dim() == 0);
  }
  SECTION("dimension formula") {
    RatSampler s(17);
    for (int t = 0; t < 5; ++t) {
      const Subspace u = Subspace::span_columns(random_matq(s, 5, 3));
      const Subspace v = Subspace::span_columns(random_matq(s, 5, 2));
      CHECK(u.dim() + v.dim() == u.sum(v).dim() + u.intersection(v).dim());
      CHECK(u.sum(v).contains(u));
      CHECK(u.contains(u.intersection(v)));
    }
  }
}

namespace {
MatQ standard_symplectic(std::size_t half) {
  MatQ f(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    f(i, half + i) = Rational(1);
    f(half + i, i) = Rational(-1);
  }
  return f;
}
}  // namespace

TEST_CASE("skew complement for a nondegenerate form", "[exactla]") {
  const MatQ form = standard_symplectic(3);
  RatSampler s(42);
  for (int t = 0; t < 6; ++t) {
    MatQ cols = random_matq(s, 6, 2);
    Subspace a = Subspace::span_columns(cols);
    if (a.dim() != 2) continue;
    const Subspace c = a.skew_complement(form);
    CHECK(c.dim() == 4);
    // Double complement recovers the original subspace; checked by direct solve.
    CHECK(c.skew_complement(form) == a);
    CHECK(a.dim() + c.dim() == 6);
  }
}

TEST_CASE("skew complement rejects non-skew forms", "[exactla]") {
  const Subspace a = Subspace::full(2);
  CHECK_THROWS_AS(a.skew_complement(MatQ::identity(2)), std::invalid_argument);
}

TEST_CASE("degenerate form: kernel of the form lies in every complement", "[exactla]") {
  // Rank-2 skew form on Q^4: kernel is span(e3, e4).
  MatQ form(4, 4);
  form(0, 1) = Rational(1);
  form(1, 0) = Rational(-1);
  const Subspace ker = Subspace::span_columns(kernel(form));
  CHECK(ker.dim() == 2);
  RatSampler s(3);
  for (int t = 0; t < 5; ++t) {
    const Subspace a = Subspace::span_columns(random_matq(s, 4, 2));
    CHECK(a.skew_complement(form).contains(ker));
  }
}
