#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "threshspec/errors.hpp"
#include "threshspec/spectral.hpp"

using namespace threshspec;
using threshspec::testing::connected_strings;
using threshspec::testing::gamma_by_subsets;
using threshspec::testing::laplace_determinant;
using threshspec::testing::poly;
using threshspec::testing::random_connected;
using threshspec::testing::random_sequence;

namespace {

using Blocks = std::vector<std::uint64_t>;

BlockSequence blocks(Blocks b) { return BlockSequence::from_blocks(std::move(b)); }

Blocks blocks_of(const BlockSequence& s) { return {s.blocks().begin(), s.blocks().end()}; }

// Every block vector with `n` entries in [1, max_block].
std::vector<Blocks> all_block_vectors(std::size_t n, std::uint64_t max_block) {
  std::vector<Blocks> out;
  Blocks cur(n, 1);
  while (true) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < n && cur[k] == max_block) cur[k++] = 1;
    if (k == n) break;
    ++cur[k];
  }
  return out;
}

IntPolynomial x_minus_divisor_det(const BlockSequence& seq) {
  const auto d = divisor_matrix(seq);
  SquareMatrix<IntPolynomial> m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      m(i, j) = i == j ? IntPolynomial({-d(i, j), Integer(1)}) : IntPolynomial::constant(-d(i, j));
  return bareiss_determinant(m);
}

}  // namespace

TEST_SUITE("gamma") {
  TEST_CASE("reference index sets") {
    CHECK(index_sequences(7, 4) ==
          std::vector<IndexSequence>{{2, 3, 4, 5}, {2, 3, 4, 7}, {2, 3, 6, 7}, {2, 5, 6, 7}, {4, 5, 6, 7}});
    CHECK(index_sequences(6, 4) ==
          std::vector<IndexSequence>{{1, 2, 3, 4}, {1, 2, 3, 6}, {1, 2, 5, 6}, {1, 4, 5, 6}, {3, 4, 5, 6}});
    CHECK(index_sequences(4, 0) == std::vector<IndexSequence>{{}});
    CHECK(index_sequences(3, 3) == std::vector<IndexSequence>{{1, 2, 3}});
  }

  TEST_CASE("small tables") {
    const auto g = gamma_table(blocks({1, 1, 1, 1, 1, 1}));
    std::vector<Integer> expected{1, 3, 6, 4, 5, 1, 1};
    CHECK(std::vector<Integer>(g.values().begin(), g.values().end()) == expected);
    CHECK(g[7] == 0);
    // gamma_2 = (1, a_2, a_1 a_2)
    const auto g2 = gamma_table(blocks({3, 5}));
    CHECK(g2[1] == 5);
    CHECK(g2[2] == 15);
    // gamma_3(1) = a_1 + a_3, gamma_3(2) = a_2 a_3
    const auto g3 = gamma_table(blocks({2, 3, 7}));
    CHECK(g3[1] == 9);
    CHECK(g3[2] == 21);
    CHECK(g3[3] == 42);
    CHECK_THROWS_AS(gamma_bruteforce(blocks({1, 1}), 3), InvalidArgument);
  }

  TEST_CASE("recurrence, enumeration and subset scan agree (n <= 7, a_i <= 3)") {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& b : all_block_vectors(n, 3)) {
        const auto seq = blocks(b);
        const auto table = gamma_table(seq);
        for (std::size_t l = 0; l <= n; ++l) {
          REQUIRE(table[l] == gamma_bruteforce(seq, l));
          REQUIRE(table[l] == gamma_by_subsets(b, l));
        }
      }
    }
  }

  TEST_CASE("prefix tables") {
    const auto seq = blocks({2, 1, 4, 3, 1});
    const auto ints = to_integers(seq);
    const auto tables = prefix_gamma_tables(ints);
    REQUIRE(tables.size() == 6);
    CHECK(tables[0] == GammaTable(0, {1}));
    for (std::size_t k = 1; k <= 5; ++k) CHECK(tables[k] == gamma_table(seq.prefix(k)));
  }
}

TEST_SUITE("spectral") {
  TEST_CASE("divisor and tridiagonal matrices for n = 2") {
    const auto seq = blocks({3, 5});
    const auto d = divisor_matrix(seq);
    CHECK(d(0, 0) == 0);
    CHECK(d(0, 1) == 5);
    CHECK(d(1, 0) == 3);
    CHECK(d(1, 1) == 4);
    const auto m = tridiagonal_matrix(seq);
    CHECK(m(0, 0) == poly({3, 1}));
    CHECK(m(0, 1) == poly({-1, -1}));
    CHECK(m(1, 0) == poly({0, 1}));
    CHECK(m(1, 1) == poly({-5}));
    // x y - a_2 x - a_1 a_2
    CHECK(q_recursive(seq) == poly({-15, 1 - 5, 1}));
    CHECK(tridiagonal_determinant(m) == q_recursive(seq));
    CHECK_THROWS_AS(divisor_matrix(blocks({1, 2, 3})), InvalidArgument);
    CHECK_THROWS_AS(tridiagonal_matrix(blocks({1, 2, 3})), InvalidArgument);
  }

  TEST_CASE("divisor matrix is the block quotient of the adjacency") {
    for (int trial = 0; trial < 30; ++trial) {
      const auto seq = random_connected(8, 4);
      const auto a = adjacency_matrix(seq);
      const auto d = divisor_matrix(seq);
      std::vector<std::size_t> start{0};
      for (auto b : seq.blocks()) start.push_back(start.back() + b);
      for (std::size_t i = 0; i < seq.block_count(); ++i) {
        for (std::size_t j = 0; j < seq.block_count(); ++j) {
          // Every vertex of block i has the same count; check the first.
          std::size_t count = 0;
          for (std::size_t v = start[j]; v < start[j + 1]; ++v) count += a.adjacent(start[i], v);
          REQUIRE(d(i, j) == Integer(static_cast<unsigned long>(count)));
        }
      }
    }
  }

  TEST_CASE("Q_3 matches its expansion") {
    const Integer a1 = 2, a2 = 3, a3 = 7;
    // x^2 y + x y (a1 + a3) - a2 a3 x - a1 a2 a3
    const auto x = IntPolynomial::x();
    const auto y = IntPolynomial::linear(1);
    const auto expected = x * x * y + x * y * (a1 + a3) - x * Integer(a2 * a3) - IntPolynomial::constant(a1 * a2 * a3);
    CHECK(q_recursive(blocks({2, 3, 7})) == expected);
    CHECK(p_closed_form(blocks({2, 3, 7})) == expected);
  }

  TEST_CASE("det of the tridiagonal form and of xI - D equal Q_n (n <= 6, a_i <= 2)") {
    for (std::size_t n = 2; n <= 6; n += 2) {
      for (const auto& b : all_block_vectors(n, 2)) {
        const auto seq = blocks(b);
        const auto q = q_recursive(seq);
        const auto m = tridiagonal_matrix(seq);
        REQUIRE(tridiagonal_determinant(m) == q);
        REQUIRE(bareiss_determinant(m) == q);
        REQUIRE(x_minus_divisor_det(seq) == q);
        if (n <= 4) REQUIRE(laplace_determinant(m) == q);
      }
    }
  }

  TEST_CASE("Bareiss integer determinant agrees with cofactor expansion") {
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
      SquareMatrix<Integer> m(1 + trial % 6);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = dist(threshspec::testing::rng());
      if (trial % 7 == 0)
        for (std::size_t j = 0; j < m.size(); ++j) m(0, j) = 0;
      REQUIRE(bareiss_determinant(m) == laplace_determinant(m));
    }
  }

  TEST_CASE("closed form equals recursion on random sequences") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto seq = random_sequence(1 + trial % 14, 9);
      REQUIRE(p_closed_form(seq) == q_recursive(seq));
      REQUIRE(q_recursive(seq).degree() == static_cast<long>(seq.block_count()));
      REQUIRE(q_recursive(seq).leading() == 1);
    }
  }

  TEST_CASE("multiplicities") {
    CHECK(multiplicities(blocks({2, 3, 3, 2})) == Multiplicities{3, 3});
    CHECK(multiplicities(blocks({1, 2})) == Multiplicities{0, 2});
    CHECK(multiplicities(blocks({3, 1})) == Multiplicities{2, 0});
    CHECK(multiplicities(blocks({1, 1, 1, 1, 1, 1})) == Multiplicities{0, 1});
    CHECK(multiplicities(blocks({1})) == Multiplicities{1, 0});
  }

  TEST_CASE("golden characteristic polynomials") {
    CHECK(char_poly(blocks({2, 3, 3, 2})) == poly({0, 0, 0, 36, 110, 94, -21, -66, -26, 0, 1}));
    CHECK(char_poly(blocks({1, 2})) == poly({2, 3, 0, -1}));
    CHECK(char_poly(blocks({3, 1})) == poly({0, 0, -3, 0, 1}));
    CHECK(char_poly(blocks({1, 1, 1, 1, 1, 1})) == poly({-1, 4, 3, -10, -9, 0, 1}));
    CHECK(char_poly(blocks({2, 1, 1, 3})) == poly({0, -6, -4, 24, 38, 17, 0, -1}));
    CHECK(char_poly(blocks({1, 3, 2, 1, 1, 2})) == poly({0, -12, -18, 60, 161, 100, -51, -84, -29, 0, 1}));
    CHECK(char_poly(blocks({1})) == poly({0, -1}));
  }

  TEST_CASE("disconnected sequences pick up (-x)^k") {
    CHECK(char_poly(blocks({2})) == poly({0, 0, 1}));
    CHECK(char_poly(blocks({1, 2, 3})) == poly({2, 3, 0, -1}) * poly({0, 0, 0, -1}));
    for (int trial = 0; trial < 20; ++trial) {
      const auto seq = random_sequence(3 + 2 * (trial % 3), 3);
      REQUIRE(char_poly(seq) == brute_charpoly(adjacency_matrix(seq)));
    }
  }

  TEST_CASE("char_poly equals the brute-force oracle for all connected N <= 9") {
    for (std::size_t order = 2; order <= 9; ++order)
      for (const auto& s : connected_strings(order)) {
        const auto seq = parse_binary(s);
        REQUIRE(char_poly(seq) == brute_charpoly(adjacency_matrix(seq)));
      }
  }

  TEST_CASE("char_poly equals the brute-force oracle on random sequences up to N = 40") {
    std::uniform_int_distribution<std::size_t> half(1, 10);
    std::size_t checked = 0;
    while (checked < 1000) {
      auto seq = random_sequence(2 * half(threshspec::testing::rng()), 4);
      if (seq.order() > 40) continue;
      REQUIRE(char_poly(seq) == brute_charpoly(adjacency_matrix(seq)));
      ++checked;
    }
  }

  TEST_CASE("coefficient bookkeeping") {
    for (int trial = 0; trial < 50; ++trial) {
      const auto seq = random_connected(10, 5);
      const auto p = char_poly(seq);
      const auto n = seq.order();
      const auto counts = vertex_edge_counts(seq);
      const Integer sign = n % 2 == 0 ? 1 : -1;
      REQUIRE(p.degree() == static_cast<long>(n));
      REQUIRE(p.leading() == sign);
      // trace zero, and the x^(N-2) coefficient is -E times the leading sign
      REQUIRE(p.coefficient(n - 1) == 0);
      REQUIRE(p.coefficient(n - 2) == -sign * Integer(static_cast<unsigned long>(counts.edges)));
      const auto m = multiplicities(seq);
      REQUIRE(root_multiplicity(p, 0) == m.zero);
      REQUIRE(root_multiplicity(p, -1) == m.minus_one);
    }
  }

  TEST_CASE("determinant") {
    CHECK(determinant(blocks({1, 2})) == 2);
    CHECK(determinant(blocks({1, 1, 1, 1, 1, 1})) == -1);
    CHECK(determinant(blocks({2, 3, 3, 2})) == 0);
    CHECK(determinant(blocks({1})) == 0);
    CHECK(determinant(blocks({1, 1})) == -1);
    CHECK(determinant_closed_form(blocks({1, 2})) == 2);
    CHECK(determinant_closed_form(blocks({1, 1, 1, 1, 1, 1})) == -1);
    CHECK(determinant_closed_form(blocks({2, 1})) == 0);
    for (int trial = 0; trial < 50; ++trial) {
      auto b = blocks_of(random_connected(10, 4));
      for (std::size_t i = 0; i < b.size(); i += 2) b[i] = 1;
      const auto seq = blocks(b);
      REQUIRE(determinant(seq) == determinant_closed_form(seq));
      REQUIRE(determinant(seq) == bareiss_determinant([&] {
                const auto a = adjacency_matrix(seq);
                SquareMatrix<Integer> m(a.order());
                for (std::size_t i = 0; i < a.order(); ++i)
                  for (std::size_t j = 0; j < a.order(); ++j) m(i, j) = a.adjacent(i, j) ? 1 : 0;
                return m;
              }()));
    }
  }

  TEST_CASE("spectrum of the star K_{1,3}") {
    const auto report = spectrum(blocks({3, 1}), 12);
    REQUIRE(report.eigenvalues.size() == 3);
    CHECK(report.eigenvalues[0].decimal == "-1.732050807569");
    CHECK(report.eigenvalues[1].decimal == "0.000000000000");
    CHECK(report.eigenvalues[1].multiplicity == 2);
    CHECK(report.eigenvalues[1].exact);
    CHECK(report.eigenvalues[2].decimal == "1.732050807569");
    CHECK(report.total_multiplicity() == 4);
  }

  TEST_CASE("spectrum of K_3") {
    const auto report = spectrum(parse_binary("011"), 6);
    REQUIRE(report.eigenvalues.size() == 2);
    CHECK(report.eigenvalues[0].value == -1);
    CHECK(report.eigenvalues[0].multiplicity == 2);
    CHECK(report.eigenvalues[1].value == 2);
    CHECK(report.eigenvalues[1].decimal == "2.000000");
  }

  TEST_CASE("spectrum trace identities") {
    for (int trial = 0; trial < 30; ++trial) {
      const auto seq = random_connected(10, 6);
      const auto report = spectrum(seq, 12);
      const auto counts = vertex_edge_counts(seq);
      REQUIRE(report.total_multiplicity() == seq.order());
      REQUIRE(std::abs(report.eigenvalue_sum().get_d()) < 1e-9);
      REQUIRE(std::abs(report.eigenvalue_square_sum().get_d() - 2.0 * static_cast<double>(counts.edges)) < 1e-6);
      REQUIRE(report.multiplicities == multiplicities(seq));
    }
  }
}
