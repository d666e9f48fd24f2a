#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symcover/symmetric_basis.hpp"

using namespace symcover;

namespace {

std::vector<GF2Vector> vecs(int dim, std::initializer_list<std::uint64_t> ws) {
  std::vector<GF2Vector> out;
  for (auto w : ws) out.emplace_back(dim, w);
  return out;
}

// Gram data of a symmetric basis: Q = 0 on the basis, B = 1 off the diagonal.
QuadraticForm all_ones_form(int dim) {
  std::vector<std::uint64_t> upper(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) upper[static_cast<std::size_t>(i)] = low_mask(dim) & ~low_mask(i + 1);
  return QuadraticForm(dim, 0, upper);
}

// W's form on the low bits, then three hyperbolic pairs.
QuadraticForm with_three_pairs(const QuadraticForm& w) {
  const int dim = w.dim() + 6;
  std::vector<std::uint64_t> upper(w.upper().begin(), w.upper().end());
  upper.resize(static_cast<std::size_t>(dim), 0);
  for (int k = w.dim(); k < dim; k += 2) upper[static_cast<std::size_t>(k)] = std::uint64_t{1} << (k + 1);
  return QuadraticForm(dim, w.diag(), upper);
}

std::array<HyperbolicPair, 3> fresh_pairs(int wdim) {
  const int dim = wdim + 6;
  std::array<HyperbolicPair, 3> p;
  for (int k = 0; k < 3; ++k) {
    p[static_cast<std::size_t>(k)] = {GF2Vector::unit(dim, wdim + 2 * k), GF2Vector::unit(dim, wdim + 2 * k + 1)};
  }
  return p;
}

std::vector<GF2Vector> widen(const std::vector<GF2Vector>& vs, int dim) {
  std::vector<GF2Vector> out;
  for (const auto& v : vs) out.emplace_back(dim, v.bits());
  return out;
}

}  // namespace

TEST_SUITE("symmetric_basis") {

TEST_CASE("recognizing symmetric bases") {
  const auto h1 = standard_form(1, FormType::Hyperbolic);
  CHECK(is_symmetric_basis(h1, vecs(2, {0b01, 0b10})));
  CHECK_FALSE(is_symmetric_basis(h1, vecs(2, {0b01, 0b01})));
  const auto e2 = standard_form(2, FormType::Elliptic);
  // e1, f1, x + e1 + f1, y + e1 + f1
  CHECK(is_symmetric_basis(e2, vecs(4, {0b0001, 0b0010, 0b0111, 0b1011})));
  CHECK_FALSE(is_symmetric_basis(e2, vecs(4, {0b0001, 0b0010, 0b0100, 0b1000})));
  CHECK_THROWS_AS(is_symmetric_basis(e2, vecs(4, {1, 2, 7})), std::invalid_argument);
  CHECK_THROWS_AS(is_symmetric_basis(e2, vecs(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("weight parity table") {
  const bool expected[] = {false, false, true, true, false, false, true, true, false};
  for (unsigned t = 0; t < 9; ++t) CHECK(weight_parity_q(t) == expected[t]);
}

TEST_CASE("existence criterion and induced type") {
  CHECK(exists_symmetric_basis(1, FormType::Hyperbolic));
  CHECK_FALSE(exists_symmetric_basis(1, FormType::Elliptic));
  CHECK(exists_symmetric_basis(2, FormType::Elliptic));
  CHECK_FALSE(exists_symmetric_basis(2, FormType::Hyperbolic));
  CHECK(induced_type_of_symmetric_space(1) == FormType::Hyperbolic);
  CHECK(induced_type_of_symmetric_space(2) == FormType::Elliptic);
  CHECK(induced_type_of_symmetric_space(3) == FormType::Elliptic);
  CHECK(induced_type_of_symmetric_space(5) == FormType::Hyperbolic);
  CHECK_THROWS_AS(induced_type_of_symmetric_space(0), std::invalid_argument);
  for (int r = 1; r <= 32; ++r) {
    for (auto t : {FormType::Hyperbolic, FormType::Elliptic}) {
      CHECK(exists_symmetric_basis(r, t) == (t == induced_type_of_symmetric_space(r)));
    }
  }
}

TEST_CASE("base cases of the construction") {
  const auto b2 = construct_symmetric_basis(2, FormType::Elliptic);
  REQUIRE(b2);
  CHECK(b2->vectors == vecs(4, {0b0001, 0b0010, 0b0111, 0b1011}));
  const auto b3 = construct_symmetric_basis(3, FormType::Elliptic);
  REQUIRE(b3);
  REQUIRE(b3->vectors.size() == 6);
  GF2Vector c5 = GF2Vector::unit(6, 2);  // e_2
  for (int i = 0; i < 4; ++i) c5 += b3->vectors[static_cast<std::size_t>(i)];
  CHECK(b3->vectors[4] == c5);
  CHECK_FALSE(construct_symmetric_basis(1, FormType::Elliptic));
  CHECK_FALSE(construct_symmetric_basis(4, FormType::Elliptic));
  CHECK_THROWS_AS(construct_symmetric_basis(0, FormType::Hyperbolic), std::invalid_argument);
  CHECK_THROWS_AS(construct_symmetric_basis(33, FormType::Hyperbolic), std::invalid_argument);
}

TEST_CASE("constructed bases for every admissible rank") {
  for (int r = 1; r <= 32; ++r) {
    const FormType t = induced_type_of_symmetric_space(r);
    const auto b = construct_symmetric_basis(r, t);
    REQUIRE(b);
    CHECK(b->form == standard_form(r, t));
    CHECK(b->vectors.size() == static_cast<std::size_t>(2 * r));
    CHECK(is_symmetric_basis(b->form, b->vectors));
    CHECK(classify(b->form) == induced_type_of_symmetric_space(r));
    // checked again with the oracle evaluator
    for (std::size_t i = 0; i < b->vectors.size(); ++i) {
      CHECK_FALSE(oracle::q_value(b->form, b->vectors[i].bits()));
      for (std::size_t j = i + 1; j < b->vectors.size(); ++j) {
        if (!oracle::b_value(b->form, b->vectors[i].bits(), b->vectors[j].bits())) FAIL("B = 0 in basis");
      }
    }
  }
}

TEST_CASE("sums of t basis vectors have Q determined by t mod 4") {
  for (int r = 1; r <= 4; ++r) {
    const auto b = construct_symmetric_basis(r, induced_type_of_symmetric_space(r));
    REQUIRE(b);
    const int n = 2 * r;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      std::uint64_t sum = 0;
      for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1) sum ^= b->vectors[static_cast<std::size_t>(i)].bits();
      }
      if (oracle::q_value(b->form, sum) != weight_parity_q(static_cast<unsigned>(std::popcount(s)))) {
        FAIL("subset sum breaks the parity rule");
      }
    }
  }
}

TEST_CASE("any two symmetric bases carry the same Gram data") {
  for (int r = 1; r <= 4; ++r) {
    const FormType t = induced_type_of_symmetric_space(r);
    const auto c = construct_symmetric_basis(r, t);
    const auto d = brute_force_symmetric_basis(standard_form(r, t));
    REQUIRE(c);
    REQUIRE(d);
    const auto ones = all_ones_form(2 * r);
    CHECK(is_isometry(ones, c->form, c->vectors));
    CHECK(is_isometry(ones, d->form, d->vectors));
    CHECK(classify(ones) == t);
  }
}

TEST_CASE("brute force agrees with the clique oracle") {
  for (int r = 1; r <= 3; ++r) {
    for (auto t : {FormType::Hyperbolic, FormType::Elliptic}) {
      const auto f = standard_form(r, t);
      const auto b = brute_force_symmetric_basis(f);
      CHECK(b.has_value() == oracle::symmetric_family_exists(f));
      CHECK(b.has_value() == exists_symmetric_basis(r, t));
      if (b) CHECK(is_symmetric_basis(f, b->vectors));
    }
  }
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    const auto f = oracle::random_nondegenerate_form(2 * (1 + k % 3), rng);
    CHECK(brute_force_symmetric_basis(f).has_value() == oracle::symmetric_family_exists(f));
  }
  CHECK_THROWS_AS(brute_force_symmetric_basis(standard_form(5, FormType::Hyperbolic)), std::invalid_argument);
}

TEST_CASE("brute force result is lexicographically first and thread independent") {
  const auto f = standard_form(2, FormType::Elliptic);
  const auto one = brute_force_symmetric_basis(f, 1);
  REQUIRE(one);
  for (int th : {2, 3, 8}) {
    const auto many = brute_force_symmetric_basis(f, th);
    REQUIRE(many);
    CHECK(many->vectors == one->vectors);
  }
  for (std::size_t i = 1; i < one->vectors.size(); ++i) CHECK(one->vectors[i - 1].bits() < one->vectors[i].bits());
  // the first singular vector is e_1, and the search keeps it
  CHECK(one->vectors.front().bits() == 1);
  const auto h4 = standard_form(4, FormType::Hyperbolic);
  CHECK(brute_force_symmetric_basis(h4, 1)->vectors == brute_force_symmetric_basis(h4, 4)->vectors);
}

TEST_CASE("extension by three hyperbolic pairs") {
  const auto w = construct_symmetric_basis(3, FormType::Elliptic);
  REQUIRE(w);
  const auto big = with_three_pairs(w->form);
  const auto out = extend_by_three_pairs(big, widen(w->vectors, 12), fresh_pairs(6));
  REQUIRE(out.size() == 12);
  CHECK(is_symmetric_basis(big, out));
  int pairs = 0;
  for (std::size_t i = 6; i < 12; ++i) {
    for (std::size_t j = i + 1; j < 12; ++j) {
      CHECK(eval_b(big, out[i], out[j]));
      ++pairs;
    }
  }
  CHECK(pairs == 15);
  CHECK(classify(big) == FormType::Elliptic);
}

TEST_CASE("extension rejects W with Q(sum) = 0") {
  const auto w2 = construct_symmetric_basis(2, FormType::Elliptic);
  REQUIRE(w2);
  const auto f2 = with_three_pairs(w2->form);
  CHECK_THROWS_WITH_AS(extend_by_three_pairs(f2, widen(w2->vectors, 10), fresh_pairs(4)),
                       doctest::Contains("Q(sum of W) = 0"), std::invalid_argument);
  const auto w4 = construct_symmetric_basis(4, FormType::Hyperbolic);
  REQUIRE(w4);
  const auto f4 = with_three_pairs(w4->form);
  CHECK_THROWS_AS(extend_by_three_pairs(f4, widen(w4->vectors, 14), fresh_pairs(8)), std::invalid_argument);
}

TEST_CASE("extension names every broken pair condition") {
  const auto w = construct_symmetric_basis(3, FormType::Elliptic);
  const auto big = with_three_pairs(w->form);
  auto pairs = fresh_pairs(6);
  pairs[1].first = pairs[0].first;  // {c,d} now meets {a,b}
  try {
    extend_by_three_pairs(big, widen(w->vectors, 12), pairs);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("{a,b} and {c,d} are not orthogonal") != std::string::npos);
  }
  auto bad = fresh_pairs(6);
  bad[2].second = bad[2].second + GF2Vector::unit(12, 0);  // touches W
  CHECK_THROWS_WITH_AS(extend_by_three_pairs(big, widen(w->vectors, 12), bad),
                       doctest::Contains("{g,h} is not orthogonal to W"), std::invalid_argument);
}

TEST_CASE("json and table output") {
  const auto b = construct_symmetric_basis(2, FormType::Elliptic);
  const auto j = to_json(*b);
  CHECK(j["basis"] == nlohmann::json{"1", "2", "7", "b"});
  CHECK(form_from_json(j["form"]) == b->form);
  const std::string table = render_table(*b);
  CHECK(table.find("1110") != std::string::npos);
  CHECK(table.find("0111") != std::string::npos);
}

}
