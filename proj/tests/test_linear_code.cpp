#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rmcsst/errors.hpp"
#include "rmcsst/linear_code.hpp"
#include "rmcsst/reed_muller.hpp"

using namespace rmcsst;

namespace {

LinearCode repetition(std::size_t n) {
  BitMatrix g(1, n);
  for (std::size_t i = 0; i < n; ++i) g.set(0, i, true);
  return LinearCode(g);
}

LinearCode even_weight(std::size_t n) { return dual(repetition(n)); }

LinearCode full_space(std::size_t n) { return LinearCode(BitMatrix::identity(n)); }

}  // namespace

TEST_CASE("SupportSet") {
  const SupportSet s({4, 1, 2});
  CHECK(s.indices() == std::vector<std::size_t>{1, 2, 4});
  CHECK(s.complement(6).indices() == std::vector<std::size_t>{0, 3, 5});
  CHECK(SupportSet::support_of(BitVector::from_string("0101")).indices() == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(SupportSet({1, 1}), std::invalid_argument);
}

TEST_CASE("LinearCode construction and membership") {
  const LinearCode c(BitMatrix::from_strings({"1100", "0110", "1010"}));
  CHECK(c.length() == 4);
  CHECK(c.dim() == 2);
  CHECK(c.contains(BitVector::from_string("1100")));
  CHECK(c.contains(BitVector::from_string("1010")));
  CHECK_FALSE(c.contains(BitVector::from_string("1000")));
  CHECK(LinearCode::zero(5).dim() == 0);
  CHECK_THROWS_AS(c.contains(BitVector::from_string("110")), std::invalid_argument);
}

TEST_CASE("dual of the repetition code is the even-weight code") {
  const LinearCode d = dual(repetition(4));
  CHECK(d.dim() == 3);
  CHECK(oracles::codeword_set(d) ==
        std::set<std::string>{"0000", "1100", "1010", "1001", "0110", "0101", "0011", "1111"});
}

TEST_CASE("dual is an involution") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearCode c = oracles::random_code(rng, 10);
    CHECK(dual(dual(c)) == c);
    CHECK(dual(c).dim() == c.length() - c.dim());
  }
}

TEST_CASE("puncture examples") {
  const LinearCode rep3 = repetition(3);
  CHECK(oracles::codeword_set(puncture(rep3, SupportSet({2}))) == std::set<std::string>{"00", "11"});
  CHECK(oracles::codeword_set(puncture(rep3, SupportSet({1, 2}))) == std::set<std::string>{"0", "1"});
  CHECK_THROWS_AS(puncture(rep3, SupportSet({0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(puncture(rep3, SupportSet({3})), std::invalid_argument);
}

TEST_CASE("punctured RM(1,3) is a [7,4,3] code") {
  const LinearCode c = puncture(rm_code(1, 3).code, SupportSet({0}));
  CHECK(c.length() == 7);
  CHECK(c.dim() == 4);
  CHECK(*min_distance(c) == 3);
  CHECK(*oracles::naive_min_distance(c) == 3);
}

TEST_CASE("shorten examples") {
  CHECK(oracles::codeword_set(shorten(repetition(3), SupportSet({2}))) == std::set<std::string>{"00"});
  const LinearCode s = shorten(even_weight(4), SupportSet({3}));
  CHECK(oracles::codeword_set(s) == std::set<std::string>{"000", "110", "101", "011"});
  CHECK_THROWS_AS(shorten(repetition(3), SupportSet({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("shorten/puncture duality on random codes") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 12);
    const std::size_t n = n_dist(rng);
    const LinearCode c = oracles::random_code(rng, n);
    std::uniform_int_distribution<std::size_t> size_dist(0, n - 1);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(size_dist(rng));
    const SupportSet i(idx);

    const LinearCode lhs = dual(shorten(c, i));
    const LinearCode rhs = puncture(dual(c), i);
    CHECK(lhs == rhs);
    if (n <= 10) CHECK(oracles::codeword_set(lhs) == oracles::codeword_set(rhs));
  }
}

TEST_CASE("puncture and shorten dimension bounds") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearCode c = oracles::random_code(rng, 9);
    std::uniform_int_distribution<std::size_t> pick(0, 8);
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (b == a) b = (a + 1) % 9;
    const SupportSet i({std::min(a, b), std::max(a, b)});
    CHECK(puncture(c, i).dim() + i.size() >= c.dim());
    CHECK(shorten(c, i).dim() + i.size() >= c.dim());
  }
}

TEST_CASE("min_distance") {
  CHECK(*min_distance(rm_code(1, 3).code) == 4);
  CHECK(*min_distance(rm_code(2, 4).code) == 4);
  CHECK_FALSE(min_distance(LinearCode::zero(5)));
  CHECK_THROWS_AS(min_distance(rm_code(3, 6).code), EnumerationCapError);  // dim 42
}

TEST_CASE("min_distance agrees with naive enumeration") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const LinearCode c = oracles::random_code(rng, 11);
    CHECK(min_distance(c) == oracles::naive_min_distance(c));
  }
}

TEST_CASE("is_even") {
  CHECK(is_even(rm_code(1, 3).code));
  CHECK_FALSE(is_even(rm_code(3, 3).code));
  CHECK(is_even(LinearCode::zero(4)));
}

TEST_CASE("is_even matches full enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const LinearCode c = oracles::random_code(rng, 12);
    CHECK(is_even(c) == oracles::all_weights_even(c));
  }
}

TEST_CASE("is_self_orthogonal") {
  CHECK(is_self_orthogonal(rm_code(1, 3).code));
  CHECK_FALSE(is_self_orthogonal(full_space(4)));
  CHECK(is_self_orthogonal(LinearCode::zero(4)));
}

TEST_CASE("is_subcode") {
  CHECK(is_subcode(rm_code(0, 3).code, rm_code(1, 3).code));
  CHECK_FALSE(is_subcode(rm_code(1, 3).code, rm_code(0, 3).code));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearCode c = oracles::random_code(rng, 8);
    CHECK(is_subcode(c, c));
  }
  CHECK_THROWS_AS(is_subcode(repetition(3), repetition(4)), std::invalid_argument);
}

TEST_CASE("contains_self_dual") {
  CHECK(contains_self_dual(even_weight(4)));
  CHECK_FALSE(contains_self_dual(repetition(4)));
  CHECK_FALSE(contains_self_dual(repetition(5)));  // odd length
  CHECK_FALSE(contains_self_dual(full_space(5)));  // odd length
  CHECK(contains_self_dual(full_space(4)));
}

TEST_CASE("count_self_dual_subcodes") {
  CHECK(*count_self_dual_subcodes(even_weight(4)).to_u64() == 3);
  CHECK(*count_self_dual_subcodes(rm_code(1, 3).code).to_u64() == 1);  // k = n/2
  CHECK(*count_self_dual_subcodes(full_space(4)).to_u64() == 35);
  CHECK_THROWS_AS(count_self_dual_subcodes(repetition(4)), std::invalid_argument);
}

TEST_CASE("count matches a literal enumeration of the intermediate subcodes") {
  CHECK(oracles::intermediate_subcode_count_literal(even_weight(4)) == 3);
  CHECK(oracles::intermediate_subcode_count_literal(full_space(4)) == 35);
  std::mt19937_64 rng(47);
  int tested = 0;
  std::uniform_int_distribution<std::size_t> half_dist(1, 4);
  for (int trial = 0; trial < 200 && tested < 25; ++trial) {
    const LinearCode c = oracles::random_code(rng, 2 * half_dist(rng));
    if (!contains_self_dual(c)) continue;
    ++tested;
    CHECK(*count_self_dual_subcodes(c).to_u64() == oracles::intermediate_subcode_count_literal(c));
  }
  CHECK(tested > 0);
}

TEST_CASE("enumerate_self_dual_subcodes examples") {
  const auto of_even = enumerate_self_dual_subcodes(even_weight(4));
  CHECK(of_even.size() == 3);
  for (const LinearCode& d : of_even) {
    CHECK(d.contains(BitVector::from_string("1111")));
    CHECK(d == dual(d));
  }
  CHECK(enumerate_self_dual_subcodes(repetition(4)).empty());

  const auto of_f2_squared = enumerate_self_dual_subcodes(full_space(2));
  REQUIRE(of_f2_squared.size() == 1);
  CHECK(oracles::codeword_set(of_f2_squared[0]) == std::set<std::string>{"00", "11"});

  CHECK_THROWS_AS(enumerate_self_dual_subcodes(full_space(14)), EnumerationCapError);
}

TEST_CASE("enumeration output is canonically sorted and duplicate-free") {
  const auto list = enumerate_self_dual_subcodes(full_space(6));
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].canon() < list[i].canon());
  // All self-dual codes of length 6: (2^1+1)(2^2+1) = 15.
  CHECK(list.size() == 15);
}

TEST_CASE("DFS enumeration matches the literal subspace sweep") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<std::size_t> half_dist(1, 3);
  int nonempty = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const LinearCode c = oracles::random_code(rng, 2 * half_dist(rng));
    const auto via_dfs = enumerate_self_dual_subcodes(c);
    std::vector<BitMatrix> dfs_canons;
    for (const LinearCode& d : via_dfs) dfs_canons.push_back(d.canon());
    CHECK(dfs_canons == oracles::self_dual_subcodes_literal(c));
    if (!via_dfs.empty()) ++nonempty;
  }
  CHECK(nonempty > 0);

  // One dense length-8 instance.
  const auto via_dfs = enumerate_self_dual_subcodes(even_weight(8));
  std::vector<BitMatrix> dfs_canons;
  for (const LinearCode& d : via_dfs) dfs_canons.push_back(d.canon());
  CHECK(dfs_canons == oracles::self_dual_subcodes_literal(even_weight(8)));
}

TEST_CASE("enumeration recovers the classification counts of self-dual codes") {
  // Self-dual codes are even, so the even-weight code contains all of them:
  // prod_{i=1}^{n/2-1} (2^i+1) of them for length n.
  CHECK(enumerate_self_dual_subcodes(full_space(8)).size() == 135);
  CHECK(enumerate_self_dual_subcodes(even_weight(8)).size() == 135);
  CHECK(enumerate_self_dual_subcodes(even_weight(10)).size() == 2295);
}

TEST_CASE("self-dual existence: three independent routes agree") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 10);
    const LinearCode c = oracles::random_code(rng, n_dist(rng));
    const bool via_criterion = contains_self_dual(c);
    const bool via_enumeration = !enumerate_self_dual_subcodes(c).empty();
    const bool via_search = oracles::self_dual_exists_search(c);
    CHECK(via_criterion == via_enumeration);
    CHECK(via_criterion == via_search);
  }
}

TEST_CASE("self-dual subcode count never exceeds the chain count and shares its parity") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(1, 5);
    const LinearCode c = oracles::random_code(rng, 2 * n_dist(rng));
    if (!contains_self_dual(c)) continue;
    const BigUint chain = count_self_dual_subcodes(c);
    const auto self_dual = enumerate_self_dual_subcodes(c);
    CHECK(chain.is_odd());
    CHECK(self_dual.size() % 2 == 1);
    CHECK(BigUint(self_dual.size()) <= chain);
  }
}

TEST_CASE("zero code conventions") {
  const LinearCode z = LinearCode::zero(6);
  CHECK(z.dim() == 0);
  CHECK_FALSE(min_distance(z));
  CHECK(is_even(z));
  CHECK(is_self_orthogonal(z));
  CHECK_FALSE(contains_self_dual(z));  // dual is the full space, not inside z
}
