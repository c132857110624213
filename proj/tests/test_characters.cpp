#include "doctest.h"
#include "helpers.hpp"

#include "dessins/character_table.hpp"
#include "dessins/cyclotomic.hpp"
#include "dessins/frobenius.hpp"
#include "dessins/symmetric_characters.hpp"

using namespace dessins;

TEST_CASE("cyclotomic arithmetic") {
  // 1 + z + ... + z^6 = 0
  Cyclotomic s;
  for (int k = 0; k < 7; ++k) s += Cyclotomic::zeta(7, k);
  CHECK(s.is_zero());
  // b7 = (-1 + sqrt(-7))/2 and b7 * conj(b7) = 2
  Cyclotomic b7 = Cyclotomic::zeta(7, 1) + Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4);
  CHECK((b7 * b7.conj()).is_rational());
  CHECK((b7 * b7.conj()).rational() == 2);
  CHECK((b7 + b7.conj()).rational() == -1);
  // zeta_4^2 = -1 and mixed conductors
  CHECK((Cyclotomic::zeta(4, 1) * Cyclotomic::zeta(4, 1)).rational() == -1);
  CHECK((Cyclotomic::zeta(3, 1) * Cyclotomic::zeta(4, 1)) == Cyclotomic::zeta(12, 7));
  CHECK(Cyclotomic::zeta(12, 3) == Cyclotomic::zeta(4, 1));
  auto z9 = Cyclotomic::zeta(9, 1);
  CHECK((z9 * z9 * z9) == Cyclotomic::zeta(3, 1));
  CHECK(Cyclotomic::zeta(7, 3).str() == "E(7)^3");
}

TEST_CASE("dixon prime") {
  CHECK(dixon_prime(84, 168) == 337);
  CHECK(dixon_prime(30, 60) == 31);
}

TEST_CASE("PSL(3,2) character table") {
  auto cs = conjugacy_classes(test::psl32());
  auto t = dixon_table(cs);
  CHECK(t.degrees == std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
  CHECK(rows_orthonormal(t));
  CHECK(columns_orthogonal(t));
  // the two degree-3 characters take b7 and its conjugate on 7A
  Cyclotomic b7 = Cyclotomic::zeta(7, 1) + Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4);
  bool found = (t.rows[1][4] == b7 && t.rows[2][4] == b7.conj()) ||
               (t.rows[1][4] == b7.conj() && t.rows[2][4] == b7);
  CHECK(found);
  CHECK(t.rows[3][1].rational() == 2);
  CHECK(t.rows[5][4].rational() == 1);
}

TEST_CASE("character tables of other groups") {
  for (auto g : {test::a5(), PermGroup::symmetric(5), PermGroup::symmetric(4), PermGroup::alternating(6)}) {
    auto cs = conjugacy_classes(g);
    auto t = dixon_table(cs, 7);
    std::uint64_t sum = 0;
    for (auto d : t.degrees) sum += d * d;
    CHECK(sum == cs.order());
    CHECK(t.size() == cs.classes().size());
    CHECK(rows_orthonormal(t));
  }
}

TEST_CASE("table independent of seed") {
  auto cs = conjugacy_classes(test::a5());
  auto t1 = dixon_table(cs, 1);
  auto t2 = dixon_table(cs, 99);
  CHECK(t1.rows == t2.rows);
}

TEST_CASE("Frobenius counts agree with brute force") {
  auto cs = conjugacy_classes(test::psl32());
  auto t = dixon_table(cs);
  auto tally = triple_count_tally(cs);
  const std::size_t r = cs.classes().size();
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      for (std::size_t z = 0; z < r; ++z) CHECK(frobenius_count(t, x, y, z) == tally[x][y][z]);
    }
  }
  // (3A, 2A, 7A)
  CHECK(frobenius_count(t, 2, 1, 4) == 168);
  CHECK(brute_force_triple_count(cs, 2, 1, 4) == 168);
  CHECK(triple_count_by_type(t, 3, 2, 7) == 336);
}

TEST_CASE("symmetric group characters") {
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(10).size() == 42);
  // chi^(2,1) on a 3-cycle is -1, on a transposition 0
  CHECK(sym_char_value({2, 1}, {3}) == -1);
  CHECK(sym_char_value({2, 1}, {2, 1}) == 0);
  CHECK(sym_char_value({3, 1, 1}, {1, 1, 1, 1, 1}) == 6);
  // agrees with the Dixon table of S5 on degrees
  std::uint64_t sum = 0;
  for (const auto& l : partitions(5)) {
    BigInt d = sym_char_value(l, {1, 1, 1, 1, 1});
    sum += d.get_ui() * d.get_ui();
  }
  CHECK(sum == 120);
  CHECK(sym_class_size({3, 2}) == 20);
}

TEST_CASE("symmetric triple counts agree with the tally") {
  auto cs = conjugacy_classes(PermGroup::symmetric(5));
  auto tally = triple_count_tally(cs);
  const std::size_t r = cs.classes().size();
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      for (std::size_t z = 0; z < r; ++z) {
        auto px = partition_of(cs.classes()[x].cycle_type);
        auto py = partition_of(cs.classes()[y].cycle_type);
        auto pz = partition_of(cs.classes()[z].cycle_type);
        CHECK(sym_triple_count(5, px, py, pz) == tally[x][y][z]);
      }
    }
  }
}

TEST_CASE("weighted passport count of the Fano dessins") {
  CHECK(weighted_passport_count(7, {3, 3, 1}, {2, 2, 1, 1, 1}, {7}) == Rational(2));
}

TEST_CASE("weighted passport count for (6 3 2 1, 2^6, 6 3 2 1)") {
  CHECK(weighted_passport_count(12, {6, 3, 2, 1}, {2, 2, 2, 2, 2, 2}, {6, 3, 2, 1}) == Rational(39, 2));
}
