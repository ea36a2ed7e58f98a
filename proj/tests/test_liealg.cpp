#include "doctest.h"

#include <numeric>

#include "hitorb/liealg.hpp"

using namespace hitorb;

TEST_CASE("dimensions and ranks of the nine families") {
  CHECK(group_dim(parse_group("pgl:2")) == 3);
  CHECK(group_dim(parse_group("pgl:7")) == 48);
  CHECK(group_dim(parse_group("psp:1")) == 3);
  CHECK(group_dim(parse_group("psp:4")) == 36);
  CHECK(group_dim(parse_group("podd:5")) == 55);
  CHECK(group_dim(parse_group("poeven:3")) == 15);
  CHECK(group_dim(parse_group("poeven:4")) == 28);
  CHECK(group_dim(parse_group("g2")) == 14);
  CHECK(group_dim(parse_group("f4")) == 52);
  CHECK(group_dim(parse_group("e6")) == 78);
  CHECK(group_dim(parse_group("e7")) == 133);
  CHECK(group_dim(parse_group("e8")) == 248);
  CHECK(rank(parse_group("pgl:7")) == 6);
  CHECK(rank(parse_group("poeven:5")) == 5);
  CHECK(rank(parse_group("e8")) == 8);
}

TEST_CASE("exponents") {
  CHECK(exponents(parse_group("pgl:5")) == std::vector<int>{1, 2, 3, 4});
  CHECK(exponents(parse_group("psp:4")) == std::vector<int>{1, 3, 5, 7});
  CHECK(exponents(parse_group("podd:3")) == std::vector<int>{1, 3, 5});
  CHECK(exponents(parse_group("poeven:3")) == std::vector<int>{1, 3, 2});
  CHECK(exponents(parse_group("poeven:4")) == std::vector<int>{1, 3, 5, 3});
  CHECK(exponents(parse_group("g2")) == std::vector<int>{1, 5});
  CHECK(exponents(parse_group("f4")) == std::vector<int>{1, 5, 7, 11});
  CHECK(exponents(parse_group("e6")) == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(exponents(parse_group("e7")) == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(exponents(parse_group("e8")) == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("sum of 2e+1 over the exponents is the group dimension") {
  for (const auto& g : groups_up_to_rank(12, 13)) {
    long long sum = 0;
    for (int e : exponents(g)) sum += 2 * e + 1;
    CHECK(sum == group_dim(g));
    CHECK((int)exponents(g).size() == rank(g));
  }
}

TEST_CASE("degree multiset coincidences in low rank") {
  CHECK(degree_multiset(parse_group("poeven:3")) == degree_multiset(parse_group("pgl:4")));
  CHECK(degree_multiset(parse_group("psp:2")) == degree_multiset(parse_group("podd:2")));
  CHECK(degree_multiset(parse_group("pgl:2")) == degree_multiset(parse_group("psp:1")));
  // poeven with even parameter has a repeated degree
  CHECK(degree_multiset(parse_group("poeven:4")) == std::vector<int>{2, 4, 4, 6});
}

TEST_CASE("group grammar round trip and errors") {
  for (const char* name : {"pgl:2", "pgl:11", "psp:3", "podd:1", "poeven:6", "g2", "e7"}) {
    CHECK(group_name(parse_group(name)) == name);
  }
  CHECK_THROWS_AS(parse_group("pgl:1"), InvalidGroup);
  CHECK_THROWS_AS(parse_group("poeven:2"), InvalidGroup);
  CHECK_THROWS_AS(parse_group("g2:3"), InvalidGroup);
  CHECK_THROWS_AS(parse_group("psp"), InvalidGroup);
  CHECK_THROWS_AS(parse_group("su:3"), InvalidGroup);
  CHECK_THROWS_AS(parse_group("pgl:x"), InvalidGroup);
  CHECK_THROWS_AS(make_group(GroupFamily::G2, 2), InvalidGroup);
}

TEST_CASE("principal linear embedding sizes") {
  CHECK(pgl_embedding_size(parse_group("pgl:5")) == 5);
  CHECK(pgl_embedding_size(parse_group("psp:3")) == 6);
  CHECK(pgl_embedding_size(parse_group("podd:3")) == 7);
  CHECK(pgl_embedding_size(parse_group("g2")) == 7);
  CHECK_THROWS_AS(pgl_embedding_size(parse_group("poeven:4")), InvalidGroup);
  CHECK_THROWS_AS(pgl_embedding_size(parse_group("f4")), InvalidGroup);
}

TEST_CASE("group enumeration is deterministic and complete") {
  auto gs = groups_up_to_rank(8);
  CHECK(gs.size() == 35);  // 8 pgl + 8 psp + 8 podd + 6 poeven + 5 exceptional
  for (auto& g : gs) CHECK(rank(g) <= 8);
}
