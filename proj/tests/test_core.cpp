#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "affevac/affine.hpp"
#include "affevac/partition.hpp"
#include "affevac/tabloid.hpp"
#include "affevac/tableau.hpp"

using namespace affevac;

TEST_CASE("partition basics") {
  Partition lam = parse_partition("4,2,1");
  CHECK(lam.size() == 7);
  CHECK(lam.length() == 3);
  CHECK(format_partition(lam) == "4,2,1");
  CHECK(conjugate(lam) == parse_partition("3,2,1,1"));
  CHECK(conjugate(conjugate(lam)) == lam);
  CHECK(b_statistic(parse_partition("3,2,2,2,1")) == 16);
  CHECK(b_statistic(Partition({7})) == 0);
  CHECK(b_statistic(Partition(std::vector<int>(5, 1))) == 10);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("hook lengths and counts") {
  CHECK(hook_length_count(parse_partition("2,2")) == 2);
  CHECK(hook_length_count(parse_partition("3,2")) == 5);
  CHECK(hook_length_count(Partition({5})) == 1);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lam : partitions_of(n))
      CHECK(hook_length_count(lam) ==
            static_cast<long long>(enumerate_syt(lam).size()));
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_in_box(2, 2).size() == 6);
  // box_complement rotates the complement: an involution on the box.
  for (const Partition& eta : partitions_in_box(3, 4))
    CHECK(box_complement(box_complement(eta, 3, 4), 3, 4) == eta);
}

TEST_CASE("tabloid parsing and residues") {
  Tabloid t = parse_tabloid("2 3 5 7|1 4|6");
  CHECK(t.n == 7);
  CHECK(t.shape() == Composition{4, 2, 1});
  CHECK(format_tabloid(t) == "2 3 5 7|1 4|6");
  CHECK(t.row_of(1) == 2);
  CHECK(t.row_of(8) == 2);  // residue 8 = 1 mod 7
  CHECK(parse_tabloid("14 9|3 4|6 12 8", 7) == parse_tabloid("2 7|3 4|1 5 6"));
  CHECK_THROWS_AS(parse_tabloid("1 1|2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tabloid("1 2|4", 4), std::invalid_argument);
}

TEST_CASE("tabloid descents") {
  CHECK(tabloid_descents(parse_tabloid("2 3 5 7|1 4|6")) ==
        std::set<int>{3, 5, 7});
  CHECK(tabloid_descents(parse_tabloid("1 2 3 4")) == std::set<int>{});
  CHECK(tabloid_descents(rrss(parse_partition("2,1"), 2)) == std::set<int>{2});
}

TEST_CASE("reverse row superstandard tabloids") {
  CHECK(rrss(parse_partition("2,1"), 2) == parse_tabloid("1 2|3"));
  CHECK(rrss(parse_partition("2,2"), 4) == parse_tabloid("3 4|1 2"));
  CHECK(rrss(Partition({4}), 2) == parse_tabloid("1 2 3 4"));
  // Unique tabloid with singleton descent set, n <= 8.
  for (int n = 2; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n)) {
      if (lam.length() < 2) continue;
      for (int k = 1; k <= n; ++k) {
        Tabloid r = rrss(lam, k);
        CHECK(tabloid_descents(r) == std::set<int>{residue_mod(k, n)});
      }
    }
  for (const Partition& lam : partitions_of(5)) {
    if (lam.length() < 2) continue;
    for (const Tabloid& t : enumerate_tabloids(lam.parts)) {
      auto des = tabloid_descents(t);
      if (des.size() == 1) CHECK(t == rrss(lam, *des.begin()));
    }
  }
}

TEST_CASE("knuth moves") {
  CHECK(knuth_neighbors(parse_tabloid("1 2 3 4")).empty());

  // Brute-force cross-check on rows {1,2}|{3,4}.
  Tabloid t = parse_tabloid("1 2|3 4");
  auto des = tabloid_descents(t);
  int found = 0;
  for (const KnuthNeighbor& nb : knuth_neighbors(t)) {
    auto desp = tabloid_descents(nb.tabloid);
    bool aNotB = false, bNotA = false;
    for (int x : des)
      if (!desp.count(x)) aNotB = true;
    for (int x : desp)
      if (!des.count(x)) bNotA = true;
    CHECK(aNotB);
    CHECK(bNotA);
    ++found;
  }
  CHECK(found > 0);

  // Symmetry with equal types, and unique neighbor per applicable type.
  for (const Partition& lam : partitions_of(5)) {
    for (const Tabloid& u : enumerate_tabloids(lam.parts)) {
      auto desU = tabloid_descents(u);
      for (const KnuthNeighbor& nb : knuth_neighbors(u)) {
        bool back = false;
        for (const KnuthNeighbor& rev : knuth_neighbors(nb.tabloid))
          if (rev.tabloid == u && rev.types == nb.types) back = true;
        CHECK(back);
      }
      for (int k = 1; k <= u.n; ++k) {
        int k1 = residue_mod(k + 1, u.n);
        if (desU.count(k) == desU.count(k1)) continue;
        int count = 0;
        for (const KnuthNeighbor& nb : knuth_neighbors(u))
          if (nb.types.count(k)) ++count;
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("promotion order") {
  for (const Partition& lam : partitions_of(6))
    for (const Tabloid& t : enumerate_tabloids(lam.parts))
      CHECK(promote(t, 6) == t);
  CHECK(promote(parse_tabloid("1 2|3 4"), 1) == parse_tabloid("2 3|1 4"));
}

TEST_CASE("affine permutations") {
  AffinePermutation w = parse_affine("[4,1,6,11,2,3]");
  CHECK(w.n == 6);
  CHECK(rotate(w) == parse_affine("[4,5,-4,1,6,3]"));
  CHECK(rotate(rotate(w)) == w);
  CHECK(format_affine(rotate(w)) == "[4,5,-4,1,6,3]");
  AffinePermutation id = parse_affine("[1,2,3,4,5,6]");
  CHECK(rotate(id) == id);
  CHECK(affine_descents(id) == std::set<int>{});

  // w_7 = w_1 + 6 = 10 > 3, so position 6 is not a descent.
  CHECK(affine_descents(w) == std::set<int>{1, 4});
  CHECK(affine_descents(rotate(w)) == std::set<int>{2, 5});

  CHECK_THROWS_AS(parse_affine("[1,7,3,4,5,6]"), std::invalid_argument);
}

TEST_CASE("rotation complements descents") {
  std::vector<AffinePermutation> samples = {
      parse_affine("[4,1,6,11,2,3]"), parse_affine("[3,1,2]"),
      parse_affine("[-2,4,1,7,5]"), parse_affine("[2,3,4,5,6,1]"),
      parse_affine("[0,2,7,9]")};
  for (const auto& w : samples) {
    std::set<int> want;
    for (int i : affine_descents(w)) want.insert(residue_mod(w.n - i, w.n));
    CHECK(affine_descents(rotate(w)) == want);
  }
}

TEST_CASE("standardization") {
  CHECK(standardize_tabloid(parse_tabloid("1 2|3 4")).value() ==
        parse_tableau("1 2/3 4"));
  CHECK(standardize_tabloid(parse_tabloid("1 3|2 4")).value() ==
        parse_tableau("1 3/2 4"));
  CHECK(!standardize_tabloid(parse_tabloid("2 4|1 3")).has_value());
}

TEST_CASE("tabloid enumeration counts") {
  CHECK(enumerate_tabloids({2, 2}).size() == 6);
  CHECK(enumerate_tabloids({4}).size() == 1);
  CHECK(enumerate_tabloids({2, 1}).size() == 3);
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n)) {
      auto all = enumerate_tabloids(lam.parts);
      CHECK(static_cast<long long>(all.size()) == multinomial(lam.parts));
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}
