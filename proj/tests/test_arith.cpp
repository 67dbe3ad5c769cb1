#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "f1/abelian.hpp"
#include "f1/finite_field.hpp"
#include "f1/group_ring.hpp"
#include "f1/monoid.hpp"

using namespace f1;

TEST_CASE("prime fields") {
  FiniteField f2(2, 1);
  CHECK(f2.add(1, 1) == 0);
  FiniteField f3(3, 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.from_int(-1) == 2);
}

TEST_CASE("GF(4) generator squares to g+1") {
  // independent oracle: x*x mod x^2+x+1 over F2 is x+1
  FiniteField f4(2, 2);
  int g = 2;  // coefficient vector (0,1), i.e. x
  CHECK(f4.mul(g, g) == f4.add(g, 1));
  CHECK(f4.mul(g, g) == 3);  // (1,1)
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(FiniteField(3, 5), std::invalid_argument);   // q > 81
  CHECK_THROWS_AS(FiniteField(11, 1), std::invalid_argument);  // prime out of table
  CHECK_THROWS_AS(FiniteField(2, 5), std::invalid_argument);   // q=32 not on file
}

TEST_CASE("field axioms exhaustively for every supported q") {
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4},
                      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
    FiniteField F(p, k);
    int q = F.q();
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, q - 1) == 1);
      }
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        // Frobenius is additive
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("pointed groups") {
  AbelianGroup zn = AbelianGroup::cyclic(5);
  CHECK(zn.order() == 5);
  CHECK(!zn.pointed());
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  CHECK(z2.pointed());
  CHECK(z2.add(z2.eps(), z2.eps()) == z2.zero());
  CHECK_THROWS_AS(AbelianGroup::cyclic(4, 1), std::invalid_argument);  // order 4 element
  AbelianGroup mixed({2, 4}, {0, 2});
  CHECK(mixed.order() == 8);
  CHECK(mixed.eps() == mixed.index({0, 2}));
  CHECK(mixed.name() == "Z/2xZ/4:eps=(0,2)");
}

TEST_CASE("element codes are lexicographic on tuples") {
  AbelianGroup g({2, 3}, {0, 0});
  std::vector<std::vector<int>> seen;
  for (int i = 0; i < g.size(); ++i) {
    seen.push_back(g.tuple(i));
    CHECK(g.index(g.tuple(i)) == i);
  }
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(g.order_of(g.index({1, 0})) == 2);
  CHECK(g.order_of(g.index({1, 1})) == 6);
  CHECK(g.exponent() == 6);
}

TEST_CASE("hom sets") {
  AbelianGroup z2 = AbelianGroup::cyclic(2);
  AbelianGroup z4 = AbelianGroup::cyclic(4);
  auto homs = hom_set(z2, z4);
  // oracle: the generator must land on an element killed by 2
  int expect = 0;
  for (int y = 0; y < z4.size(); ++y)
    if (z4.scalar(2, y) == z4.zero()) ++expect;
  CHECK(static_cast<int>(homs.size()) == expect);
  CHECK(homs.size() == 2);

  AbelianGroup z5 = AbelianGroup::cyclic(5);
  CHECK(hom_set(z5, z5).size() == 5);
  CHECK(hom_set(AbelianGroup::trivial(), z4).size() == 1);

  // pointed filter: eps must map to eps when both sides are pointed
  AbelianGroup pz2 = AbelianGroup::cyclic(2, 1);
  AbelianGroup pz4 = AbelianGroup::cyclic(4, 2);
  auto pointed = hom_set(pz2, pz4);
  CHECK(pointed.size() == 1);
  CHECK(pointed[0].apply(pz2.eps()) == pz4.eps());
}

TEST_CASE("reduced group ring Z[Z/2,eps] is Z") {
  AbelianGroup D = AbelianGroup::cyclic(2, 1);
  GroupRing R = reduced_group_ring(D);
  CHECK(R.rank() == 1);
  CHECK(R.from_group(1) == R.neg(R.one()));  // eps -> -1
  CHECK(R.mul(R.from_group(1), R.from_group(1)) == R.one());
}

TEST_CASE("reduced group ring Z[Z/4,eps=2] is Z[i]") {
  AbelianGroup D = AbelianGroup::cyclic(4, 2);
  GroupRing R = reduced_group_ring(D);
  CHECK(R.rank() == 2);
  auto i = R.from_group(1);
  CHECK(R.mul(i, i) == R.neg(R.one()));  // g^2 = -1
  CHECK(R.mul(R.mul(i, i), R.mul(i, i)) == R.one());
  // natural map D -> Z[D,eps] is injective
  std::set<GroupRing::Elem> images;
  for (int g = 0; g < D.size(); ++g) images.insert(R.from_group(g));
  CHECK(images.size() == static_cast<size_t>(D.size()));
}

TEST_CASE("plain group ring is Z[T]/(T^n - 1)") {
  AbelianGroup D = AbelianGroup::cyclic(5);
  GroupRing R(D, false);
  CHECK(R.rank() == 5);
  auto T = R.from_group(1);
  auto Tn = R.one();
  for (int i = 0; i < 5; ++i) Tn = R.mul(Tn, T);
  CHECK(Tn == R.one());
  auto Tk = R.one();
  for (int k = 1; k < 5; ++k) {
    Tk = R.mul(Tk, T);
    CHECK(!(Tk == R.one()));
  }
}

TEST_CASE("ring inverses exist only for monomial units") {
  AbelianGroup D = AbelianGroup::cyclic(4, 2);
  GroupRing R = reduced_group_ring(D);
  CHECK(R.inv(R.from_group(1)) == R.from_group(3));
  CHECK_THROWS_AS(R.inv(R.add(R.one(), R.from_group(1))), std::domain_error);
  CHECK_THROWS_AS(R.inv(R.from_int(2)), std::domain_error);
}

TEST_CASE("characters of pointed groups") {
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  auto c2 = characters(z2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].eval(1) == angle_half());

  AbelianGroup z4 = AbelianGroup::cyclic(4, 2);
  auto c4 = characters(z4);
  REQUIRE(c4.size() == 2);  // gen -> +/- i
  CHECK(c4[0].eval(1) == Frac(1, 4));
  CHECK(c4[1].eval(1) == Frac(3, 4));
  for (auto& chi : c4) CHECK(chi.is_minus_one(z4.eps()));

  AbelianGroup z3 = AbelianGroup::cyclic(3);
  CHECK(characters(z3).size() == 3);
}

TEST_CASE("characters separate points") {
  std::vector<AbelianGroup> groups;
  groups.push_back(AbelianGroup::cyclic(2, 1));
  groups.push_back(AbelianGroup::cyclic(4, 2));
  groups.push_back(AbelianGroup::cyclic(6, 3));
  groups.push_back(AbelianGroup({2, 4}, {0, 2}));
  groups.push_back(AbelianGroup::cyclic(5));
  for (const auto& D : groups) {
    auto chars = characters(D);
    if (D.pointed()) CHECK(chars.size() == static_cast<size_t>(D.size()) / 2);
    for (int g1 = 0; g1 < D.size(); ++g1)
      for (int g2 = g1 + 1; g2 < D.size(); ++g2) {
        bool separated = false;
        for (auto& chi : chars)
          if (!(chi.eval(g1) == chi.eval(g2))) separated = true;
        CHECK(separated);
      }
  }
}

TEST_CASE("character induces a ring homomorphism on the reduced ring") {
  AbelianGroup D = AbelianGroup::cyclic(4, 2);
  GroupRing R = reduced_group_ring(D);
  for (const Character& chi : characters(D)) {
    CharacterTarget tgt = make_character_target(D, chi);
    for (int g = 0; g < D.size(); ++g)
      for (int h = 0; h < D.size(); ++h) {
        auto lhs = tgt.map_elem(R, R.mul(R.from_group(g), R.from_group(h)));
        auto rhs = tgt.ring->mul(tgt.map_group(g), tgt.map_group(h));
        CHECK(lhs == rhs);
        auto alhs = tgt.map_elem(R, R.add(R.from_group(g), R.from_group(h)));
        auto arhs = tgt.ring->add(tgt.map_group(g), tgt.map_group(h));
        CHECK(alhs == arhs);
      }
    CHECK(tgt.map_elem(R, R.one()) == tgt.ring->one());
  }
}

TEST_CASE("monoids of rings and adjoined zeros") {
  FiniteField f2(2, 1);
  MonoidWithZero m2 = monoid_of_ring(f2);
  CHECK(m2.size() == 2);
  CHECK(m2.eps() == m2.one());  // -1 = 1 in characteristic 2

  FiniteField f3(3, 1);
  MonoidWithZero m3 = monoid_of_ring(f3);
  CHECK(m3.size() == 3);
  CHECK(m3.unit_group().order() == 2);
  CHECK(m3.eps() == 2);
  CHECK(m3.mul(2, 2) == 1);

  AbelianGroup D = AbelianGroup::cyclic(4, 2);
  MonoidWithZero mz = adjoin_zero(D);
  CHECK(mz.size() == 5);
  CHECK(mz.mul(mz.zero(), mz.eps()) == mz.zero());
  CHECK(mz.mul(mz.one(), mz.eps()) == mz.eps());
  CHECK(mz.unit_group().eps() == D.eps());

  MonoidWithZero m1 = adjoin_zero(AbelianGroup::trivial());
  CHECK(m1.size() == 2);

  // lazy monoid of an infinite ring: no enumeration, just operations
  GroupRing R = reduced_group_ring(D);
  GroupRingMonoid rm = monoid_of_ring(R);
  CHECK(rm.mul(rm.one(), rm.minus_one()) == rm.minus_one());
  CHECK(rm.mul(rm.zero(), rm.minus_one()) == rm.zero());
  CHECK(rm.mul(rm.minus_one(), rm.minus_one()) == rm.one());
}

namespace {

// monoid homs (D u {0}, eps) -> (A, *, -1): multiplicative maps with
// 1 -> 1, 0 -> 0, eps -> -1, enumerated as raw functions on D
template <class RingT>
std::vector<std::vector<int>> monoid_homs(const AbelianGroup& D, const RingT& A, int a_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(D.size(), 0);
  while (true) {
    bool ok = f[D.zero()] == A.one() && f[D.eps()] == A.from_int(-1);
    for (int g = 0; g < D.size() && ok; ++g)
      for (int h = 0; h < D.size() && ok; ++h)
        if (f[D.add(g, h)] != A.mul(f[g], f[h])) ok = false;
    if (ok) out.push_back(f);
    int i = D.size() - 1;
    while (i >= 0 && ++f[i] == a_size) f[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// ring homs Z[D,eps] -> A: additive maps off basis images, checked
// multiplicative on basis products
template <class RingT>
std::vector<std::vector<int>> ring_homs(const AbelianGroup& D, const GroupRing& R, const RingT& A,
                                        int a_size) {
  std::vector<int> reps;
  for (int g = 0; g < D.size(); ++g)
    if (R.from_group(g) == GroupRing::Elem{{g, 1}}) reps.push_back(g);
  auto apply = [&](const std::vector<int>& img, const GroupRing::Elem& x) {
    auto r = A.zero();
    for (auto& [g, c] : x) {
      for (size_t k = 0; k < reps.size(); ++k)
        if (reps[k] == g) {
          auto acc = A.zero();
          long long cc = c < 0 ? -c : c;
          for (long long i = 0; i < cc; ++i) acc = A.add(acc, img[k]);
          r = c < 0 ? A.sub(r, acc) : A.add(r, acc);
        }
    }
    return r;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> img(reps.size(), 0);
  while (true) {
    bool ok = apply(img, R.one()) == A.one();
    for (size_t i = 0; i < reps.size() && ok; ++i)
      for (size_t j = 0; j < reps.size() && ok; ++j) {
        auto prod = R.mul(R.from_group(reps[i]), R.from_group(reps[j]));
        if (apply(img, prod) != A.mul(img[i], img[j])) ok = false;
      }
    if (ok) out.push_back(img);
    int i = static_cast<int>(img.size()) - 1;
    while (i >= 0 && ++img[i] == a_size) img[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("adjunction: Hom(Z[M,eps],A) = Hom((M,eps),(A,-1))") {
  for (auto [order, eps] : {std::pair{2, 1}, std::pair{4, 2}}) {
    AbelianGroup D = AbelianGroup::cyclic(order, eps);
    GroupRing R = reduced_group_ring(D);
    FiniteField F5(5, 1);
    auto mh = monoid_homs(D, F5, F5.q());
    auto rh = ring_homs(D, R, F5, F5.q());
    CHECK(mh.size() == rh.size());
    // the canonical map: a monoid hom determines the ring hom by its rep values
    std::set<std::vector<int>> ring_set(rh.begin(), rh.end());
    std::set<std::vector<int>> induced;
    for (auto& f : mh) {
      std::vector<int> img;
      for (int g = 0; g < D.size(); ++g)
        if (R.from_group(g) == GroupRing::Elem{{g, 1}}) img.push_back(f[g]);
      induced.insert(img);
    }
    CHECK(induced == ring_set);
  }
  // sanity: Z[Z/4, eps=2] = Z[i], and Z[i] -> F5 has exactly two homs (i -> +/-2)
  AbelianGroup D = AbelianGroup::cyclic(4, 2);
  GroupRing R = reduced_group_ring(D);
  FiniteField F5(5, 1);
  CHECK(ring_homs(D, R, F5, F5.q()).size() == 2);
}

TEST_CASE("mod rings") {
  ModRing z6(6);
  CHECK(z6.mul(2, 3) == 0);
  CHECK(z6.is_unit(5));
  CHECK(!z6.is_unit(2));
  CHECK(z6.inv(5) == 5);
  MonoidWithZero m = monoid_of_ring(z6);
  CHECK(m.size() == 6);
  CHECK(m.unit_group().order() == 2);
  CHECK(m.eps() == 5);
}
