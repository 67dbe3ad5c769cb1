#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "f1/chevalley.hpp"
#include "f1/gadgets.hpp"

using namespace f1;

TEST_CASE("multiplicative group points") {
  AbelianGroup z5 = AbelianGroup::cyclic(5);
  GradedSet g = gm_points(z5);
  CHECK(g.total() == 5);
  for (auto& [deg, key] : g.items) CHECK(deg == 1);
  CHECK(gm_points(AbelianGroup::trivial()).total() == 1);
  // counting function q - 1 at q = n + 1
  Poly p = counting_polynomial_q(GadgetKind::Gm, nullptr, 0);
  CHECK(p.eval(6) == 5);
}

TEST_CASE("affine points") {
  AbelianGroup z3 = AbelianGroup::cyclic(3);
  GradedSet g = affine_graded(1, z3);
  auto cs = g.census();
  CHECK(cs[0] == 1);
  CHECK(cs[1] == 3);
  CHECK(g.total() == 4);

  // total cardinality (|D|+1)^|F|
  for (int f = 0; f <= 4; ++f)
    for (int n = 1; n <= 4; ++n) {
      AbelianGroup D = AbelianGroup::cyclic(n);
      long long want = 1;
      for (int i = 0; i < f; ++i) want *= n + 1;
      CHECK(affine_graded(f, D).total() == want);
    }

  CHECK(affine_graded(0, z3).total() == 1);  // F empty: one degree-0 point
}

TEST_CASE("coordinate evaluation e_F") {
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  Character chi = characters(z2)[0];  // chi(gen) = -1

  AffinePoint empty;
  auto coords = e_F(3, chi, empty);
  for (auto& c : coords) CHECK(c.zero);

  AffinePoint one_slot{{{1, 1}}};  // slot 1 holds the generator
  coords = e_F(3, chi, one_slot);
  CHECK(coords[0].zero);
  CHECK(coords[1] == CycScalar::root(angle_half()));  // -1
  CHECK(coords[2].zero);

  AffinePoint full{{{0, 0}, {1, 0}, {2, 0}}};  // identity entries
  coords = e_F(3, chi, full);
  for (auto& c : coords) CHECK(c == CycScalar::root(Frac(0, 1)));  // all ones
}

TEST_CASE("projective points") {
  for (int d = 0; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      AbelianGroup D = AbelianGroup::cyclic(n);
      GradedSet g = proj_graded(d, D);
      auto cs = g.census();
      CHECK(cs[0] == d + 1);
      // geometric-sum identity, computed independently
      long long total = 0, qk = 1;
      for (int j = 0; j <= d; ++j) {
        total += qk;
        qk *= n + 1;
      }
      CHECK(g.total() == total);
    }
  CHECK(proj_graded(0, AbelianGroup::cyclic(3)).total() == 1);
}

TEST_CASE("spec points") {
  AbelianGroup z2 = AbelianGroup::cyclic(2);
  AbelianGroup z4 = AbelianGroup::cyclic(4);
  GradedSet g = spec_points(z2, z4);
  CHECK(g.total() == 2);
  for (auto& [deg, key] : g.items) CHECK(deg == 0);
  CHECK(spec_points(AbelianGroup::trivial(), z4).total() == 1);
}

TEST_CASE("chevalley graded point sets") {
  RootSystem rs = RootSystem::make("A1");
  WeylGroup W(rs);

  // D = Z/2: total (n+1)^N n^l sum (n+1)^l(w) with n = 2 -> 3*2*(1+3) = 24
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  ExtWeylGroup N2(W, z2);
  auto pts = chevalley_points(N2);
  CHECK(pts.size() == 24);
  GradedSet g = chevalley_graded(N2);
  auto cs = g.census();
  // degree-l slice has n^l |W| elements
  CHECK(cs[1] == 4);
  // minimum degree is the rank
  CHECK(cs.begin()->first == 1);

  // trivial D: 6 points total, degree-1 slice is the W lift of size 2
  AbelianGroup triv = AbelianGroup::trivial();
  ExtWeylGroup N1(W, triv);
  GradedSet g1 = chevalley_graded(N1);
  CHECK(g1.total() == 6);
  CHECK(g1.census()[1] == 2);

  // census path agrees with materialization
  CHECK(chevalley_total(W, 2) == 24);
  CHECK(chevalley_total(W, 1) == 6);
}

TEST_CASE("budget exceeded falls back to an exception") {
  RootSystem rs = RootSystem::make("A2");
  WeylGroup W(rs);
  AbelianGroup z4 = AbelianGroup::cyclic(4, 2);
  ExtWeylGroup N(W, z4);
  CHECK_THROWS_AS(chevalley_points(N, 10), BudgetExceeded);
  // the census is still available
  CHECK(chevalley_total(W, 4) > 10);
}

TEST_CASE("monoid-functor point sets") {
  RootSystem rs = RootSystem::make("A1");
  WeylGroup W(rs);

  // M = {0,1}: adjoined zero on the trivial group -> |SL2(F2)| = 6
  AbelianGroup triv = AbelianGroup::trivial();
  MonoidWithZero m01 = adjoin_zero(triv);
  ExtWeylGroup N1(W, m01.unit_group());
  CHECK(chevalley_points_monoid(N1, m01).size() == 6);

  // M = multiplicative monoid of F3 -> |SL2(F3)| = 24
  FiniteField f3(3, 1);
  MonoidWithZero m3 = monoid_of_ring(f3);
  ExtWeylGroup N3(W, m3.unit_group());
  CHECK(chevalley_points_monoid(N3, m3).size() == 24);

  // identification with the graded version for M = D u {0}
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  MonoidWithZero mz2 = adjoin_zero(z2);
  ExtWeylGroup Nz(W, z2);
  auto monoid_pts = chevalley_points_monoid(Nz, mz2);
  auto graded_pts = chevalley_points(Nz);
  REQUIRE(monoid_pts.size() == graded_pts.size());
  // forgetting degrees: nonzero supports match up bijectively
  std::set<std::string> mkeys, gkeys;
  for (const MPoint& p : monoid_pts) {
    std::string k;
    for (size_t i = 0; i < p.a.size(); ++i)
      if (p.a[i] != 0) k += std::to_string(i) + ":" + std::to_string(p.a[i] - 1) + ",";
    k += "|" + Nz.str(p.n) + "|";
    auto inv = W.inversion_set(p.n.w);
    for (size_t i = 0; i < p.b.size(); ++i)
      if (p.b[i] != 0) k += std::to_string(inv[i]) + ":" + std::to_string(p.b[i] - 1) + ",";
    mkeys.insert(k);
  }
  for (const GPoint& p : graded_pts) {
    std::string k;
    for (auto& [slot, g] : p.a.support) k += std::to_string(slot) + ":" + std::to_string(g) + ",";
    k += "|" + Nz.str(p.n) + "|";
    for (auto& [slot, g] : p.b.support) k += std::to_string(slot) + ":" + std::to_string(g) + ",";
    gkeys.insert(k);
  }
  CHECK(mkeys == gkeys);
}

TEST_CASE("counting polynomials") {
  RootSystem a1 = RootSystem::make("A1");
  WeylGroup W1(a1);
  Poly p1 = counting_polynomial_q(GadgetKind::Chevalley, &W1, 0);
  CHECK(p1 == Poly({0, -1, 0, 1}));  // q^3 - q
  CHECK(p1.str("q") == "q^3 - q");

  RootSystem a2 = RootSystem::make("A2");
  WeylGroup W2(a2);
  Poly p2 = counting_polynomial_q(GadgetKind::Chevalley, &W2, 0);
  CHECK(p2.eval(2) == 168);
  CHECK(p2.eval(3) == 5616);

  Poly pd = counting_polynomial_q(GadgetKind::Proj, nullptr, 3);
  CHECK(pd == Poly({1, 1, 1, 1}));

  // per-degree census = coeff_k * n^k for the n-variable polynomial
  Poly pn = counting_polynomial_n(GadgetKind::Chevalley, &W1, 0);
  for (long long n = 1; n <= 4; ++n) {
    auto census = chevalley_census(W1, n);
    for (int k = 0; k <= pn.degree(); ++k) {
      long long nk = 1;
      for (int i = 0; i < k; ++i) nk *= n;
      long long want = pn.coeff(k) * nk;
      long long got = census.count(k) ? census[k] : 0;
      CHECK(got == want);
    }
  }
}

TEST_CASE("counting polynomials match the classical group orders") {
  // |Sp4(F_q)| = q^4 (q^2-1)(q^4-1) and |G2(F_q)| = q^6 (q^6-1)(q^2-1),
  // computed here directly as an independent oracle
  RootSystem b2 = RootSystem::make("B2");
  WeylGroup Wb(b2);
  RootSystem g2 = RootSystem::make("G2");
  WeylGroup Wg(g2);
  for (long long q : {2, 3, 4, 5}) {
    long long q2 = q * q, q4 = q2 * q2, q6 = q4 * q2;
    CHECK(chevalley_total(Wb, q - 1) == q4 * (q2 - 1) * (q4 - 1));
    CHECK(chevalley_total(Wg, q - 1) == q6 * (q6 - 1) * (q2 - 1));
  }
  // frozen spot values
  CHECK(chevalley_total(Wb, 1) == 720);
  CHECK(chevalley_total(Wb, 2) == 51840);
  CHECK(chevalley_total(Wg, 1) == 12096);
  CHECK(chevalley_total(Wg, 2) == 4245696);
}

TEST_CASE("e_F is injective for an injective character") {
  AbelianGroup D = AbelianGroup::cyclic(4, 2);
  Character chi = characters(D)[0];  // gen -> i, injective on D
  for (int g = 0; g < D.size(); ++g)
    for (int h = g + 1; h < D.size(); ++h) CHECK(!(chi.eval(g) == chi.eval(h)));
  std::set<std::vector<CycScalar>> images;
  auto pts = affine_points(2, D);
  for (const AffinePoint& x : pts) images.insert(e_F(2, chi, x));
  CHECK(images.size() == pts.size());
}

TEST_CASE("cell decomposition per w") {
  // per-w slice of the monoid functor at M = F_q has (q-1)^l q^N q^l(w) points
  RootSystem rs = RootSystem::make("A1");
  WeylGroup W(rs);
  FiniteField f3(3, 1);
  MonoidWithZero m = monoid_of_ring(f3);
  ExtWeylGroup N(W, m.unit_group());
  auto pts = chevalley_points_monoid(N, m);
  std::map<int, long long> per_w;
  for (const MPoint& p : pts) per_w[p.n.w]++;
  for (int w = 0; w < W.size(); ++w) {
    long long expect = (3 - 1) * 3;  // (q-1)^l q^N
    for (int i = 0; i < W.length(w); ++i) expect *= 3;
    CHECK(per_w[w] == expect);
  }
}

TEST_CASE("naturality of the evaluation") {
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  AbelianGroup z4 = AbelianGroup::cyclic(4, 2);

  // identity morphism
  GroupHom id4{&z4, &z4, {1}};
  for (const Character& chi : characters(z4)) {
    CHECK(naturality_check(GadgetKind::Gm, 0, id4, chi));
    CHECK(naturality_check(GadgetKind::Affine, 2, id4, chi));
  }
  // doubling Z/2 -> Z/4 on G_m
  GroupHom dbl{&z2, &z4, {2}};
  for (const Character& chi : characters(z4))
    CHECK(naturality_check(GadgetKind::Gm, 0, dbl, chi));
  // projection Z/4 -> Z/2 on A^F
  GroupHom proj{&z4, &z2, {1}};
  for (const Character& chi : characters(z2))
    CHECK(naturality_check(GadgetKind::Affine, 2, proj, chi));
  // evaluation is only defined for the affine gadgets
  CHECK_THROWS_AS(naturality_check(GadgetKind::Proj, 2, proj, characters(z2)[0]),
                  std::invalid_argument);
}

TEST_CASE("graded sets are canonically ordered") {
  AbelianGroup z3 = AbelianGroup::cyclic(3);
  GradedSet a = affine_graded(2, z3);
  GradedSet b = affine_graded(2, z3);
  CHECK(a.items == b.items);
  CHECK(std::is_sorted(a.items.begin(), a.items.end()));
}

TEST_CASE("group ring axioms on generated elements") {
  // deterministic linear-congruential generator; exhaustive checking is out of
  // reach once supports mix, so sample ring elements with a fixed seed
  unsigned long long state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>(state >> 33);
  };
  std::vector<AbelianGroup> groups;
  groups.push_back(AbelianGroup::cyclic(6, 3));
  groups.push_back(AbelianGroup({2, 4}, {0, 2}));
  for (const AbelianGroup& D : groups) {
    GroupRing R = reduced_group_ring(D);
    auto random_elem = [&] {
      std::vector<std::pair<int, long long>> raw;
      int terms = static_cast<int>(next() % 4);
      for (int t = 0; t < terms; ++t)
        raw.emplace_back(static_cast<int>(next() % D.size()), next() % 7 - 3);
      return R.make(raw);
    };
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_elem(), b = random_elem(), c = random_elem();
      CHECK(R.add(a, b) == R.add(b, a));
      CHECK(R.mul(a, b) == R.mul(b, a));
      CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
      CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
      CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
      CHECK(R.mul(a, R.one()) == a);
      CHECK(R.add(a, R.neg(a)) == R.zero());
      // the reduction relation: (1 + eps) annihilates everything
      auto one_plus_eps = R.add(R.one(), R.from_group(D.eps()));
      CHECK(R.is_zero(R.mul(a, one_plus_eps)));
    }
  }
}

TEST_CASE("determinant is multiplicative over F_q") {
  unsigned long long state = 99;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>(state >> 40);
  };
  for (int q : {3, 4, 5}) {
    FiniteField F(q == 4 ? 2 : q, q == 4 ? 2 : 1);
    for (int trial = 0; trial < 100; ++trial) {
      Mat<FiniteField> a(F, 3), b(F, 3);
      for (int i = 0; i < 9; ++i) {
        a.a[i] = next() % F.q();
        b.a[i] = next() % F.q();
      }
      CHECK(mat_det(F, mat_mul(F, a, b)) == F.mul(mat_det(F, a), mat_det(F, b)));
    }
  }
}
