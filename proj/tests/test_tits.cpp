#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "f1/tits.hpp"

using namespace f1;

namespace {

struct Fixture {
  RootSystem rs;
  WeylGroup W;
  AbelianGroup D;
  ExtWeylGroup N;
  Fixture(const std::string& type, int order, int eps)
      : rs(RootSystem::make(type)), W(rs), D(AbelianGroup::cyclic(order, eps)), N(W, D) {}
};

}  // namespace

TEST_CASE("h_s values") {
  // trivial eps: h_s is the identity of the torus
  Fixture f("A2", 3, 0);
  for (int r = 0; r < f.rs.num_positive(); ++r) CHECK(f.N.h_of_root(r) == f.N.t_zero());

  // A1 simply connected, D = Z/2: h_s = (eps) since n_alpha(omega) = 1
  Fixture g("A1", 2, 1);
  CHECK(g.N.h_of_root(0) == TorusPoint{g.D.eps()});

  // h_s + h_s = 0 always
  Fixture h("G2", 4, 2);
  for (int r = 0; r < h.rs.num_positive(); ++r) {
    TorusPoint hs = h.N.h_of_root(r);
    CHECK(h.N.t_add(hs, hs) == h.N.t_zero());
    // replacing r by -r does not change h_s
    CHECK(h.N.h_of_root(h.rs.neg_index(r)) == hs);
  }
}

TEST_CASE("T_s subgroups") {
  // A1 simply connected over Z/4: nu0 = n_alpha, T_s is all of Hom(L,D)
  Fixture f("A1", 4, 2);
  CHECK(f.N.T_s(0).size() == 4);

  // size divides |D| and s inverts T_s
  for (auto spec : {std::pair{4, 2}, std::pair{6, 3}}) {
    Fixture g("B2", spec.first, spec.second);
    for (int r = 0; r < g.rs.num_positive(); ++r) {
      auto Ts = g.N.T_s(r);
      CHECK(g.D.size() % Ts.size() == 0);
      int s = g.W.reflection(r);
      for (const TorusPoint& t : Ts) CHECK(g.N.w_act(s, t) == g.N.t_neg(t));
    }
  }
}

TEST_CASE("torus multiplication is the trivial-cocycle case") {
  Fixture f("A2", 4, 2);
  for (long long c1 = 0; c1 < f.N.torus_size(); ++c1)
    for (long long c2 = 0; c2 < f.N.torus_size(); ++c2) {
      ExtEl a{f.N.t_decode(c1), f.W.identity()}, b{f.N.t_decode(c2), f.W.identity()};
      CHECK(f.N.mul(a, b) == ExtEl{f.N.t_add(a.t, b.t), f.W.identity()});
    }
}

TEST_CASE("A1 lift has order 4") {
  Fixture f("A1", 2, 1);
  int s = f.W.reflection(0);
  ExtEl a{f.N.t_zero(), s};
  ExtEl sq = f.N.mul(a, a);
  CHECK(sq.w == f.W.identity());
  CHECK(sq.t == f.N.h_of_root(0));
  CHECK(!(sq == f.N.identity()));
  CHECK(f.N.order_of(a) == 4);
}

TEST_CASE("extension cardinality and fibers") {
  Fixture f("A2", 4, 2);
  CHECK(f.N.size() == 16 * 6);
  CHECK(f.N.enumerate().size() == 96);
  // fiber over e is the torus; fibers partition N
  auto fib_e = f.N.fiber(f.W.identity());
  CHECK(fib_e.size() == 16);
  long long total = 0;
  for (int w = 0; w < f.W.size(); ++w) total += f.N.fiber(w).size();
  CHECK(total == f.N.size());
}

TEST_CASE("rank one: every fiber element over s squares to h_s") {
  for (auto spec : {std::pair{2, 1}, std::pair{4, 2}, std::pair{6, 3}}) {
    Fixture f("A1", spec.first, spec.second);
    int s = f.W.reflection(0);
    TorusPoint h = f.N.h_of_root(0);
    for (const ExtEl& a : f.N.fiber(s)) {
      ExtEl sq = f.N.mul(a, a);
      CHECK(sq.w == f.W.identity());
      CHECK(sq.t == h);
    }
  }
}

TEST_CASE("group axioms") {
  Fixture f("A2", 2, 1);
  auto all = f.N.enumerate();
  for (const ExtEl& a : all) {
    CHECK(f.N.mul(a, f.N.identity()) == a);
    CHECK(f.N.mul(f.N.identity(), a) == a);
    CHECK(f.N.mul(a, f.N.inverse(a)) == f.N.identity());
    CHECK(f.N.mul(f.N.inverse(a), a) == f.N.identity());
  }
  // associativity, exhaustively at this size (24^3 products)
  for (const ExtEl& a : all)
    for (const ExtEl& b : all)
      for (const ExtEl& c : all)
        CHECK(f.N.mul(f.N.mul(a, b), c) == f.N.mul(a, f.N.mul(b, c)));
}

TEST_CASE("reduced-word independence of lifted products") {
  Fixture f("B2", 4, 2);
  std::vector<ExtEl> base;
  for (int i = 0; i < f.rs.rank(); ++i)
    base.push_back({f.N.t_zero(), f.W.reflection(f.rs.simple_index(i))});
  for (int w = 0; w < f.W.size(); ++w) {
    auto words = f.W.reduced_words(w);
    for (size_t k = 1; k < words.size(); ++k) {
      ExtEl p0 = f.N.identity(), pk = f.N.identity();
      for (int i : words[0]) p0 = f.N.mul(p0, base[i]);
      for (int i : words[k]) pk = f.N.mul(pk, base[i]);
      CHECK(p0 == pk);
    }
  }
}

TEST_CASE("N_s structure") {
  Fixture f("A2", 6, 3);
  for (int r = 0; r < f.rs.num_positive(); ++r) {
    auto Ns = f.N.N_s(r);
    auto Ts = f.N.T_s(r);
    CHECK(Ns.size() == 2 * Ts.size());
    int s = f.W.reflection(r);
    std::set<TorusPoint> ts_set(Ts.begin(), Ts.end());
    for (const ExtEl& a : Ns) {
      if (a.w == f.W.identity())
        CHECK(ts_set.count(a.t) == 1);  // N_s n T = T_s
      else
        CHECK(a.w == s);  // p(N_s) = {1, s}
    }
    // the nontrivial coset sits inside the square-lift solution set
    auto sq = f.N.square_lifts(r);
    std::set<ExtEl> sq_set(sq.begin(), sq.end());
    for (const ExtEl& a : Ns)
      if (a.w == s) CHECK(sq_set.count(a) == 1);
  }
}

TEST_CASE("square lifts can exceed the N_s coset when D has 2-torsion") {
  Fixture f("A1xA1", 2, 1);
  auto Ns = f.N.N_s(0);
  auto sq = f.N.square_lifts(0);
  CHECK(Ns.size() == 4);       // T_s u T_s a_s, |T_s| = 2
  CHECK(sq.size() == 4);       // every (t, s) squares to h_s here
  // and the orthogonal direction contributes the extra solutions: Q_s of the
  // extended Coxeter group maps onto a proper subset in general
  Fixture g("A1xA1", 4, 2);
  CHECK(g.N.N_s(0).size() == 2 * g.N.T_s(0).size());
  CHECK(g.N.square_lifts(0).size() == 8);  // (t1, t2) with s(t)+t = (2t1?, 2t2) pinned
}

TEST_CASE("restricted torus along the simply connected cover") {
  // simply connected: the restriction is all of Hom(L, D)
  RootSystem sc = RootSystem::make("A1");
  auto [cover0, phi0] = simply_connected_cover(sc);
  AbelianGroup z4 = AbelianGroup::cyclic(4, 2);
  CHECK(restricted_torus(phi0, z4).size() == 4);

  // adjoint A1: alpha = 2 omega, image = doubled values
  RootSystem adj = RootSystem::make("A1", LatticeTag::Adjoint);
  auto [cover, phi] = simply_connected_cover(adj);
  auto sub4 = restricted_torus(phi, z4);
  CHECK(sub4.size() == 2);  // index 2
  for (const TorusPoint& t : sub4) CHECK(t[0] % 2 == 0);

  // odd order: doubling is onto
  AbelianGroup z3 = AbelianGroup::cyclic(3);
  CHECK(restricted_torus(phi, z3).size() == 3);

  // adjoint A2 has an index-3 cover: proper image exactly when 3 | |D|
  RootSystem a2adj = RootSystem::make("A2", LatticeTag::Adjoint);
  auto [cover2, phi2] = simply_connected_cover(a2adj);
  CHECK(restricted_torus(phi2, z3).size() == 3);  // index 3 in 9
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  CHECK(restricted_torus(phi2, z2).size() == 4);  // odd determinant: onto
}

TEST_CASE("amalgamated generation") {
  Fixture a("A1", 2, 1);
  CHECK(amalgamated_check(a.N));
  Fixture b("A1", 4, 2);
  CHECK(amalgamated_check(b.N));
  Fixture c("A2", 6, 3);
  CHECK(amalgamated_check(c.N));
}

TEST_CASE("functoriality of the extension") {
  RootSystem rs = RootSystem::make("A1");
  WeylGroup W(rs);
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  AbelianGroup z4 = AbelianGroup::cyclic(4, 2);
  ExtWeylGroup N2(W, z2), N4(W, z4);
  GroupHom f{&z2, &z4, {z4.eps()}};
  for (const ExtEl& a : N2.enumerate())
    for (const ExtEl& b : N2.enumerate()) {
      ExtEl lhs = induced_map(f, N2.mul(a, b));
      ExtEl rhs = N4.mul(induced_map(f, a), induced_map(f, b));
      CHECK(lhs == rhs);
      CHECK(induced_map(f, a).w == a.w);  // commutes with p
    }
}

TEST_CASE("functoriality along general pointed morphisms") {
  RootSystem rs = RootSystem::make("A2");
  WeylGroup W(rs);

  // Z/4 -> Z/2xZ/4, gen -> (0,1): eps = 2 -> (0,2)
  AbelianGroup z4 = AbelianGroup::cyclic(4, 2);
  AbelianGroup mixed({2, 4}, {0, 2});
  GroupHom f{&z4, &mixed, {mixed.index({0, 1})}};
  REQUIRE(f.apply(z4.eps()) == mixed.eps());
  ExtWeylGroup Nsrc(W, z4), Ndst(W, mixed);
  auto all = Nsrc.enumerate();
  for (const ExtEl& a : all)
    for (const ExtEl& b : all)
      CHECK(induced_map(f, Nsrc.mul(a, b)) == Ndst.mul(induced_map(f, a), induced_map(f, b)));

  // Z/6 -> Z/2, gen -> 1: eps = 3 -> 1
  AbelianGroup z6 = AbelianGroup::cyclic(6, 3);
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  GroupHom g{&z6, &z2, {1}};
  REQUIRE(g.apply(z6.eps()) == z2.eps());
  ExtWeylGroup N6(W, z6), N2b(W, z2);
  auto all6 = N6.enumerate();
  for (const ExtEl& a : all6)
    for (const ExtEl& b : all6)
      CHECK(induced_map(g, N6.mul(a, b)) == N2b.mul(induced_map(g, a), induced_map(g, b)));
}
