#include "gralg/groups.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gralg;

namespace {

std::vector<GroupSpec> specs_up_to(int max_log2_order) {
  std::vector<GroupSpec> out;
  const Family fams[] = {Family::D1, Family::D2, Family::D3, Family::D4, Family::D5, Family::D5xC};
  for (Family f : fams) {
    std::vector<std::vector<int>> ms{{}};
    for (std::size_t i = 0; i < family_arity(f); ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& v : ms)
        for (int m = 1; m <= 8; ++m) {
          auto w = v;
          w.push_back(m);
          next.push_back(w);
        }
      ms = std::move(next);
    }
    for (auto& v : ms) {
      auto s = GroupSpec::make(f, v);
      if (s.log2_order() <= max_log2_order) out.push_back(s);
    }
  }
  return out;
}

// |{g in S : g^{2^j} in N}| / |N| for a subgroup S given as indices and a normal subgroup N.
std::vector<std::uint64_t> quotient_torsion_profile(const Group& g, const std::vector<std::uint32_t>& sub,
                                                    const std::set<std::uint32_t>& normal, int max_j) {
  std::vector<std::uint64_t> out(max_j + 1, 0);
  for (std::uint32_t i : sub) {
    const auto e = g.element(i);
    for (int j = 0; j <= max_j; ++j)
      if (normal.count(g.index(g.power(e, std::int64_t{1} << j)))) ++out[j];
  }
  for (auto& v : out) v /= normal.size();
  return out;
}

std::vector<std::uint64_t> torsion_profile(const AbelianType& a, int max_j) {
  std::vector<std::uint64_t> out;
  for (int j = 0; j <= max_j; ++j) {
    std::uint64_t n = 1;
    for (int e : a.exps().exps()) n <<= std::min(e, j);
    out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("spec validation and naming") {
  CHECK(GroupSpec::make(Family::D3, {1, 2}).name() == "D3(1,2)");
  CHECK(parse_family("d5xc") == Family::D5xC);
  CHECK_THROWS_AS(parse_family("D6"), DomainError);
  CHECK_THROWS_AS(GroupSpec::make(Family::D1, {1, 2}), DomainError);
  CHECK_THROWS_AS(GroupSpec::make(Family::D4, {0, 2}), DomainError);
  CHECK(Group(GroupSpec::make(Family::D5xC, {1, 2, 3, 4})).order() == 4 * 1024);
}

TEST_CASE("defining relations") {
  const Group d1(GroupSpec::make(Family::D1, {1}));
  CHECK(d1.multiply(d1.x(), d1.y()) == GroupElement{{0}, 1, 1});
  for (const auto& spec : specs_up_to(9)) {
    const Group g(spec);
    CAPTURE(spec.name());
    CHECK(g.multiply(g.y(), g.x()) == g.multiply(g.s(), g.multiply(g.x(), g.y())));
    CHECK(g.commutator(g.x(), g.y()) == g.s());
    CHECK(g.multiply(g.s(), g.s()) == g.identity());
    CHECK(g.s() != g.identity());
  }
  for (int m = 1; m <= 6; ++m) {
    const Group d2(GroupSpec::make(Family::D2, {m}));
    CHECK(d2.multiply(d2.x(), d2.x()) == d2.t(0));
    CHECK(d2.multiply(d2.y(), d2.y()) == d2.t(0));
  }
}

TEST_CASE("associativity, inverses and powers, exhaustive up to order 512") {
  for (const auto& spec : specs_up_to(9)) {
    const Group g(spec);
    const std::uint32_t n = g.enumerable_size(512);
    CAPTURE(spec.name());
    std::vector<GroupElement> els;
    for (std::uint32_t i = 0; i < n; ++i) els.push_back(g.element(i));
    std::vector<std::uint32_t> table(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) table[a * n + b] = g.index(g.multiply(els[a], els[b]));
    bool assoc = true;
    for (std::uint32_t a = 0; a < n && assoc; ++a)
      for (std::uint32_t b = 0; b < n && assoc; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) {
            assoc = false;
            break;
          }
    CHECK(assoc);
    for (std::uint32_t a = 0; a < n; ++a) {
      CHECK(table[a * n + g.index(g.inverse(els[a]))] == 0);
      GroupElement acc = g.identity();
      for (int r = 0; r <= 9; ++r) {
        REQUIRE(g.power(els[a], r) == acc);
        acc = g.multiply(acc, els[a]);
      }
      CHECK(g.power(els[a], -3) == g.inverse(g.power(els[a], 3)));
    }
  }
}

TEST_CASE("associativity on random triples of larger groups") {
  std::mt19937_64 rng(99);
  for (const auto& spec : {GroupSpec::make(Family::D5xC, {4, 3, 5, 6}), GroupSpec::make(Family::D3, {20, 17}),
                           GroupSpec::make(Family::D2, {40})}) {
    const Group g(spec);
    auto random_el = [&] {
      GroupElement e = g.identity();
      for (std::size_t i = 0; i < spec.ms.size(); ++i) e.central[i] = rng() & ((std::uint64_t{1} << spec.ms[i]) - 1);
      e.dx = rng() & 1;
      e.dy = rng() & 1;
      return e;
    };
    for (int k = 0; k < 2000; ++k) {
      const auto a = random_el(), b = random_el(), c = random_el();
      CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    }
  }
}

TEST_CASE("centre and commutator subgroup by enumeration") {
  for (const auto& spec : specs_up_to(10)) {
    const Group g(spec);
    const std::uint32_t n = g.enumerable_size(1024);
    CAPTURE(spec.name());
    std::vector<std::uint32_t> centre, all;
    std::set<std::uint32_t> commutators;
    for (std::uint32_t i = 0; i < n; ++i) {
      all.push_back(i);
      const auto e = g.element(i);
      const bool c = g.multiply(e, g.x()) == g.multiply(g.x(), e) && g.multiply(e, g.y()) == g.multiply(g.y(), e);
      CHECK(c == g.is_central(e));
      if (c) centre.push_back(i);
      commutators.insert(g.index(g.commutator(e, g.x())));
      commutators.insert(g.index(g.commutator(e, g.y())));
    }
    CHECK(commutators == std::set<std::uint32_t>{0, g.index(g.s())});
    const std::set<std::uint32_t> trivial{0};
    CHECK(torsion_profile(center(spec), 8) == quotient_torsion_profile(g, centre, trivial, 8));
    CHECK(torsion_profile(center_mod_commutator(spec), 8) == quotient_torsion_profile(g, centre, commutators, 8));
    const auto ab = abelianization(spec);
    CHECK(ab.order() * 2 == g.order());
    CHECK(torsion_profile(ab, 8) == quotient_torsion_profile(g, all, commutators, 8));
    for (Coset w : {Coset::X, Coset::Y, Coset::XY}) {
      std::vector<std::uint32_t> h = centre;
      const GroupElement rep{std::vector<std::uint64_t>(spec.ms.size(), 0), static_cast<std::uint8_t>(w != Coset::Y),
                             static_cast<std::uint8_t>(w != Coset::X)};
      for (std::uint32_t c : centre) h.push_back(g.index(g.multiply(g.element(c), rep)));
      const auto sq = coset_subquotient(spec, w);
      CHECK(sq.order() * 2 == h.size());
      CHECK(torsion_profile(sq, 8) == quotient_torsion_profile(g, h, commutators, 8));
    }
  }
}

TEST_CASE("abelianization and subquotient spot values") {
  for (int m = 1; m <= 8; ++m) CHECK(abelianization(GroupSpec::make(Family::D2, {m})) == AbelianType{m, 1});
  CHECK(abelianization(GroupSpec::make(Family::D1, {2})) == AbelianType{1, 1, 1});
  CHECK(abelianization(GroupSpec::make(Family::D1, {1})) == AbelianType{1, 1});
  for (int m1 = 3; m1 <= 7; ++m1)
    for (int m2 = 3; m2 <= 7; ++m2) CHECK(abelianization(GroupSpec::make(Family::D4, {m1, m2})) == AbelianType{m1, m2 + 1});
  for (int m = 3; m <= 8; ++m) CHECK(coset_subquotient(GroupSpec::make(Family::D2, {m}), Coset::XY) == AbelianType{m - 1, 1});
  CHECK(coset_subquotient(GroupSpec::make(Family::D3, {1, 1}), Coset::Y) == AbelianType{2});
  CHECK(coset_subquotient(GroupSpec::make(Family::D5xC, {1, 1, 1, 1}), Coset::X) == AbelianType{2, 1, 1});
}

TEST_CASE("conjugacy classes") {
  auto tally = [](const std::vector<ConjClass>& cs) {
    std::pair<int, int> out{0, 0};
    for (const auto& c : cs) (c.size == 1 ? out.first : out.second)++;
    return out;
  };
  CHECK(tally(conjugacy_classes(GroupSpec::make(Family::D1, {2}))) == std::pair{4, 6});
  CHECK(tally(conjugacy_classes(GroupSpec::make(Family::D2, {1}))) == std::pair{2, 3});
  for (const auto& spec : specs_up_to(10)) {
    const Group g(spec);
    const auto cs = conjugacy_classes(spec);
    std::uint64_t total = 0, singles = 0;
    for (const auto& c : cs) {
      total += c.size;
      singles += c.size == 1;
      CHECK((c.size == 1) == g.is_central(c.representative));
    }
    CHECK(cs.front().representative == g.identity());
    CHECK(Count{total} == g.order());
    CHECK(Count{singles} == center(spec).order());
    CHECK(Count{cs.size()} == center(spec).order() + (g.order() - center(spec).order()) / 2);
  }
  CHECK_THROWS_AS(conjugacy_classes(GroupSpec::make(Family::D3, {10, 10}), 1024), CeilingExceeded);
}
