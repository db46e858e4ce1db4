#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "asl/places.hpp"

using namespace asl;

namespace {
mpz_class upow_z(std::uint64_t q, int n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, unsigned(n));
  return r;
}
}  // namespace

TEST_CASE("irreducibles: worked lists over F_3") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  auto lin = irreducibles(F3, 1);
  REQUIRE(lin.size() == 2);  // t+1, t+2 (t excluded)
  CHECK(lin[0].str() == "t+1");
  CHECK(lin[1].str() == "t+2");
  CHECK(count_places(3, 1) == 2);

  auto quad = irreducibles(F3, 2);
  CHECK(quad.size() == 3);
  CHECK(count_places(3, 2) == 3);
  for (const auto& f : quad) {
    CHECK(f.is_monic());
    CHECK(poly_is_irreducible(f));
  }
}

TEST_CASE("pi_q(1) = q - 1") {
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull, 25ull})
    CHECK(count_places(q, 1) == mpz_class(long(q - 1)));
}

TEST_CASE("count matches listing and sieve matches the gcd test") {
  for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx* B = make_field(p, e, 1);
    for (int d = 1; d <= (B->q == 3 ? 6 : 3); ++d) {
      auto list = irreducibles(B, d);
      CHECK(mpz_class(long(list.size())) == count_places(B->q, d));
      std::set<std::uint64_t> seen;
      for (const auto& f : list) {
        CHECK(f.degree() == d);
        CHECK(f.is_monic());
        CHECK(poly_is_irreducible(f));
        seen.insert(f.monic_index());
      }
      CHECK(seen.size() == list.size());  // duplicate-free
      CHECK(std::is_sorted(seen.begin(), seen.end()));
    }
  }
}

TEST_CASE("orbit partition: sum over d|a of d*pi_q(d) = q^a - 1") {
  // pi_q counts closed points of G_m, so 0 (the root of t) never appears
  // and the degrees partition the q^a - 1 nonzero elements.
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull}) {
    for (int a = 1; a <= 6; ++a) {
      mpz_class sum = 0;
      for (int d = 1; d <= a; ++d)
        if (a % d == 0) sum += d * count_places(q, d);
      CHECK(sum == upow_z(q, a) - 1);
    }
  }
}

TEST_CASE("prime number theorem sandwich (exact integers)") {
  for (std::uint64_t q : {3ull, 5ull, 9ull}) {
    for (int n = 2; n <= 8; ++n) {
      mpz_class npi = n * count_places(q, n);
      CHECK(npi <= upow_z(q, n));
      CHECK(npi >= upow_z(q, n) - 2 * upow_z(q, n / 2 + 1));
    }
  }
}

TEST_CASE("place_set: worked examples") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  auto ps1 = place_set(F3, 1);
  CHECK(ps1.size() == 2);
  for (const auto& v : ps1.places) CHECK(v.degree == 1);

  auto ps2 = place_set(F3, 2);
  CHECK(ps2.size() == 5);  // 2 + 3
  std::uint64_t degsum = 0;
  for (const auto& v : ps2.places) degsum += std::uint64_t(v.degree);
  CHECK(degsum == 8);  // 3^2 - 1

  // all q: P_q(1) has exactly q-1 places of degree 1
  for (auto [p, e] : {std::pair<int, int>{5, 1}, {7, 1}, {3, 2}}) {
    const FieldCtx* B = make_field(p, e, 1);
    auto ps = place_set(B, 1);
    CHECK(ps.size() == B->q - 1);
  }
}

TEST_CASE("beta is a root and has exact degree d_v") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  auto ps = place_set(F3, 4);
  const FieldCtx* top = make_field(3, 1, 4);
  for (const auto& v : ps.places) {
    CHECK(poly_eval(v.poly, v.beta).is_zero());
    CHECK(poly_eval(v.poly, v.beta_top).is_zero());
    // Frobenius orbit of beta has size exactly d_v
    FFElem x = v.beta;
    int orbit = 0;
    do {
      x = x.frobenius_q();
      ++orbit;
    } while (x != v.beta);
    CHECK(orbit == v.degree);
    CHECK(subfield_embed(v.beta, top) == v.beta_top);
  }
  // sorted by (degree, monic index)
  for (std::size_t i = 1; i < ps.places.size(); ++i) {
    auto key = [](const Place& v) {
      return std::make_pair(v.degree, v.poly.monic_index());
    };
    CHECK(key(ps.places[i - 1]) < key(ps.places[i]));
  }
}

TEST_CASE("place polynomials are never t and have nonzero constant term") {
  for (auto [p, e, a] : {std::tuple<int, int, int>{3, 1, 4}, {5, 1, 2}, {3, 2, 2}}) {
    const FieldCtx* B = make_field(p, e, 1);
    auto ps = place_set(B, a);
    mpz_class expected = 0;
    for (int d = 1; d <= a; ++d)
      if (a % d == 0) expected += count_places(B->q, d);
    CHECK(mpz_class(long(ps.size())) == expected);
    for (const auto& v : ps.places) CHECK(v.poly.c[0] != 0);
  }
}

TEST_CASE("enumeration cap is enforced") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  Caps tight;
  tight.enumeration_cap = 100;
  CHECK_THROWS_AS(place_set(F3, 5, tight), SizeCapExceeded);
  CHECK_THROWS_AS(irreducibles(F3, 5, tight), SizeCapExceeded);
}

TEST_CASE("polynomial division, gcd, derivative over F_9") {
  const FieldCtx* B = make_field(3, 2, 1);
  PolyFq f = poly_from_indices(B, {2, 0, 1, 1});  // t^3 + t^2 + 2
  PolyFq g = poly_from_indices(B, {1, 1});        // t + 1
  auto [q, r] = poly_divrem(f, g);
  CHECK(poly_add(poly_mul(q, g), r) == f);
  CHECK(r.degree() < g.degree());

  PolyFq h = poly_mul(f, g);
  CHECK(poly_gcd(h, g) == g);  // g monic divides h

  // derivative of t^9 - t is -1 over F_9 (char 3)
  std::vector<std::uint32_t> wp(10, 0);
  wp[9] = 1;
  wp[1] = B->q - 1;  // index of -1
  // careful: index of -1 in F_9 is the index of the element 2 = p-1
  wp[1] = std::uint32_t(B->index_of(-B->one()));
  PolyFq w = poly_from_indices(B, wp);
  PolyFq dw = poly_derivative(w);
  CHECK(dw.degree() == 0);
  CHECK(B->element(dw.c[0]) == -B->one());
}
