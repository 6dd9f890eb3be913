#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "herglotz/relations.hpp"
#include "oracles.hpp"

using namespace herglotz;
using namespace herglotz::relations;

namespace {

std::vector<IdentityId> all_ids() {
  std::vector<IdentityId> ids;
  for (const IdentityInfo& i : identities()) ids.push_back(i.id);
  return ids;
}

void check_rule(const RelationReport& r) {
  const double allowed = std::max(r.tolerance, 10 * (r.lhs.error_estimate + r.rhs.error_estimate));
  CHECK(r.residual == std::abs(r.lhs.value - r.rhs.value));
  CHECK(r.pass == (r.residual <= allowed));
}

}  // namespace

TEST_CASE("frozen composite values") {
  CHECK(std::abs(G_fn(1.0).value - 0.82246574455002847781) <= 1e-10);
  CHECK(std::abs(G_fn(2.0).value - 0.56639282440783702032) <= 1e-10);
  CHECK(std::abs(F_fn(2.0).value - 0.12839812955114543058) <= 1e-10);
  CHECK(std::abs(F1_fn(2.0).value - 0.98258279010293363867) <= 1e-10);
  CHECK(std::abs(herglotz_F1_closed_form().value - (-0.91624014984429583)) <= 1e-14);
}

TEST_CASE("every representation of H feeds G the same way") {
  for (HRep rep : {HRep::divisor, HRep::single}) {
    CAPTURE(hrep_name(rep));
    CHECK(std::abs(G_fn(1.5, 1e-8, rep).value - G_fn(1.5, 1e-8).value) <= 1e-9);
    CHECK(std::abs(F_fn(1.5, 1e-8, rep).value - F_fn(1.5, 1e-8).value) <= 1e-9);
  }
}

TEST_CASE("modular relations are trivially exact at the fixed point") {
  for (IdentityId id : {IdentityId::THM_1_1, IdentityId::THM_3_2, IdentityId::LEMMA_3_1, IdentityId::F1_K1}) {
    const RelationReport r = verify(id, 1.0, 1e-6);
    CHECK(r.residual == 0.0);
    CHECK(r.pass);
  }
}

TEST_CASE("swapping alpha and 1/alpha swaps the sides") {
  for (IdentityId id : {IdentityId::THM_1_1, IdentityId::THM_3_2, IdentityId::RAMANUJAN_W126}) {
    for (double a : {0.5, 4.0}) {
      const RelationReport r = verify(id, a, 1e-6);
      const RelationReport s = verify(id, 1 / a, 1e-6);
      CAPTURE(info(id).name);
      REQUIRE(r.params.size() == 2);
      CHECK(r.params[1] == 1 / a);
      CHECK(std::abs(r.lhs.value - s.rhs.value) <= 1e-12);
      CHECK(std::abs(r.rhs.value - s.lhs.value) <= 1e-12);
      CHECK(std::abs(r.residual - s.residual) <= 1e-12);
    }
  }
}

TEST_CASE("default grids pass and follow the rule") {
  const std::vector<IdentityId> ids = all_ids();
  const std::vector<RelationReport> reports = verify_grid(ids, 4);
  std::size_t expected = 0;
  for (const IdentityInfo& i : identities()) expected += i.default_grid.size();
  REQUIRE(reports.size() == expected);
  std::size_t k = 0;
  for (const IdentityInfo& i : identities()) {
    for (double p : i.default_grid) {
      const RelationReport& r = reports[k++];
      CAPTURE(i.name);
      CAPTURE(p);
      CHECK(r.identity == i.id);
      CHECK(r.params.front() == p);
      CHECK(r.tolerance == i.default_tol);
      CHECK(r.pass);
      CHECK(r.residual <= r.tolerance);
      check_rule(r);
    }
  }
}

TEST_CASE("parallel grids are bitwise identical to serial ones") {
  const std::vector<IdentityId> ids{IdentityId::THM_1_1, IdentityId::WIGERT, IdentityId::A_PAIRING};
  const auto a = verify_grid(ids, 1);
  const auto b = verify_grid(ids, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity == b[i].identity);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].lhs.value == b[i].lhs.value);
    CHECK(a[i].rhs.value == b[i].rhs.value);
    CHECK(a[i].lhs.error_estimate == b[i].lhs.error_estimate);
  }
}

TEST_CASE("tighter budgets never loosen the error estimates") {
  double prev = 1.0;
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const RelationReport r = verify(IdentityId::THM_1_1, 2.0, tol);
    const double e = r.lhs.error_estimate + r.rhs.error_estimate;
    CHECK(e <= prev);
    CHECK(r.pass);
    check_rule(r);
    prev = e;
  }
}

TEST_CASE("an unreachable tolerance is judged against the error estimates") {
  // At 1e-14 the estimates dominate, so the report must say which rule applied.
  const RelationReport r = verify(IdentityId::KLOOSTERMAN, 1.0, 1e-14);
  check_rule(r);
}

TEST_CASE("identity table") {
  CHECK(identities().size() == 17);
  for (const IdentityInfo& i : identities()) {
    CHECK(parse_identity(i.name) == i.id);
    CHECK(&info(i.id) == &i);
    CHECK_FALSE(i.default_grid.empty());
  }
  CHECK_FALSE(parse_identity("thm9.9").has_value());
  CHECK(parse_identity("ramanujan.w126") == IdentityId::RAMANUJAN_W126);
}

TEST_CASE("verify refusals") {
  CHECK_THROWS_AS(verify(IdentityId::THM_1_1, -1.0, 1e-6), DomainError);
  CHECK_THROWS_AS(verify(IdentityId::THM_1_1, std::nan(""), 1e-6), DomainError);
  CHECK_THROWS_AS(verify(IdentityId::THM_1_1, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(verify(IdentityId::WIGERT, 1e-4, 1e-8), DomainError);
  CHECK_THROWS(verify(IdentityId::ZAGIER_2TERM, 0.01, 1e-8));
}
