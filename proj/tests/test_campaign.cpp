#include <doctest.h>

#include <stirling/campaign.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace stirling;

namespace {

const Claim* find_claim(const std::vector<Claim>& claims, const std::string& id) {
    for (const auto& c : claims)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("config validation") {
    CampaignConfig bad;
    bad.tp_size = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CampaignConfig low;
    low.precision_bits = 32;
    CHECK_THROWS_AS(low.validate(), std::invalid_argument);
    CHECK_NOTHROW(CampaignConfig{}.validate());
}

TEST_CASE("the default registry is complete and duplicate free") {
    const auto claims = default_claims(CampaignConfig{});
    CHECK(claims.size() == 110);
    std::set<std::string> ids;
    for (const auto& c : claims) {
        CHECK(ids.insert(c.id).second);
        CHECK(!c.category.empty());
        CHECK(!c.anchor.empty());
        CHECK(!c.expected.empty());
        CHECK(static_cast<bool>(c.run));
        CHECK(!c.families.empty());
    }
}

TEST_CASE("family filtering") {
    CHECK(families_match(Family{"cycle", 0}, Family{"cycle", 3}));
    CHECK(families_match(Family{"cycle", 3}, Family{"cycle", 0}));
    CHECK(families_match(Family{"cycle", 3}, Family{"cycle", 3}));
    CHECK(!families_match(Family{"cycle", 3}, Family{"cycle", 4}));
    CHECK(!families_match(Family{"cycle", 3}, Family{"subset", 3}));

    CampaignConfig cfg;
    cfg.families = {{"cycle", 3}};
    const auto claims = default_claims(cfg);
    CHECK(!claims.empty());
    for (const auto& c : claims) CHECK(claim_selected(c, cfg.families));
    CHECK(find_claim(claims, "tp-cycle-r3") != nullptr);
    CHECK(find_claim(claims, "fals-cycle-rev-r3") != nullptr);
    CHECK(find_claim(claims, "oracle-words-r3") != nullptr);
    CHECK(find_claim(claims, "identity-diagonal") != nullptr);
    CHECK(find_claim(claims, "tp-subset-r2") == nullptr);
}

TEST_CASE("claim runner captures exceptions as errors") {
    const Claim boom{"boom", "synthetic", "always throws", "verified-to-cap", "none", "",
                     []() -> ClaimOutcome { throw std::runtime_error("kaput"); }};
    const ClaimResult r = run_claim(boom);
    CHECK(r.outcome.status == "error");
    CHECK(r.outcome.witness == "kaput");
    CHECK(!r.pass());
}

TEST_CASE("expected statuses for named claims") {
    const auto claims = default_claims(CampaignConfig{});
    const Claim* fals = find_claim(claims, "fals-subset-rev-r3");
    REQUIRE(fals != nullptr);
    const ClaimResult fr = run_claim(*fals);
    CHECK(fr.outcome.status == "falsified");
    CHECK(fr.pass());

    const Claim* disc = find_claim(claims, "disc-subset-report");
    REQUIRE(disc != nullptr);
    const ClaimResult dr = run_claim(*disc);
    CHECK(dr.outcome.status == "observed");
    CHECK(dr.pass());
    CHECK(!dr.outcome.witness.empty());
}

TEST_CASE("parallel execution matches serial") {
    CampaignConfig cfg;
    cfg.families = {{"eulerian", 2}};
    const auto claims = default_claims(cfg);
    REQUIRE(!claims.empty());
    const auto serial = run_claims(claims);
    const auto par = run_claims_parallel(claims, 2);
    REQUIRE(par.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(par[i].id == serial[i].id);
        CHECK(par[i].outcome.status == serial[i].outcome.status);
        CHECK(par[i].outcome.witness == serial[i].outcome.witness);
        CHECK(par[i].pass());
    }
}

TEST_CASE("a reduced campaign runs clean") {
    CampaignConfig small;
    small.tp_size = 6;
    small.hankel_size = 3;
    small.hankel_minor_order = 3;
    small.root_n_max = 6;
    small.oracle_n_max = 3;
    small.derangement_set_max = 5;
    small.logconcavity_rows = 20;
    const auto claims = default_claims(small);
    CHECK(claims.size() == 110);
    const auto results = run_claims(claims);
    REQUIRE(results.size() == claims.size());
    CHECK(mismatch_count(results) == 0);
    for (const auto& r : results) {
        CHECK(r.pass());
        CHECK(!r.outcome.witness.empty());
    }
}
