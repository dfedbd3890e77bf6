#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clawchrome/generators.hpp"
#include "clawchrome/oracle.hpp"

namespace clawchrome {

// One generator family slice of a campaign.
struct FamilySpec {
    ClawFreeFamily family = ClawFreeFamily::line_of_random;
    int count = 0;
    int n_min = 6;
    int n_max = 18;
};

// Seeds are mandatory; there is no wall-clock entropy anywhere, so the JSONL
// output is a pure function of this struct.
struct CampaignConfig {
    std::vector<FamilySpec> families;
    uint64_t seed = 0;
    BoundKind bound = BoundKind::delta2;
    int slack = 3;
    uint64_t oracle_budget = kDefaultOracleBudget;
    int jobs = 1;
    std::string out_jsonl;
    std::string out_csv;

    void validate() const;  // counts positive, slack >= 0, ranges sane
    static CampaignConfig from_json(const std::string& text);
    static CampaignConfig from_json_file(const std::string& path);
};

struct CampaignSummary {
    int instances = 0;
    int violations = 0;
    int oracle_unknown = 0;
    int tight = 0;
    int skipped_existing = 0;  // resumed instances found in the JSONL

    bool ok() const { return violations == 0; }
};

// Generates instances, runs the family's colorer plus the oracle on each,
// appends one BoundReport JSONL row per instance (id order), regenerates the
// CSV summary. Resumable: rows already present in out_jsonl are kept and
// their instances skipped.
CampaignSummary run_campaign(const CampaignConfig& cfg);

// The per-instance work, exposed for tests: deterministic in (cfg, id).
BoundReport run_campaign_instance(const CampaignConfig& cfg, ClawFreeFamily family, int id, int n,
                                  uint64_t instance_seed);

}  // namespace clawchrome
