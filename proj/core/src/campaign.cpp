#include "clawchrome/campaign.hpp"

#include <atomic>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clawchrome/colorers.hpp"
#include "clawchrome/params.hpp"
#include "json.hpp"

namespace clawchrome {

void CampaignConfig::validate() const {
    if (families.empty()) throw std::invalid_argument("campaign: no families configured");
    for (const auto& f : families) {
        if (f.count <= 0) throw std::invalid_argument("campaign: counts must be positive");
        if (f.n_min < 1 || f.n_max < f.n_min)
            throw std::invalid_argument("campaign: bad size range");
    }
    if (slack < 0) throw std::invalid_argument("campaign: slack must be >= 0");
    if (jobs < 1) throw std::invalid_argument("campaign: jobs must be >= 1");
    if (out_jsonl.empty()) throw std::invalid_argument("campaign: out_jsonl path required");
}

CampaignConfig CampaignConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CampaignConfig cfg;
    if (!j.contains("seed"))
        throw std::invalid_argument("campaign config: seed is mandatory");
    cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("bound")) {
        std::string b = j.at("bound").get<std::string>();
        if (b == "delta2")
            cfg.bound = BoundKind::delta2;
        else if (b == "delta_e")
            cfg.bound = BoundKind::delta_e;
        else
            throw std::invalid_argument("campaign config: bound must be delta2 or delta_e");
    }
    cfg.slack = j.value("slack", 3);
    cfg.oracle_budget = j.value("oracle_budget", kDefaultOracleBudget);
    cfg.jobs = j.value("jobs", 1);
    cfg.out_jsonl = j.value("out_jsonl", "");
    cfg.out_csv = j.value("out_csv", "");
    for (const auto& fj : j.at("families")) {
        FamilySpec fs;
        auto fam = family_from_name(fj.at("family").get<std::string>());
        if (!fam)
            throw std::invalid_argument("campaign config: unknown family " +
                                        fj.at("family").get<std::string>());
        fs.family = *fam;
        fs.count = fj.at("count").get<int>();
        fs.n_min = fj.value("n_min", 6);
        fs.n_max = fj.value("n_max", 18);
        cfg.families.push_back(fs);
    }
    cfg.validate();
    return cfg;
}

CampaignConfig CampaignConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open campaign config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

namespace {

std::string instance_id(ClawFreeFamily family, int id) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05d", id);
    return family_name(family) + "-" + buf;
}

}  // namespace

BoundReport run_campaign_instance(const CampaignConfig& cfg, ClawFreeFamily family, int id, int n,
                                  uint64_t instance_seed) {
    ClawFreeInstance inst = random_claw_free(n, family, instance_seed);
    const Graph& g = inst.graph;

    BoundReport report = verify_bound(g, cfg.bound, cfg.slack, cfg.oracle_budget,
                                      instance_id(family, id));

    auto record = [&](const std::string& name, int colors) {
        report.colors_used[name] = colors;
        if (colors > report.parameter() + cfg.slack) {
            report.violation = true;
            std::ostringstream os;
            os << name << " used " << colors << " > " << bound_kind_name(cfg.bound) << "+"
               << cfg.slack;
            report.violations.push_back(os.str());
        }
    };

    switch (family) {
        case ClawFreeFamily::line_of_random: {
            auto lc = color_line_graph(*inst.root);
            record("line", lc.coloring.count_colors());
            break;
        }
        case ClawFreeFamily::circular_interval: {
            int d2 = g.n() >= 2 ? delta2(g) : 0;
            auto c = color_circular_interval(g, *inst.rep,
                                             ListAssignment::uniform(g.n(), d2 + 3));
            record("circular", c.count_colors());
            auto tight = color_circular_interval_tight(g, *inst.rep,
                                                       ListAssignment::uniform(g.n(), d2 + 2));
            record("circular-tight", tight.colors_used);
            break;
        }
        case ClawFreeFamily::thickened_ribbon: {
            auto c = color_three_cliqued(g, *inst.three_cliqued);
            record("three-cliqued", c.count_colors());
            break;
        }
        case ClawFreeFamily::complement_trianglefree: {
            auto c = color_alpha2(g);
            record("alpha2", c.count_colors());
            break;
        }
    }
    return report;
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
    cfg.validate();

    struct Task {
        ClawFreeFamily family;
        int id;
        int n;
        uint64_t seed;
    };

    // instance plan is a pure function of the seed, independent of resume
    // state and of the worker count
    std::vector<Task> plan;
    Rng master(cfg.seed);
    int id = 0;
    for (const auto& fs : cfg.families)
        for (int i = 0; i < fs.count; ++i) {
            Task t;
            t.family = fs.family;
            t.id = id++;
            t.n = master.uniform(fs.n_min, fs.n_max);
            t.seed = master.next();
            plan.push_back(t);
        }

    // resume: keep rows already present
    std::vector<std::string> existing_rows;
    std::set<std::string> done_ids;
    {
        std::ifstream in(cfg.out_jsonl);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            existing_rows.push_back(line);
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (!j.is_discarded() && j.contains("graph_id"))
                done_ids.insert(j.at("graph_id").get<std::string>());
        }
    }

    std::vector<Task> pending;
    for (const auto& t : plan)
        if (!done_ids.count(instance_id(t.family, t.id))) pending.push_back(t);

    std::vector<std::optional<BoundReport>> results(pending.size());
    std::atomic<size_t> cursor{0};
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    auto worker = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= pending.size()) break;
            const Task& t = pending[i];
            results[i] = run_campaign_instance(cfg, t.family, t.id, t.n, t.seed);
        }
    };
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    // single collector: rows appended in instance-id order
    std::ofstream out(cfg.out_jsonl, std::ios::app);
    if (!out) throw std::runtime_error("campaign: cannot write " + cfg.out_jsonl);
    std::vector<BoundReport> fresh;
    for (auto& r : results) {
        out << r->to_jsonl() << '\n';
        fresh.push_back(*r);
    }
    out.close();

    CampaignSummary summary;
    summary.instances = (int)plan.size();
    summary.skipped_existing = (int)existing_rows.size();

    auto tally = [&](bool violation, bool unknown, bool tight) {
        if (violation) summary.violations++;
        if (unknown) summary.oracle_unknown++;
        if (tight) summary.tight++;
    };
    for (const auto& line : existing_rows) {
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        tally(j.value("violation", false), j.at("chi").is_null(), j.value("tight", false));
    }
    for (const auto& r : fresh) tally(r.violation, !r.chi_known, r.tight);

    if (!cfg.out_csv.empty()) {
        std::ofstream csv(cfg.out_csv);
        if (!csv) throw std::runtime_error("campaign: cannot write " + cfg.out_csv);
        csv << BoundReport::csv_header() << '\n';
        for (const auto& line : existing_rows) {
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            csv << j.at("graph_id").get<std::string>() << ',' << j.at("n").get<int>() << ','
                << j.at("delta2").get<int>() << ',' << j.at("delta_e").get<int>() << ',';
            if (j.at("chi").is_null())
                csv << "unknown";
            else
                csv << j.at("chi").get<int>();
            csv << ',' << (j.value("violation", false) ? "false" : "true") << '\n';
        }
        for (const auto& r : fresh) csv << r.to_csv_row() << '\n';
    }
    return summary;
}

}  // namespace clawchrome
