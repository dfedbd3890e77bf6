// clawchrome: parameters, class recognition, constructive coloring, bound
// verification, gadget generation, and bound campaigns for claw-free graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "clawchrome/campaign.hpp"
#include "clawchrome/cliques.hpp"
#include "clawchrome/colorers.hpp"
#include "clawchrome/errors.hpp"
#include "clawchrome/generators.hpp"
#include "clawchrome/io.hpp"
#include "clawchrome/matching.hpp"
#include "clawchrome/oracle.hpp"
#include "clawchrome/params.hpp"
#include "clawchrome/recognize.hpp"
#include "json.hpp"

using namespace clawchrome;
using ordered_json = nlohmann::ordered_json;

namespace {

uint64_t oracle_budget_from_env(uint64_t fallback) {
    const char* env = std::getenv("CLAWCHROME_ORACLE_BUDGET");
    if (!env) return fallback;
    return std::strtoull(env, nullptr, 10);
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << '\n';
    }
}

int cmd_params(const std::string& file) {
    Graph g = read_graph_file(file);
    ordered_json j;
    j["n"] = g.n();
    j["m"] = g.edge_count();
    j["max_degree"] = g.max_degree();
    if (g.n() >= 2) {
        j["delta2"] = delta2(g);
        j["max_anticodegree"] = max_anticodegree(g);
    } else {
        j["delta2"] = nullptr;
        j["max_anticodegree"] = nullptr;
    }
    j["delta_e"] = delta_e(g);
    auto progress = [](uint64_t nodes) {
        std::cerr << "exact clique search: " << nodes << " nodes...\n";
    };
    j["omega"] = clique_number(g, progress);
    j["alpha"] = independence_number(g, progress);
    j["matching_number"] = maximum_matching(g).size();
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_recognize(const std::string& file, const std::string& cls) {
    Graph g = read_graph_file(file);
    ordered_json j;
    j["class"] = cls;
    j["witness"] = ordered_json::array();
    auto put_witness = [&](const std::vector<int>& w) { j["witness"] = w; };

    if (cls == "claw") {
        auto w = find_claw(g);
        j["holds"] = w.has_value();
        if (w) put_witness(w->vertices);
    } else if (cls == "triad") {
        auto w = find_triad(g);
        j["holds"] = w.has_value();
        if (w) put_witness(w->vertices);
    } else if (cls == "triangle-free") {
        auto w = find_triangle(g);
        j["holds"] = !w.has_value();
        if (w) put_witness(w->vertices);
    } else if (cls == "quasi-line") {
        auto q = is_quasi_line(g);
        j["holds"] = q.quasi_line;
        if (!q.quasi_line) {
            std::vector<int> w{q.vertex};
            w.insert(w.end(), q.odd_cycle.begin(), q.odd_cycle.end());
            put_witness(w);
        }
    } else if (cls == "prismatic") {
        auto p = is_prismatic(g);
        j["holds"] = p.prismatic;
        if (!p.prismatic) {
            put_witness({p.triangle[0], p.triangle[1], p.triangle[2], p.vertex});
            j["adjacency_count"] = p.adjacency_count;
        }
    } else if (cls == "antiprismatic") {
        j["holds"] = is_antiprismatic(g);
    } else if (cls == "clique-cutset") {
        auto r = find_clique_cutset(g);
        j["holds"] = r.status == CliqueCutsetResult::Status::found;
        if (r.status == CliqueCutsetResult::Status::found) put_witness(r.cutset);
        if (r.status == CliqueCutsetResult::Status::not_attempted) j["status"] = "not-attempted";
    } else if (cls == "dominated-pair" || cls == "dominated-pair-adjacent") {
        auto p = find_dominated_pair(g, cls == "dominated-pair-adjacent");
        j["holds"] = p.has_value();
        if (p) put_witness({p->first, p->second});
    } else {
        throw CLI::ValidationError("unknown class: " + cls);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

ordered_json coloring_json(const Coloring& c) {
    ordered_json m = ordered_json::object();
    for (int v = 0; v < c.n(); ++v) m[std::to_string(v)] = c.color[v];
    return m;
}

int cmd_color(const std::string& file, const std::string& method, const std::string& cert_path,
              const std::string& lists_path, const std::string& out_path, uint64_t budget) {
    Graph g = read_graph_file(file);
    ordered_json j;
    j["method"] = method;
    Coloring result;
    std::string fired = method;

    auto load_lists = [&](int fallback_size) {
        if (!lists_path.empty()) return lists_from_json(slurp_file(lists_path), g.n());
        return ListAssignment::uniform(g.n(), fallback_size);
    };

    try {
        if (method == "line") {
            if (cert_path.empty())
                throw std::invalid_argument("method=line needs --cert <root multigraph file>");
            Multigraph root = read_multigraph_file(cert_path);
            auto lc = color_line_graph(root);
            if (!(lc.line == g))
                throw invalid_certificate("input graph is not the line graph of the given root");
            result = lc.coloring;
        } else if (method == "circular" || method == "circular-tight") {
            if (cert_path.empty())
                throw std::invalid_argument("circular methods need --cert <rep json>");
            auto rep = rep_from_json(slurp_file(cert_path));
            int d2 = g.n() >= 2 ? delta2(g) : 0;
            if (method == "circular") {
                result = color_circular_interval(g, rep, load_lists(d2 + 3));
            } else {
                auto tight = color_circular_interval_tight(g, rep, load_lists(d2 + 2));
                result = tight.coloring;
                j["delta_e_plus_two"] = tight.delta_e_plus_two;
                j["exceeds_delta_e_bound"] = tight.exceeds_delta_e_bound;
            }
        } else if (method == "alpha2") {
            result = color_alpha2(g);
        } else if (method == "prismatic") {
            // clique cover of a prismatic input; the coloring lives on the complement
            auto cover = cover_prismatic(g);
            ordered_json parts = ordered_json::array();
            for (const auto& part : cover.parts) parts.push_back(part);
            j["clique_cover"] = parts;
            j["cover_size"] = cover.part_count();
            g = g.complement();
            result = cover_to_coloring(g, cover);
            j["note"] = "coloring applies to the complement of the input";
        } else if (method == "antiprismatic") {
            result = color_antiprismatic(g);
        } else if (method == "three-cliqued") {
            if (cert_path.empty())
                throw std::invalid_argument("method=three-cliqued needs --cert <k1/k2/k3 json>");
            result = color_three_cliqued(g, three_cliqued_from_json(slurp_file(cert_path)));
        } else if (method == "icosahedral") {
            if (cert_path.empty())
                throw std::invalid_argument("method=icosahedral needs --cert <embedding json>");
            auto cj = nlohmann::json::parse(slurp_file(cert_path));
            std::vector<int> embedding = cj.contains("embedding")
                                             ? cj.at("embedding").get<std::vector<int>>()
                                             : cj.get<std::vector<int>>();
            result = color_icosahedral(g, embedding);
        } else if (method == "oracle") {
            auto r = chromatic_number(g, budget);
            if (!r.known) {
                j["fired"] = "oracle";
                j["status"] = "unknown";
                j["nodes"] = r.nodes;
                emit(j, out_path);
                return 3;
            }
            result = r.coloring;
        } else if (method == "auto") {
            // recognizer ladder: alpha2, then the certificate-free claw-free
            // classes, then the exact oracle
            if (!find_triad(g)) {
                result = color_alpha2(g);
                fired = "alpha2";
            } else if (is_antiprismatic(g)) {
                result = color_antiprismatic(g);
                fired = "antiprismatic";
            } else {
                auto r = chromatic_number(g, budget);
                if (!r.known) throw std::runtime_error("oracle budget exceeded in auto mode");
                result = r.coloring;
                fired = "oracle";
            }
        } else {
            throw CLI::ValidationError("unknown method: " + method);
        }
    } catch (const invalid_certificate& e) {
        j["error"] = std::string("invalid-certificate: ") + e.what();
        emit(j, out_path);
        return 2;
    } catch (const std::invalid_argument& e) {
        j["error"] = std::string("invalid-argument: ") + e.what();
        emit(j, out_path);
        return 2;
    }

    auto check = is_proper(g, result);
    j["fired"] = fired;
    j["proper"] = check.proper;
    j["colors_used"] = result.count_colors();
    j["coloring"] = coloring_json(result);
    emit(j, out_path);
    return check.proper ? 0 : 2;
}

int cmd_verify(const std::string& file, const std::string& bound, int slack, uint64_t budget) {
    Graph g = read_graph_file(file);
    BoundKind kind = bound == "delta_e" ? BoundKind::delta_e : BoundKind::delta2;
    auto report = verify_bound(g, kind, slack, budget, file);
    std::cout << report.to_jsonl() << '\n';
    if (!report.chi_known) return 3;
    return report.violation ? 2 : 0;
}

int cmd_generate(const std::string& family, int n, uint64_t seed, int count,
                 const std::string& out_dir) {
    for (int i = 0; i < count; ++i) {
        uint64_t s = seed + (uint64_t)i;
        std::string stem =
            out_dir + "/" + family + "-" + std::to_string(seed) + "-" + std::to_string(i);
        Graph g;
        std::optional<std::string> cert;

        if (auto fam = family_from_name(family)) {
            auto inst = random_claw_free(n, *fam, s);
            g = inst.graph;
            if (inst.rep) cert = rep_to_json(*inst.rep);
            if (inst.three_cliqued) cert = three_cliqued_to_json(*inst.three_cliqued);
            if (inst.root) {
                std::ofstream root(stem + ".root");
                write_multigraph(root, *inst.root);
            }
        } else if (family == "triangle-free") {
            g = random_triangle_free(n, 0.4, s);
        } else if (family == "petersen") {
            g = petersen();
        } else if (family == "icosahedron") {
            g = icosahedron();
            ordered_json side;
            side["fig_coloring"] = coloring_json(icosahedron_four_coloring());
            cert = side.dump();
        } else if (family == "w5") {
            g = w5();
        } else if (family == "line-of-petersen") {
            Multigraph root = Multigraph::from_graph(petersen());
            g = line_graph(root).graph;
            std::ofstream rootf(stem + ".root");
            write_multigraph(rootf, root);
        } else if (family == "compose-canonical" || family == "compose-antihat" ||
                   family == "compose-strange" || family == "compose-gear") {
            StripKind kind = family == "compose-canonical" ? StripKind::canonical_interval
                             : family == "compose-antihat" ? StripKind::antihat
                             : family == "compose-strange" ? StripKind::strange
                                                           : StripKind::gear;
            auto inst = random_composed_two_join(kind, s);
            g = inst.graph;
            cert = two_join_to_json(inst.cert);
            ordered_json g1col;
            g1col["coloring"] = coloring_json(inst.g1_coloring);
            std::ofstream colf(stem + ".g1coloring.json");
            colf << g1col.dump(2) << '\n';
        } else {
            throw CLI::ValidationError("unknown family: " + family);
        }

        write_graph_file(stem + ".edgelist", g);
        if (cert) {
            std::ofstream certf(stem + ".cert.json");
            certf << *cert << '\n';
        }
        std::cout << stem << ".edgelist\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive coloring toolkit for claw-free graph codegree bounds"};
    app.require_subcommand(1);

    std::string file, cls = "claw", method = "auto", cert, lists, out, bound = "delta2";
    std::string family = "line-of-random", config, out_dir = ".";
    int slack = 3, n = 12, count = 1;
    uint64_t seed = 1, budget = kDefaultOracleBudget;

    auto* p = app.add_subcommand("params", "exact graph parameters");
    p->add_option("file", file)->required();

    auto* r = app.add_subcommand("recognize", "class recognizers with witnesses");
    r->add_option("file", file)->required();
    r->add_option("--class", cls,
                  "claw|triad|triangle-free|quasi-line|prismatic|antiprismatic|"
                  "clique-cutset|dominated-pair|dominated-pair-adjacent");

    auto* c = app.add_subcommand("color", "constructive colorers");
    c->add_option("file", file)->required();
    c->add_option("--method", method,
                  "auto|line|circular|circular-tight|alpha2|prismatic|antiprismatic|"
                  "three-cliqued|icosahedral|oracle");
    c->add_option("--cert", cert, "certificate file (rep / 2-join / k1k2k3 / embedding / root)");
    c->add_option("--lists", lists, "list assignment json");
    c->add_option("--out", out, "write the report here instead of stdout");
    c->add_option("--budget", budget, "oracle node budget");

    auto* v = app.add_subcommand("verify", "oracle chi against a codegree bound");
    v->add_option("file", file)->required();
    v->add_option("--bound", bound, "delta2|delta_e");
    v->add_option("--slack", slack, "allowed gap above the parameter (default 3)");
    v->add_option("--budget", budget, "oracle node budget");

    auto* gen = app.add_subcommand("generate", "gadget and family generators");
    gen->add_option("--family", family,
                    "line-of-random|circular-interval|thickened-ribbon|complement-trianglefree|"
                    "triangle-free|petersen|icosahedron|w5|line-of-petersen|compose-canonical|"
                    "compose-antihat|compose-strange|compose-gear");
    gen->add_option("--n", n, "target vertex count");
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--count", count, "instances to emit");
    gen->add_option("--out-dir", out_dir, "output directory");

    auto* camp = app.add_subcommand("campaign", "seeded bound-verification campaign");
    camp->add_option("--config", config, "campaign config json")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        budget = oracle_budget_from_env(budget);
        if (p->parsed()) return cmd_params(file);
        if (r->parsed()) return cmd_recognize(file, cls);
        if (c->parsed()) return cmd_color(file, method, cert, lists, out, budget);
        if (v->parsed()) return cmd_verify(file, bound, slack, budget);
        if (gen->parsed()) return cmd_generate(family, n, seed, count, out_dir);
        if (camp->parsed()) {
            auto cfg = CampaignConfig::from_json_file(config);
            if (std::getenv("CLAWCHROME_ORACLE_BUDGET"))
                cfg.oracle_budget = oracle_budget_from_env(cfg.oracle_budget);
            auto summary = run_campaign(cfg);
            ordered_json j;
            j["instances"] = summary.instances;
            j["violations"] = summary.violations;
            j["oracle_unknown"] = summary.oracle_unknown;
            j["tight"] = summary.tight;
            j["resumed_rows"] = summary.skipped_existing;
            std::cout << j.dump(2) << '\n';
            return summary.ok() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
