#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "clawchrome/coloring.hpp"
#include "clawchrome/graph.hpp"

namespace clawchrome {

inline constexpr uint64_t kDefaultOracleBudget = 10'000'000;

struct ChiResult {
    bool known = false;  // false: node budget exceeded, value not trusted
    int chi = -1;
    Coloring coloring;  // optimal when known
    uint64_t nodes = 0;
};

// Exact chromatic number: DSATUR-ordered branch and bound seeded with an
// exact maximum clique. Saturation ties break by degree then index, so runs
// are deterministic. Exceeding the budget yields known=false, never a wrong
// answer.
ChiResult chromatic_number(const Graph& g, uint64_t node_budget = kDefaultOracleBudget);

enum class Feasibility { feasible, infeasible, unknown };

struct ListColorResult {
    Feasibility status = Feasibility::unknown;
    Coloring coloring;  // valid when feasible
};

// Exhaustive MRV backtracking over the given lists.
ListColorResult solve_list_coloring(const Graph& g, const ListAssignment& lists,
                                    uint64_t node_budget = kDefaultOracleBudget);
Feasibility list_chromatic_feasible(const Graph& g, const ListAssignment& lists,
                                    uint64_t node_budget = kDefaultOracleBudget);

// chromatic_number(complement(h))
ChiResult clique_cover_number(const Graph& h, uint64_t node_budget = kDefaultOracleBudget);

enum class BoundKind { delta2, delta_e };
std::string bound_kind_name(BoundKind k);

struct BoundReport {
    std::string graph_id;
    int n = 0;
    int delta2 = 0;
    int delta_e = 0;
    int omega = 0;
    bool chi_known = false;
    int chi = -1;
    std::map<std::string, int> colors_used;  // colorer -> color count
    BoundKind kind = BoundKind::delta2;
    int slack = 3;
    bool violation = false;  // chi > parameter + slack
    bool tight = false;      // chi == parameter + slack
    std::vector<std::string> violations;  // human-readable details

    int parameter() const { return kind == BoundKind::delta2 ? delta2 : delta_e; }
    std::string to_jsonl() const;  // one JSON object, fixed key order
    std::string to_csv_row() const;
    static std::string csv_header();
};

// Exact parameters + oracle chi; flags chi > parameter + slack.
BoundReport verify_bound(const Graph& g, BoundKind kind, int slack = 3,
                         uint64_t node_budget = kDefaultOracleBudget,
                         const std::string& graph_id = "");

}  // namespace clawchrome
