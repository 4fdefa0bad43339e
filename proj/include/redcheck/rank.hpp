// rank.hpp
//
// The rank fixpoint: rank 0 classes are the extendable ones; a class gets
// rank k+1 when it is reducible to the set of colorings of rank <= k. The
// stage loop stops after the first pass that assigns nothing; a pattern is
// reducible iff every class ends up ranked.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "redcheck/kempe.hpp"
#include "redcheck/pattern.hpp"

namespace redcheck {

struct ClassInfo {
    FrontierColoring representative;
    std::size_t orbit_size = 0;
    std::optional<int> rank;              // nullopt = no rank
    std::optional<ColorPair> witness_pair;  // set for ranks >= 1
};

struct RankTable {
    std::vector<ClassInfo> classes;  // sorted by representative
    // Smallest k >= 1 such that the rank-(k+1) stage assigns nothing, i.e.
    // the set of ranked colorings stops growing.
    int k0 = 1;
    std::vector<std::size_t> stage_counts;  // [k] = classes of rank k
    int stages_executed = 0;  // main-loop passes, including the final empty one

    std::size_t total() const { return classes.size(); }
    std::size_t ranked_count() const;
    std::vector<FrontierColoring> unranked() const;
};

struct RankOptions {
    // Cross-checks every auxiliary graph's matching decision against the
    // brute-force oracle; throws std::logic_error on any disagreement.
    bool oracle_check = false;
};

RankTable compute_ranks(const Pattern& p, const RankOptions& options = {});

struct Verdict {
    std::string pattern_name;
    bool reducible = false;
    int k0 = 1;
    std::size_t total_classes = 0;
    std::vector<std::size_t> histogram;  // classes per rank, index = rank
    std::vector<FrontierColoring> unranked;
};

Verdict make_verdict(const std::string& name, const RankTable& table);
Verdict is_reducible_pattern(const Pattern& p, const RankOptions& options = {});

// One row per pattern: total classes, then per-rank counts in ascending
// rank order. Text rendering pads missing ranks with "--"; CSV leaves the
// cells empty. Column count follows the largest rank present.
std::string rank_histogram_table_text(const std::vector<Verdict>& verdicts);
std::string rank_histogram_table_csv(const std::vector<Verdict>& verdicts);

}  // namespace redcheck
