#include "redcheck/rank.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "redcheck/coloring.hpp"

namespace redcheck {

std::size_t RankTable::ranked_count() const {
    std::size_t n = 0;
    for (const auto& c : classes)
        if (c.rank) ++n;
    return n;
}

std::vector<FrontierColoring> RankTable::unranked() const {
    std::vector<FrontierColoring> out;
    for (const auto& c : classes)
        if (!c.rank) out.push_back(c.representative);
    return out;
}

RankTable compute_ranks(const Pattern& p, const RankOptions& options) {
    const LineGraphAdjacency lg = line_graph(p);
    RankTable table;

    const auto reps = enumerate_class_representatives(p);
    std::map<FrontierColoring, std::size_t> index;
    for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;

    table.classes.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        table.classes[i].representative = reps[i];
        table.classes[i].orbit_size = orbit_size(p, reps[i]);
        if (is_extendable(lg, reps[i])) table.classes[i].rank = 0;
    }
    table.stage_counts.push_back(table.ranked_count());

    const ColoringPredicate ranked = [&](const FrontierColoring& gamma) {
        return table.classes[index.at(canonical_representative(p, gamma))].rank.has_value();
    };
    AuxGraphObserver oracle = [](const AuxiliaryGraph& a) {
        if (has_noncrossing_perfect_quasimatching(a) != brute_force_quasimatching(a))
            throw std::logic_error(
                "matching decision disagrees with the brute-force oracle on:\n" +
                dump_auxiliary_graph(a));
    };
    const AuxGraphObserver* observer = options.oracle_check ? &oracle : nullptr;

    // Stage i ranks every unranked class reducible to the classes ranked in
    // earlier stages; assignments are applied only after the full pass, so
    // the predicate stays frozen within a stage.
    int stage = 1;
    int last_assigning_stage = 0;
    for (;;) {
        std::vector<std::pair<std::size_t, ColorPair>> newly;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (table.classes[i].rank) continue;
            ReductionResult res = is_reducible_to(p, reps[i], ranked, observer);
            if (res.reducible) newly.emplace_back(i, *res.witness_pair);
        }
        ++table.stages_executed;
        if (newly.empty()) break;
        for (auto& [i, pair] : newly) {
            table.classes[i].rank = stage;
            table.classes[i].witness_pair = pair;
        }
        table.stage_counts.push_back(newly.size());
        last_assigning_stage = stage;
        ++stage;
    }
    table.k0 = std::max(last_assigning_stage, 1);
    return table;
}

Verdict make_verdict(const std::string& name, const RankTable& table) {
    Verdict v;
    v.pattern_name = name;
    v.k0 = table.k0;
    v.total_classes = table.total();
    v.histogram = table.stage_counts;
    v.unranked = table.unranked();
    v.reducible = v.unranked.empty();
    return v;
}

Verdict is_reducible_pattern(const Pattern& p, const RankOptions& options) {
    return make_verdict(p.name, compute_ranks(p, options));
}

namespace {

std::size_t max_rank_columns(const std::vector<Verdict>& verdicts) {
    std::size_t cols = 1;
    for (const auto& v : verdicts) cols = std::max(cols, v.histogram.size());
    return cols;
}

}  // namespace

std::string rank_histogram_table_text(const std::vector<Verdict>& verdicts) {
    const std::size_t cols = max_rank_columns(verdicts);
    std::size_t name_width = std::string("pattern").size();
    for (const auto& v : verdicts) name_width = std::max(name_width, v.pattern_name.size());

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(name_width)) << "pattern" << std::right;
    os << "  " << std::setw(5) << "total";
    for (std::size_t k = 0; k < cols; ++k)
        os << "  " << std::setw(5) << ("rank" + std::to_string(k));
    os << '\n';
    for (const auto& v : verdicts) {
        os << std::left << std::setw(static_cast<int>(name_width)) << v.pattern_name
           << std::right;
        os << "  " << std::setw(5) << v.total_classes;
        for (std::size_t k = 0; k < cols; ++k) {
            if (k < v.histogram.size())
                os << "  " << std::setw(5) << v.histogram[k];
            else
                os << "  " << std::setw(5) << "--";
        }
        os << '\n';
    }
    return os.str();
}

std::string rank_histogram_table_csv(const std::vector<Verdict>& verdicts) {
    const std::size_t cols = max_rank_columns(verdicts);
    std::ostringstream os;
    os << "pattern,total";
    for (std::size_t k = 0; k < cols; ++k) os << ",rank" << k;
    os << '\n';
    for (const auto& v : verdicts) {
        os << v.pattern_name << ',' << v.total_classes;
        for (std::size_t k = 0; k < cols; ++k) {
            os << ',';
            if (k < v.histogram.size()) os << v.histogram[k];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace redcheck
