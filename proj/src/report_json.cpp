#include "superpat/report_json.hpp"

namespace superpat {

namespace {

json perm_list(const std::vector<Permutation>& perms) {
    json out = json::array();
    for (const auto& p : perms) out.push_back(p.entries());
    return out;
}

}  // namespace

json to_json(const Permutation& p) { return json(p.entries()); }

json to_json(const Word& w) { return json{{"letters", w.letters()}, {"q", w.width()}}; }

json to_json(const IndexSet& ix) { return json(ix.indices()); }

json to_json(const Witness& w) {
    return json{{"rotation", w.rotation}, {"indices", w.indices.indices()}};
}

json to_json(const WordWitness& w) {
    return json{{"pattern_rotation", w.pattern_rotation},
                {"word_rotation", w.word_rotation},
                {"indices", w.indices.indices()}};
}

json to_json(const ScoreReport& report) {
    json steps = json::array();
    for (const auto& s : report.steps) steps.push_back({s.x, s.y, s.cost});
    json out{{"kind", to_string(report.kind)}, {"steps", steps}, {"total", report.total}};
    out["initial"] = report.initial ? json(*report.initial) : json(nullptr);
    return out;
}

json to_json(const ConstructionResult& result) {
    json out{{"method", to_string(result.method)},
             {"claimed_k", result.claimed_k},
             {"length", result.length},
             {"permutation", result.permutation.entries()}};
    out["source_word"] = result.source_word ? to_json(*result.source_word) : json(nullptr);
    return out;
}

json to_json(const BoundsReport& report) {
    json out{{"k", report.k},
             {"table_permutation", report.table_permutation},
             {"remark", report.remark}};
    out["word_alphabet"] = report.word_alphabet ? json(*report.word_alphabet) : json(nullptr);
    out["zzc_length"] = report.zzc_length ? json(*report.zzc_length) : json(nullptr);
    return out;
}

json to_json(const VerificationReport& report, bool include_witnesses) {
    json out{{"host", report.host.entries()},
             {"k", report.k},
             {"mode", to_string(report.mode)},
             {"total_patterns", report.total_patterns},
             {"verdict", report.ok() ? "verified" : "counterexample"},
             {"failures", perm_list(report.failures)}};
    out["total_classes"] = report.total_classes ? json(*report.total_classes) : json(nullptr);
    if (include_witnesses) {
        json witnesses = json::array();
        for (const auto& [pattern, witness] : report.witnesses)
            witnesses.push_back({{"pattern", pattern.entries()},
                                 {"rotation", witness.rotation},
                                 {"indices", witness.indices.indices()}});
        out["witnesses"] = std::move(witnesses);
    }
    return out;
}

json to_json(const SearchResult& result) {
    json refuted = json::array();
    for (const auto& [length, count] : result.lengths_refuted) refuted.push_back({length, count});
    json out{{"k", result.k},
             {"mode", to_string(result.mode)},
             {"lengths_refuted", refuted},
             {"budget_exhausted", result.budget_exhausted}};
    out["minimal_length"] = result.minimal_length ? json(*result.minimal_length) : json(nullptr);
    out["example"] = result.example ? json(result.example->entries()) : json(nullptr);
    out["exhausted_at_length"] =
        result.exhausted_at_length ? json(*result.exhausted_at_length) : json(nullptr);
    return out;
}

json to_json(const IdentityReport& report) {
    json out{{"k", report.k},
             {"total", report.total},
             {"lift_violations", perm_list(report.lift_violations)},
             {"circular_lift_violations", perm_list(report.circular_lift_violations)},
             {"oddsum_asserted", report.oddsum_asserted},
             {"oddsum_violations", perm_list(report.oddsum_violations)},
             {"circular_zero_count", report.circular_zero_count},
             {"shifted_case_counts", report.shifted_case_counts},
             {"shifted_violations", perm_list(report.shifted_violations)},
             {"verdict", report.ok() ? "pass" : "counterexample"}};
    out["circular_zero_example"] =
        report.circular_zero_example ? json(report.circular_zero_example->entries()) : json(nullptr);
    return out;
}

json to_json(const EmbeddingReport& report, CyclicSemantics gate) {
    json out{{"k", report.k},
             {"total", report.total},
             {"exact_counterexamples", perm_list(report.exact_counterexamples)},
             {"verdict", report.ok(gate) ? "pass" : "counterexample"}};
    if (report.cyclic_checked) {
        out["cyclic_pattern_rotation_counterexamples"] =
            perm_list(report.cyclic_counterexamples_pattern_rotation);
        out["cyclic_word_cyclic_counterexamples"] =
            perm_list(report.cyclic_counterexamples_word_cyclic);
    }
    if (report.circular_iso_checked)
        out["circular_iso_counterexamples"] = perm_list(report.circular_iso_counterexamples);
    return out;
}

std::string canonical_dump(const json& doc) { return doc.dump(); }

}  // namespace superpat
