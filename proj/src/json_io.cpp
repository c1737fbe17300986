#include "cotop/json_io.hpp"

#include "cotop/error.hpp"

namespace cotop::json_io {

ordered_json to_json(const EPSet& s) {
    ordered_json j;
    j["m"] = s.modulus();
    j["residues"] = s.residues();
    j["added"] = s.added();
    j["removed"] = s.removed();
    return j;
}

EPSet set_from_json(const ordered_json& j) {
    try {
        const u64 m = arith::require_pos(j.at("m").get<u64>(), "modulus");
        if (m > kMaxModulus) fail(ErrorKind::Range, "modulus exceeds the supported maximum");
        std::vector<char> table(m, 0);
        for (u64 r : j.at("residues").get<std::vector<u64>>()) {
            if (r >= m) fail(ErrorKind::Range, "residue out of range");
            table[r] = 1;
        }
        return EPSet::canonical(m, std::move(table), j.at("added").get<std::vector<u64>>(),
                                j.at("removed").get<std::vector<u64>>());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed set JSON: ") + e.what());
    }
}

ordered_json to_json(const topo::ClassifyReport& r) {
    ordered_json j;
    j["is_open"] = r.is_open;
    j["is_closed"] = r.is_closed;
    j["is_dense"] = r.is_dense;
    j["is_nowhere_dense"] = r.is_nowhere_dense;
    j["closure"] = to_json(r.closure);
    j["interior"] = to_json(r.interior);
    j["boundary"] = to_json(r.boundary);
    return j;
}

ordered_json to_json(const primefam::WitnessTable& t) {
    ordered_json j;
    j["family"] = t.family;
    j["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["witness"] = row.witness ? ordered_json(*row.witness) : ordered_json(nullptr);
        r["bound"] = row.search_bound;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

ordered_json to_json(const golomb::CoarsenessReport& r) {
    ordered_json j;
    j["checked_sigma_max"] = r.checked_sigma_max;
    j["all_sigma_golomb_open"] = r.all_sigma_golomb_open;
    j["witness"] = to_json(r.witness);
    j["witness_is_golomb_open"] = r.witness_is_golomb_open;
    j["witness_is_tau_open"] = r.witness_is_tau_open;
    j["demonstrates_strictness"] = r.demonstrates_strictness();
    return j;
}

ordered_json to_json(const oracle::OracleVerdict& v) {
    ordered_json j;
    j["check"] = v.check;
    j["set"] = v.set;
    j["checked_window"] = v.checked_window;
    j["cover_prime_bound"] = v.cover_prime_bound;
    j["points_checked"] = v.points_checked;
    j["unwitnessed"] = v.unwitnessed;
    j["discrepancies"] = ordered_json::array();
    for (const auto& d : v.discrepancies) {
        ordered_json row;
        row["x"] = d.x;
        row["engine_says"] = d.engine_says;
        switch (d.oracle_says) {
            case oracle::Answer::Yes: row["oracle_says"] = true; break;
            case oracle::Answer::No: row["oracle_says"] = false; break;
            case oracle::Answer::Inconclusive: row["oracle_says"] = "inconclusive"; break;
        }
        j["discrepancies"].push_back(std::move(row));
    }
    return j;
}

ordered_json to_json(const primefam::ChainReport& r) {
    ordered_json j;
    j["level"] = r.level == primefam::Level::Full ? "full" : "quick";
    j["window"] = r.window;
    j["all_pass"] = r.all_pass();
    j["entries"] = ordered_json::array();
    for (const auto& e : r.entries) {
        j["entries"].push_back(
            {{"item", e.item}, {"statement", e.statement}, {"passed", e.passed}, {"detail", e.detail}});
    }
    return j;
}

}  // namespace cotop::json_io
