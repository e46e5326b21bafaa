#include "flagbott/json_io.hpp"

#include <cstdint>
#include <limits>

namespace flagbott {

Json parts_json(std::span<const int> parts) {
    std::size_t n = parts.size();
    while (n > 0 && parts[n - 1] == 0) --n;
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i) out.push_back(parts[i]);
    return out;
}

Json terms_json(const SchurDecomposition& dec) {
    Json out = Json::array();
    for (const auto& [parts, mult] : dec.terms()) {
        Json term;
        term["partition"] = parts_json(parts);
        term["mult"] = mult;
        out.push_back(std::move(term));
    }
    return out;
}

Json space_json(const Space& space) {
    Json out;
    if (const auto* g = std::get_if<GrassmannianSpace>(&space)) {
        out["kind"] = "grassmannian";
        out["r"] = g->r;
        out["d"] = g->d;
    } else {
        const auto& flag = std::get<FlagShape>(space);
        out["kind"] = "flag";
        out["d"] = flag.d;
        out["s"] = flag.steps;
    }
    return out;
}

Json big_int_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return Json(value.convert_to<std::uint64_t>());
    return Json(value.str());
}

Json table_entries_json(const CohomologyTable& table, bool dims_only) {
    Json entries = Json::array();
    for (const auto& [bidegree, dec] : table.entries()) {
        BigInt dim = 0;
        for (const auto& [psi, mult] : dec.terms()) dim += mult * dim_schur(psi, table.d());
        Json entry;
        entry["p"] = bidegree.p;
        entry["q"] = bidegree.q;
        if (!dims_only) entry["terms"] = terms_json(dec);
        entry["dim"] = big_int_json(dim);
        entries.push_back(std::move(entry));
    }
    return entries;
}

Json certificate_json(const Certificate& cert, const std::string& bundle_text) {
    Json out;
    Json query;
    query["n"] = cert.query.n;
    query["d"] = cert.query.d;
    query["p"] = cert.query.p;
    query["q"] = cert.query.q;
    query["bundle"] = bundle_text;
    out["query"] = std::move(query);
    Json verdicts = Json::array();
    for (const Verdict& v : cert.verdicts) {
        Json item;
        item["theorem"] = v.theorem;
        item["ample_hypothesis"] = v.ample_hypothesis;
        item["condition"] = v.condition;
        item["threshold"] = v.threshold;
        item["satisfied"] = v.satisfied;
        item["vacuous"] = v.vacuous;
        if (!v.detail.empty()) item["detail"] = v.detail;
        verdicts.push_back(std::move(item));
    }
    out["verdicts"] = std::move(verdicts);
    out["certified"] = cert.certified();
    return out;
}

}  // namespace flagbott
