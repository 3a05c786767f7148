#include "mdim/error.hpp"
#include "mdim/resolver.hpp"

#include <json.hpp>

namespace mdim {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::beta: return "beta";
    case InvariantKind::psi: return "psi";
    case InvariantKind::weighings: return "weighings";
    }
    return "unknown";
}

std::string_view to_string(ResultStatus status) { return status == ResultStatus::exact ? "exact" : "bounds"; }

std::string to_json(const SolverResult& r)
{
    ordered_json j;
    j["kind"] = to_string(r.kind);
    j["status"] = to_string(r.status);
    if (r.exact()) {
        j["value"] = r.value;
    } else {
        j["lower"] = r.lower;
        j["upper"] = r.upper;
    }
    j["certificate"] = r.certificate.members();
    j["nodes_explored"] = r.nodes_explored;
    j["elapsed_ms"] = r.elapsed.count();
    return j.dump();
}

SolverResult solver_result_from_json(std::string_view text)
{
    try {
        auto j = ordered_json::parse(text);
        SolverResult r;
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "beta")
            r.kind = InvariantKind::beta;
        else if (kind == "psi")
            r.kind = InvariantKind::psi;
        else if (kind == "weighings")
            r.kind = InvariantKind::weighings;
        else
            fail(ErrorCode::parse_error, "unknown kind '" + kind + "'");
        const auto status = j.at("status").get<std::string>();
        if (status == "exact") {
            r.status = ResultStatus::exact;
            r.value = r.lower = r.upper = j.at("value").get<int>();
        } else if (status == "bounds") {
            r.status = ResultStatus::bounds;
            r.lower = j.at("lower").get<int>();
            r.upper = j.at("upper").get<int>();
        } else {
            fail(ErrorCode::parse_error, "unknown status '" + status + "'");
        }
        r.certificate = VertexSet(j.at("certificate").get<std::vector<Vertex>>());
        r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
        r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, e.what());
    }
}

} // namespace mdim
