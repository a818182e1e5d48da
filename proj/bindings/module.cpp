#include "bhverify/apoly.hpp"
#include "bhverify/config.hpp"
#include "bhverify/daha.hpp"
#include "bhverify/descriptor.hpp"

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;

namespace {

using nlohmann::ordered_json;

bhv::RunConfig config_from_text(const std::string& config_json) {
    if (config_json.empty()) return bhv::RunConfig{};
    return bhv::run_config_from_json(ordered_json::parse(config_json));
}

std::string verify(const std::string& descriptor, const std::string& config_json) {
    bhv::KnotVerdict verdict =
        bhv::verify_descriptor(descriptor, config_from_text(config_json));
    return bhv::knot_verdict_to_json(verdict).dump();
}

bool recheck(const std::string& verdict_json) {
    return bhv::recheck_verdict_json(ordered_json::parse(verdict_json));
}

std::string daha_check(const std::string& name, int window) {
    std::vector<bhv::DahaReport> reports = bhv::run_daha_check(name, window);
    bool pass = true;
    ordered_json parts = ordered_json::array();
    for (const bhv::DahaReport& report : reports) {
        pass = pass && report.pass;
        parts.push_back(bhv::daha_report_to_json(report, false));
    }
    return ordered_json{{"check", name}, {"pass", pass}, {"reports", parts}}.dump();
}

std::string apoly(const std::string& text) {
    bhv::ApolyResult res = bhv::apoly_condition(bhv::parse_poly(bhv::apoly_ring(), text));
    return ordered_json{{"holds", res.holds},
                        {"witness", res.witness.to_string()},
                        {"note", res.note}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_bhverify, m) {
    m.doc() = "certified checks for trace conditions on knot group characters";
    m.attr("__version__") = bhv::kToolVersion;

    m.def("verify", &verify, py::arg("descriptor"), py::arg("config") = std::string(),
          "Verify a knot descriptor (torus:r,s | pretzel:n | connectsum:[...]);\n"
          "returns the verdict with its evidence tree as a JSON string. The\n"
          "optional config is a JSON object with the same keys as the\n"
          "BHVERIFY_CONFIG file.");
    m.def("recheck", &recheck, py::arg("verdict_json"),
          "Re-verify the evidence tree of a verdict JSON string using only\n"
          "certificate expansion and integer arithmetic.");
    m.def("daha_check", &daha_check, py::arg("name"), py::arg("window") = 10,
          "Run one named identity check (relations | dunkl | trefoil | fig8 |\n"
          "goldman); returns the reports as a JSON string.");
    m.def("apoly", &apoly, py::arg("polynomial"),
          "Test the boundary-slope divisibility condition on a polynomial in\n"
          "m, l; returns the outcome as a JSON string.");
}
