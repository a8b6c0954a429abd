// Python bindings. Reports cross the boundary as the same JSON the CLI emits;
// the pure-Python wrapper in schurkit/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurkit/catalog.hpp"
#include "schurkit/collector.hpp"
#include "schurkit/conjectures.hpp"
#include "schurkit/coset_enum.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/identity.hpp"
#include "schurkit/report.hpp"

namespace py = pybind11;
using namespace schurkit;

namespace {

// "catalog:family:params" or presentation text
PcPresentation load(const std::string& input) {
    if (input.rfind("catalog:", 0) == 0) return catalog_group(std::string_view(input));
    return parse_pc_presentation(input);
}

std::string analyze(const std::string& input) {
    const PcGroup g(load(input));
    const StructureReport s = structure(g);
    Json j;
    j["schema"] = structure_schema;
    j["presentation"] = serialize(g.presentation());
    j["structure"] = to_json(s);
    j["classes"] = classify(s);
    return j.dump();
}

std::string tensor(const std::string& input, std::uint32_t budget, const std::string& tier, bool extended,
                   bool checks, std::uint64_t seed) {
    const PcGroup g(load(input));
    TensorOptions o;
    o.budget = budget ? budget : default_budget();
    o.extended = extended;
    if (tier == "exterior") o.tier = TierMode::exterior;
    else if (tier == "tensor") o.tier = TierMode::tensor;
    else if (tier != "auto") throw ValidationError("unknown tier: " + tier);
    TensorSquareResult r;
    {
        py::gil_scoped_release release;
        r = tensor_square(g, o);
    }
    if (!r.complete()) throw ResourceError("coset budget exhausted after " + std::to_string(r.cosets) + " cosets");
    Json j;
    j["schema"] = tensor_schema;
    j["seed"] = seed;
    j["result"] = to_json(r);
    if (checks) {
        const StructureReport s = structure(g);
        CheckOptions co;
        co.seed = seed;
        auto all = micro_lemma_checks(s, r, co);
        for (auto& c : r.checks) all.push_back(c);
        Json arr = Json::array();
        for (const auto& c : all) arr.push_back(to_json(c));
        j["checks"] = arr;
    }
    return j.dump();
}

std::string verify(const std::string& text, const std::vector<long>& points) {
    Json arr = Json::array();
    for (const auto& t : parse_identities(text)) {
        const auto r = points.empty() ? verify_identity(t) : verify_identity(t, points);
        arr.push_back(to_json(r));
    }
    return arr.dump();
}

std::vector<std::string> collect_word(const std::string& expr, const std::vector<std::string>& symbols,
                                      int nil_class) {
    std::vector<std::string> out;
    for (const auto& e : collect(expr, symbols, nil_class).exponents) out.push_back(e.get_str());
    return out;
}

std::string run_scan(const std::vector<std::pair<std::string, std::string>>& inputs, std::uint32_t budget,
                     bool checks, std::uint64_t seed) {
    std::vector<ScanInput> in;
    for (const auto& [source, text] : inputs) {
        ScanInput si{source, std::nullopt, ""};
        try {
            si.pcp = load(text);
        } catch (const ParseError& e) {
            si.error = e.what();
        }
        in.push_back(std::move(si));
    }
    ScanOptions o;
    o.budget = budget ? budget : default_budget();
    o.micro_checks = checks;
    o.seed = seed;
    ScanReport rep;
    {
        py::gil_scoped_release release;
        rep = scan(in, o);
    }
    return to_json(rep).dump();
}

}  // namespace

PYBIND11_MODULE(_schurkit, m) {
    m.doc() = "polycyclic groups, nonabelian tensor squares and Schur multiplier exponents";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    m.def("analyze", &analyze, py::arg("input"));
    m.def("tensor_square", &tensor, py::arg("input"), py::arg("budget") = 0, py::arg("tier") = "auto",
          py::arg("extended") = false, py::arg("checks") = false, py::arg("seed") = 1);
    m.def("verify_identities", &verify, py::arg("text"), py::arg("points") = std::vector<long>{});
    m.def("collect", &collect_word, py::arg("expr"), py::arg("symbols"), py::arg("nil_class"));
    m.def("scan", &run_scan, py::arg("inputs"), py::arg("budget") = 0, py::arg("checks") = true,
          py::arg("seed") = 1);
    m.def("presentation", [](const std::string& input) { return serialize(load(input)); }, py::arg("input"));
    m.def("catalog_families", &catalog_families);
    m.def("default_catalog", &default_catalog);
}
