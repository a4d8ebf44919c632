#include "tsilab/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace tsilab {

nlohmann::json vector_to_json(const FiniteVector& x) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [index, value] : x.entries())
        entries.push_back({index, rational_to_string(value)});
    return {{"entries", std::move(entries)}};
}

FiniteVector vector_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
        throw std::invalid_argument(
            R"(a vector must look like {"entries": [[index, "p/q"], ...]})");
    FiniteVector x;
    int previous = 0;
    for (const auto& entry : j.at("entries")) {
        if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number_integer() ||
            !entry.at(1).is_string())
            throw std::invalid_argument(R"(each vector entry must be [index, "p/q"])");
        const int index = entry.at(0).get<int>();
        if (index <= previous)
            throw std::invalid_argument(
                "vector entry indices must be >= 1 and strictly increasing");
        previous = index;
        x.set(index, parse_rational(entry.at(1).get<std::string>()));
    }
    return x;
}

nlohmann::json family_to_json(const std::vector<FiniteVector>& family) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& member : family)
        j.push_back(vector_to_json(member));
    return j;
}

std::vector<FiniteVector> family_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw std::invalid_argument("a family must be a JSON array of vectors");
    std::vector<FiniteVector> family;
    for (const auto& member : j)
        family.push_back(vector_from_json(member));
    return family;
}

nlohmann::json certificate_to_json(const NormCertificate& certificate) {
    nlohmann::json j;
    j["value"] = rational_to_string(certificate.value);
    if (certificate.is_leaf()) {
        j["coordinate"] = std::get<NormCertificate::Leaf>(certificate.witness).index;
    } else {
        const auto& node = std::get<NormCertificate::Node>(certificate.witness);
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& part : node.partition.parts)
            parts.push_back(part.indices());
        nlohmann::json children = nlohmann::json::array();
        for (const auto& child : node.children)
            children.push_back(certificate_to_json(child));
        j["parts"] = std::move(parts);
        j["children"] = std::move(children);
    }
    return j;
}

nlohmann::json functionals_to_json(const std::vector<NormingFunctional>& functionals) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : functionals)
        j.push_back({{"level", f.level}, {"functional", vector_to_json(f.functional)}});
    return j;
}

namespace {

nlohmann::json witness_to_json(const PairWitness& witness) {
    return {{"i", witness.i},
            {"j", witness.j},
            {"diff_norm", rational_to_string(witness.diff_norm)},
            {"sum_norm", rational_to_string(witness.sum_norm)}};
}

} // namespace

nlohmann::json report_to_json(const SeparationReport& report, int approx_digits) {
    nlohmann::json j;
    j["space"] = report.space;
    j["power"] = report.power;
    j["family"] = family_to_json(report.family);
    j["separation"] = rational_to_string(report.separation);
    j["symmetric_separation"] = rational_to_string(report.symmetric_separation);
    j["separation_witness"] = witness_to_json(report.separation_witness);
    j["symmetric_witness"] = witness_to_json(report.symmetric_witness);
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& pair : report.pairs)
        pairs.push_back(witness_to_json(pair));
    j["pairs"] = std::move(pairs);
    if (approx_digits >= 0) {
        j["separation_approx"] = rational_to_decimal(report.separation, approx_digits);
        j["symmetric_separation_approx"] =
            rational_to_decimal(report.symmetric_separation, approx_digits);
    }
    return j;
}

nlohmann::json extraction_to_json(const ExtractionResult& result, int approx_digits) {
    nlohmann::json j;
    j["branch"] = result.branch == ExtractionBranch::MonochromeGreater
                      ? "monochrome-greater"
                      : "plus-construction";
    j["output_family"] = family_to_json(result.output_family);
    j["scale_sq"] = rational_to_string(result.scale_sq);
    j["guarantee"] = rational_to_string(result.guarantee);
    j["measured"] = rational_to_string(result.measured);
    j["result_power"] = result.result_power;
    j["oracle_power"] = result.oracle_power;
    j["input_separation"] = rational_to_string(result.input_separation);
    if (result.eta)
        j["eta"] = rational_to_string(*result.eta);
    j["basis_bound"] = rational_to_string(result.basis_bound);
    if (approx_digits >= 0) {
        j["guarantee_approx"] = rational_to_decimal(result.guarantee, approx_digits);
        j["measured_approx"] = rational_to_decimal(result.measured, approx_digits);
    }
    return j;
}

std::string report_to_csv(const SeparationReport& report) {
    std::ostringstream csv;
    csv << "i,j,diff_norm,sum_norm\n";
    for (const auto& pair : report.pairs)
        csv << pair.i << ',' << pair.j << ',' << rational_to_string(pair.diff_norm) << ','
            << rational_to_string(pair.sum_norm) << '\n';
    return csv.str();
}

} // namespace tsilab
