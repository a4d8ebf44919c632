#include "tsilab/cli.hpp"

#include "tsilab/acceptance.hpp"
#include "tsilab/dual.hpp"
#include "tsilab/errors.hpp"
#include "tsilab/json_io.hpp"
#include "tsilab/separation.hpp"
#include "tsilab/spaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <ctime>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tsilab {

namespace {

std::string config_hash(const std::vector<std::string>& args) {
    std::uint64_t hash = 1469598103934665603ull;
    const auto mix = [&hash](unsigned char byte) {
        hash ^= byte;
        hash *= 1099511628211ull;
    };
    for (const auto& arg : args) {
        for (const char c : arg)
            mix(static_cast<unsigned char>(c));
        mix(0);
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << hash;
    return hex.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

struct ManifestInfo {
    std::string command;
    std::optional<std::string> space;
    std::optional<Rational> theta;
    std::optional<int> p;
    std::optional<std::uint64_t> seed;
};

nlohmann::json manifest_json(const ManifestInfo& info,
                             const std::vector<std::string>& args) {
    nlohmann::json j;
    j["command"] = info.command;
    if (info.space)
        j["space"] = *info.space;
    if (info.theta)
        j["theta"] = rational_to_string(*info.theta);
    if (info.p)
        j["p"] = *info.p;
    if (info.seed)
        j["seed"] = *info.seed;
    j["config_hash"] = config_hash(args);
    j["version"] = kVersion;
    j["timestamp"] = utc_timestamp();
    return j;
}

ManifestInfo oracle_manifest(const std::string& command, const NormOracle& oracle) {
    ManifestInfo info;
    info.command = command;
    info.space = oracle.id;
    if (oracle.theta)
        info.theta = *oracle.theta;
    else if (oracle.id.rfind("lp:", 0) == 0)
        info.p = oracle.power;
    return info;
}

FiniteVector parse_vector_argument(const std::string& text) {
    return vector_from_json(nlohmann::json::parse(text));
}

std::vector<FiniteVector> parse_family_argument(const std::string& text) {
    return family_from_json(nlohmann::json::parse(text));
}

void emit(std::ostream& out, const nlohmann::json& j) {
    out << j.dump(2) << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic laboratory for Tsirelson-type norm geometry"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string theta_text;
    std::string vector_text;
    std::string functional_text;
    std::string blocks_text;
    std::string family_text;
    std::string space_text;
    std::string eta_text;
    std::string kb_text = "1";
    std::string eps_text;
    std::string mode = "ramsey";
    int dimension = 0;
    int witness_length = 0;
    int approx = -1;
    std::uint64_t seed = 0;
    int iterations = 1000;
    int family_size = 4;
    int support_cap = 24;
    bool no_canonical = false;
    bool csv = false;

    CLI::App* norm_cmd = app.add_subcommand("norm", "Tsirelson norm with a certificate");
    norm_cmd->add_option("--theta", theta_text, "norm parameter, 0 < p/q < 1")->required();
    norm_cmd->add_option("--vector", vector_text, "vector as JSON")->required();
    norm_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* dual_cmd = app.add_subcommand("dual-norm", "dual norm with a maximizer");
    dual_cmd->add_option("--theta", theta_text, "norm parameter, 0 < p/q < 1")->required();
    dual_cmd->add_option("--functional", functional_text, "functional as JSON")->required();
    dual_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* norming_cmd =
        app.add_subcommand("norming-set", "norming functionals up to a dimension");
    norming_cmd->add_option("--theta", theta_text, "norm parameter, 0 < p/q < 1")
        ->required();
    norming_cmd->add_option("--dim", dimension, "support dimension")->required();

    CLI::App* c0_cmd = app.add_subcommand(
        "c0-constant", "c0 equivalence constant of a normalized block family");
    c0_cmd->add_option("--theta", theta_text, "norm parameter, 0 < p/q < 1")->required();
    c0_cmd->add_option("--blocks", blocks_text, "block family as JSON")->required();
    c0_cmd->add_option("--witness", witness_length,
                       "extract a subsequence of this length supported past it");
    c0_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* separate_cmd =
        app.add_subcommand("separate", "separation report for a family");
    separate_cmd->add_option("--space", space_text, "c0 | lp:p | tsirelson:t | dual-tsirelson:t")
        ->required();
    separate_cmd->add_option("--family", family_text, "family as JSON")->required();
    separate_cmd->add_flag("--csv", csv, "emit the pair table as CSV");
    separate_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* extract_cmd =
        app.add_subcommand("extract", "separated-subfamily constructions");
    extract_cmd->add_option("--space", space_text, "c0 | lp:p | tsirelson:t | dual-tsirelson:t")
        ->required();
    extract_cmd->add_option("--family", family_text, "family as JSON")->required();
    extract_cmd->add_option("--mode", mode, "ramsey | sqrt | gamma0")
        ->check(CLI::IsMember({"ramsey", "sqrt", "gamma0"}));
    extract_cmd->add_option("--eta", eta_text, "coloring margin for the ramsey mode");
    extract_cmd->add_option("--kb", kb_text, "basis-constant bound (default 1)");
    extract_cmd->add_option("--eps", eps_text,
                            "downward separation override for the sqrt mode");
    extract_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* kottman_cmd =
        app.add_subcommand("kottman", "seeded search for separated unit-ball families");
    kottman_cmd->add_option("--space", space_text, "c0 | lp:p | tsirelson:t | dual-tsirelson:t")
        ->required();
    kottman_cmd->add_option("--seed", seed, "search seed");
    kottman_cmd->add_option("--iters", iterations, "random and perturbation rounds")
        ->check(CLI::NonNegativeNumber);
    kottman_cmd->add_option("--family-size", family_size, "members per candidate family");
    kottman_cmd->add_option("--support-cap", support_cap, "largest coordinate used");
    kottman_cmd->add_flag("--no-canonical", no_canonical, "skip the canonical probes");
    kottman_cmd->add_flag("--csv", csv, "emit the pair table as CSV");
    kottman_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* expected_cmd = app.add_subcommand(
        "expected", "closed-form dual-ball separation constant");
    expected_cmd->add_option("--theta", theta_text, "norm parameter, 0 < p/q < 1")
        ->required();
    expected_cmd->add_option("--approx", approx, "decimal digits to append")
        ->check(CLI::Range(1, 60));

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (norm_cmd->parsed()) {
            const Theta theta(parse_rational(theta_text));
            const FiniteVector x = parse_vector_argument(vector_text);
            const auto [value, certificate] = tsirelson_norm(x, theta);
            ManifestInfo info;
            info.command = "norm";
            info.space = "tsirelson:" + rational_to_string(theta.value());
            info.theta = theta.value();
            nlohmann::json j;
            j["manifest"] = manifest_json(info, args);
            j["value"] = rational_to_string(value);
            if (approx >= 0)
                j["value_approx"] = rational_to_decimal(value, approx);
            j["certificate"] = certificate_to_json(certificate);
            emit(out, j);
            return 0;
        }

        if (dual_cmd->parsed()) {
            const Theta theta(parse_rational(theta_text));
            const FiniteVector f = parse_vector_argument(functional_text);
            const DualNormResult result = dual_norm(f, theta);
            ManifestInfo info;
            info.command = "dual-norm";
            info.space = "dual-tsirelson:" + rational_to_string(theta.value());
            info.theta = theta.value();
            nlohmann::json j;
            j["manifest"] = manifest_json(info, args);
            j["value"] = rational_to_string(result.value);
            if (approx >= 0)
                j["value_approx"] = rational_to_decimal(result.value, approx);
            j["maximizer"] = vector_to_json(result.maximizer);
            emit(out, j);
            return 0;
        }

        if (norming_cmd->parsed()) {
            const Theta theta(parse_rational(theta_text));
            const std::vector<NormingFunctional> functionals =
                norming_functionals(dimension, theta);
            ManifestInfo info;
            info.command = "norming-set";
            info.space = "tsirelson:" + rational_to_string(theta.value());
            info.theta = theta.value();
            nlohmann::json j;
            j["manifest"] = manifest_json(info, args);
            j["count"] = functionals.size();
            j["functionals"] = functionals_to_json(functionals);
            emit(out, j);
            return 0;
        }

        if (c0_cmd->parsed()) {
            const Theta theta(parse_rational(theta_text));
            const std::vector<FiniteVector> blocks = parse_family_argument(blocks_text);
            ManifestInfo info;
            info.command = "c0-constant";
            info.space = "dual-tsirelson:" + rational_to_string(theta.value());
            info.theta = theta.value();
            nlohmann::json j;
            j["manifest"] = manifest_json(info, args);
            if (witness_length > 0) {
                const AsymptoticWitness witness =
                    lambda_asymptotic_witness(blocks, witness_length, theta);
                j["value"] = rational_to_string(witness.lambda);
                if (approx >= 0)
                    j["value_approx"] = rational_to_decimal(witness.lambda, approx);
                j["subsequence"] = family_to_json(witness.subsequence);
            } else {
                const Rational value = c0_equivalence_constant(blocks, theta);
                j["value"] = rational_to_string(value);
                if (approx >= 0)
                    j["value_approx"] = rational_to_decimal(value, approx);
            }
            emit(out, j);
            return 0;
        }

        if (separate_cmd->parsed()) {
            const NormOracle oracle = parse_space(space_text);
            const std::vector<FiniteVector> family = parse_family_argument(family_text);
            const SeparationReport report = separation_report(family, oracle);
            const nlohmann::json manifest =
                manifest_json(oracle_manifest("separate", oracle), args);
            if (csv) {
                err << manifest.dump() << '\n';
                out << report_to_csv(report);
            } else {
                nlohmann::json j = report_to_json(report, approx);
                j["manifest"] = manifest;
                emit(out, j);
            }
            return 0;
        }

        if (extract_cmd->parsed()) {
            const NormOracle oracle = parse_space(space_text);
            const std::vector<FiniteVector> family = parse_family_argument(family_text);
            const Rational kb = parse_rational(kb_text);
            const nlohmann::json manifest =
                manifest_json(oracle_manifest("extract", oracle), args);
            if (mode == "gamma0") {
                const Rational value = ks_lower_from_gamma0(family, oracle);
                nlohmann::json j;
                j["manifest"] = manifest;
                j["value"] = rational_to_string(value);
                if (approx >= 0)
                    j["value_approx"] = rational_to_decimal(value, approx);
                emit(out, j);
                return 0;
            }
            ExtractionResult result;
            if (mode == "ramsey") {
                if (eta_text.empty())
                    throw std::invalid_argument("--eta is required in ramsey mode");
                result = ramsey_extract(family, oracle, parse_rational(eta_text), kb);
            } else {
                std::optional<Rational> override;
                if (!eps_text.empty())
                    override = parse_rational(eps_text);
                result = sqrt_construction(family, oracle, kb, override);
            }
            nlohmann::json j = extraction_to_json(result, approx);
            j["manifest"] = manifest;
            emit(out, j);
            return 0;
        }

        if (kottman_cmd->parsed()) {
            const NormOracle oracle = parse_space(space_text);
            KottmanConfig config;
            config.seed = seed;
            config.iterations = iterations;
            config.family_size = family_size;
            config.support_cap = support_cap;
            config.canonical = !no_canonical;
            const SeparationReport report = empirical_kottman(oracle, config);
            ManifestInfo info = oracle_manifest("kottman", oracle);
            info.seed = seed;
            const nlohmann::json manifest = manifest_json(info, args);
            if (csv) {
                err << manifest.dump() << '\n';
                out << report_to_csv(report);
            } else {
                nlohmann::json j = report_to_json(report, approx);
                j["manifest"] = manifest;
                emit(out, j);
            }
            return 0;
        }

        if (expected_cmd->parsed()) {
            const Theta theta(parse_rational(theta_text));
            const Rational value = expected_dual_kottman(theta);
            ManifestInfo info;
            info.command = "expected";
            info.space = "dual-tsirelson:" + rational_to_string(theta.value());
            info.theta = theta.value();
            nlohmann::json j;
            j["manifest"] = manifest_json(info, args);
            j["value"] = rational_to_string(value);
            if (approx >= 0)
                j["value_approx"] = rational_to_decimal(value, approx);
            emit(out, j);
            return 0;
        }

        if (selftest_cmd->parsed()) {
            const std::vector<CriterionResult> results = run_acceptance(&err);
            ManifestInfo info;
            info.command = "selftest";
            nlohmann::json j;
            j["manifest"] = manifest_json(info, args);
            nlohmann::json lines = nlohmann::json::array();
            int failed = 0;
            for (const auto& result : results) {
                lines.push_back({{"number", result.number},
                                 {"name", result.name},
                                 {"passed", result.passed},
                                 {"detail", result.detail}});
                if (!result.passed)
                    ++failed;
            }
            j["criteria"] = std::move(lines);
            j["failed"] = failed;
            emit(out, j);
            return failed == 0 ? 0 : 1;
        }
    } catch (const InvariantViolation& error) {
        err << "invariant violation: " << error.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& error) {
        err << "error: invalid JSON argument: " << error.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& error) {
        err << "error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        err << "internal error: " << error.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace tsilab
