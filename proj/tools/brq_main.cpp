// brq: exact lattice computations for the Brauer class of an Enriques
// surface pulled back to its K3 cover. Subcommands:
//   lattice-info  invariants of a lattice given by a Gram matrix
//   check-lemmas  the mod-2 model verification battery
//   brauer        vanishing decision for a Picard sublattice spec
//   census        hypersurface census of the period domain
//   omega         exact period-domain membership for a rational period point

#include "brq/json_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitIoError = 2;
constexpr int kExitValidationError = 3;

struct RunConfig {
    std::uint64_t seed = 20260823;
    std::size_t samples = 10000;
    long long k_max = 11;
    std::string method = "both";
    std::string format = "json";
    std::string out_path;
};

brq::json report_header(const std::string& command, const RunConfig& cfg) {
    return brq::json{{"tool", "brq"},
                     {"version", kVersion},
                     {"command", command},
                     {"seed", cfg.seed},
                     {"samples", cfg.samples},
                     {"k_max", cfg.k_max}};
}

void emit(const brq::json& doc, const RunConfig& cfg) {
    std::string text;
    if (cfg.format == "table") {
        std::ostringstream os;
        for (auto& [key, value] : doc.items())
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
        text = os.str();
    } else {
        text = doc.dump(2) + "\n";
    }
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw std::ios_base::failure("cannot open output file " + cfg.out_path);
        f << text;
    }
}

brq::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open input file " + path);
    return brq::json::parse(f);
}

int cmd_lattice_info(const std::string& path, const RunConfig& cfg) {
    brq::Lattice l = brq::lattice_from_json(load_json(path));
    brq::json out = report_header("lattice-info", cfg);
    out["name"] = l.name();
    out["rank"] = l.rank();
    out["even"] = l.is_even();
    brq::Signature sig = brq::signature(l);
    out["signature"] = brq::signature_to_json(sig);
    if (sig.null == 0) {
        out["discriminant_group"] = brq::abelian_group_to_json(brq::discriminant_group(l));
        out["unimodular"] = brq::discriminant_group(l).is_trivial();
    } else {
        out["discriminant_group"] = "degenerate form";
    }
    emit(out, cfg);
    return kExitOk;
}

int cmd_check_lemmas(const RunConfig& cfg, bool corrupt_model) {
    brq::EnriquesModel model = brq::EnriquesModel::build();
    auto results = brq::run_lemma_battery(model, cfg.samples, cfg.seed, corrupt_model);
    brq::json out = report_header("check-lemmas", cfg);
    out["corrupt_model"] = corrupt_model;
    out["checks"] = brq::check_results_to_json(results);
    out["all_pass"] = brq::all_pass(results);
    emit(out, cfg);
    return brq::all_pass(results) ? kExitOk : kExitVerificationFailure;
}

int cmd_brauer(const std::string& path, const RunConfig& cfg) {
    brq::EnriquesModel model = brq::EnriquesModel::build();
    brq::PicardSpec pic = brq::picard_spec_from_json(load_json(path));
    brq::DecisionReport rep;
    if (cfg.method == "picard")
        rep = brq::brauer_vanishes_by_picard(model, pic);
    else if (cfg.method == "form")
        rep = brq::brauer_vanishes_by_form(model, pic);
    else
        rep = brq::brauer_decide_both(model, pic);
    brq::json out = report_header("brauer", cfg);
    out["label"] = pic.label;
    out["report"] = brq::decision_report_to_json(rep);
    emit(out, cfg);
    if (rep.consistency && !*rep.consistency) return kExitVerificationFailure;
    return kExitOk;
}

int cmd_census(const RunConfig& cfg) {
    if (cfg.k_max % 2 == 0)
        throw CLI::ValidationError("--k-max", "k_max must be odd");
    brq::EnriquesModel model = brq::EnriquesModel::build();
    auto records = brq::hypersurface_census(model, brq::Int(cfg.k_max));
    brq::json out = report_header("census", cfg);
    out["records"] = brq::census_to_json(records);
    emit(out, cfg);
    return kExitOk;
}

int cmd_omega(const std::string& path, const std::string& lambda_csv, const RunConfig& cfg) {
    brq::EnriquesModel model = brq::EnriquesModel::build();
    brq::PeriodPoint omega = brq::period_point_from_json(load_json(path));
    std::optional<brq::Vec> lambda;
    if (!lambda_csv.empty()) {
        brq::Vec v;
        std::istringstream is(lambda_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) v.emplace_back(tok);
        lambda = std::move(v);
    }
    brq::OmegaReport rep = brq::omega_membership(model, omega, lambda);
    brq::json out = report_header("omega", cfg);
    out["report"] = brq::omega_report_to_json(rep);
    emit(out, cfg);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice arithmetic for the Brauer class of an Enriques surface"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for all sampled checks");
    app.add_option("--samples", cfg.samples, "Sample count for sampled checks");
    app.add_option("--format", cfg.format, "Output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", cfg.out_path, "Write the report to this file");

    std::string lattice_path, picard_path, omega_path, lambda_csv;
    bool corrupt_model = false;

    auto* info = app.add_subcommand("lattice-info", "Invariants of a lattice (JSON descriptor)");
    info->add_option("path", lattice_path, "Lattice JSON file")->required();

    auto* lemmas = app.add_subcommand("check-lemmas", "Run the mod-2 verification battery");
    lemmas->add_flag("--corrupt-model", corrupt_model,
                     "Test hook: corrupt one pairing bit before checking");

    auto* brauer = app.add_subcommand("brauer", "Decide vanishing for a Picard sublattice spec");
    brauer->add_option("path", picard_path, "PicardSpec JSON file")->required();
    brauer->add_option("--method", cfg.method, "both | picard | form")
        ->check(CLI::IsMember({"both", "picard", "form"}));

    auto* census = app.add_subcommand("census", "Hypersurface census up to --k-max");
    census->add_option("--k-max", cfg.k_max, "Largest odd k (norm -2k)")->check(CLI::Range(3LL, 1000000LL));

    auto* omega = app.add_subcommand("omega", "Period-domain membership for a rational point");
    omega->add_option("path", omega_path, "PeriodPoint JSON file")->required();
    omega->add_option("--lambda-check", lambda_csv,
                      "Comma-separated L^- coordinates of a hyperplane class");

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_lattice_info(lattice_path, cfg);
        if (lemmas->parsed()) return cmd_check_lemmas(cfg, corrupt_model);
        if (brauer->parsed()) return cmd_brauer(picard_path, cfg);
        if (census->parsed()) return cmd_census(cfg);
        if (omega->parsed()) return cmd_omega(omega_path, lambda_csv, cfg);
        return kExitValidationError;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidationError;
    } catch (const brq::RhoStabilityError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const brq::DeltaContainmentError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    }
}
