// twistor-gh: classify curvature operators, run the theorem suite and the
// self-test oracles from the command line.
//
// Exit codes: 0 success, 1 failed check, 2 input error, 3 validation error.

#include "twistor/gh_classifier.hpp"
#include "twistor/oracles.hpp"
#include "twistor/sampling.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace twistor;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kValidation = 3 };

struct Options {
    std::string model;
    std::string input;
    double s = 12.0;
    std::string component = "++";
    int n = 1;
    double t1 = 1.0;
    double t2 = 1.0;
    std::uint64_t seed = 0;
    int samples = 64;
    int triples = 32;
    double tol = 1e-9;
    std::string format = "json";
    std::string output;
    bool w2w3_as_printed = false;
    bool w1w3_as_printed = false;

    bool all = false;
    std::vector<std::string> ids;

    int trials = 100;
    bool corrupt_sign_table = false;

    SamplingConfig sampling() const
    {
        SamplingConfig cfg;
        cfg.seed = seed;
        cfg.num_points = samples;
        cfg.num_arg_triples = triples;
        cfg.tol = tol;
        cfg.w2w3 = w2w3_as_printed ? W2W3Reading::AsPrinted : W2W3Reading::Cyclic;
        cfg.w1w3 = w1w3_as_printed ? W1W3Reading::AsPrinted : W1W3Reading::Standard;
        return cfg;
    }
};

void emit(const Options& o, const std::string& text)
{
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file '" + o.output + "'");
    }
    out << text;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

// Weyl and B blocks for the models that take them, drawn from the seed.
CurvatureOperator built_in(const Options& o)
{
    Rng rng(o.seed ^ 0x5deece66dULL);
    ModelParams p;
    p.s = o.s;
    if (o.model == "asd_ricci_flat" || o.model == "einstein_asd" || o.model == "asd_general") {
        p.Wminus = random_symmetric(rng, true);
    }
    if (o.model == "asd_general") {
        p.B = random_matrix(rng);
    }
    return model(o.model, p);
}

CurvatureOperator load(const Options& o)
{
    if (!o.model.empty()) {
        return built_in(o);
    }
    std::ifstream in(o.input);
    if (!in) {
        throw InputError("cannot read input file '" + o.input + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + o.input + "': " + e.what());
    }
    return curvature_from_json(doc);
}

int cmd_classify(const Options& o)
{
    const ClassReport report = classify(load(o), o.component, {o.t1, o.t2, o.n}, o.sampling());
    if (o.format == "csv") {
        emit(o, csv_header() + "\n" + to_csv_row(report) + "\n");
    } else {
        emit(o, to_json(report).dump(2) + "\n");
    }
    return kOk;
}

int cmd_verify(const Options& o)
{
    std::vector<std::string> ids = o.all ? theorem_ids() : o.ids;
    if (ids.empty()) {
        throw InputError("verify needs --all or --id");
    }
    const SamplingConfig cfg = o.sampling();
    std::vector<TheoremResult> results;
    for (const std::string& id : ids) {
        results.push_back(verify_theorem(id, cfg));
    }

    std::vector<std::string> failed;
    for (const TheoremResult& r : results) {
        if (!r.passed) {
            failed.push_back(r.id);
        }
    }

    if (o.format == "csv") {
        std::string text = "id,check,expect,value,passed,supplementary\n";
        for (const TheoremResult& r : results) {
            for (const Evidence& e : r.evidence) {
                text += r.id + "," + quoted(e.description) + "," + quoted(e.expectation) + "," +
                        num(e.value) + "," + (e.passed ? "true" : "false") + "," +
                        (e.supplementary ? "true" : "false") + "\n";
            }
        }
        emit(o, text);
    } else {
        nlohmann::ordered_json doc;
        doc["config"] = {{"seed", cfg.seed},
                         {"samples", cfg.num_points},
                         {"triples", cfg.num_arg_triples},
                         {"tol", cfg.tol}};
        doc["passed"] = results.size() - failed.size();
        doc["total"] = results.size();
        doc["failed"] = failed;
        auto list = nlohmann::ordered_json::array();
        for (const TheoremResult& r : results) {
            list.push_back(to_json(r));
        }
        doc["theorems"] = list;
        emit(o, doc.dump(2) + "\n");
    }

    std::cerr << results.size() - failed.size() << "/" << results.size() << " theorems pass";
    if (!failed.empty()) {
        std::cerr << "; failing:";
        for (const std::string& id : failed) {
            std::cerr << ' ' << id;
        }
    }
    std::cerr << '\n';
    return failed.empty() ? kOk : kFailed;
}

int cmd_selftest(const Options& o)
{
    OracleOptions opt;
    opt.seed = o.seed;
    opt.trials = o.trials;
    if (o.corrupt_sign_table) {
        opt.signs.sigma = {-1, +1, +1, -1};
    }
    if (opt.trials <= 0) {
        throw InputError("--trials must be positive");
    }
    const std::vector<OracleResult> results = run_oracles(opt);

    bool ok = true;
    if (o.format == "csv") {
        std::string text = "check,trials,max_residual,tolerance,passed,witness\n";
        for (const OracleResult& r : results) {
            text += quoted(r.name) + "," + std::to_string(r.trials) + "," + num(r.max_residual) +
                    "," + num(r.tolerance) + "," + (r.passed() ? "true" : "false") + "," +
                    quoted(r.witness) + "\n";
        }
        emit(o, text);
    } else {
        auto list = nlohmann::ordered_json::array();
        for (const OracleResult& r : results) {
            list.push_back({{"check", r.name},
                            {"trials", r.trials},
                            {"max_residual", r.max_residual},
                            {"tolerance", r.tolerance},
                            {"passed", r.passed()},
                            {"witness", r.witness}});
        }
        emit(o, nlohmann::ordered_json{{"seed", o.seed}, {"checks", list}}.dump(2) + "\n");
    }
    for (const OracleResult& r : results) {
        if (!r.passed()) {
            ok = false;
            std::cerr << "FAIL " << r.name << ": max residual " << r.max_residual << " > "
                      << r.tolerance << " (" << r.witness << ")\n";
        }
    }
    return ok ? kOk : kFailed;
}

int cmd_models(const Options& o)
{
    if (o.format == "csv") {
        std::string text = "model\n";
        for (const std::string& m : model_names()) {
            text += m + "\n";
        }
        emit(o, text);
    } else {
        emit(o, nlohmann::json(model_names()).dump(2) + "\n");
    }
    return kOk;
}

void add_output(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", o.output, "Write the report here instead of stdout");
}

void add_sampling(CLI::App* cmd, Options& o)
{
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    cmd->add_option("--samples", o.samples, "Sampled points (J1, J2)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--triples", o.triples, "Argument triples per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "Residual threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--w2w3-as-printed", o.w2w3_as_printed,
                  "Use S{(D_A)(A,C) - (D_JA)(JA,C)} for the W2+W3 condition");
    cmd->add_flag("--w1w3-as-printed", o.w1w3_as_printed,
                  "Use (D_A)(A,C) + (D_JA)(JA,C) for the W1+W3 condition");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gray-Hervella classes of the product twistor structures"};
    app.require_subcommand(1);
    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Classify one operator");
    auto* model_opt = classify_cmd->add_option("--model", o.model, "Built-in model name");
    auto* input_opt = classify_cmd->add_option("--input", o.input, "Curvature JSON file");
    model_opt->excludes(input_opt);
    classify_cmd->add_option("--s", o.s, "Scalar curvature of the built-in model")
        ->capture_default_str();
    classify_cmd->add_option("--component", o.component, "Component of G")
        ->check(CLI::IsMember({"++", "+-", "-+", "--"}))
        ->capture_default_str();
    classify_cmd->add_option("--n", o.n, "Structure index")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    classify_cmd->add_option("--t1", o.t1, "Fibre scale of the first factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    classify_cmd->add_option("--t2", o.t2, "Fibre scale of the second factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_sampling(classify_cmd, o);
    add_output(classify_cmd, o);

    auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks");
    auto* all_opt = verify_cmd->add_flag("--all", o.all, "All sixteen theorem parts");
    auto* id_opt = verify_cmd->add_option("--id", o.ids, "Theorem part, e.g. 4.6b");
    all_opt->excludes(id_opt);
    add_sampling(verify_cmd, o);
    add_output(verify_cmd, o);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the internal-consistency oracles");
    selftest_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    selftest_cmd->add_option("--trials", o.trials, "Trials per (component, n)")
        ->capture_default_str();
    selftest_cmd->add_flag("--corrupt-sign-table", o.corrupt_sign_table)->group("");
    add_output(selftest_cmd, o);

    auto* models_cmd = app.add_subcommand("models", "List built-in curvature models");
    add_output(models_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (classify_cmd->parsed()) {
            if (o.model.empty() && o.input.empty()) {
                throw InputError("classify needs --model or --input");
            }
            return cmd_classify(o);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o);
        }
        if (selftest_cmd->parsed()) {
            return cmd_selftest(o);
        }
        return cmd_models(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
}
