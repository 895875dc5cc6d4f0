// Command-line front end: verify, classify, table, extend, iso, skew-iso, match, random.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cla/error.hpp"
#include "cla/io.hpp"

namespace {

using namespace cla;
using io::json;

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kResource = 3 };

struct Config {
    std::uint64_t seed = 1;
    bool allow_char_two = false;
    bool sampled_oracle = false;
    bool serial = false;
    int threads = 0;
    std::size_t max_dim = 4;
    std::uint32_t max_p = 7;
    std::string out_dir;

    SearchBounds bounds() const { return {max_dim, max_p}; }
    Backend backend() const { return serial ? Backend::Serial : Backend::Parallel; }
};

CompatibleLieAlgebra load_algebra(const std::string& path, const Config& cfg)
{
    try {
        return io::algebra_from_json(io::read_json_file(path), cfg.allow_char_two);
    } catch (const InputError& e) {
        std::string what = e.what();
        throw InputError(what.rfind(path, 0) == 0 ? what : path + ": " + what);
    }
}

Field parse_field(const std::string& text, const Config& cfg)
{
    json j = text;
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
        j = std::stoull(text);
    return io::field_from_json(j, cfg.allow_char_two);
}

std::string timestamp()
{
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json config_json(const Config& cfg)
{
    return {{"seed", cfg.seed},
            {"allow_char_2", cfg.allow_char_two},
            {"sampled_oracle", cfg.sampled_oracle},
            {"backend", cfg.serial ? "serial" : "parallel"},
            {"bounds", {{"max_dim", cfg.max_dim}, {"max_p", cfg.max_p}}}};
}

void write_outputs(const Config& cfg, const std::string& stem, const std::vector<ClassificationEntry>& entries,
                   json manifest)
{
    if (cfg.out_dir.empty())
        return;
    std::filesystem::create_directories(cfg.out_dir);
    auto path = [&](const std::string& name) { return (std::filesystem::path(cfg.out_dir) / name).string(); };
    io::write_text_file(path(stem + ".json"), io::entries_to_json(entries).dump(2) + "\n");
    io::write_text_file(path(stem + ".txt"), table_text(entries));
    io::write_text_file(path(stem + ".csv"), table_csv(entries));
    manifest["created_at"] = timestamp();
    io::write_text_file(path(stem + ".manifest.json"), manifest.dump(2) + "\n");
    std::cerr << "wrote " << path(stem + ".{json,txt,csv,manifest.json}") << "\n";
}

int cmd_verify(const std::string& file, const Config& cfg)
{
    CompatibleLieAlgebra g = load_algebra(file, cfg);
    VerificationReport r = verify(g);
    std::cout << "jacobi [,]: " << (r.jacobi1_ok ? "ok" : "FAIL") << "\n"
              << "jacobi {,}: " << (r.jacobi2_ok ? "ok" : "FAIL") << "\n"
              << "mixed:      " << (r.mixed_ok ? "ok" : "FAIL") << "\n";
    if (r.first_failure) {
        const auto& f = *r.first_failure;
        std::cout << "first failure: " << f.identity << " on (e" << f.triple[0] + 1 << ",e" << f.triple[1] + 1 << ",e"
                  << f.triple[2] + 1 << ") residual (";
        for (std::size_t i = 0; i < f.residual.size(); ++i)
            std::cout << (i ? "," : "") << f.residual[i].to_string();
        std::cout << ")\n";
    }
    std::cout << (r.ok() ? "compatible Lie algebra" : "not a compatible Lie algebra") << "\n";
    return r.ok() ? kOk : kFalse;
}

int cmd_classify(std::size_t n, const std::string& field, const Config& cfg)
{
    Field f = parse_field(field, cfg);
    ClassifyOptions opt;
    opt.bounds = cfg.bounds();
    opt.backend = cfg.backend();
    opt.sampled_oracle = cfg.sampled_oracle;
    opt.seed = cfg.seed;
    auto t0 = std::chrono::steady_clock::now();
    Classification c = classify_all(n, f, opt);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << table_text(c.entries());
    std::cout << c.entries().size() << " algebras of dimension " << n << " over " << f.to_string() << "; pairwise "
              << (c.pairwise_distinct ? "non-isomorphic" : "NOT distinct") << " (" << c.oracle_checks.size()
              << " oracle checks)\n";

    json checks = json::array();
    for (const auto& ch : c.oracle_checks)
        checks.push_back({{"a", ch.a}, {"b", ch.b}, {"verdict", to_string(ch.verdict)}, {"reason", ch.reason}});
    json witnesses = json::object();
    for (const auto& e : c.entries())
        if (e.match_witness)
            witnesses[e.label] = io::matrix_to_json(*e.match_witness);
    json manifest = {{"command", "classify"},
                     {"dim", n},
                     {"field", io::field_to_json(f)},
                     {"config", config_json(cfg)},
                     {"entries", c.entries().size()},
                     {"pairwise_distinct", c.pairwise_distinct},
                     {"seconds", seconds},
                     {"oracle_checks", checks},
                     {"table_witnesses", witnesses}};
    write_outputs(cfg, "classify_" + std::to_string(n) + "_" + std::to_string(f.characteristic()), c.entries(),
                  manifest);
    return kOk;
}

int cmd_table(const std::string& field, const Config& cfg)
{
    Field f = parse_field(field, cfg);
    auto entries = paper_table(f);
    auto pairs = skew_pairs(entries, cfg.bounds());
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!pairs[i].partner.empty())
            entries[i].skew_partner = pairs[i].partner;
    std::cout << table_text(entries) << "\nskew pairs:\n";
    for (const auto& p : pairs)
        std::cout << "  " << p.label << " ~s " << (p.partner.empty() ? "?" : p.partner)
                  << (p.self_paired ? "  (self)" : "") << "\n";
    json manifest = {{"command", "table"},
                     {"field", io::field_to_json(f)},
                     {"config", config_json(cfg)},
                     {"entries", entries.size()}};
    write_outputs(cfg, "table_" + std::to_string(f.characteristic()), entries, manifest);
    return kOk;
}

int cmd_extend(const std::string& file, const Config& cfg)
{
    ExtensionSpec spec;
    try {
        spec = io::extension_from_json(io::read_json_file(file), cfg.allow_char_two);
    } catch (const InputError& e) {
        std::string what = e.what();
        throw InputError(what.rfind(file, 0) == 0 ? what : file + ": " + what);
    }
    CompatibleLieAlgebra e = central_extension(spec);
    bool admissible = is_admissible(spec.base, spec.cocycle);
    std::cerr << "admissible: " << (admissible ? "yes" : "no") << "\n";
    if (admissible)
        std::cerr << "central component: "
                  << (has_central_component_cohomological(spec.base, spec.cocycle) ? "yes" : "no") << "\n";
    std::cerr << "relations: " << relations_string(e) << "\n";
    std::string text = io::algebra_to_json(e).dump(2) + "\n";
    if (cfg.out_dir.empty())
        std::cout << text;
    else
        io::write_text_file(cfg.out_dir, text);
    return kOk;
}

int report_iso(const IsoResult& r)
{
    std::cout << to_string(r.verdict) << "\n";
    if (r.witness)
        std::cout << "witness " << io::matrix_to_json(*r.witness).dump() << "\n";
    std::cout << "reason: " << r.reason << "\n";
    return r.isomorphic() ? kOk : kFalse;
}

int cmd_iso(const std::string& a, const std::string& b, bool skew, const Config& cfg)
{
    CompatibleLieAlgebra g = load_algebra(a, cfg), h = load_algebra(b, cfg);
    return report_iso(skew ? is_skew_isomorphic(g, h, cfg.bounds(), cfg.backend())
                           : is_isomorphic(g, h, cfg.bounds(), cfg.backend()));
}

int cmd_match(const std::string& file, const Config& cfg)
{
    CompatibleLieAlgebra g = load_algebra(file, cfg);
    if (!is_nilpotent(g)) {
        std::cout << "not nilpotent; no table entry applies\n";
        return kFalse;
    }
    try {
        std::cout << match(g, cfg.bounds()) << "\n";
    } catch (const ContractError& e) {
        std::cout << "no match: " << e.what() << "\n";
        return kFalse;
    }
    return kOk;
}

int cmd_random(std::size_t dim, const std::string& field, const Config& cfg)
{
    CompatibleLieAlgebra g = random_nilpotent(dim, parse_field(field, cfg), cfg.seed);
    std::cout << io::algebra_to_json(g).dump(2) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nilpotent compatible Lie algebras: verification, extensions, isomorphism and classification"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
    app.add_flag("--allow-char-2", cfg.allow_char_two, "Permit the field F_2");
    app.add_flag("--sampled-oracle", cfg.sampled_oracle, "Sample the final pairwise isomorphism check");
    app.add_flag("--serial", cfg.serial, "Use the serial reference kernels");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)");
    app.add_option("--max-dim", cfg.max_dim, "Dimension bound for exhaustive searches")->capture_default_str();
    app.add_option("--max-p", cfg.max_p, "Largest p for exhaustive searches")->capture_default_str();

    std::string file, file2, field;
    std::size_t n = 0;
    int code = kOk;

    auto* verify_cmd = app.add_subcommand("verify", "Check the Jacobi and mixed Jacobi identities");
    verify_cmd->add_option("algebra", file, "Algebra JSON")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Classify nilpotent algebras of dimension n over F_p");
    classify_cmd->add_option("n", n, "Dimension")->required();
    classify_cmd->add_option("field", field, "Prime p or F_p")->required();
    classify_cmd->add_option("--out", cfg.out_dir, "Directory for JSON/CSV/text/manifest");

    auto* table_cmd = app.add_subcommand("table", "Instantiate the reference table over F_p");
    table_cmd->add_option("field", field, "Prime p or F_p")->required();
    table_cmd->add_option("--out", cfg.out_dir, "Directory for JSON/CSV/text/manifest");

    auto* extend_cmd = app.add_subcommand("extend", "Build the central extension of an extension spec");
    extend_cmd->add_option("spec", file, "Extension JSON {base, cocycle}")->required();
    extend_cmd->add_option("--out", cfg.out_dir, "Output file (default stdout)");

    auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two algebras");
    iso_cmd->add_option("a", file, "First algebra JSON")->required();
    iso_cmd->add_option("b", file2, "Second algebra JSON")->required();

    auto* skew_cmd = app.add_subcommand("skew-iso", "Decide skew-isomorphism of two algebras");
    skew_cmd->add_option("a", file, "First algebra JSON")->required();
    skew_cmd->add_option("b", file2, "Second algebra JSON")->required();

    auto* match_cmd = app.add_subcommand("match", "Name the table entry isomorphic to an algebra");
    match_cmd->add_option("algebra", file, "Algebra JSON")->required();

    auto* random_cmd = app.add_subcommand("random", "Random nilpotent algebra");
    random_cmd->add_option("dim", n, "Dimension")->required();
    random_cmd->add_option("field", field, "Q, prime p or F_p")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }
#ifdef _OPENMP
    if (cfg.threads > 0)
        omp_set_num_threads(cfg.threads);
#endif

    try {
        if (*verify_cmd)
            code = cmd_verify(file, cfg);
        else if (*classify_cmd)
            code = cmd_classify(n, field, cfg);
        else if (*table_cmd)
            code = cmd_table(field, cfg);
        else if (*extend_cmd)
            code = cmd_extend(file, cfg);
        else if (*iso_cmd)
            code = cmd_iso(file, file2, false, cfg);
        else if (*skew_cmd)
            code = cmd_iso(file, file2, true, cfg);
        else if (*match_cmd)
            code = cmd_match(file, cfg);
        else if (*random_cmd)
            code = cmd_random(n, field, cfg);
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return code;
}
