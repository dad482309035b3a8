// Command-line front end: degree / block / center computations on quantized
// matrix algebras at roots of unity, plus reproduction tables for the
// closed-form theorems.

#include "qma/degree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace qma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
    std::string algebra = "mq";
    int n = 0;
    int r = 0;
    unsigned m = 0;
    std::string input;
    std::string format = "table";
    std::string rows, cols;
    std::string suite;
    int max_n = 0;
    std::string moduli;
    std::string candidate = "all";
    std::string mode = "lattice";
    int a = 1;
    unsigned long guard_enum = 100000000UL;
    bool guard_symbolic_off = false;
    bool brute = false;
    bool algebra_explicit = false;
};

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty())
            out.push_back(std::stoi(tok));
    return out;
}

AlgebraDescriptor make_algebra(const RunConfig& cfg)
{
    if (cfg.n < 1)
        throw std::invalid_argument("--n is required and must be positive");
    if (cfg.algebra == "mq")
        return AlgebraDescriptor::square(cfg.n);
    if (cfg.r < 1)
        throw std::invalid_argument("--r is required for this algebra kind");
    if (cfg.algebra == "mqnr")
        return AlgebraDescriptor::rectangle(cfg.n, cfg.r);
    if (cfg.algebra == "anr")
        return AlgebraDescriptor::hook(cfg.n, cfg.r);
    if (cfg.algebra == "snr")
        return AlgebraDescriptor::cross(cfg.n, cfg.r);
    throw std::invalid_argument("unknown algebra kind: " + cfg.algebra);
}

SkewMatrix load_matrix(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open matrix file: " + path);
    return read_skew_matrix(in);
}

json config_json(const RunConfig& cfg, const std::string& command)
{
    json c;
    c["algebra"] = cfg.algebra;
    if (cfg.n)
        c["n"] = cfg.n;
    if (cfg.r)
        c["r"] = cfg.r;
    if (cfg.m)
        c["m"] = cfg.m;
    if (!cfg.input.empty())
        c["input"] = cfg.input;
    if (!cfg.suite.empty())
        c["suite"] = cfg.suite;
    c["format"] = cfg.format;
    (void)command;
    return c;
}

json findings_json(const std::vector<Finding>& fs)
{
    json out = json::array();
    for (const auto& f : fs)
        out.push_back({{"check", f.check},
                       {"expected", f.expected},
                       {"actual", f.actual}});
    return out;
}

void render_table(const json& v, const std::string& prefix)
{
    if (v.is_object()) {
        for (const auto& [k, val] : v.items()) {
            if (val.is_object() || (val.is_array() && !val.empty()
                                    && val.front().is_object())) {
                std::cout << prefix << k << ":\n";
                render_table(val, prefix + "  ");
            } else {
                std::cout << prefix << k << ": "
                          << (val.is_string() ? val.get<std::string>()
                                              : val.dump())
                          << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& row : v) {
            std::cout << prefix;
            bool first = true;
            for (const auto& [k, val] : row.items()) {
                if (!first)
                    std::cout << "  ";
                first = false;
                std::cout << k << "="
                          << (val.is_string() ? val.get<std::string>()
                                              : val.dump());
            }
            std::cout << "\n";
        }
    }
}

void flatten_csv(const json& v, const std::string& path,
                 std::vector<std::pair<std::string, std::string>>& rows)
{
    if (v.is_object()) {
        for (const auto& [k, val] : v.items())
            flatten_csv(val, path.empty() ? k : path + "." + k, rows);
    } else if (v.is_array()) {
        size_t i = 0;
        for (const auto& val : v)
            flatten_csv(val, path + "." + std::to_string(i++), rows);
    } else {
        rows.emplace_back(path, v.is_string() ? v.get<std::string>()
                                              : v.dump());
    }
}

void emit(const RunConfig& cfg, const std::string& command, const json& result,
          const std::vector<Finding>& findings)
{
    json envelope;
    envelope["schema_version"] = 1;
    envelope["command"] = command;
    envelope["config"] = config_json(cfg, command);
    envelope["result"] = result;
    envelope["findings"] = findings_json(findings);
    if (cfg.format == "json") {
        std::cout << envelope.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten_csv(result, "", rows);
        flatten_csv(findings_json(findings), "findings", rows);
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows)
            std::cout << k << "," << v << "\n";
    } else {
        render_table(result, "");
        for (const auto& f : findings)
            std::cout << "FINDING " << f.str() << "\n";
    }
}

json degree_report_json(const DegreeReport& rep)
{
    json r;
    r["m"] = rep.m;
    r["h"] = rep.h.get_str();
    r["degree"] = rep.degree.get_str();
    r["divisors"] = rep.divisors;
    r["corank"] = rep.corank;
    if (rep.closed_form)
        r["closed_form"] = rep.closed_form->get_str();
    else
        r["closed_form"] = nullptr;
    r["match"] = rep.match;
    return r;
}

int cmd_degree(const RunConfig& cfg)
{
    std::vector<Finding> findings;
    json result;
    bool match = true;
    if (cfg.m < 1)
        throw std::invalid_argument("--m is required and must be positive");
    if (cfg.algebra == "custom") {
        if (cfg.input.empty())
            throw std::invalid_argument("custom algebra requires --input");
        const SkewMatrix j = load_matrix(cfg.input);
        const SkewNormalForm nf = skew_normal_form(j);
        result["m"] = cfg.m;
        result["h"] = image_cardinality(j, cfg.m).get_str();
        result["degree"] = degree_quasipoly(j, cfg.m).get_str();
        result["divisors"] = nf.divisors;
        result["corank"] = nf.zero_rank;
        result["closed_form"] = nullptr;
        result["match"] = true;
        if (cfg.brute)
            result["brute_force_h"]
                = brute_force_h(j, cfg.m, cfg.guard_enum).get_str();
    } else {
        const AlgebraDescriptor alg = make_algebra(cfg);
        const DegreeReport rep = make_degree_report(alg, cfg.m);
        result = degree_report_json(rep);
        match = rep.match;
        if (!match && rep.closed_form)
            findings.push_back({"closed-form degree",
                                rep.closed_form->get_str(),
                                rep.degree.get_str()});
        if (cfg.brute)
            result["brute_force_h"]
                = brute_force_h(defining_matrix(alg), cfg.m, cfg.guard_enum)
                      .get_str();
    }
    emit(cfg, "degree", result, findings);
    return match ? kExitOk : kExitMismatch;
}

json block_report_json(const BlockReport& rep)
{
    json r;
    r["divisors"] = rep.divisors;
    r["count_1"] = rep.count_1;
    r["count_2"] = rep.count_2;
    r["count_4"] = rep.count_4;
    r["other"] = rep.other;
    r["corank"] = rep.corank;
    return r;
}

int cmd_blocks(const RunConfig& cfg)
{
    const AlgebraDescriptor alg = make_algebra(cfg);
    const BlockReport rep = classify_blocks(alg);
    emit(cfg, "blocks", block_report_json(rep), rep.findings);
    return rep.findings.empty() ? kExitOk : kExitMismatch;
}

int cmd_corank(const RunConfig& cfg)
{
    json result;
    if (cfg.algebra == "custom") {
        if (cfg.input.empty())
            throw std::invalid_argument("custom algebra requires --input");
        result["corank"] = corank(load_matrix(cfg.input));
    } else {
        result["corank"] = corank(defining_matrix(make_algebra(cfg)));
    }
    emit(cfg, "corank", result, {});
    return kExitOk;
}

int cmd_snf(const RunConfig& cfg)
{
    SkewMatrix j = cfg.input.empty()
                       ? defining_matrix(make_algebra(cfg))
                       : load_matrix(cfg.input);
    const SkewNormalForm nf = skew_normal_form(j);
    json result;
    result["divisors"] = nf.divisors;
    result["zero_rank"] = nf.zero_rank;
    std::ostringstream u;
    write_matrix(u, nf.transform);
    result["transform"] = u.str();
    emit(cfg, "snf", result, {});
    return kExitOk;
}

int cmd_minor(const RunConfig& cfg)
{
    const AlgebraDescriptor alg = make_algebra(cfg);
    MinorDescriptor d{parse_int_list(cfg.rows), parse_int_list(cfg.cols)};
    json result;
    result["minor"] = d.str();
    result["polynomial"] = quantum_minor(d, alg).str();
    emit(cfg, "minor", result, {});
    return kExitOk;
}

json verdict_json(const std::string& name, const Verdict& v)
{
    json r;
    r["candidate"] = name;
    r["mode"] = v.mode;
    r["pass"] = v.pass;
    r["detail"] = v.detail;
    return r;
}

// candidates applicable to the given algebra and modulus
std::vector<CentralCandidate> applicable_candidates(const AlgebraDescriptor& alg,
                                                    unsigned m)
{
    std::vector<CentralCandidate> out;
    const int n = alg.grid_size();
    const int r = alg.kind() == AlgebraKind::Square ? n : alg.param_r();
    if (alg.kind() == AlgebraKind::Hook) {
        return candidates_theta_chain(n, r);
    }
    if (alg.kind() == AlgebraKind::Square
        || alg.kind() == AlgebraKind::Rectangle) {
        const int s = std::gcd(n, r);
        if ((n / s) % 2 == 1 && (r / s) % 2 == 1)
            for (int a = 1; a <= s; ++a)
                out.push_back(candidate_Za(a, n, r));
        if (m % 2 == 0)
            for (auto& c : candidates_even_m(n, r, m))
                out.push_back(std::move(c));
        if (m % 4 == 0 && r % 2 == 1 && r > 2 && n % r == 0
            && (n / r) % 2 == 0) {
            bool r_prime = true;
            for (int d = 2; d * d <= r; ++d)
                if (r % d == 0)
                    r_prime = false;
            if (r_prime)
                out.push_back(candidate_quarter(n, r, m));
        }
    }
    return out;
}

int cmd_center(const RunConfig& cfg)
{
    if (cfg.m < 1)
        throw std::invalid_argument("--m is required and must be positive");
    const AlgebraDescriptor alg = make_algebra(cfg);
    const SkewMatrix j = defining_matrix(alg);
    json result;
    result["m"] = cfg.m;
    result["corank"] = corank(j);
    result["good_modulus"] = is_good_modulus(j, cfg.m);
    const LatticeBasisModM ker = kernel_mod_m(j, cfg.m);
    json gens = json::array();
    for (const auto& g : ker.generators)
        gens.push_back(g);
    result["kernel_generators"] = gens;

    bool all_pass = true;
    json verdicts = json::array();
    for (const auto& c : applicable_candidates(alg, cfg.m)) {
        const Verdict v
            = verify_central_candidate(c, alg, cfg.m, VerifyMode::Lattice);
        all_pass = all_pass && v.pass;
        verdicts.push_back(verdict_json(c.str(), v));
    }
    result["verdicts"] = verdicts;

    if ((alg.kind() == AlgebraKind::Rectangle
         || alg.kind() == AlgebraKind::Square)
        && is_good_modulus(j, cfg.m)) {
        const int r = alg.kind() == AlgebraKind::Square ? alg.grid_size()
                                                        : alg.param_r();
        const Verdict g = center_generation_check(alg.grid_size(), r, cfg.m);
        all_pass = all_pass && g.pass;
        result["generation"] = verdict_json("leading-term generation", g);
    }
    emit(cfg, "center", result, {});
    return all_pass ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg)
{
    if (cfg.m < 1)
        throw std::invalid_argument("--m is required and must be positive");
    const AlgebraDescriptor alg = make_algebra(cfg);
    const VerifyMode mode = cfg.mode == "symbolic" ? VerifyMode::Symbolic
                                                   : VerifyMode::Lattice;
    std::vector<CentralCandidate> cands;
    const int n = alg.grid_size();
    const int r = alg.kind() == AlgebraKind::Square ? n : alg.param_r();
    if (cfg.candidate == "all") {
        cands = applicable_candidates(alg, cfg.m);
    } else if (cfg.candidate == "za") {
        cands.push_back(candidate_Za(cfg.a, n, r));
    } else if (cfg.candidate == "quarter") {
        cands.push_back(candidate_quarter(n, r, cfg.m));
    } else if (cfg.candidate == "chains") {
        cands = candidates_theta_chain(n, r);
    } else if (cfg.candidate == "even") {
        cands = candidates_even_m(n, r, cfg.m);
    } else {
        throw std::invalid_argument("unknown candidate: " + cfg.candidate);
    }

    bool all_pass = true;
    json verdicts = json::array();
    for (const auto& c : cands) {
        const Verdict v = verify_central_candidate(c, alg, cfg.m, mode,
                                                   cfg.guard_symbolic_off);
        all_pass = all_pass && v.pass;
        verdicts.push_back(verdict_json(c.str(), v));
    }
    json result;
    result["verdicts"] = verdicts;
    emit(cfg, "verify", result, {});
    return all_pass ? kExitOk : kExitMismatch;
}

struct Cell {
    json data;
    bool pass;
};

int run_suite(const RunConfig& cfg, std::vector<Cell> cells,
              const std::string& suite)
{
    bool all = true;
    json rows = json::array();
    for (auto& c : cells) {
        c.data["pass"] = c.pass;
        all = all && c.pass;
        rows.push_back(c.data);
    }
    json result;
    result["suite"] = suite;
    result["cells"] = rows;
    result["all_pass"] = all;
    emit(cfg, "reproduce", result, {});
    return all ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const RunConfig& cfg)
{
    std::vector<int> moduli = cfg.moduli.empty()
                                  ? std::vector<int>{3, 5, 7}
                                  : parse_int_list(cfg.moduli);
    std::vector<Cell> cells;
    if (cfg.suite == "detdeg") {
        const int maxn = cfg.max_n ? cfg.max_n : 3;
        for (int n = 1; n <= maxn; ++n)
            for (int m : moduli) {
                const auto rep
                    = make_degree_report(AlgebraDescriptor::square(n), m);
                mpz_class want;
                mpz_ui_pow_ui(want.get_mpz_t(), m,
                              (unsigned long)n * (n - 1) / 2);
                cells.push_back({{{"n", n},
                                  {"m", m},
                                  {"degree", rep.degree.get_str()},
                                  {"expected", want.get_str()}},
                                 rep.degree == want});
            }
    } else if (cfg.suite == "gcd") {
        const int maxn = cfg.max_n ? cfg.max_n : 8;
        for (int n = 1; n <= maxn; ++n)
            for (int r = 1; r <= n; ++r) {
                const int s = std::gcd(n, r);
                const int want
                    = ((n / s) % 2 == 1 && (r / s) % 2 == 1) ? s : 0;
                const int got = corank(
                    defining_matrix(AlgebraDescriptor::rectangle(n, r)));
                cells.push_back({{{"n", n},
                                  {"r", r},
                                  {"corank", got},
                                  {"expected", want}},
                                 got == want});
            }
    } else if (cfg.suite == "blocks-rprime") {
        const int r = cfg.r ? cfg.r : 3;
        const int maxn = cfg.max_n ? cfg.max_n : 12;
        for (int n = r; n <= maxn; ++n) {
            const auto rep
                = classify_blocks(AlgebraDescriptor::rectangle(n, r));
            const bool applies
                = r % 2 == 1 && r > 2 && n % r == 0 && (n / r) % 2 == 0;
            const int want = applies ? (r - 1) / 2 : 0;
            cells.push_back({{{"n", n},
                              {"r", r},
                              {"count_4", rep.count_4},
                              {"expected", want}},
                             rep.count_4 == want && rep.findings.empty()});
        }
    } else if (cfg.suite == "bl1") {
        const int maxn = cfg.max_n ? cfg.max_n : 6;
        for (int n = 1; n <= maxn; ++n)
            for (int r = 1; r <= n; ++r) {
                const auto rep = make_degree_report(
                    AlgebraDescriptor::rectangle(n, r), 2);
                mpz_class want;
                mpz_ui_pow_ui(want.get_mpz_t(), 2,
                              (unsigned long)(n + r - 1) / 2);
                cells.push_back({{{"n", n},
                                  {"r", r},
                                  {"degree", rep.degree.get_str()},
                                  {"expected", want.get_str()}},
                                 rep.degree == want});
            }
    } else if (cfg.suite == "goodlabel") {
        const int maxn = cfg.max_n ? cfg.max_n : 4;
        for (int n = 1; n <= maxn; ++n)
            for (int r = 1; r <= n; ++r)
                for (int m : moduli) {
                    const auto alg = AlgebraDescriptor::rectangle(n, r);
                    if (!is_good_modulus(defining_matrix(alg), m))
                        continue;
                    const auto rep = make_degree_report(alg, m);
                    mpz_class want;
                    mpz_ui_pow_ui(want.get_mpz_t(), m,
                                  (unsigned long)(n * r - rep.corank) / 2);
                    cells.push_back({{{"n", n},
                                      {"r", r},
                                      {"m", m},
                                      {"degree", rep.degree.get_str()},
                                      {"expected", want.get_str()}},
                                     rep.degree == want});
                }
    } else if (cfg.suite == "hook") {
        const int maxn = cfg.max_n ? cfg.max_n : 5;
        for (int n = 1; n <= maxn; ++n)
            for (int r = 1; r <= n; ++r)
                for (int m : moduli) {
                    const auto rep = make_degree_report(
                        AlgebraDescriptor::hook(n, r), m);
                    cells.push_back(
                        {{{"n", n},
                          {"r", r},
                          {"m", m},
                          {"degree", rep.degree.get_str()},
                          {"expected", rep.closed_form
                                           ? rep.closed_form->get_str()
                                           : "-"}},
                         rep.match});
                }
    } else if (cfg.suite == "chains") {
        const int maxn = cfg.max_n ? cfg.max_n : 7;
        for (int n = 1; n <= maxn; ++n)
            for (int r = 1; r <= n; ++r)
                for (int m : moduli) {
                    const auto alg = AlgebraDescriptor::hook(n, r);
                    bool pass = true;
                    for (const auto& c : candidates_theta_chain(n, r))
                        pass = pass
                               && verify_central_candidate(
                                      c, alg, m, VerifyMode::Lattice)
                                      .pass;
                    cells.push_back(
                        {{{"n", n}, {"r", r}, {"m", m}}, pass});
                }
    } else {
        throw std::invalid_argument("unknown suite: " + cfg.suite);
    }
    return run_suite(cfg, std::move(cells), cfg.suite);
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--algebra", cfg.algebra,
                    "algebra kind: mq, mqnr, anr, snr, custom")
        ->each([&cfg](const std::string&) { cfg.algebra_explicit = true; });
    sub->add_option("--n", cfg.n, "grid size n");
    sub->add_option("--r", cfg.r, "secondary parameter r");
    sub->add_option("--m", cfg.m, "root-of-unity order m");
    sub->add_option("--input", cfg.input, "skew matrix file (custom algebra)");
    sub->add_option("--format", cfg.format, "output format: table, json, csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--unsafe-guard-enum", cfg.guard_enum,
                    "override the brute-force enumeration guard");
    sub->add_flag("--unsafe-guard-symbolic", cfg.guard_symbolic_off,
                  "disable the symbolic verification cost guard");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations for quantized matrix algebras at roots "
                 "of unity"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* deg = app.add_subcommand("degree", "degree of the algebra at m");
    add_common(deg, cfg);
    deg->add_flag("--brute", cfg.brute, "cross-check with brute-force h");

    auto* blk = app.add_subcommand("blocks", "block structure of J");
    add_common(blk, cfg);

    auto* cen = app.add_subcommand("center", "kernel and central candidates");
    add_common(cen, cfg);

    auto* cor = app.add_subcommand("corank", "corank of J");
    add_common(cor, cfg);

    auto* snf = app.add_subcommand("snf", "skew congruence normal form");
    add_common(snf, cfg);

    auto* mnr = app.add_subcommand("minor", "quantum minor expansion");
    add_common(mnr, cfg);
    mnr->add_option("--rows", cfg.rows, "row set, comma separated");
    mnr->add_option("--cols", cfg.cols, "column set, comma separated");

    auto* ver = app.add_subcommand("verify", "verify central candidates");
    add_common(ver, cfg);
    ver->add_option("--candidate", cfg.candidate,
                    "za, quarter, chains, even, all");
    ver->add_option("--mode", cfg.mode, "lattice or symbolic")
        ->check(CLI::IsMember({"lattice", "symbolic"}));
    ver->add_option("--a", cfg.a, "index for the za candidate");

    auto* rep = app.add_subcommand("reproduce", "theorem reproduction tables");
    add_common(rep, cfg);
    rep->add_option("--suite", cfg.suite,
                    "detdeg, gcd, blocks-rprime, bl1, goodlabel, hook, chains")
        ->required();
    rep->add_option("--max-n", cfg.max_n, "largest n in the table");
    rep->add_option("--moduli", cfg.moduli, "comma separated list of m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    // a bare --r means the rectangle algebra unless the kind was spelled out
    if (!cfg.algebra_explicit && cfg.r > 0)
        cfg.algebra = "mqnr";

    try {
        if (deg->parsed())
            return cmd_degree(cfg);
        if (blk->parsed())
            return cmd_blocks(cfg);
        if (cen->parsed())
            return cmd_center(cfg);
        if (cor->parsed())
            return cmd_corank(cfg);
        if (snf->parsed())
            return cmd_snf(cfg);
        if (mnr->parsed())
            return cmd_minor(cfg);
        if (ver->parsed())
            return cmd_verify(cfg);
        if (rep->parsed())
            return cmd_reproduce(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
