// qmds: construct, verify and catalog Hermitian self-orthogonal GRS codes.

#include "qmds/qmds.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kConstruction = 3, kVerification = 4 };

std::uint64_t table_budget()
{
    const char* env = std::getenv("QMDS_TABLE_BUDGET");
    if (!env || !*env) return qmds::kDefaultTableBudget;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(env).size() || v == 0)
        throw qmds::Error(qmds::Errc::ParseError, std::string("QMDS_TABLE_BUDGET is not a positive integer: ") + env);
    return v;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qmds::Error(qmds::Errc::ParseError, "cannot open " + path + " for writing");
    out << text;
}

std::string set_text(const std::vector<int>& values)
{
    if (values.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out + "}";
}

struct ConstructArgs {
    std::int64_t q = 0;
    int family = 1;
    int case_no = 1;
    std::int64_t h = 0;
    std::int64_t r = 0;
    std::optional<std::int64_t> k; // unset: the largest k the case allows
    std::uint64_t seed = 0;
    std::string out;
};

int run_construct(const ConstructArgs& a)
{
    using namespace qmds;
    std::optional<CheckedParams> checked;
    try {
        const Field field = Field::for_q(a.q, table_budget());
        const Family f = family_from_int(a.family);
        const std::int64_t k = a.k ? *a.k : kmax(f, a.case_no, a.q, a.h, a.r);
        checked.emplace(validate(field, {f, a.case_no, a.q, a.h, a.r, k, {}}));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    for (const auto& w : checked->warnings) std::cerr << "warning: " << w << "\n";

    try {
        const Construction c = construct(*checked, a.seed);
        if (c.solvability.structured_route)
            std::cerr << "note: " << c.solvability.structured_failure << "; solved with per-locator multipliers\n";
        const std::string text = io::artifact_to_json(c).dump(2) + "\n";
        if (a.out.empty()) {
            std::cerr << to_string(c.quantum) << "\n";
            std::cout << text;
        } else {
            write_output(a.out, text);
            std::cout << to_string(c.quantum) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstruction;
    }
    return kOk;
}

struct VerifyArgs {
    std::string in;
    std::string mode;
    std::uint64_t trials = 100'000;
    std::optional<std::uint64_t> seed;
};

int run_verify(const VerifyArgs& a)
{
    using namespace qmds;
    std::optional<io::Artifact> art;
    try {
        std::ifstream in(a.in, std::ios::binary);
        if (!in) throw Error(Errc::ParseError, "cannot read " + a.in);
        std::ostringstream buf;
        buf << in.rdbuf();
        art.emplace(io::parse_artifact(buf.str(), table_budget()));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    oracle::VerifyOptions opts;
    opts.trials = a.trials;
    opts.seed = a.seed.value_or(art->seed.value_or(0));
    if (a.mode == "exhaustive") opts.mds_mode = MdsExhaustive{};
    if (a.mode == "sampled") opts.mds_mode = MdsSampled{a.trials, opts.seed};

    try {
        const VerificationReport rep = oracle::full_verify(art->code, art->claimed, opts);
        std::cout << io::report_to_json(rep).dump(2) << "\n";
        return rep.all_pass() ? kOk : kVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

struct SsetArgs {
    std::int64_t q = 0;
    std::int64_t h = 0;
    std::int64_t k = 0;
    int family = 1;
    std::int64_t t = 0;
    int variant = 1;
};

int run_sset(const SsetArgs& a)
{
    using namespace qmds;
    try {
        const Family f = family_from_int(a.family);
        const SIndexSet closed = s_set(f, a.variant, a.q, a.h, a.t, a.k);
        const oracle::Witnesses brute = oracle::brute_force_s_set(a.q, a.h, a.k, shift_for(f, a.q));

        std::vector<int> brute_values;
        for (const auto& [s, pairs] : brute) brute_values.push_back(s);
        bool agree = brute_values == closed.values;
        for (const auto& [s, ij] : closed.witnesses) {
            const auto it = brute.find(s);
            agree = agree && it != brute.end() && it->second == std::vector{ij};
        }

        std::cout << "closed form: " << set_text(closed.values) << "\n";
        std::cout << "oracle:      " << set_text(brute_values) << "\n";
        for (const auto& [s, pairs] : brute) {
            std::cout << "  s=" << s << ":";
            for (const auto& [i, j] : pairs) std::cout << " (" << i << "," << j << ")";
            std::cout << "\n";
        }
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? kOk : kVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

struct CatalogArgs {
    std::int64_t q_max = 13;
    std::string format = "csv";
    bool verify_all = true;
    std::uint64_t seed = 0;
    std::string out;
};

int run_catalog(const CatalogArgs& a)
{
    using namespace qmds;
    CatalogOptions opts;
    opts.q_max = a.q_max;
    opts.seed = a.seed;
    opts.verify_all = a.verify_all;
    try {
        opts.table_budget = table_budget();
        if (a.q_max * a.q_max > static_cast<std::int64_t>(opts.table_budget))
            throw Error(Errc::TableBudgetExceeded, "qmax^2 exceeds the table budget " + std::to_string(opts.table_budget));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    try {
        const auto rows = catalog(opts);
        write_output(a.out, a.format == "json" ? io::catalog_to_json(rows).dump(2) + "\n" : io::catalog_to_csv(rows));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::ParseError ? kUsage : kConstruction;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum MDS codes from Hermitian self-orthogonal GRS codes"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a code and write its artifact JSON");
    construct->add_option("--q", ca.q, "odd prime power")->required();
    construct->add_option("--family", ca.family, "family 1-4")->required()->check(CLI::Range(1, 4));
    construct->add_option("--case", ca.case_no, "case within the family")->check(CLI::Range(1, 3));
    construct->add_option("--h", ca.h)->required();
    construct->add_option("--r", ca.r, "number of cosets")->required();
    construct->add_option("--k", ca.k, "GRS dimension (default: the largest allowed)");
    construct->add_option("--seed", ca.seed);
    construct->add_option("--out", ca.out, "artifact path (default: stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run every oracle on an artifact");
    verify->add_option("--in", va.in)->required();
    verify->add_option("--mode", va.mode, "MDS check mode")->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--trials", va.trials);
    verify->add_option("--seed", va.seed);

    SsetArgs sa;
    auto* sset = app.add_subcommand("sset", "compare the closed-form index set with brute force");
    sset->add_option("--q", sa.q)->required();
    sset->add_option("--h", sa.h)->required();
    sset->add_option("--k", sa.k)->required();
    sset->add_option("--family", sa.family)->required()->check(CLI::Range(1, 4));
    sset->add_option("--t", sa.t)->required();
    sset->add_option("--variant", sa.variant, "index-set variant for families 3 and 4")->check(CLI::Range(1, 2));

    CatalogArgs ka;
    auto* cat = app.add_subcommand("catalog", "construct and verify every admissible instance");
    cat->add_option("--qmax", ka.q_max);
    cat->add_option("--format", ka.format)->check(CLI::IsMember({"csv", "json"}));
    cat->add_flag("--verify-all,!--no-verify-all", ka.verify_all, "oracle-verify each entry (default on)");
    cat->add_option("--seed", ka.seed);
    cat->add_option("--out", ka.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*verify) return run_verify(va);
        if (*sset) return run_sset(sa);
        if (*cat) return run_catalog(ka);
    } catch (const qmds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
