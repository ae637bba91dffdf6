#include "harmlike/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmlike/identities.hpp"
#include "harmlike/power_series.hpp"
#include "harmlike/report_json.hpp"
#include "harmlike/sequences.hpp"
#include "harmlike/transforms.hpp"

namespace harmlike::cli {

namespace {

constexpr std::int64_t kMaxIndex = 2000;
constexpr std::int64_t kMaxOrder = 400;
constexpr std::int64_t kMaxParam = 64;
constexpr std::int64_t kDefaultBound = 25;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "csv";
    std::optional<unsigned> decimal;
    std::string output;
};

struct FamilyOptions {
    std::string family;
    std::optional<std::int64_t> m, k, p, r;

    std::map<std::string, std::int64_t> given() const
    {
        std::map<std::string, std::int64_t> params;
        const auto put = [&](const char* name, const std::optional<std::int64_t>& v) {
            if (v) {
                params[name] = *v;
            }
        };
        put("m", m);
        put("k", k);
        put("p", p);
        put("r", r);
        return params;
    }
};

void add_family_params(CLI::App* cmd, FamilyOptions& opts)
{
    cmd->add_option("--m", opts.m, "Depth m of H_n(m) (harmonic_like)");
    cmd->add_option("--k", opts.k, "Column k of s(n,k) (stirling1)");
    cmd->add_option("--p", opts.p, "Order p (hyperharmonic, hyperharmonic_half)");
    cmd->add_option("--r", opts.r, "Order r of H_n^(r) (harmonic_order)");
}

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool with_decimal)
{
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    if (with_decimal) {
        cmd->add_option("--decimal", opts.decimal, "Append an approximate decimal column with this many digits")
            ->check(CLI::Range(0, 200));
    }
    cmd->add_option("--output", opts.output,
                    std::string("Write to this file instead of standard output; relative paths are resolved "
                                "against $") +
                        kOutputDirEnv + " when set");
}

void check_bound(const char* name, std::int64_t value, std::int64_t lo, std::int64_t hi)
{
    if (value < lo || value > hi) {
        throw UsageError(std::string("--") + name + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) +
                         ", got " + std::to_string(value));
    }
}

void check_params(const FamilyOptions& opts)
{
    for (const auto& [name, value] : opts.given()) {
        check_bound(name.c_str(), value, name == "r" ? 1 : 0, kMaxParam);
    }
}

SeqSpec family_spec(const FamilyOptions& opts)
{
    check_params(opts);
    try {
        return SeqSpec::make(opts.family, opts.given());
    } catch (const LookupError& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

// Table rows "n,value" rendered as CSV or JSON with identical rational strings.
struct Row {
    std::uint64_t n;
    Rational value;
};

std::string render_table(const std::vector<Row>& rows, const OutputOptions& opts)
{
    std::ostringstream os;
    if (opts.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json j;
            j["n"] = row.n;
            j["value"] = row.value.str();
            if (opts.decimal) {
                j["decimal"] = row.value.decimal(*opts.decimal);
            }
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << '\n';
        return os.str();
    }
    os << "n,value" << (opts.decimal ? ",decimal" : "") << '\n';
    for (const auto& row : rows) {
        os << row.n << ',' << row.value.str();
        if (opts.decimal) {
            os << ',' << row.value.decimal(*opts.decimal);
        }
        os << '\n';
    }
    return os.str();
}

void emit(const std::string& text, const std::string& output, std::ostream& out)
{
    if (output.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + path.string() + "'");
    }
    file << text;
}

// -- seq ---------------------------------------------------------------------

struct SeqCommand {
    FamilyOptions family;
    std::int64_t n = kDefaultBound;
    OutputOptions output;

    int run(std::ostream& out) const
    {
        check_bound("n", n, 0, kMaxIndex);
        const auto spec = family_spec(family);
        std::vector<Row> rows;
        for (std::int64_t i = 0; i <= n; ++i) {
            rows.push_back({static_cast<std::uint64_t>(i), spec.evaluate(static_cast<std::uint64_t>(i))});
        }
        emit(render_table(rows, output), output.output, out);
        return kExitOk;
    }
};

// -- verify ------------------------------------------------------------------

struct VerifyCommand {
    std::optional<std::string> id;
    std::optional<std::string> tag;
    std::optional<std::int64_t> n_max, m_max, p_max;
    unsigned threads = 0;
    bool list = false;
    std::string output;

    int run(std::ostream& out) const
    {
        if (list) {
            std::ostringstream os;
            os << "id,tags,cases,grid\n";
            for (const auto& entry : registry_catalog()) {
                std::string tags;
                for (const auto& t : entry.tags) {
                    tags += (tags.empty() ? "" : " ") + t;
                }
                os << entry.id << ',' << tags << ',' << entry.cases << ",\"" << entry.grid << "\"\n";
            }
            emit(os.str(), output, out);
            return kExitOk;
        }
        if (id && tag) {
            throw UsageError("--id and --tag are mutually exclusive");
        }
        GridOverrides overrides;
        const auto put = [&](const char* flag, const char* name, const std::optional<std::int64_t>& v) {
            if (v) {
                check_bound(flag, *v, 0, kMaxIndex);
                overrides[name] = *v;
            }
        };
        put("n-max", "n", n_max);
        put("m-max", "m", m_max);
        put("p-max", "p", p_max);

        std::vector<VerificationReport> reports;
        if (id) {
            if (!default_registry().contains(*id)) {
                throw UsageError("unknown identity '" + *id + "'");
            }
            reports.push_back(verify_identity(*id, overrides));
        } else {
            reports = verify_all(tag, overrides, threads);
        }
        emit(reports_to_json(reports) + "\n", output, out);
        const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
        return ok ? kExitOk : kExitCheckFailed;
    }
};

// -- gf-check ----------------------------------------------------------------

struct GfCheckCommand {
    FamilyOptions family;
    std::int64_t order = kDefaultBound;
    std::string output;

    int run(std::ostream& out) const
    {
        check_bound("order", order, 0, kMaxOrder);
        check_params(family);
        const auto N = static_cast<std::uint64_t>(order);
        const auto need = [&](const std::optional<std::int64_t>& v, const char* name) {
            if (!v) {
                throw UsageError("gf-check --family " + family.family + " requires --" + name);
            }
            return static_cast<std::uint64_t>(*v);
        };

        std::vector<Rational> recurrence(N + 1);
        std::vector<Rational> from_gf(N + 1);
        if (family.family == "harmonic_like") {
            const auto m = need(family.m, "m");
            const auto gf = gf_harmonic_like(m, N);
            for (std::uint64_t n = 0; n <= N; ++n) {
                recurrence[n] = harmonic_like(n, m);
                from_gf[n] = gf[n];
            }
        } else if (family.family == "stirling1") {
            const auto k = need(family.k, "k");
            const auto gf = gf_stirling_column(k, N);
            for (std::uint64_t n = 0; n <= N; ++n) {
                recurrence[n] = Rational(stirling1(n, k));
                from_gf[n] = gf[n] * Rational(factorial(n));
            }
        } else if (family.family == "hyperharmonic") {
            const auto p = need(family.p, "p");
            if (p == 0) {
                throw UsageError("gf-check --family hyperharmonic requires --p >= 1");
            }
            const auto gf = gf_hyperharmonic(p, N);
            for (std::uint64_t n = 0; n <= N; ++n) {
                recurrence[n] = hyperharmonic(n, p);
                from_gf[n] = gf[n];
            }
        } else if (family.family == "odd_central") {
            const auto gf = gf_odd_central(N);
            for (std::uint64_t n = 0; n <= N; ++n) {
                recurrence[n] = Rational(binomial(2 * n, n)) * odd_harmonic(n);
                from_gf[n] = gf[n];
            }
        } else {
            throw UsageError("gf-check supports harmonic_like, stirling1, hyperharmonic, odd_central; got '" +
                             family.family + "'");
        }

        std::ostringstream os;
        os << "n,recurrence_value,gf_value,equal\n";
        bool all_equal = true;
        for (std::uint64_t n = 0; n <= N; ++n) {
            const bool eq = recurrence[n] == from_gf[n];
            all_equal = all_equal && eq;
            os << n << ',' << recurrence[n].str() << ',' << from_gf[n].str() << ',' << (eq ? "true" : "false")
               << '\n';
        }
        emit(os.str(), output, out);
        return all_equal ? kExitOk : kExitCheckFailed;
    }
};

// -- transform ---------------------------------------------------------------

struct TransformCommand {
    FamilyOptions family;
    std::optional<std::string> a, b;
    std::int64_t n = kDefaultBound;
    bool is_signed = false;
    bool inverse = false;
    OutputOptions output;

    int run(std::ostream& out) const
    {
        check_bound("n", n, 0, kMaxIndex);
        const bool sum_mode = a || b;
        if (sum_mode && !family.family.empty()) {
            throw UsageError("give either --a/--b/--m (binomial sum) or --family (transform), not both");
        }
        std::vector<Row> rows;
        if (sum_mode) {
            if (!a || !b || !family.m) {
                throw UsageError("binomial-sum mode needs --a, --b and --m");
            }
            if (is_signed || inverse) {
                throw UsageError("--signed/--inverse apply to --family transforms only");
            }
            check_params(family);
            const auto parse = [](const std::string& text) {
                try {
                    return Rational::parse(text);
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
            };
            BinomialSumParams params{parse(*a), parse(*b), static_cast<std::uint64_t>(*family.m), 0};
            for (std::int64_t i = 0; i <= n; ++i) {
                params.n = static_cast<std::uint64_t>(i);
                rows.push_back({params.n, binomial_sum_direct(params)});
            }
        } else {
            if (family.family.empty()) {
                throw UsageError("transform needs --family or --a/--b/--m");
            }
            if (is_signed && inverse) {
                throw UsageError("--signed and --inverse are mutually exclusive");
            }
            const auto spec = family_spec(family);
            const IndexedSequence seq = [&spec](std::uint64_t k) { return spec.evaluate(k); };
            for (std::int64_t i = 0; i <= n; ++i) {
                const auto idx = static_cast<std::uint64_t>(i);
                rows.push_back({idx, inverse ? inverse_binomial_transform(seq, idx)
                                             : binomial_transform(seq, idx, is_signed)});
            }
        }
        emit(render_table(rows, output), output.output, out);
        return kExitOk;
    }
};

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact harmonic-like numbers: sequence tables, identity verification, generating-function "
                 "cross-checks and binomial transforms.\n"
                 "Exit status: 0 success, 1 a requested check failed, 2 usage or domain error.",
                 "harmlike"};
    app.require_subcommand(1);

    std::string families;
    for (auto f : all_families()) {
        families += (families.empty() ? "" : ", ") + std::string(family_name(f));
    }

    SeqCommand seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print n,value rows for n = 0..N of a sequence family");
    seq_cmd->add_option("--family", seq.family.family, "One of: " + families)->required();
    seq_cmd->add_option("--n", seq.n, "Largest index N (default 25)");
    add_family_params(seq_cmd, seq.family);
    add_output_options(seq_cmd, seq.output, true);

    VerifyCommand verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify registered identities and print a JSON report");
    verify_cmd->add_option("--id", verify.id, "Verify a single identity");
    verify_cmd->add_option("--tag", verify.tag, "Only identities carrying this tag (section1..section4)");
    verify_cmd->add_option("--n-max", verify.n_max, "Override the upper bound of the n grid");
    verify_cmd->add_option("--m-max", verify.m_max, "Override the upper bound of the m grid");
    verify_cmd->add_option("--p-max", verify.p_max, "Override the upper bound of the p grid");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware concurrency)");
    verify_cmd->add_flag("--list", verify.list, "List the registry (CSV) instead of verifying");
    verify_cmd->add_option("--output", verify.output,
                           std::string("Write the report to this file; relative paths use $") + kOutputDirEnv);

    GfCheckCommand gf;
    auto* gf_cmd = app.add_subcommand("gf-check", "Compare recurrence values with generating-function coefficients");
    gf_cmd->add_option("--family", gf.family.family, "harmonic_like, stirling1, hyperharmonic or odd_central")
        ->required();
    gf_cmd->add_option("--order", gf.order, "Truncation order N (default 25)");
    add_family_params(gf_cmd, gf.family);
    gf_cmd->add_option("--output", gf.output,
                       std::string("Write to this file; relative paths use $") + kOutputDirEnv);

    TransformCommand transform;
    auto* transform_cmd = app.add_subcommand(
        "transform", "Binomial sums S_n(a,b,m) (--a --b --m) or binomial transforms of a family (--family)");
    transform_cmd->add_option("--family", transform.family.family, "Sequence family to transform: " + families);
    transform_cmd->add_option("--a", transform.a, "Rational a, e.g. 1/2");
    transform_cmd->add_option("--b", transform.b, "Rational b");
    transform_cmd->add_option("--n", transform.n, "Largest index N (default 25)");
    transform_cmd->add_flag("--signed", transform.is_signed, "Use sum C(n,k)(-1)^k a_k");
    transform_cmd->add_flag("--inverse", transform.inverse, "Use the inverse transform sum C(n,k)(-1)^(n-k) a_k");
    add_family_params(transform_cmd, transform.family);
    add_output_options(transform_cmd, transform.output, true);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (seq_cmd->parsed()) {
            return seq.run(out);
        }
        if (verify_cmd->parsed()) {
            return verify.run(out);
        }
        if (gf_cmd->parsed()) {
            return gf.run(out);
        }
        return transform.run(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LookupError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace harmlike::cli
