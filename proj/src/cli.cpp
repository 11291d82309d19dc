#include "sl2/cli.hpp"

#include "sl2/decompose.hpp"
#include "sl2/phi.hpp"
#include "sl2/qarith.hpp"
#include "sl2/relations.hpp"
#include "sl2/serialize.hpp"
#include "sl2/tensor.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace sl2::cli {

using nlohmann::json;

namespace {

enum class Format { json, csv, pretty };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    json command;
    json payload;
    std::optional<std::string> interpretation;
    int status = kOk;
    std::string message;  // set when status != kOk
    std::string csv;
    std::string pretty;
};

json envelope(const Outcome& o)
{
    json env = {{"version", kVersion}, {"command", o.command}, {"payload", o.payload}};
    if (o.interpretation)
        env["interpretation"] = *o.interpretation;
    if (o.status == kOk) {
        env["status"] = "ok";
    } else {
        env["status"] = "error";
        env["message"] = o.message;
    }
    return env;
}

void emit_error(std::ostream& out, std::ostream& err, Format fmt, const json& command, const std::string& message)
{
    if (fmt == Format::json) {
        json env = {{"version", kVersion}, {"command", command}, {"status", "error"}, {"message", message}};
        out << env.dump() << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

Rational parse_rational(const std::string& text, const std::string& flag)
{
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

void require_nonnegative(long v, const std::string& flag)
{
    if (v < 0)
        throw UsageError(flag + " must be >= 0, got " + std::to_string(v));
}

// ---- decompose ----

struct DecomposeArgs {
    long m = 0;
    long n = 0;
    bool quantum = false;
};

Outcome cmd_decompose(const DecomposeArgs& a)
{
    require_nonnegative(a.m, "--m");
    require_nonnegative(a.n, "--n");
    Outcome o;
    o.command = {{"name", "decompose"}, {"m", a.m}, {"n", a.n}, {"quantum", a.quantum}};

    const Decomposition expected = cg_decompose(a.m, a.n);
    const WeightModule t = a.quantum ? tensor_quantum(finite_dim_quantum(a.m), finite_dim_quantum(a.n))
                                     : tensor_classical(finite_dim_classical(a.m), finite_dim_classical(a.n));
    const Decomposition by_character = decompose_by_character(t);
    o.payload = to_json(expected);
    if (!(by_character == expected)) {
        o.status = kCheckFailed;
        o.message = "decomposition cross-check failed: character peeling gives " + to_json(by_character).dump();
    }

    std::ostringstream csv, pretty;
    csv << "weight,multiplicity\n";
    pretty << "F_" << a.m << " (x) F_" << a.n << (a.quantum ? " (quantum)" : "") << " =";
    bool first = true;
    for (const auto& [w, mult] : expected.summands) {
        csv << w << ',' << mult << '\n';
        pretty << (first ? " " : " + ") << (mult > 1 ? std::to_string(mult) + "*" : "") << "F_" << w;
        first = false;
    }
    pretty << "\n";
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

// ---- hwv ----

struct HwvArgs {
    long m = 0;
    long n = 0;
    long p = 0;
    bool quantum = false;
    std::string interpretation = default_phi_interpretation().id;
};

Outcome cmd_hwv(const HwvArgs& a)
{
    require_nonnegative(a.m, "--m");
    require_nonnegative(a.n, "--n");
    require_nonnegative(a.p, "--p");
    if (a.p > std::min(a.m, a.n))
        throw UsageError("--p must satisfy 0 <= p <= min(m, n); got p=" + std::to_string(a.p) + " with m="
                         + std::to_string(a.m) + " n=" + std::to_string(a.n));
    PhiInterpretation interp;
    try {
        interp = phi_interpretation(a.interpretation);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--interpretation: ") + e.what());
    }

    Outcome o;
    o.command = {{"name", "hwv"}, {"m", a.m}, {"n", a.n}, {"p", a.p}, {"quantum", a.quantum}};
    const long weight = a.m + a.n - 2 * a.p;
    const WeightModule t = a.quantum ? tensor_quantum(finite_dim_quantum(a.m), finite_dim_quantum(a.n))
                                     : tensor_classical(finite_dim_classical(a.m), finite_dim_classical(a.n));
    auto kernel = highest_weight_vectors(t, Rational(weight));
    if (kernel.size() != 1)
        throw std::logic_error("kernel of the raising operator in weight " + std::to_string(weight)
                               + " has dimension " + std::to_string(kernel.size()));
    const Vector& oracle = kernel.front();
    o.payload = {{"weight", weight}, {"vector", to_json(oracle, t)}};

    std::ostringstream csv, pretty;
    csv << "label,coefficient\n";
    for (const auto& [i, c] : oracle.entries())
        csv << t.label(i).to_string() << ',' << c.to_string() << '\n';
    pretty << "highest-weight vector of weight " << weight << " in " << t.name() << ":\n";
    for (const auto& [i, c] : oracle.entries())
        pretty << "  " << c.to_string() << "  " << t.label(i).to_string() << '\n';

    if (a.quantum) {
        o.command["interpretation"] = interp.id;
        o.interpretation = interp.id;
        try {
            PhiResult phi = phi_vector(a.m, a.n, a.p, interp);
            ComparisonReport report = compare_vectors(phi.vector, oracle, t);
            report.interpretation = interp.id;
            o.payload["phi"] = to_json(phi, t);
            o.payload["comparison"] = to_json(report);
            pretty << "explicit formula (" << interp.id << "): "
                   << (report.proportional ? "proportional, phi = (" + report.scalar->to_string() + ") * oracle"
                                           : "not proportional, witness " + report.witness->label.to_string())
                   << '\n';
        } catch (const PhiIndexError& e) {
            o.payload["comparison"] = {{"interpretation", interp.id}, {"proportional", false}, {"error", e.what()}};
            pretty << "explicit formula (" << interp.id << "): " << e.what() << '\n';
        }
    }
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

// ---- check ----

struct CheckArgs {
    std::string module;
    long n = 0;
    bool quantum = false;
    std::string hw = "0";
    long depth = 1;
    std::string beta = "0";
    std::string lambda = "0";
    long window = 1;
    bool describe = false;
    bool inject_fault = false;
};

Outcome cmd_check(const CheckArgs& a)
{
    Outcome o;
    std::optional<WeightModule> m;
    if (a.module == "findim") {
        require_nonnegative(a.n, "--n");
        o.command = {{"name", "check"}, {"module", "findim"}, {"n", a.n}, {"quantum", a.quantum}};
        m = a.quantum ? finite_dim_quantum(a.n) : finite_dim_classical(a.n);
    } else if (a.module == "verma") {
        Rational hw = parse_rational(a.hw, "--hw");
        if (a.depth < 1)
            throw UsageError("--depth must be >= 1");
        o.command = {{"name", "check"}, {"module", "verma"}, {"hw", hw.to_string()}, {"depth", a.depth}};
        m = verma_classical(hw, a.depth);
    } else {
        RasskazovaParams p{parse_rational(a.beta, "--beta"), parse_rational(a.lambda, "--lambda"), a.n, a.window};
        if (p.n < 1)
            throw UsageError("--n must be >= 1");
        if (p.window < 1)
            throw UsageError("--window must be >= 1");
        o.command = {{"name", "check"},
                     {"module", "rasskazova"},
                     {"beta", p.beta.to_string()},
                     {"lambda", p.lambda.to_string()},
                     {"n", p.n},
                     {"window", p.window}};
        m = rasskazova(p);
    }
    if (a.inject_fault) {
        o.command["inject_fault"] = true;
        const Generator up = raising(m->flavor());
        const auto& mat = m->action(up);
        for (std::size_t col = 0; col < m->dim(); ++col)
            if (!mat.column(col).empty()) {
                m = m->perturbed(up, mat.column(col).begin()->first, col, Scalar::one(m->flavor()));
                break;
            }
    }
    if (a.describe)
        o.command["describe"] = true;

    const RelationReport report = check_relations(*m);
    o.payload = to_json(report);
    if (a.describe)
        o.payload["descriptor"] = module_descriptor(*m);
    if (!report.ok()) {
        o.status = kCheckFailed;
        o.message = std::to_string(report.failure_count()) + " relation check(s) failed";
    }

    std::ostringstream csv, pretty;
    csv << "label,relation,status\n";
    std::size_t next = 0;
    for (std::size_t i = 0; i < m->dim(); ++i) {
        if (m->on_boundary(i)) {
            csv << m->label(i).to_string() << ",*,excluded\n";
            continue;
        }
        for (; next < report.checks.size() && report.checks[next].basis_index == i; ++next)
            csv << m->label(i).to_string() << ',' << report.checks[next].relation << ','
                << (report.checks[next].passed ? "pass" : "fail") << '\n';
    }
    pretty << m->name() << ": " << report.checks.size() << " checks, " << report.failure_count() << " failures, "
           << report.excluded.size() << " boundary vectors excluded\n";
    for (const auto& c : report.checks)
        if (!c.passed)
            pretty << "  FAIL " << c.relation << " on " << m->label(c.basis_index).to_string() << '\n';
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

// ---- qtable ----

Outcome cmd_qtable(long max_n)
{
    require_nonnegative(max_n, "--max-n");
    Outcome o;
    o.command = {{"name", "qtable"}, {"max_n", max_n}};
    o.payload = json::array();
    std::ostringstream csv, pretty;
    csv << "k,q_int,q_fact\n";
    for (long k = 0; k <= max_n; ++k) {
        LaurentPoly qi = q_int(k);
        LaurentPoly qf = q_fact(k);
        o.payload.push_back({{"k", k}, {"q_int", to_json(qi)}, {"q_fact", to_json(qf)}});
        csv << k << ',' << qi << ',' << qf << '\n';
        pretty << '[' << k << "] = " << qi << "    [" << k << "]! = " << qf << '\n';
    }
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    return Format::pretty;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact sl(2) and U_v(sl(2)) representation computations", "sl2cg"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}))
            ->capture_default_str();
    };

    DecomposeArgs dec;
    auto* sub_dec = app.add_subcommand("decompose", "Clebsch-Gordan decomposition of F_m (x) F_n");
    sub_dec->add_option("--m", dec.m, "First factor highest weight")->required();
    sub_dec->add_option("--n", dec.n, "Second factor highest weight")->required();
    sub_dec->add_flag("--quantum", dec.quantum, "Use the quantum tensor product");
    add_format(sub_dec);

    HwvArgs hwv;
    auto* sub_hwv = app.add_subcommand("hwv", "Highest-weight vector of weight m+n-2p in F_m (x) F_n");
    sub_hwv->add_option("--m", hwv.m)->required();
    sub_hwv->add_option("--n", hwv.n)->required();
    sub_hwv->add_option("--p", hwv.p)->required();
    sub_hwv->add_flag("--quantum", hwv.quantum, "Quantum tensor product, plus the explicit formula comparison");
    sub_hwv->add_option("--interpretation", hwv.interpretation, "Reading of the explicit formula's basis symbols")
        ->capture_default_str();
    add_format(sub_hwv);

    CheckArgs chk;
    auto* sub_chk = app.add_subcommand("check", "Verify the defining relations on a module");
    sub_chk->require_subcommand(1);
    sub_chk->add_flag("--describe", chk.describe, "Include the module descriptor in the payload");
    sub_chk->add_flag("--inject-fault", chk.inject_fault, "Perturb one raising-operator entry before checking");
    add_format(sub_chk);
    auto* chk_findim = sub_chk->add_subcommand("findim", "Finite-dimensional F_n");
    chk_findim->add_option("--n", chk.n)->required();
    chk_findim->add_flag("--quantum", chk.quantum);
    auto* chk_verma = sub_chk->add_subcommand("verma", "Truncated Verma module");
    chk_verma->add_option("--hw", chk.hw, "Highest weight, integer or a/b")->required();
    chk_verma->add_option("--depth", chk.depth)->required();
    auto* chk_rass = sub_chk->add_subcommand("rasskazova", "Rasskazova module V(beta, lambda, n)");
    chk_rass->add_option("--beta", chk.beta)->required();
    chk_rass->add_option("--lambda", chk.lambda)->required();
    chk_rass->add_option("--n", chk.n)->required();
    chk_rass->add_option("--window", chk.window)->required();
    for (auto* s : {chk_findim, chk_verma, chk_rass}) {
        s->add_flag("--describe", chk.describe, "Include the module descriptor in the payload");
        s->add_flag("--inject-fault", chk.inject_fault, "Perturb one raising-operator entry before checking");
        add_format(s);
    }

    long max_n = 0;
    auto* sub_q = app.add_subcommand("qtable", "Table of [k] and [k]!");
    sub_q->add_option("--max-n", max_n)->required();
    add_format(sub_q);

    json command = {{"argv", args}};
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        emit_error(out, err, Format::json, command, std::string("usage: ") + e.what());
        return kUsage;
    }

    const Format fmt = parse_format(format);
    try {
        Outcome o;
        if (sub_dec->parsed()) {
            o = cmd_decompose(dec);
        } else if (sub_hwv->parsed()) {
            o = cmd_hwv(hwv);
        } else if (sub_chk->parsed()) {
            chk.module = chk_findim->parsed() ? "findim" : (chk_verma->parsed() ? "verma" : "rasskazova");
            o = cmd_check(chk);
        } else {
            o = cmd_qtable(max_n);
        }
        o.command["format"] = format;
        switch (fmt) {
        case Format::json: out << envelope(o).dump() << '\n'; break;
        case Format::csv: out << o.csv; break;
        case Format::pretty: out << o.pretty; break;
        }
        if (o.status != kOk && fmt != Format::json)
            err << "error: " << o.message << '\n';
        return o.status;
    } catch (const UsageError& e) {
        emit_error(out, err, fmt, command, std::string("usage: ") + e.what());
        return kUsage;
    } catch (const std::exception& e) {
        emit_error(out, err, fmt, command, e.what());
        return kCheckFailed;
    }
}

}  // namespace sl2::cli
