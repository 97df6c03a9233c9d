#include "paireddom/cli.hpp"

#include "paireddom/atfree_pd.hpp"
#include "paireddom/errors.hpp"
#include "paireddom/generators.hpp"
#include "paireddom/pd_core.hpp"
#include "paireddom/recognition.hpp"
#include "paireddom/reduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

namespace paireddom::cli {

namespace {

    using json = nlohmann::ordered_json;

    struct Report
    {
        std::string command;
        int exit_code = exit_ok;
        bool verified = false;
        json input = nullptr;
        json result = nullptr;
        json diagnostics = json::object();
        json discrepancies = json::array();
        json error = nullptr;
        std::optional<double> timing_ms;
        std::vector<std::string> lines; // human-readable output

        void fail(int code, std::string reason, std::string message, json extra = json::object())
        {
            exit_code = code;
            verified = false;
            json e;
            e["reason"] = std::move(reason);
            e["message"] = std::move(message);
            for (auto& [k, v] : extra.items())
                e[k] = v;
            error = std::move(e);
        }

        void discrepancy(std::string what)
        {
            discrepancies.push_back(what);
            exit_code = exit_discrepancy;
        }

        json to_json() const
        {
            json doc;
            doc["command"] = command;
            doc["status"] = exit_code == exit_ok ? "ok" : "error";
            doc["exit_code"] = exit_code;
            doc["verified"] = verified;
            doc["input"] = input;
            doc["result"] = result;
            doc["diagnostics"] = diagnostics;
            doc["discrepancies"] = discrepancies;
            doc["error"] = error;
            if (timing_ms)
                doc["timing_ms"] = *timing_ms;
            return doc;
        }
    };

    struct OutputOptions
    {
        bool json = false;
        bool timing = false;
    };

    json set_json(const VertexSet& s)
    {
        return s.members();
    }

    json pairs_json(const Matching& m)
    {
        json out = json::array();
        for (auto [u, v] : m.pairs)
            out.push_back({u, v});
        return out;
    }

    std::string pairs_text(const Matching& m)
    {
        std::string out;
        for (auto [u, v] : m.pairs) {
            if (!out.empty())
                out += ' ';
            out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        }
        return out;
    }

    json path_json(const Path& p)
    {
        return p.vertices;
    }

    json witness_json(const AsteroidalWitness& w)
    {
        json out;
        out["triple"] = w.triple;
        json paths = json::array();
        for (const auto& p : w.paths)
            paths.push_back(path_json(p));
        out["paths"] = std::move(paths);
        return out;
    }

    // Maps a library exception onto (reason, exit code).
    std::pair<std::string, int> classify(const std::exception& e)
    {
        if (dynamic_cast<const SelfLoopError*>(&e))
            return {"self-loop", exit_precondition};
        if (dynamic_cast<const ParseError*>(&e))
            return {"parse-error", exit_precondition};
        if (dynamic_cast<const NotAtFreeError*>(&e))
            return {"not AT-free", exit_precondition};
        if (dynamic_cast<const DisconnectedError*>(&e))
            return {"disconnected", exit_precondition};
        if (dynamic_cast<const CapExceededError*>(&e))
            return {"cap-exceeded", exit_precondition};
        if (dynamic_cast<const NotNormalizedError*>(&e))
            return {"not-normalized", exit_precondition};
        if (dynamic_cast<const DomainError*>(&e))
            return {"domain-error", exit_precondition};
        if (dynamic_cast<const NoPathError*>(&e))
            return {"no-path", exit_precondition};
        if (dynamic_cast<const GenerationError*>(&e))
            return {"generation-error", exit_precondition};
        if (dynamic_cast<const AlgorithmFailure*>(&e))
            return {"algorithm-failure", exit_discrepancy};
        if (dynamic_cast<const DiscrepancyError*>(&e))
            return {"discrepancy", exit_discrepancy};
        if (dynamic_cast<const StructureError*>(&e))
            return {"structure-error", exit_discrepancy};
        return {"internal-error", exit_discrepancy};
    }

    Graph load_input(const std::string& path, Report& report)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw DomainError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string bytes = buf.str();
        Graph g = load_graph(bytes);
        json input;
        input["path"] = path;
        input["digest"] = "fnv1a64:" + hex64(fnv1a64(bytes));
        input["n"] = g.order();
        input["m"] = g.size();
        report.input = std::move(input);
        return g;
    }

    // ---- solve ----------------------------------------------------------

    struct SolveArgs
    {
        std::string input;
        std::string algo = "exact";
        bool strict = false;
    };

    // Returns false (after recording the error) when g is not AT-free.
    bool require_at_free(const Graph& g, Report& report)
    {
        const auto at = is_at_free(g);
        if (at.at_free)
            return true;
        json extra;
        extra["witness"] = witness_json(*at.witness);
        const auto& t = at.witness->triple;
        report.fail(exit_precondition, "not AT-free",
                    "asteroidal triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ","
                        + std::to_string(t[2]) + "}",
                    extra);
        return false;
    }

    void record_certificate(const Graph& g, const PDCertificate& cert, Report& report, json& result)
    {
        result["size"] = cert.size();
        result["set"] = set_json(cert.set());
        result["pairing"] = pairs_json(cert.pairing());
        // Re-check from scratch: domination, parity and the stated pairing.
        const auto check = is_pd_set(g, cert.set());
        const bool pairing_ok = is_valid_matching(g, cert.pairing()) && cert.pairing().matched_vertices() == cert.set();
        report.verified = check.certificate.has_value() && pairing_ok;
        if (!report.verified)
            report.discrepancy("returned set failed re-verification");
    }

    void solve(const SolveArgs& args, Report& report)
    {
        const Graph g = load_input(args.input, report);
        require_connected_no_isolated(g);

        json result;
        result["algo"] = args.algo;
        if (args.algo == "brute") {
            const auto caps = OracleCaps::from_env();
            const auto cert = min_pd_brute(g, caps);
            result["at_free"] = is_at_free(g).at_free;
            record_certificate(g, cert, report, result);
            result["gamma_pr"] = cert.size();
            report.lines.push_back("gamma_pr = " + std::to_string(cert.size()));
            report.lines.push_back("set: " + cert.set().to_string());
            report.lines.push_back("pairing: " + pairs_text(cert.pairing()));
        }
        else if (args.algo == "approx") {
            if (!require_at_free(g, report))
                return;
            const auto approx = approx_pd(g);
            result["at_free"] = true;
            record_certificate(g, approx.certificate, report, result);
            result["dominating_pair"] = {approx.pair.x, approx.pair.y};
            result["ratio_bound"] = 2.0;
            result["gamma_pr_lower_bound"] = approx.lower_bound;
            result["level_bound_ok"] = check_level_bound(g, approx.pair.x, approx.certificate.set());
            report.diagnostics["path"] = path_json(approx.path);
            report.diagnostics["path_order"] = approx.path.order();
            report.diagnostics["dominating_pair_fallback"] = approx.pair.from_fallback;
            if (approx.pair.from_fallback)
                report.lines.push_back("note: LexBFS candidate failed verification; dominating pair found by exhaustive search");
            if (approx.certificate.size() > 2 * approx.lower_bound)
                report.lines.push_back("note: size exceeds twice the path lower bound");
            report.lines.push_back("paired dominating set of size " + std::to_string(approx.certificate.size())
                                   + " (at most 2 * gamma_pr; gamma_pr >= "
                                   + std::to_string(approx.lower_bound) + ")");
            report.lines.push_back("set: " + approx.certificate.set().to_string());
            report.lines.push_back("pairing: " + pairs_text(approx.certificate.pairing()));
        }
        else {
            if (!require_at_free(g, report))
                return;
            const auto exact = exact_pd(g, ExactOptions{args.strict});
            const auto& d = exact.diagnostics;
            result["at_free"] = true;
            record_certificate(g, exact.certificate, report, result);
            result["gamma_pr"] = exact.certificate.size();
            result["dominating_pair"] = {d.pair.x, d.pair.y};
            result["level_bound_ok"] = check_level_bound(g, d.pair.x, exact.certificate.set());
            report.diagnostics["depth"] = d.depth;
            report.diagnostics["queue_sizes"] = d.queue_sizes;
            report.diagnostics["transitions"] = d.transitions;
            report.diagnostics["matching_calls"] = d.matching_calls;
            report.diagnostics["strict"] = d.strict;
            report.diagnostics["dominating_pair_fallback"] = d.pair.from_fallback;
            if (d.pair.from_fallback)
                report.lines.push_back("note: LexBFS candidate failed verification; dominating pair found by exhaustive search");
            report.lines.push_back("gamma_pr = " + std::to_string(exact.certificate.size()));
            report.lines.push_back("set: " + exact.certificate.set().to_string());
            report.lines.push_back("pairing: " + pairs_text(exact.certificate.pairing()));
        }
        report.result = std::move(result);
    }

    // ---- check ----------------------------------------------------------

    struct CheckArgs
    {
        std::string input;
        std::string set;
    };

    VertexSet parse_set(const std::string& text)
    {
        VertexSet s;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string::npos)
                end = text.size();
            std::string item = text.substr(pos, end - pos);
            pos = end + 1;
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            if (item.empty())
                continue;
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size() || value > 0xFFFFFFFEULL)
                throw DomainError("set entry '" + item + "' is not a vertex id");
            s.insert(static_cast<Vertex>(value));
        }
        return s;
    }

    void check(const CheckArgs& args, Report& report)
    {
        const Graph g = load_input(args.input, report);
        const VertexSet s = parse_set(args.set);
        require_within(g, s);

        json result;
        result["set"] = set_json(s);
        result["dominating"] = is_dominating_set(g, s);
        const auto verdict = is_pd_set(g, s);
        result["valid"] = verdict.certificate.has_value();
        result["reason"] = verdict.reason ? json(std::string(to_string(*verdict.reason))) : json(nullptr);
        result["undominated"] = verdict.undominated ? json(*verdict.undominated) : json(nullptr);
        result["pairing"] = verdict.certificate ? pairs_json(verdict.certificate->pairing()) : json(nullptr);
        report.verified = verdict.certificate.has_value();
        if (verdict.certificate) {
            report.lines.push_back("valid paired dominating set of size " + std::to_string(s.size()));
            report.lines.push_back("pairing: " + pairs_text(verdict.certificate->pairing()));
        }
        else {
            std::string line = "invalid: " + std::string(to_string(*verdict.reason));
            if (verdict.undominated)
                line += " (vertex " + std::to_string(*verdict.undominated) + " undominated)";
            report.lines.push_back(line);
        }
        report.result = std::move(result);
    }

    // ---- reduce ---------------------------------------------------------

    struct ReduceArgs
    {
        std::string input;
        std::string out;
    };

    void write_file(const std::string& path, const std::string& bytes)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw DomainError("cannot write '" + path + "'");
        out << bytes;
    }

    void reduce(const ReduceArgs& args, Report& report)
    {
        const Graph g = load_input(args.input, report);
        std::optional<ReductionInstance> inst;
        try {
            inst = reduce_vc_to_pd(g);
        }
        catch (const DiscrepancyError&) {
            throw;
        }
        catch (const DomainError& e) {
            report.fail(exit_precondition, "not-cubic", e.what());
            return;
        }

        const std::string edges_path = args.out + ".edges";
        const std::string roles_path = args.out + ".roles.json";
        write_file(edges_path, serialize(inst->transformed));
        write_file(roles_path, roles_json(*inst));

        json result;
        result["edges_file"] = edges_path;
        result["roles_file"] = roles_path;
        result["original_n"] = g.order();
        result["transformed_n"] = inst->transformed.order();
        result["transformed_m"] = inst->transformed.size();
        result["max_degree"] = inst->transformed.max_degree();

        const auto caps = OracleCaps::from_env();
        if (g.order() > caps.vc_max_vertices) {
            result["beta"] = nullptr;
            result["upper_bound"] = nullptr;
            result["upper_bound_certified"] = false;
            result["lower_bound"] = "not machine-checked";
            report.verified = false;
            report.lines.push_back("upper bound not certified: vertex-cover oracle cap exceeded");
            report.result = std::move(result);
            return;
        }
        const auto rep = verify_reduction_identity(*inst, caps);
        result["beta"] = rep.beta;
        result["cover"] = set_json(rep.cover);
        result["upper_bound"] = rep.upper_bound;
        result["certificate_size"] = rep.certificate_size;
        result["upper_bound_certified"] = rep.upper_bound_certified;
        result["lower_bound"] = rep.lower_bound_checked ? "machine-checked" : "not machine-checked";
        for (const auto& d : rep.discrepancies)
            report.discrepancy(d);
        report.verified = rep.upper_bound_certified;
        report.lines.push_back("wrote " + edges_path + " and " + roles_path);
        if (rep.upper_bound_certified)
            report.lines.push_back("upper bound " + std::to_string(rep.upper_bound) + " certified");
        else
            report.lines.push_back("upper bound " + std::to_string(rep.upper_bound) + " NOT certified");
        report.lines.push_back(std::string("lower bound ") + (rep.lower_bound_checked ? "machine-checked" : "not machine-checked"));
        report.result = std::move(result);
    }

    // ---- sweep ----------------------------------------------------------

    struct SweepArgs
    {
        std::string family = "path";
        std::optional<std::size_t> n_min;
        std::size_t n_max = 12;
        std::uint64_t seed = 1;
        std::optional<std::size_t> count;
        bool csv = false;
    };

    std::string format_ratio(double r)
    {
        std::ostringstream out;
        out << std::fixed << std::setprecision(4) << r;
        return out.str();
    }

    struct SweepRow
    {
        std::string id;
        std::size_t n = 0;
        std::size_t m = 0;
        bool at_free = false;
        std::size_t gamma = 0;
        std::size_t approx = 0;
        std::size_t exact = 0;
        bool agree = false;
        bool ratio_ok = false;
        bool lower_ok = false;
        bool witness = false;
        bool certified = false;
        std::string failure; // exception text if the row could not be evaluated
    };

    SweepRow evaluate(const CorpusItem& item, const OracleCaps& caps)
    {
        const Graph& g = item.graph;
        SweepRow row;
        row.id = item.id;
        row.n = g.order();
        row.m = g.size();
        try {
            row.at_free = is_at_free(g).at_free;
            row.gamma = min_pd_brute(g, caps).size();
            if (!row.at_free)
                return row;
            const auto approx = approx_pd(g);
            const auto exact = exact_pd(g);
            row.approx = approx.certificate.size();
            row.exact = exact.certificate.size();
            row.agree = row.exact == row.gamma;
            row.ratio_ok = row.approx <= 2 * row.gamma;
            row.lower_ok = row.gamma >= approx.lower_bound;
            for (const auto& cert : enumerate_min_pd_sets(g, caps))
                if (check_level_bound(g, exact.diagnostics.pair.x, cert.set())) {
                    row.witness = true;
                    break;
                }
            row.certified = is_pd_set(g, approx.certificate.set()).certificate.has_value()
                            && is_pd_set(g, exact.certificate.set()).certificate.has_value();
        }
        catch (const std::exception& e) {
            row.failure = e.what();
        }
        return row;
    }

    std::vector<SweepRow> evaluate_all(const std::vector<CorpusItem>& items, const OracleCaps& caps)
    {
        std::vector<SweepRow> rows(items.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next++; k < items.size(); k = next++)
                rows[k] = evaluate(items[k], caps);
        };
        const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(items.size(), 1));
        {
            std::vector<std::jthread> pool;
            for (std::size_t t = 1; t < workers; ++t)
                pool.emplace_back(worker);
            worker();
        }
        std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.id < b.id; });
        return rows;
    }

    void sweep(const SweepArgs& args, Report& report, std::string& table)
    {
        const bool seeded = args.family == "interval" || args.family == "permutation";
        CorpusSpec spec;
        spec.family = args.family;
        spec.n_min = args.n_min.value_or(args.family == "cycle" ? 3 : 2);
        spec.n_max = args.n_max;
        spec.seed = args.seed;
        if (spec.n_min < 2 || spec.n_min > spec.n_max)
            throw DomainError("need 2 <= n-min <= n-max");
        spec.count = args.count.value_or(seeded ? 100 : spec.n_max - spec.n_min + 1);
        const auto caps = OracleCaps::from_env();
        if (spec.n_max > caps.pd_max_vertices)
            throw CapExceededError("n-max " + std::to_string(spec.n_max) + " exceeds the PD oracle cap "
                                   + std::to_string(caps.pd_max_vertices));

        json rows = json::array();
        std::ostringstream csv;
        csv << "id,family,n,m,at_free,gamma_pr,approx,ratio,exact,agree,lower_bound_ok,level_bound_witness,status\n";
        std::size_t supported = 0;
        std::size_t disagreements = 0;
        std::size_t worst_num = 0;
        std::size_t worst_den = 1;
        auto flag = [](bool b) { return b ? "true" : "false"; };

        for (const auto& r : evaluate_all(generate_corpus(spec), caps)) {
            json row;
            row["id"] = r.id;
            row["n"] = r.n;
            row["m"] = r.m;
            row["at_free"] = r.at_free;
            row["gamma_pr"] = r.gamma;
            std::string status = "ok";
            if (!r.failure.empty()) {
                status = "error";
                report.discrepancy(r.id + ": " + r.failure);
            }
            else if (!r.at_free) {
                status = "unsupported input";
            }
            if (status != "ok") {
                for (const char* key : {"approx", "ratio", "exact", "agree", "lower_bound_ok", "level_bound_witness"})
                    row[key] = nullptr;
                csv << r.id << ',' << args.family << ',' << r.n << ',' << r.m << ',' << flag(r.at_free) << ','
                    << r.gamma << ",,,,,,," << status << '\n';
                row["status"] = status;
                rows.push_back(std::move(row));
                continue;
            }

            ++supported;
            if (!r.agree) {
                ++disagreements;
                report.discrepancy(r.id + ": exact " + std::to_string(r.exact) + " != brute " + std::to_string(r.gamma));
            }
            if (!r.ratio_ok)
                report.discrepancy(r.id + ": approximation ratio above 2");
            if (!r.lower_ok)
                report.discrepancy(r.id + ": gamma_pr below 2*ceil(t/4)");
            if (!r.witness)
                report.discrepancy(r.id + ": no minimum PD-set satisfies the level bound");
            if (!r.certified)
                report.discrepancy(r.id + ": returned set failed re-verification");
            if (r.approx * worst_den > worst_num * r.gamma) {
                worst_num = r.approx;
                worst_den = r.gamma;
            }
            const double ratio = static_cast<double>(r.approx) / static_cast<double>(r.gamma);
            row["approx"] = r.approx;
            row["ratio"] = ratio;
            row["exact"] = r.exact;
            row["agree"] = r.agree;
            row["lower_bound_ok"] = r.lower_ok;
            row["level_bound_witness"] = r.witness;
            row["status"] = status;
            rows.push_back(std::move(row));
            csv << r.id << ',' << args.family << ',' << r.n << ',' << r.m << ",true," << r.gamma << ',' << r.approx
                << ',' << format_ratio(ratio) << ',' << r.exact << ',' << flag(r.agree) << ',' << flag(r.lower_ok)
                << ',' << flag(r.witness) << ',' << status << '\n';
        }

        json result;
        result["family"] = args.family;
        result["n_min"] = spec.n_min;
        result["n_max"] = spec.n_max;
        result["seed"] = spec.seed;
        result["count"] = spec.count;
        result["ratio_bound"] = 2.0;
        result["supported"] = supported;
        result["disagreements"] = disagreements;
        result["max_ratio"] = supported ? json(static_cast<double>(worst_num) / static_cast<double>(worst_den))
                                        : json(nullptr);
        result["rows"] = std::move(rows);
        report.result = std::move(result);
        report.verified = report.discrepancies.empty();
        table = csv.str();
        report.lines.push_back(std::to_string(spec.count) + " graphs, " + std::to_string(supported) + " AT-free, "
                               + std::to_string(disagreements) + " exact/brute disagreements");
    }

    // ---- driver ---------------------------------------------------------

    void emit(const Report& report, const OutputOptions& opts, const std::string& table, std::ostream& out,
              std::ostream& err)
    {
        if (opts.json) {
            out << report.to_json().dump(2) << '\n';
            return;
        }
        out << table;
        for (const auto& line : report.lines)
            out << line << '\n';
        for (const auto& d : report.discrepancies)
            err << "discrepancy: " << d.get<std::string>() << '\n';
        if (!report.error.is_null()) {
            err << "error (" << report.error["reason"].get<std::string>()
                << "): " << report.error["message"].get<std::string>() << '\n';
            if (report.error.contains("witness"))
                err << "witness triple: " << report.error["witness"]["triple"].dump() << '\n';
        }
        if (report.timing_ms)
            out << "time: " << *report.timing_ms << " ms\n";
    }

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Paired domination toolkit: exact and approximate solvers for AT-free graphs, "
                 "certificate checking, and the vertex-cover reduction.",
                 "paireddom"};
    app.require_subcommand(1);

    OutputOptions opts;
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", opts.json, "Emit a JSON report");
        sub->add_flag("--timing", opts.timing, "Include wall-clock timing (makes output run-dependent)");
    };

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a (minimum) paired dominating set");
    solve_cmd->add_option("input", solve_args.input, "Edge-list file")->required();
    solve_cmd->add_option("--algo", solve_args.algo, "exact | approx | brute")
        ->check(CLI::IsMember({"exact", "approx", "brute"}));
    solve_cmd->add_flag("--strict", solve_args.strict, "Key the exact sweep on matchability state as well");
    add_output_flags(solve_cmd);

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Check whether a vertex set is a paired dominating set");
    check_cmd->add_option("input", check_args.input, "Edge-list file")->required();
    check_cmd->add_option("--set", check_args.set, "Comma-separated vertex ids")->required();
    add_output_flags(check_cmd);

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the gadget graph of a cubic graph");
    reduce_cmd->add_option("input", reduce_args.input, "Edge-list file of a cubic graph")->required();
    reduce_cmd->add_option("--out", reduce_args.out, "Output prefix for .edges and .roles.json")->required();
    add_output_flags(reduce_cmd);

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Differential run: exact vs approx vs brute force");
    sweep_cmd->add_option("--family", sweep_args.family, "path | cycle | complete | star | interval | permutation")
        ->check(CLI::IsMember({"path", "cycle", "complete", "star", "interval", "permutation"}));
    sweep_cmd->add_option("--n-min", sweep_args.n_min, "Smallest order (default 2, 3 for cycles)");
    sweep_cmd->add_option("--n-max", sweep_args.n_max, "Largest order");
    sweep_cmd->add_option("--seed", sweep_args.seed, "Corpus seed");
    sweep_cmd->add_option("--count", sweep_args.count, "Number of graphs (default: one per order, 100 if seeded)");
    add_output_flags(sweep_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_precondition;
    }

    Report report;
    std::string table;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (*solve_cmd) {
            report.command = "solve";
            solve(solve_args, report);
        }
        else if (*check_cmd) {
            report.command = "check";
            check(check_args, report);
        }
        else if (*reduce_cmd) {
            report.command = "reduce";
            reduce(reduce_args, report);
        }
        else {
            report.command = "sweep";
            sweep(sweep_args, report, table);
        }
    }
    catch (const std::exception& e) {
        const auto [reason, code] = classify(e);
        report.fail(code, reason, e.what());
    }
    if (opts.timing)
        report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    emit(report, opts, table, out, err);
    return report.exit_code;
}

} // namespace paireddom::cli
