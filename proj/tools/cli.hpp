#ifndef GSPEC_TOOLS_CLI_HPP
#define GSPEC_TOOLS_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gspec/claims.hpp"
#include "gspec/classify.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/graph6.hpp"
#include "gspec/reductions.hpp"
#include "gspec/verify.hpp"

namespace gspec::cli {

enum class Subcommand { mult, canon, classify, families, enumerate, verify_lemmas, verify_claims, verify_theorem };
enum class Format { json, csv, g6 };

struct Command {
    Subcommand sub = Subcommand::mult;
    int mu = -1;
    std::optional<int> n_max;
    std::optional<int> d;
    /// Empty means stdin / stdout.
    std::string input;
    std::string output;
    Format format = Format::json;
    int jobs = 1;
    int max_extra = kExtremalMaxExtra;
    bool reports = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; the message is the help text.
class HelpRequested : public UsageError {
public:
    using UsageError::UsageError;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv without the program name. Throws UsageError, or HelpRequested
/// for --help.
inline Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exact graph spectra toolkit", "gspec"};
    app.require_subcommand(1, 1);
    Command cmd;
    std::string format = "json";

    auto add_input = [&](CLI::App* s) { s->add_option("--input", cmd.input, "graph6 file (default stdin)"); };
    auto add_output = [&](CLI::App* s) { s->add_option("--output", cmd.output, "write here instead of stdout"); };
    auto add_n_max = [&](CLI::App* s) {
        s->add_option("--n-max", cmd.n_max, "largest order")->required()->check(CLI::Range(1, kVerifyMaxOrder));
    };
    auto add_jobs = [&](CLI::App* s) { s->add_option("--jobs", cmd.jobs, "worker threads")->check(CLI::Range(1, 256)); };

    auto* mult = app.add_subcommand("mult", "print 'graph6 m' for each input graph");
    mult->add_option("--mu", cmd.mu, "eigenvalue (integer)");
    add_input(mult);
    add_output(mult);

    auto* canon = app.add_subcommand("canon", "print the C-canonical graph of each input graph");
    add_input(canon);
    add_output(canon);

    auto* classify_cmd = app.add_subcommand("classify", "JSONL classification report per input graph");
    add_input(classify_cmd);
    add_output(classify_cmd);

    auto* families = app.add_subcommand("families", "maximal instances for diameter d");
    families->add_option("--d", cmd.d, "diameter")->required()->check(CLI::Range(kFamilyMinDiameter, kFamilyMaxDiameter));
    families->add_option("--max-extra", cmd.max_extra, "cap on attached vertices")->check(CLI::Range(0, kExtremalMaxExtra));
    families->add_option("--format", format, "json or g6")->check(CLI::IsMember({"json", "g6"}));
    add_output(families);

    auto* enumerate = app.add_subcommand("enumerate", "connected graphs up to isomorphism, graph6 per line");
    enumerate->add_option("--n-max", cmd.n_max, "largest order")->required()->check(CLI::Range(1, kEnumerateMaxOrder));
    add_output(enumerate);

    auto* lemmas = app.add_subcommand("verify-lemmas", "lemma property suite over all connected graphs");
    add_n_max(lemmas);
    add_jobs(lemmas);
    add_output(lemmas);

    auto* claims = app.add_subcommand("verify-claims", "attachment tables");
    claims->add_option("--d", cmd.d, "single diameter (default: all)")
        ->check(CLI::Range(kClaimTableMinDiameter, kClaimTableMaxDiameter));
    claims->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_output(claims);

    auto* theorem = app.add_subcommand("verify-theorem", "upper bound and characterization over all connected graphs");
    add_n_max(theorem);
    add_jobs(theorem);
    theorem->add_flag("--reports", cmd.reports, "emit a JSONL report per graph before the summary");
    add_output(theorem);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n" + app.help());
    }

    const std::pair<CLI::App*, Subcommand> table[] = {
        {mult, Subcommand::mult},           {canon, Subcommand::canon},
        {classify_cmd, Subcommand::classify}, {families, Subcommand::families},
        {enumerate, Subcommand::enumerate}, {lemmas, Subcommand::verify_lemmas},
        {claims, Subcommand::verify_claims}, {theorem, Subcommand::verify_theorem},
    };
    for (auto [app_ptr, sub] : table)
        if (app_ptr->parsed()) cmd.sub = sub;
    cmd.format = format == "csv" ? Format::csv : format == "g6" ? Format::g6 : Format::json;
    return cmd;
}

namespace detail {

// Calls f(graph) for every non-blank line; bad lines go to err with their number.
// Returns the number of bad lines.
template <typename F>
int for_each_graph6(std::istream& in, std::ostream& err, F f) {
    int bad = 0;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            const Graph g = parse_graph6(line);
            f(g);
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            ++bad;
        }
    }
    return bad;
}

inline int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (cmd.sub) {
        case Subcommand::mult: {
            const int bad = for_each_graph6(in, err, [&](const Graph& g) {
                out << write_graph6(g) << " " << multiplicity(g, cmd.mu) << "\n";
            });
            return bad == 0 ? kExitOk : kExitFindings;
        }
        case Subcommand::canon: {
            const int bad = for_each_graph6(in, err, [&](const Graph& g) { out << write_graph6(canonical_graph(g)) << "\n"; });
            return bad == 0 ? kExitOk : kExitFindings;
        }
        case Subcommand::classify: {
            const int bad = for_each_graph6(in, err, [&](const Graph& g) { out << to_json(classify(g)).dump() << "\n"; });
            return bad == 0 ? kExitOk : kExitFindings;
        }
        case Subcommand::families: {
            FamilyCatalog catalog(cmd.max_extra);
            for (const FamilyInstance& fi : catalog.get(*cmd.d)) {
                if (cmd.format == Format::g6) {
                    out << write_graph6(fi.graph) << "\n";
                    continue;
                }
                nlohmann::ordered_json j;
                j["graph6"] = write_graph6(fi.graph);
                j["n"] = fi.graph.order();
                j["d"] = fi.diameter;
                j["m"] = fi.multiplicity;
                j["params"] = fi.params;
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        case Subcommand::enumerate: {
            for (const Graph& g : enumerate_connected(*cmd.n_max)) out << write_graph6(g) << "\n";
            return kExitOk;
        }
        case Subcommand::verify_lemmas: {
            const auto rep = verify_lemma_suite(*cmd.n_max, cmd.jobs);
            out << to_json(rep).dump() << "\n";
            return rep.ok() ? kExitOk : kExitFindings;
        }
        case Subcommand::verify_claims: {
            std::vector<int> ds;
            if (cmd.d) ds.push_back(*cmd.d);
            else
                for (int d = kClaimTableMinDiameter; d <= kClaimTableMaxDiameter; ++d) ds.push_back(d);
            std::size_t disagree = 0;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            nlohmann::ordered_json conflicts = nlohmann::ordered_json::array();
            if (cmd.format == Format::csv) out << kClaimCsvHeader << "\n";
            for (int d : ds) {
                for (const ClaimTableRow& r : attachment_table(d)) {
                    disagree += !r.agree();
                    if (cmd.format == Format::csv) out << to_csv(r) << "\n";
                    else rows.push_back(to_json(r));
                    if (r.statement_conflict()) conflicts.push_back(r.configuration);
                }
            }
            if (cmd.format == Format::json) {
                nlohmann::ordered_json j;
                j["rows"] = rows;
                j["disagreements"] = disagree;
                j["statement_conflicts"] = conflicts;
                j["ok"] = disagree == 0;
                out << j.dump() << "\n";
            }
            return disagree == 0 ? kExitOk : kExitFindings;
        }
        case Subcommand::verify_theorem: {
            const auto rep = verify_theorem(*cmd.n_max, cmd.jobs);
            if (cmd.reports)
                for (const auto& r : rep.reports) out << to_json(r).dump() << "\n";
            out << to_json(rep).dump() << "\n";
            return rep.ok() ? kExitOk : kExitFindings;
        }
    }
    return kExitUsage;
}

}  // namespace detail

/// Runs the command against the given streams, honouring --input/--output.
inline int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    std::ifstream file_in;
    std::ofstream file_out;
    std::istream* src = &in;
    std::ostream* dst = &out;
    if (!cmd.input.empty()) {
        file_in.open(cmd.input);
        if (!file_in) {
            err << "cannot read " << cmd.input << "\n";
            return kExitUsage;
        }
        src = &file_in;
    }
    if (!cmd.output.empty()) {
        file_out.open(cmd.output);
        if (!file_out) {
            err << "cannot write " << cmd.output << "\n";
            return kExitUsage;
        }
        dst = &file_out;
    }
    try {
        const int status = detail::run(cmd, *src, *dst, err);
        dst->flush();
        return status;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitFindings;
    }
}

}  // namespace gspec::cli

#endif  // GSPEC_TOOLS_CLI_HPP
