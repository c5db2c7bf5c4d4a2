#include <indsat/catalogue.hh>
#include <indsat/cli.hh>
#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/formats.hh>
#include <indsat/patterns.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace indsat
{
    namespace
    {
        class UsageError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto default_jobs() -> int
        {
            auto * env = std::getenv("INDSAT_LAB_JOBS");
            if (! env || ! *env)
                return 1;
            try {
                std::size_t used = 0;
                int jobs = std::stoi(env, &used);
                if (used != std::string(env).size() || jobs < 1)
                    throw UsageError("");
                return jobs;
            }
            catch (...) {
                throw UsageError(std::string("INDSAT_LAB_JOBS must be a positive integer, got '") + env + "'");
            }
        }

        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw UsageError("cannot open '" + path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return text.str();
        }

        auto write_file(const std::filesystem::path & path, const std::string & content) -> void
        {
            std::ofstream out(path, std::ios::binary);
            if (! out)
                throw UsageError("cannot write '" + path.string() + "'");
            out << content;
        }

        auto first_data_line(const std::string & text) -> std::string
        {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line))
                if (! line.empty() && line.front() != '#' && line.find_first_not_of(" \t\r") != std::string::npos)
                    return line;
            throw ParseError("graph file contains no graph6 line");
        }

        auto load_targets(const std::vector<std::string> & names) -> std::vector<Graph>
        {
            if (names.empty())
                throw UsageError("at least one --target is required");
            std::vector<Graph> family;
            for (auto & name : names)
                family.push_back(pattern(parse_pattern(name)));
            return family;
        }

        auto format_count(double value) -> std::string
        {
            std::ostringstream s;
            s << std::fixed << std::setprecision(0) << value;
            return s.str();
        }

        // Writes report[printed..] to out and the whole report to out_path.
        auto emit(const std::string & report, const std::string & out_path, std::ostream & out,
            std::size_t printed = 0) -> void
        {
            out << report.substr(printed);
            if (! out_path.empty())
                write_file(out_path, report);
        }

        auto serialise(const CatalogueObject & object, const std::string & format) -> std::string
        {
            if (format == "dot")
                return std::visit([&](auto & x) { return to_dot(x, "G"); }, object);
            if (auto * g = std::get_if<Graph>(&object))
                return encode_graph6(*g) + "\n";
            return encode_trigraph(std::get<Trigraph>(object));
        }

        struct Options
        {
            std::string name, graph_path, trigraph_path, out_path, format = "graph6", signs;
            std::vector<std::string> targets;
            std::map<std::string, std::size_t> numbers;
            std::size_t n = 0, max_gray = 3, n_max = 30;
            std::optional<std::size_t> max_edges;
            int jobs = 0;
            bool unsafe_override = false, no_prune = false, all = false;
        };

        auto exec_for(const Options & o) -> Exec
        {
            return Exec{o.jobs > 0 ? o.jobs : default_jobs()};
        }

        auto run_construct(const Options & o, std::ostream & out) -> int
        {
            std::map<std::string, std::string> params;
            for (auto & [key, value] : o.numbers)
                params[key] = std::to_string(value);
            if (! o.signs.empty())
                params["signs"] = o.signs;
            auto object = construct_named(o.name, params);
            emit(serialise(object, o.format), o.out_path, out);
            return exit_success;
        }

        auto run_verify(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto family = load_targets(o.targets);
            auto g = decode_graph6(first_data_line(read_file(o.graph_path)));
            for (auto & h : family)
                if (g.order() < h.order())
                    err << "# warning: graph order " << g.order() << " is below target order " << h.order()
                        << "; the literal definition is applied (that regime is normally handled by all-gray "
                           "trigraphs)\n";
            auto verdict = family.size() == 1 ? verify_graph_saturated(g, family.front())
                                              : verify_family_saturated(g, family);
            out << to_report(verdict) << '\n';
            return verdict.saturated() ? exit_success : exit_verification_failed;
        }

        auto run_verify_trigraph(const Options & o, std::ostream & out) -> int
        {
            auto family = load_targets(o.targets);
            auto t = decode_trigraph(read_file(o.trigraph_path));
            auto verdict = family.size() == 1 ? verify_trigraph_saturated(t, family.front())
                                              : verify_family_saturated(t, family);
            out << to_report(verdict) << '\n';
            return verdict.saturated() ? exit_success : exit_verification_failed;
        }

        auto result_line(const SearchReport & report) -> std::string
        {
            switch (report.status) {
                case SearchStatus::Found: return "RESULT " + std::to_string(*report.value) + "\n";
                case SearchStatus::ExceedsBudget: return "RESULT exceeds-budget\n";
                case SearchStatus::NoneExists: return "RESULT none\n";
            }
            return "RESULT ?\n";
        }

        auto single_target(const Options & o) -> Graph
        {
            auto family = load_targets(o.targets);
            if (family.size() != 1)
                throw UsageError("search takes exactly one --target");
            return family.front();
        }

        auto report_stats(const SearchReport & report, std::ostream & err) -> void
        {
            err << "# nodes_explored=" << report.nodes_explored << " wall_seconds=" << std::fixed
                << std::setprecision(3) << report.wall_seconds << '\n';
        }

        auto run_search_indsat(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto h = single_target(o);
            std::string text;
            if (o.unsafe_override) {
                text = "# projected state space: " + format_count(indsat_state_space(o.n, o.max_gray)) + "\n";
                out << text << std::flush;
            }
            auto printed = text.size();
            auto report = search_indsat(o.n, h, o.max_gray, exec_for(o), {o.unsafe_override, true});
            text += result_line(report);
            if (report.trigraph_certificate)
                text += encode_trigraph(*report.trigraph_certificate);
            emit(text, o.out_path, out, printed);
            report_stats(report, err);
            return exit_success;
        }

        auto run_search_sis(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto h = single_target(o);
            std::string text;
            if (o.unsafe_override) {
                text = "# projected state space: " + format_count(sis_state_space(o.n)) + "\n";
                out << text << std::flush;
            }
            auto budget = o.max_edges.value_or(pair_count(o.n));
            auto printed = text.size();
            auto report = search_sis(o.n, h, budget, exec_for(o), {o.unsafe_override, ! o.no_prune});
            text += result_line(report);
            if (report.graph_certificate)
                text += "CERT " + encode_graph6(*report.graph_certificate) + "\n";
            emit(text, o.out_path, out, printed);
            report_stats(report, err);
            return exit_success;
        }

        auto search_cell(std::size_t n, const Graph & h, Exec exec) -> std::string
        {
            auto report = search_sis(n, h, pair_count(n), exec);
            return report.value ? std::to_string(*report.value) : "none";
        }

        auto run_tables_paw(const Options & o, std::ostream & out) -> int
        {
            auto h = paw();
            out << "# n formula construction verified search\n";
            for (std::size_t n = 4; n <= o.n_max; ++n) {
                out << "ROW " << n;
                if (n >= 7) {
                    auto g = minimal_paw(n);
                    out << ' ' << minimal_paw_edge_formula(n) << ' ' << g.edge_count() << ' '
                        << (verify_graph_saturated(g, h).saturated() ? "yes" : "no");
                }
                else
                    out << " - - -";
                out << ' ' << (n <= 7 ? search_cell(n, h, exec_for(o)) : "-") << '\n';
            }
            return exit_success;
        }

        auto run_tables_claw(const Options & o, std::ostream & out) -> int
        {
            auto h = claw();
            out << "# n lower upper construction verified search\n";
            for (std::size_t n = 4; n <= o.n_max; ++n) {
                out << "ROW " << n << ' ' << 2 * n - 2 << ' ' << 2 * n + 2;
                if (auto g = claw_upper_construction(n))
                    out << ' ' << g->edge_count() << ' ' << (verify_graph_saturated(*g, h).saturated() ? "yes" : "no");
                else
                    out << " - -";
                out << ' ' << (n <= 8 ? search_cell(n, h, exec_for(o)) : "-") << '\n';
            }
            return exit_success;
        }

        auto run_export(const Options & o, std::ostream & out) -> int
        {
            if (! o.all)
                throw UsageError("export currently requires --all");
            if (o.format != "graph6" && o.format != "dot")
                throw UsageError("--format must be graph6 or dot");
            std::filesystem::path dir(o.out_path);
            std::filesystem::create_directories(dir);
            std::size_t written = 0;
            for (auto & entry : catalogue()) {
                bool trigraph = std::holds_alternative<Trigraph>(entry.object);
                auto extension = o.format == "dot" ? ".dot" : trigraph ? ".tg" : ".g6";
                write_file(dir / (entry.id + extension), serialise(entry.object, o.format));
                ++written;
            }
            out << "RESULT exported " << written << '\n';
            return exit_success;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Induced saturation laboratory: constructions, verifiers and exhaustive searches", "indsat-lab"};
        app.require_subcommand(1);
        Options o;

        auto add_numbers = [&](CLI::App * cmd, std::initializer_list<const char *> keys) {
            for (auto key : keys)
                cmd->add_option_function<std::size_t>(std::string("--") + key,
                    [&o, k = std::string(key)](const std::size_t & v) { o.numbers[k] = v; }, "construction parameter");
        };

        auto * construct = app.add_subcommand("construct", "Build a catalogue object");
        construct->add_option("--name", o.name, "catalogue id or construction family")->required();
        add_numbers(construct, {"n", "k", "j", "m", "t"});
        construct->add_option("--signs", o.signs, "sign string for threshold graphs");
        construct->add_option("--format", o.format, "graph6 (trigraph text for trigraphs) or dot");
        construct->add_option("--out", o.out_path, "output file");

        auto * verify = app.add_subcommand("verify", "Check induced saturation of a graph6 graph");
        verify->add_option("--target", o.targets, "target pattern; repeat for a family")->required();
        verify->add_option("--graph", o.graph_path, "graph6 file")->required();

        auto * verify_trigraph = app.add_subcommand("verify-trigraph", "Check induced saturation of a trigraph");
        verify_trigraph->add_option("--target", o.targets, "target pattern; repeat for a family")->required();
        verify_trigraph->add_option("--trigraph", o.trigraph_path, "trigraph text file")->required();

        auto * search = app.add_subcommand("search", "Exhaustive indsat / sis search");
        search->require_subcommand(1);
        auto * search_indsat_cmd = search->add_subcommand("indsat", "Minimum gray pairs");
        auto * search_sis_cmd = search->add_subcommand("sis", "Minimum edges of a saturated graph");
        for (auto * cmd : {search_indsat_cmd, search_sis_cmd}) {
            cmd->add_option("--n", o.n, "order")->required();
            cmd->add_option("--target", o.targets, "target pattern")->required();
            cmd->add_option("--jobs", o.jobs, "worker threads (default INDSAT_LAB_JOBS or 1)");
            cmd->add_option("--out", o.out_path, "also write the report to this file");
            cmd->add_flag("--unsafe-override", o.unsafe_override, "lift the default size guards");
        }
        search_indsat_cmd->add_option("--max-gray", o.max_gray, "gray budget");
        search_sis_cmd->add_option("--max-edges", o.max_edges, "edge budget (default: all pairs)");
        search_sis_cmd->add_flag("--no-prune", o.no_prune, "disable the claw degree filter");

        auto * tables = app.add_subcommand("tables", "Formula and bound tables next to measured values");
        tables->require_subcommand(1);
        auto * tables_paw = tables->add_subcommand("paw", "sis(n, paw)");
        auto * tables_claw = tables->add_subcommand("claw", "sis(n, claw) bounds");
        for (auto * cmd : {tables_paw, tables_claw}) {
            cmd->add_option("--n-max", o.n_max, "largest order");
            cmd->add_option("--jobs", o.jobs, "worker threads for the small-order searches");
        }

        auto * export_cmd = app.add_subcommand("export", "Write every catalogue object to a directory");
        export_cmd->add_flag("--all", o.all, "export the whole catalogue");
        export_cmd->add_option("--format", o.format, "graph6 or dot");
        export_cmd->add_option("--out", o.out_path, "output directory")->required();

        std::vector<std::string> storage{"indsat-lab"};
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<char *> argv;
        for (auto & s : storage)
            argv.push_back(s.data());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_success : exit_usage;
        }

        try {
            if (construct->parsed())
                return run_construct(o, out);
            if (verify->parsed())
                return run_verify(o, out, err);
            if (verify_trigraph->parsed())
                return run_verify_trigraph(o, out);
            if (search_indsat_cmd->parsed())
                return run_search_indsat(o, out, err);
            if (search_sis_cmd->parsed())
                return run_search_sis(o, out, err);
            if (tables_paw->parsed())
                return run_tables_paw(o, out);
            if (tables_claw->parsed())
                return run_tables_claw(o, out);
            if (export_cmd->parsed())
                return run_export(o, out);
        }
        catch (const GuardExceeded & e) {
            err << "error: " << e.what() << " (use --unsafe-override to lift the guard)\n";
            return exit_usage;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        err << app.help();
        return exit_usage;
    }
}
