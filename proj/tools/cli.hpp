#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams; exit status 0 on success, 1 on domain
// errors (NotDivisible, NotMarkov, ...), 2 on usage errors.

#include "shadow_markov/dual_int.hpp"
#include "shadow_markov/init_space.hpp"
#include "shadow_markov/io.hpp"
#include "shadow_markov/markov.hpp"
#include "shadow_markov/tree.hpp"
#include "shadow_markov/uniqueness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace shadow_markov::cli {

enum class ExitCode : int { Ok = 0, DomainFailure = 1, Usage = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Slot parse_slot(const std::string& s) {
    if (s == "0" || s == "A" || s == "a") return Slot::A;
    if (s == "1" || s == "B" || s == "b") return Slot::B;
    if (s == "2" || s == "C" || s == "c") return Slot::C;
    throw UsageError("slot must be one of 0,1,2 or A,B,C, got '" + s + "'");
}

inline Direction parse_dir(const std::string& s) {
    if (s.size() != 1) throw UsageError("direction must be L or R, got '" + s + "'");
    return TreePath::parse_direction(s[0]);
}

inline std::vector<BigInt> parse_integers(const std::string& text, std::size_t count) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(shadow_markov::detail::parse_integer(shadow_markov::detail::strip_spaces(item)));
    if (out.size() != count) {
        throw UsageError("expected " + std::to_string(count) + " comma-separated integers, got '" + text + "'");
    }
    return out;
}

inline void reject_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw UsageError("output format '" + format + "' is not supported by this subcommand");
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

struct Options {
    std::string format = "text";
    std::string triple;
    std::string init = "0,1,1";
    std::string slot = "A";
    std::string trunk_slot = "A";
    std::string dir = "L";
    std::string start;
    std::string path;
    std::string seed;
    std::string output;
    std::optional<std::string> sigma;
    std::optional<std::string> x;
    std::size_t depth = 12;
    std::size_t max_depth = 16;
    std::size_t length = 8;
    std::uint32_t max_degree = 0;
    long long bound = 2;
    long long max_bound = 10;
    unsigned threads = 0;
    bool all_slots = false;
    bool single_slot = false;
    bool with_origin = false;
};

inline int dispatch(CLI::App& app, const Options& o, std::ostream& out) {
    using detail::print_json;
    const auto is = [&app](const char* name) { return app.got_subcommand(name); };

    if (is("mutate")) {
        detail::reject_format(o.format, {"text", "json"});
        const DualTriple t = mutate(parse_triple(o.triple), detail::parse_slot(o.slot));
        if (o.format == "json") print_json(out, Json(t));
        else out << to_string(t) << '\n';
        return 0;
    }

    if (is("residual")) {
        detail::reject_format(o.format, {"text", "json"});
        if (!o.sigma && !o.x) throw UsageError("residual needs --sigma or --x");
        const DualTriple t = parse_triple(o.triple);
        const DualInt x = o.x ? parse_dual(*o.x)
                              : DualInt(BigInt(3), BigInt(-shadow_markov::detail::parse_integer(*o.sigma)));
        const Residual r = residual(t, x);
        if (o.format == "json") print_json(out, Json{{"X", x}, {"residual", r.value}, {"solution", r.vanishes()}});
        else out << to_string(r.value) << '\n';
        return 0;
    }

    if (is("verify")) {
        detail::reject_format(o.format, {"text", "json"});
        if (!o.triple.empty()) {
            if (!o.sigma) throw UsageError("verify --triple needs --sigma");
            const DualInt x(BigInt(3), BigInt(-shadow_markov::detail::parse_integer(*o.sigma)));
            const Residual r = residual(parse_triple(o.triple), x);
            if (o.format == "json") print_json(out, Json{{"X", x}, {"residual", r.value}, {"solution", r.vanishes()}});
            else out << (r.vanishes() ? "solution" : "not a solution: residual " + to_string(r.value)) << '\n';
            return r.vanishes() ? 0 : 1;
        }
        if (o.depth > o.max_depth) throw UsageError("depth exceeds --max-depth");
        const InitialTriple seed = parse_initial_triple(o.init);
        const auto nodes = subtree(seed, o.depth, detail::parse_slot(o.trunk_slot));
        std::size_t failures = 0;
        std::optional<TreePath> first_failure;
        for (const auto& n : nodes) {
            if (!residual(n.triple(), seed).vanishes()) {
                if (!first_failure) first_failure = n.path;
                ++failures;
            }
        }
        if (o.format == "json") {
            Json j{{"seed", seed}, {"depth", o.depth}, {"nodes", nodes.size()}, {"failures", failures}};
            if (first_failure) j["first_failure"] = first_failure->str();
            print_json(out, j);
        } else {
            out << "checked " << nodes.size() << " nodes to depth " << o.depth << " against X="
                << to_string(seed.coefficient()) << ": " << failures << " failures\n";
        }
        return failures == 0 ? 0 : 1;
    }

    if (is("tree")) {
        detail::reject_format(o.format, {"text", "json", "csv", "dot"});
        if (o.depth > o.max_depth) {
            throw UsageError("depth " + std::to_string(o.depth) + " exceeds --max-depth " + std::to_string(o.max_depth));
        }
        const InitialTriple seed = parse_initial_triple(o.init);
        const auto nodes = subtree(seed, o.depth, detail::parse_slot(o.trunk_slot));
        if (o.format == "csv") {
            write_tree_csv(out, nodes);
        } else if (o.format == "dot") {
            write_tree_dot(out, seed, nodes);
        } else if (o.format == "json") {
            print_json(out, tree_to_json(seed, nodes));
        } else {
            for (const auto& n : nodes) {
                out << (n.path.empty() ? "-" : n.path.str()) << ' ' << to_string(n.left) << " | " << to_string(n.right)
                    << " -> " << to_string(n.newest) << '\n';
            }
        }
        return 0;
    }

    if (is("branch")) {
        detail::reject_format(o.format, {"text", "json", "csv"});
        const InitialTriple seed = parse_initial_triple(o.init);
        const TreePath start(o.start);
        if (start.size() + o.length > o.max_depth + 1) throw UsageError("branch would exceed --max-depth");
        const Direction dir = detail::parse_dir(o.dir);
        const Slot ts = detail::parse_slot(o.trunk_slot);
        const auto values = o.with_origin ? branch_sequence(seed, dir, o.length, start, ts)
                                          : branch(seed, dir, o.length, start, ts);
        if (o.format == "json") {
            print_json(out, Json(values));
        } else if (o.format == "csv") {
            out << "index,a,alpha\n";
            for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i].real << ',' << values[i].shadow << '\n';
        } else {
            for (const auto& v : values) out << to_string(v) << '\n';
        }
        return 0;
    }

    if (is("reduce")) {
        detail::reject_format(o.format, {"text", "json"});
        const Descent d = reduce_to_fundamental(parse_triple(o.triple));
        if (o.format == "json") {
            print_json(out, Json{{"terminal", d.terminal}, {"moves", moves_to_json(d.moves)}});
        } else {
            out << "terminal " << to_string(d.terminal) << '\n' << "moves";
            for (Slot s : d.moves) out << ' ' << index(s);
            out << '\n';
        }
        return 0;
    }

    if (is("uniqueness")) {
        detail::reject_format(o.format, {"text", "json"});
        const InvarianceReport r =
            certify_uniqueness(o.max_degree, o.single_slot ? SlotMode::SingleSlot : SlotMode::AllSlots);
        if (!o.output.empty()) {
            std::ofstream file(o.output);
            if (!file) throw UsageError("cannot open '" + o.output + "' for writing");
            file << Json(r).dump(2) << '\n';
        }
        if (o.format == "json") {
            print_json(out, Json(r));
        } else {
            out << "max degree " << r.max_degree << ", slots " << (r.mode == SlotMode::AllSlots ? "A,B,C" : "A") << '\n'
                << "unknowns " << r.unknowns << ", equations " << r.equations << ", rank " << r.rank << '\n'
                << "nullspace dimension " << r.nullspace_dimension << " (modulo A^2+B^2+C^2-3ABC)\n";
            for (const auto& p : r.basis) out << "  " << to_string(p) << '\n';
            out << "exact identity nullspace dimension " << r.identity_nullspace_dimension << '\n';
        }
        return 0;
    }

    if (is("search-init")) {
        // text output of this subcommand is the CSV report
        detail::reject_format(o.format, {"text", "csv", "json"});
        if (o.bound < 0) throw UsageError("--bound must be non-negative");
        if (o.bound > o.max_bound) throw UsageError("bound exceeds --max-bound");
        if (o.depth > o.max_depth) throw UsageError("depth exceeds --max-depth");
        const auto reports = positivity_search(o.bound, o.depth, o.threads, detail::parse_slot(o.trunk_slot));
        if (o.format == "json") {
            Json j = Json::array();
            for (const auto& r : reports) {
                Json rec{{"seed", r.seed}, {"depth", r.depth}, {"verdict", to_string(r.verdict)}};
                if (r.verdict != Verdict::AllPositive) {
                    rec["path"] = r.violation_path.str();
                    rec["value"] = r.violation_value;
                }
                j.push_back(std::move(rec));
            }
            print_json(out, j);
        } else {
            write_positivity_csv(out, reports);
        }
        return 0;
    }

    if (is("decompose")) {
        detail::reject_format(o.format, {"text", "json"});
        const BasisCoefficients c = decompose(parse_initial_triple(o.seed));
        if (o.format == "json") print_json(out, Json{{"x", c.x.str()}, {"y", c.y.str()}, {"z", c.z.str()}});
        else out << c.x << ',' << c.y << ',' << c.z << '\n';
        return 0;
    }

    if (is("coeffs")) {
        detail::reject_format(o.format, {"text", "json"});
        const ShadowCoefficients k = shadow_coefficients(TreePath(o.path), detail::parse_slot(o.trunk_slot));
        if (o.format == "json") print_json(out, Json{{"u", k.u.str()}, {"v", k.v.str()}, {"t", k.t.str()}});
        else out << k.u << ',' << k.v << ',' << k.t << '\n';
        return 0;
    }

    if (is("hpz")) {
        detail::reject_format(o.format, {"text", "json"});
        const auto v = detail::parse_integers(o.triple, 3);
        const DualInt r = hpz_residual(v[0], v[1], v[2]);
        if (o.format == "json") print_json(out, Json{{"residual", r}, {"solution", r.is_zero()}});
        else out << to_string(r) << '\n';
        return 0;
    }

    throw UsageError("no subcommand given");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for the shadow Markov equation A^2+B^2+C^2=(3-sigma e)ABC", "shadow_markov"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
            ->capture_default_str();
    };
    const auto add_trunk_slot = [&o](CLI::App* sub) {
        sub->add_option("--trunk-slot", o.trunk_slot, "Seed slot mutated at the trunk (A, B or C)")->capture_default_str();
    };

    auto* mutate_cmd = app.add_subcommand("mutate", "Mutate one slot of a dual triple");
    mutate_cmd->add_option("--triple", o.triple, "Triple, e.g. \"1,1+1e,1+1e\"")->required();
    mutate_cmd->add_option("--slot", o.slot, "Slot to mutate (0,1,2 or A,B,C)")->capture_default_str();
    add_format(mutate_cmd);

    auto* residual_cmd = app.add_subcommand("residual", "A^2+B^2+C^2 - X ABC for a triple");
    residual_cmd->add_option("--triple", o.triple, "Triple")->required();
    auto* sigma_opt = residual_cmd->add_option("--sigma", o.sigma, "Use X = 3 - sigma e");
    auto* x_opt = residual_cmd->add_option("--x", o.x, "Use an explicit coefficient X");
    sigma_opt->excludes(x_opt);
    add_format(residual_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check a triple, or every node of a generated tree");
    verify_cmd->add_option("--triple", o.triple, "Triple to check (with --sigma)");
    verify_cmd->add_option("--sigma", o.sigma, "Check against X = 3 - sigma e");
    verify_cmd->add_option("--init", o.init, "Seed alpha1,beta1,gamma1")->capture_default_str();
    verify_cmd->add_option("--depth", o.depth, "Tree depth")->capture_default_str();
    verify_cmd->add_option("--max-depth", o.max_depth, "Hard depth cap")->capture_default_str();
    add_trunk_slot(verify_cmd);
    add_format(verify_cmd);

    auto* tree_cmd = app.add_subcommand("tree", "Generate the shadow Markov tree");
    tree_cmd->add_option("--init", o.init, "Seed alpha1,beta1,gamma1")->capture_default_str();
    tree_cmd->add_option("--depth", o.depth, "Depth below the trunk")->capture_default_str();
    tree_cmd->add_option("--max-depth", o.max_depth, "Hard depth cap")->capture_default_str();
    add_trunk_slot(tree_cmd);
    add_format(tree_cmd);

    auto* branch_cmd = app.add_subcommand("branch", "Newest values along a constant-direction path");
    branch_cmd->add_option("--init", o.init, "Seed alpha1,beta1,gamma1")->capture_default_str();
    branch_cmd->add_option("--dir", o.dir, "L or R")->capture_default_str();
    branch_cmd->add_option("--length", o.length, "Number of values")->capture_default_str();
    branch_cmd->add_option("--start", o.start, "Path of the first node (default: trunk)");
    branch_cmd->add_flag("--with-origin", o.with_origin, "Prepend the region the first step mutates away");
    branch_cmd->add_option("--max-depth", o.max_depth, "Hard depth cap")->capture_default_str();
    add_trunk_slot(branch_cmd);
    add_format(branch_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Descend a solution to its fundamental triple");
    reduce_cmd->add_option("--triple", o.triple, "Triple with positive Markov real parts")->required();
    add_format(reduce_cmd);

    auto* uniq_cmd = app.add_subcommand("uniqueness", "Certify that only P = c*ABC is mutation invariant");
    uniq_cmd->add_option("--max-degree", o.max_degree, "Bound on each exponent of P")
        ->required()
        ->check(CLI::Range(1U, 12U));
    auto* all_flag = uniq_cmd->add_flag("--all-slots", o.all_slots, "Impose the A, B and C constraints (default)");
    auto* single_flag = uniq_cmd->add_flag("--single-slot", o.single_slot, "Impose the A-slot constraint only");
    all_flag->excludes(single_flag);
    uniq_cmd->add_option("--output", o.output, "Also write the JSON report to this file");
    add_format(uniq_cmd);

    auto* search_cmd = app.add_subcommand("search-init", "Scan seeds in [-B,B]^3 for non-positive shadows");
    search_cmd->add_option("--bound", o.bound, "Seed bound B")->capture_default_str();
    search_cmd->add_option("--depth", o.depth, "Tree depth")->capture_default_str();
    search_cmd->add_option("--max-depth", o.max_depth, "Hard depth cap")->capture_default_str();
    search_cmd->add_option("--max-bound", o.max_bound, "Hard bound cap")->capture_default_str();
    search_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
    add_trunk_slot(search_cmd);
    add_format(search_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Coordinates of a seed in the basis (0,1,1),(1,1,1),(0,1,0)");
    decompose_cmd->add_option("--seed", o.seed, "Seed alpha1,beta1,gamma1")->required();
    add_format(decompose_cmd);

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Shadow at a path as a linear form in the seed");
    coeffs_cmd->add_option("--path", o.path, "Path over {L,R} (empty: trunk)");
    add_trunk_slot(coeffs_cmd);
    add_format(coeffs_cmd);

    auto* hpz_cmd = app.add_subcommand("hpz", "Residual of the HPZ equation (a^2+b^2+c^2-3abc)+(ab+bc+ac-3abc)e at integers a,b,c");
    hpz_cmd->add_option("--triple", o.triple, "Integers a,b,c")->required();
    add_format(hpz_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return static_cast<int>(ExitCode::Ok);
        }
        err << "error: " << e.what() << '\n';
        const CLI::App* failing = &app;
        for (auto* sub : app.get_subcommands()) failing = sub;
        err << failing->help();
        return static_cast<int>(ExitCode::Usage);
    }

    try {
        return dispatch(app, o, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::DomainFailure);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::invalid_argument& e) {  // ParseError and bad numeric input
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    }
}

}  // namespace shadow_markov::cli
