#include "bck/cli.hpp"

#include "bck/classify.hpp"
#include "bck/construct.hpp"
#include "bck/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

namespace bck {

namespace {

constexpr std::size_t kValidatedMaxOrder = 6;
constexpr const char* kBudgetEnv = "BCK_ENUM_MAX_ORDER";

/// A domain failure already reported in full; maps to exit code 1.
struct DomainFailure {
    std::string message;
};

BckAlgebra load_algebra(const std::string& path)
{
    return validate(read_bck_file(path));
}

std::string degree_text(const CommutingReport& r)
{
    return std::to_string(r.pair_count) + "/" + std::to_string(r.order * r.order) + " = " + r.degree.to_string();
}

/// Writes `a` to `path` when given, otherwise prints it.
void deliver(const BckAlgebra& a, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << emit_bck(a.table());
    else
        write_bck_file(path, a.table());
}

EnumerateOptions enumeration_options(std::size_t n, unsigned threads, std::ostream& err)
{
    EnumerateOptions opts;
    opts.threads = threads;
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            opts.max_order = std::stoul(env);
        } catch (const std::exception&) {
            throw DomainFailure{std::string(kBudgetEnv) + " must be a positive integer, got '" + env + "'"};
        }
    }
    if (n > opts.max_order)
        throw DomainFailure{"order " + std::to_string(n) + " exceeds the enumeration budget of " +
                            std::to_string(opts.max_order) + "; set " + kBudgetEnv +
                            " to a larger value to run it anyway"};
    if (n > kValidatedMaxOrder)
        err << "warning: enumeration above order " << kValidatedMaxOrder << " has unvalidated runtime\n";
    return opts;
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto p = std::stoll(text, &used);
            if (used == text.size())
                return {p, 1};
        } else {
            const auto num = text.substr(0, slash);
            const auto den = text.substr(slash + 1);
            std::size_t used_den = 0;
            const auto p = std::stoll(num, &used);
            const auto q = std::stoll(den, &used_den);
            if (used == num.size() && used_den == den.size())
                return {p, q};
        }
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("P/Q", "expected a fraction P/Q, got '" + text + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite BCK-algebras: validation, constructions, commuting degrees and enumeration", "bck"};
    app.require_subcommand(1);

    std::function<void()> action;
    auto on = [&](CLI::App* sub, std::function<void()> fn) { sub->callback([&action, fn] { action = fn; }); };

    std::string file, file2, output;
    std::vector<std::string> files;
    std::string kind, expr_text, fraction;
    std::size_t n = 0;
    bool with_exprs = false, count_only = false, noncommutative = false;
    unsigned threads = 0;

    auto* verify = app.add_subcommand("verify", "Check a .bck table against the BCK axioms");
    verify->add_option("file", file, ".bck file")->required();
    on(verify, [&] {
        const auto table = read_bck_file(file);
        if (auto v = find_violation(table)) {
            out << "invalid: " << v->describe() << '\n';
            throw DomainFailure{};
        }
        out << "valid\n";
    });

    auto* cd = app.add_subcommand("cd", "Print the commuting degree, raw and reduced");
    cd->add_option("file", file, ".bck file")->required();
    on(cd, [&] { out << degree_text(commuting_degree(load_algebra(file))) << '\n'; });

    auto* props = app.add_subcommand("props", "Print commutative / bounded / positive-implicative flags");
    props->add_option("file", file, ".bck file")->required();
    on(props, [&] {
        const auto a = load_algebra(file);
        const auto yes = [](bool b) { return b ? "yes" : "no"; };
        out << "commutative: " << yes(is_commutative(a)) << '\n';
        if (auto top = top_element(a))
            out << "bounded: yes (top = " << *top << ")\n";
        else
            out << "bounded: no\n";
        out << "positive-implicative: " << yes(is_positive_implicative(a)) << '\n';
    });

    auto* build = app.add_subcommand("build", "Build the minimum (mn) or maximum (bn) degree algebra");
    build->add_option("kind", kind, "mn or bn")->required()->check(CLI::IsMember({"mn", "bn"}));
    build->add_option("n", n, "order")->required();
    build->add_option("-o,--output", output, "output .bck file");
    on(build, [&] { deliver(kind == "mn" ? m_chain(n) : b_star(n), output, out); });

    auto* eval = app.add_subcommand("eval", "Evaluate a construction expression such as '((PI+T)+2)'");
    eval->add_option("expr", expr_text, "construction expression")->required();
    eval->add_option("-o,--output", output, "output .bck file");
    on(eval, [&] { deliver(ConstructionExpr::parse(expr_text).evaluate(), output, out); });

    auto* op = app.add_subcommand("op", "Apply a construction to algebras on disk");
    op->require_subcommand(1);
    auto* op_extend = op->add_subcommand("extend", "Iseki's extension (adjoin a top)");
    op_extend->add_option("file", file, ".bck file")->required();
    op_extend->add_option("-o,--output", output, "output .bck file");
    on(op_extend, [&] { deliver(extend_top(load_algebra(file)), output, out); });
    auto* op_union = op->add_subcommand("union", "BCK-union of the given algebras");
    op_union->add_option("files", files, ".bck files")->required();
    op_union->add_option("-o,--output", output, "output .bck file");
    on(op_union, [&] {
        std::vector<BckAlgebra> parts;
        for (const auto& f : files)
            parts.push_back(load_algebra(f));
        deliver(bck_union(parts), output, out);
    });

    auto* fam = app.add_subcommand("family", "List the degree-covering family at order N");
    fam->add_option("n", n, "order (>= 3)")->required();
    fam->add_flag("--exprs", with_exprs, "also print construction expressions");
    on(fam, [&] {
        const auto level = family(n);
        for (std::size_t j = 0; j < level.entries.size(); ++j) {
            const auto& e = level.entries[j];
            out << j + 1 << '\t' << e.report.pair_count << '/' << n * n << '\t' << e.report.degree;
            if (with_exprs)
                out << '\t' << e.expr.to_string();
            out << '\n';
        }
    });

    auto* cdset = app.add_subcommand("cdset", "List the achievable non-commutative degrees at order N");
    cdset->add_option("n", n, "order (>= 3)")->required();
    on(cdset, [&] {
        const auto nums = cd_numerators(n);
        const auto reduced = cd_set(n);
        for (std::size_t i = 0; i < nums.size(); ++i)
            out << nums[i] << '/' << n * n << " = " << reduced[i] << '\n';
    });

    auto* synth = app.add_subcommand("synth", "Build an algebra with commuting degree exactly P/Q");
    synth->add_option("fraction", fraction, "target degree P/Q with 0 < P/Q <= 1")->required();
    synth->add_option("-o,--output", output, "output .bck file");
    on(synth, [&] {
        const auto [p, q] = parse_fraction(fraction);
        const auto s = synthesize(p, q);
        const auto report = commuting_degree(s.algebra);
        out << "target: " << s.target << '\n';
        out << "order: " << s.order << '\n';
        if (s.index == 0) {
            out << "commutative: degree 1 is realized by TC\n";
        } else {
            out << "k: " << s.k << '\n';
            out << "index: " << s.index << '\n';
        }
        out << "expression: " << s.expr.to_string() << '\n';
        out << "display: " << s.expr.to_string(Notation::Display) << '\n';
        out << "degree: " << degree_text(report) << '\n';
        const auto trace = numerator_trace(s.expr);
        out << "trace:";
        for (std::size_t i = 0; i < trace.size(); ++i)
            out << (i ? " -> " : " ") << trace[i];
        out << '\n';
        if (s.escalated) {
            const std::uint64_t rq = s.target.denominator();
            const std::uint64_t rp = s.target.numerator();
            out << "note: order 2q = " << 2 * rq << " cannot hold k = " << 2 * rq * (rq - rp) << " (T_" << 2 * rq - 2
                << " = " << triangular(2 * rq - 2) << "); escalated to order " << s.order << '\n';
        }
        if (!output.empty())
            write_bck_file(output, s.algebra.table());
    });

    auto* enumerate_cmd = app.add_subcommand("enum", "Enumerate all algebras of order N up to isomorphism");
    enumerate_cmd->add_option("n", n, "order")->required();
    enumerate_cmd->add_flag("--count-only", count_only, "print only the number of classes");
    enumerate_cmd->add_flag("--noncommutative", noncommutative, "keep only non-commutative classes");
    enumerate_cmd->add_option("-o,--output", output, "directory for the .bck catalog and manifest");
    enumerate_cmd->add_option("-j,--threads", threads, "worker threads (0 = hardware concurrency)");
    on(enumerate_cmd, [&] {
        auto classes = enumerate(n, enumeration_options(n, threads, err));
        if (noncommutative)
            std::erase_if(classes, [](const BckAlgebra& a) { return is_commutative(a); });
        if (!output.empty())
            write_catalog(output, classes);
        if (count_only)
            out << classes.size() << '\n';
        else
            out << catalog_manifest(classes);
    });

    auto* census = app.add_subcommand("census", "Count isomorphism classes per commuting degree at order N");
    census->add_option("n", n, "order")->required();
    census->add_option("-j,--threads", threads, "worker threads (0 = hardware concurrency)");
    on(census, [&] {
        const auto tally = degree_census(n, enumeration_options(n, threads, err));
        for (const auto& [degree, count] : tally) {
            // Every degree at order n has denominator dividing n^2.
            const auto raw = degree.numerator() * (n * n / degree.denominator());
            out << raw << '/' << n * n << '\t' << degree << '\t' << count << '\n';
        }
    });

    auto* iso = app.add_subcommand("iso", "Decide isomorphism and print a witness permutation");
    iso->add_option("first", file, ".bck file")->required();
    iso->add_option("second", file2, ".bck file")->required();
    on(iso, [&] {
        const auto w = is_isomorphic(load_algebra(file), load_algebra(file2));
        if (!w) {
            out << "not isomorphic\n";
            return;
        }
        out << "isomorphic:";
        for (std::size_t x = 0; x < w->permutation.size(); ++x)
            out << ' ' << x << "->" << w->permutation[x];
        out << '\n';
    });

    auto* subalg = app.add_subcommand("subalg", "Find a subalgebra with one element fewer");
    subalg->add_option("file", file, ".bck file")->required();
    on(subalg, [&] {
        const auto s = find_maximal_subalgebra(load_algebra(file));
        out << '{';
        for (std::size_t i = 0; i < s.elements.size(); ++i)
            out << (i ? ", " : "") << s.elements[i];
        out << "}\n";
    });

    auto* hasse = app.add_subcommand("hasse", "Print the Hasse diagram in DOT format");
    hasse->add_option("file", file, ".bck file")->required();
    on(hasse, [&] { out << emit_hasse_dot(load_algebra(file)); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsageError;
    }

    try {
        if (action)
            action();
        return kExitOk;
    } catch (const DomainFailure& f) {
        if (!f.message.empty())
            err << "error: " << f.message << '\n';
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitDomainError;
}

} // namespace bck
