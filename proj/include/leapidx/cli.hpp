#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leapidx/benzenoid.hpp"
#include "leapidx/closed_form.hpp"
#include "leapidx/graph.hpp"
#include "leapidx/indices.hpp"
#include "leapidx/k_degree.hpp"
#include "leapidx/verify.hpp"

namespace leapidx::cli {

namespace detail {

struct GraphInput {
    std::string family;
    long p = 0;
    std::string input_path;
    std::string hexes_path;

    void add_options(CLI::App& cmd) {
        cmd.add_option("--family", family, "graph family: zigzag or rhombic")
            ->check(CLI::IsMember({"zigzag", "rhombic"}));
        cmd.add_option("--p", p, "family size parameter (p >= 1)");
        cmd.add_option("--input", input_path, "read an edge-list file instead");
        cmd.add_option("--hexes", hexes_path, "read hexagon coordinates (one 'q r' per line)");
    }

    MolecularGraph build() const {
        if (!family.empty()) {
            if (p < 1) throw InvalidParameter("--family requires --p >= 1");
            return family == "zigzag" ? zigzag(p) : rhombic(p);
        }
        if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) throw ParseError("cannot open " + input_path);
            return read_edge_list(in);
        }
        if (!hexes_path.empty()) {
            std::ifstream in(hexes_path);
            if (!in) throw ParseError("cannot open " + hexes_path);
            return build_system(read_hex_list(in)).graph;
        }
        throw InvalidParameter("no input: give --family/--p, --input or --hexes");
    }
};

inline std::vector<IndexKind> parse_quantities(const std::string& csv) {
    if (csv.empty()) return leap_kinds();
    std::vector<IndexKind> kinds;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto kind = kind_from_token(token);
        if (!kind) throw InvalidParameter("unknown quantity token: " + token);
        kinds.push_back(*kind);
    }
    return kinds;
}

// Writes to `fallback` unless a path was given.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ParseError("cannot open " + path + " for writing");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

} // namespace detail

// Exit codes: 0 success, 1 usage or input error, 2 verify found a mismatch.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-distance-degree (leap) topological indices of benzenoid systems"};
    app.require_subcommand(1);

    detail::GraphInput gen_input;
    std::string gen_out_path;
    auto* generate = app.add_subcommand("generate", "emit a graph as an edge-list file");
    gen_input.add_options(*generate);
    generate->add_option("--out", gen_out_path, "output file (default: stdout)");

    detail::GraphInput idx_input;
    unsigned idx_k = 2;
    std::string idx_quantities;
    auto* indices = app.add_subcommand("indices", "compute index values");
    idx_input.add_options(*indices);
    indices->add_option("--k", idx_k, "distance-degree depth (default 2)");
    indices->add_option("--quantities", idx_quantities, "comma-separated index tokens");

    detail::GraphInput part_input;
    unsigned part_k = 2;
    auto* partition = app.add_subcommand("partition", "print the k-degree edge partition");
    part_input.add_options(*partition);
    partition->add_option("--k", part_k, "distance-degree depth (default 2)");

    detail::GraphInput poly_input;
    unsigned poly_k = 2;
    std::string poly_kind;
    auto* poly = app.add_subcommand("poly", "print an index polynomial");
    poly_input.add_options(*poly);
    poly->add_option("--k", poly_k, "distance-degree depth (default 2)");
    poly->add_option("--kind", poly_kind, "polynomial kind: lm1, lm2, hlm1 or hlm2")
        ->required()
        ->check(CLI::IsMember({"lm1", "lm2", "hlm1", "hlm2"}));

    std::string verify_family = "both";
    int verify_p_min = 2;
    int verify_p_max = 10;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "compare oracle, closed forms and tables");
    verify->add_option("--family", verify_family, "zigzag, rhombic or both")
        ->check(CLI::IsMember({"zigzag", "rhombic", "both"}));
    verify->add_option("--p-min", verify_p_min, "smallest p (default 2)");
    verify->add_option("--p-max", verify_p_max, "largest p (default 10)");
    verify->add_option("--format", verify_format, "text, csv or jsonl")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));

    std::string sweep_family;
    int sweep_p_min = 2;
    int sweep_p_max = 10;
    unsigned sweep_k = 2;
    std::string sweep_quantities;
    std::string sweep_format = "csv";
    std::string sweep_out_path;
    auto* sweep = app.add_subcommand("sweep", "emit one row of index values per p");
    sweep->add_option("--family", sweep_family, "zigzag or rhombic")
        ->required()
        ->check(CLI::IsMember({"zigzag", "rhombic"}));
    sweep->add_option("--p-min", sweep_p_min, "smallest p (default 2)");
    sweep->add_option("--p-max", sweep_p_max, "largest p (default 10)");
    sweep->add_option("--k", sweep_k, "distance-degree depth (default 2)");
    sweep->add_option("--quantities", sweep_quantities, "comma-separated index tokens");
    sweep->add_option("--format", sweep_format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    sweep->add_option("--out", sweep_out_path, "output file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("leapidx");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (generate->parsed()) {
            const MolecularGraph g = gen_input.build();
            detail::OutputTarget target(gen_out_path, out);
            write_edge_list(g, target.stream());
            return 0;
        }

        if (indices->parsed()) {
            const MolecularGraph g = idx_input.build();
            const KDegreeProfile profile = k_degree_profile(g, idx_k);
            for (const IndexKind kind : detail::parse_quantities(idx_quantities))
                out << to_token(kind) << ' ' << compute_index(g, profile, kind).to_string()
                    << '\n';
            return 0;
        }

        if (partition->parsed()) {
            const MolecularGraph g = part_input.build();
            const EdgePartition part = edge_partition(g, k_degree_profile(g, part_k));
            for (const auto& [cls, count] : part.classes)
                out << cls.first << ' ' << cls.second << ' ' << count << '\n';
            return 0;
        }

        if (poly->parsed()) {
            const MolecularGraph g = poly_input.build();
            const KDegreeProfile profile = k_degree_profile(g, poly_k);
            out << compute_polynomial(g, profile, *kind_from_token(poly_kind)).to_string() << '\n';
            return 0;
        }

        if (verify->parsed()) {
            std::vector<Family> families;
            if (verify_family == "zigzag" || verify_family == "both")
                families.push_back(Family::Zigzag);
            if (verify_family == "rhombic" || verify_family == "both")
                families.push_back(Family::Rhombic);
            const VerificationReport report =
                verify_families(families, verify_p_min, verify_p_max);
            if (verify_format == "csv") render_csv(report, out);
            else if (verify_format == "jsonl") render_jsonl(report, out);
            else render_text(report, out);
            return report.has_mismatch() ? 2 : 0;
        }

        if (sweep->parsed()) {
            if (sweep_p_min > sweep_p_max) throw InvalidParameter("--p-min must be <= --p-max");
            const Family family = *family_from_token(sweep_family);
            const std::vector<IndexKind> kinds = detail::parse_quantities(sweep_quantities);
            detail::OutputTarget target(sweep_out_path, out);
            std::ostream& os = target.stream();
            const char sep = sweep_format == "csv" ? ',' : ' ';
            os << "family" << sep << 'p';
            for (const IndexKind kind : kinds) os << sep << to_token(kind);
            os << '\n';
            for (int p = sweep_p_min; p <= sweep_p_max; ++p) {
                const MolecularGraph g = family == Family::Zigzag ? zigzag(p) : rhombic(p);
                const KDegreeProfile profile = k_degree_profile(g, sweep_k);
                os << sweep_family << sep << p;
                for (const IndexKind kind : kinds)
                    os << sep << compute_index(g, profile, kind).to_string();
                os << '\n';
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace leapidx::cli
