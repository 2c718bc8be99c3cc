// chowlab: command-line front end.
//
//   chowlab chow   --family boolean(3)
//   chowlab sfy    --family nonpure(5) --format structured
//   chowlab scd    2 2 2
//   chowlab seq    1,4,6,4,1
//   chowlab fuzz   --seed 7 --trials 500 --max-rank 6
//   chowlab export --family nonpure(2) --format dot
//
// Exit status: 0 when every verdict passes, 1 when one fails, 2 on usage or
// input errors. Diagnostics go to stderr.

#include "chowlab/chowlab.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace chowlab;
using nlohmann::json;

enum class Format { text, csv, dot, structured };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"csv", Format::csv}, {"dot", Format::dot}, {"structured", Format::structured}};

struct InputSource {
    std::string family;
    std::string path;
};

RankedPoset load_input(const InputSource& in) {
    if (!in.family.empty() && !in.path.empty()) throw Error("give exactly one of --family and --input");
    if (!in.family.empty()) return generate_family(in.family);
    if (!in.path.empty()) return load_poset(in.path);
    throw Error("an input is required: --family <spec> or --input <path>");
}

/// Collects verdicts and renders them in the requested format.
class Report {
public:
    explicit Report(Format f) : format_(f) {}

    void verdict(const std::string& name, bool pass, const json& detail = json::object()) {
        all_pass_ = all_pass_ && pass;
        if (format_ == Format::structured) {
            json rec{{"verdict", name}, {"pass", pass}};
            for (auto& [k, v] : detail.items()) rec[k] = v;
            std::cout << rec.dump() << "\n";
        } else if (format_ == Format::text) {
            std::cout << name << ": " << (pass ? "true" : "FALSE");
            if (!detail.empty()) std::cout << " " << detail.dump();
            std::cout << "\n";
        }
    }

    void info(const std::string& name, const json& value, const std::string& text) {
        if (format_ == Format::structured) std::cout << json{{"record", name}, {"value", value}}.dump() << "\n";
        else if (format_ == Format::text) std::cout << name << ": " << text << "\n";
    }

    bool all_pass() const noexcept { return all_pass_; }
    Format format() const noexcept { return format_; }

private:
    Format format_;
    bool all_pass_ = true;
};

json to_json(const IntSequence& s) {
    json a = json::array();
    for (const auto& x : s) {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
            a.push_back(x.convert_to<std::int64_t>());
        else
            a.push_back(x.str());
    }
    return a;
}

json witness(const Verdict& v) { return v.holds ? json::object() : json{{"index", *v.index}}; }

void report_sequence_shape(Report& rep, const IntSequence& h) {
    rep.verdict("nonnegative", is_nonnegative(h).holds, witness(is_nonnegative(h)));
    rep.verdict("palindromic", is_palindromic(h).holds, witness(is_palindromic(h)));
    rep.verdict("unimodal", is_unimodal(h).holds, witness(is_unimodal(h)));
    rep.verdict("log-concave", is_log_concave(h).holds, witness(is_log_concave(h)));
}

int cmd_chow(const InputSource& in, Format format) {
    const RankedPoset rp = load_input(in);
    const IntPolynomial poly = chow_chain_sum(rp.poset, rp.rank);
    const IntSequence h = poly.coefficients();
    if (format == Format::csv) {
        std::cout << to_csv(poly) << "\n";
        return 0;
    }
    if (format == Format::dot) throw Error("chow does not support --format dot");
    Report rep(format);
    rep.info("h", to_json(h), to_csv(poly));
    rep.info("polynomial", to_string(poly), to_string(poly));
    report_sequence_shape(rep, h);
    const auto si = is_SI_sequence(h);
    rep.verdict("SI-sequence", si.holds, si.holds ? json::object() : json{{"reason", si.reason}});
    if (is_palindromic(poly)) {
        const auto gamma = gamma_vector(poly);
        rep.info("gamma", to_json(gamma), join_csv(gamma) + (is_gamma_positive(gamma) ? " (gamma-positive)" : " (not gamma-positive)"));
    }
    const int roots = count_real_roots(poly);
    rep.info("real-roots", roots, std::to_string(roots) + " of " + std::to_string(poly.degree()));
    return rep.all_pass() ? 0 : 1;
}

int cmd_sfy(const InputSource& in, Format format) {
    if (format == Format::dot || format == Format::csv) throw Error("sfy supports --format text|structured");
    const RankedPoset rp = load_input(in);
    const auto& [p, r] = rp;
    const MonomialSet sfy = sfy_generate(p, r);
    Report rep(format);
    if (format == Format::text) std::cout << format_monomial_set(sfy, p, r);
    else {
        json ms = json::array();
        for (const auto& m : sfy) ms.push_back(format_fy_monomial(m, p, r));
        rep.info("monomials", ms, "");
    }
    const IntSequence hs = sfy.h_sequence();
    rep.info("h", to_json(hs), join_csv(hs));

    const auto ideal = is_monomial_order_ideal(sfy);
    json ideal_detail = json::object();
    if (ideal.witness)
        ideal_detail = {{"member", format_fy_monomial(ideal.witness->first, p, r)},
                        {"missing", format_fy_monomial(ideal.witness->second, p, r)}};
    rep.verdict("order-ideal", ideal.is_order_ideal, ideal_detail);

    if (ideal.is_order_ideal) {
        std::optional<std::uint64_t> expected;
        if (is_ranked(p, r)) expected = static_cast<std::uint64_t>((r[p.top()] - 1) / 2);
        const auto pure = is_pure_ideal(sfy, expected);
        json detail = json::object();
        if (expected) detail["expected_degree"] = *expected;
        if (!pure.pure) {
            json maximal = json::array();
            for (const auto& m : pure.maximal) maximal.push_back(format_fy_monomial(m, p, r));
            detail["maximal"] = maximal;
            detail["witness"] = format_fy_monomial(*pure.witness, p, r);
        } else if (pure.degree) {
            detail["degree"] = *pure.degree;
        }
        rep.verdict("pure", pure.pure, detail);
    }

    const IntSequence h = chow_chain_sum(p, r).coefficients();
    const IntSequence g = delta(h);
    rep.verdict("h(SFY)=delta(chow)", same_h_vector(hs, g), {{"delta", to_json(g)}});
    return rep.all_pass() ? 0 : 1;
}

int cmd_scd(const std::vector<int>& bounds, Format format) {
    if (format == Format::dot || format == Format::csv) throw Error("scd supports --format text|structured");
    if (bounds.empty()) throw Error("scd needs at least one chain length");
    for (int b : bounds)
        if (b < 1) throw Error("chain lengths must be positive");
    const auto pd = scd_product_of_chains(bounds);
    Report rep(format);
    auto point = [&](std::size_t idx) {
        const auto g = pd.host.decode(idx);
        std::string s = "(";
        for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k]);
        return s + ")";
    };
    if (format == Format::text) {
        std::cout << "chains: " << pd.decomposition.chains.size() << "\n" << format_product_decomposition(pd);
        std::cout << "initial:";
        for (auto idx : pd.decomposition.initial_elements()) std::cout << " " << point(idx);
        std::cout << "\n";
    } else {
        json chains = json::array();
        for (const auto& c : pd.decomposition.chains) {
            json cj = json::array();
            for (auto idx : c) cj.push_back(pd.host.decode(idx));
            chains.push_back(cj);
        }
        rep.info("chains", chains, "");
    }
    std::vector<std::size_t> per_rank;
    for (auto idx : pd.decomposition.initial_elements()) {
        const auto k = static_cast<std::size_t>(pd.host.rank(idx));
        if (per_rank.size() <= k) per_rank.resize(k + 1, 0);
        ++per_rank[k];
    }
    json pr = per_rank;
    std::string pr_text;
    for (std::size_t i = 0; i < per_rank.size(); ++i) pr_text += (i ? "," : "") + std::to_string(per_rank[i]);
    rep.info("initial-per-rank", pr, pr_text);
    const auto v = verify_product_decomposition(pd);
    rep.verdict("partition", v.partition);
    rep.verdict("saturated", v.saturated);
    rep.verdict("symmetric", v.symmetric);
    rep.verdict("initial-formula", v.formula_match);
    rep.verdict("W(S_init)=delta(W)", v.whitney_match);
    return rep.all_pass() ? 0 : 1;
}

int cmd_seq(const std::string& text, Format format) {
    if (format == Format::dot || format == Format::csv) throw Error("seq supports --format text|structured");
    const IntSequence h = parse_csv_sequence(text);
    Report rep(format);
    rep.info("h", to_json(h), join_csv(h));
    report_sequence_shape(rep, h);
    if (h.front() == 1) rep.verdict("O-sequence", is_O_sequence(h).holds, witness(is_O_sequence(h)));
    const auto si = is_SI_sequence(h);
    rep.verdict("SI-sequence", si.holds, si.holds ? json::object() : json{{"reason", si.reason}});
    if (is_palindromic(h) && is_unimodal(h)) {
        const IntSequence g = delta(h);
        rep.info("delta", to_json(g), join_csv(g));
    }
    if (h.size() == 3 && h[0] == 1 && h[1] >= 1) rep.verdict("pure-O-sequence", is_pure_O_len3(h));
    const auto hibi = hibi_check(h);
    rep.verdict("hibi", hibi.holds,
                hibi.witness ? json{{"i", hibi.witness->first}, {"j", hibi.witness->second}} : json::object());
    return rep.all_pass() ? 0 : 1;
}

int cmd_fuzz(const FuzzOptions& opt, const std::string& out_dir, Format format) {
    if (format == Format::dot || format == Format::csv) throw Error("fuzz supports --format text|structured");
    const FuzzReport report = run_fuzz(opt);
    Report rep(format);
    rep.info("trials", report.trials, std::to_string(report.trials));
    rep.info("ranked-trials", report.ranked_trials, std::to_string(report.ranked_trials));
    const std::vector<std::string> checks{"oracle-equivalence", "nonnegative-palindromic-unimodal", "si-sequence",
                                          "sfy-order-ideal",   "sfy-differential",                 "sfy-pure",
                                          "log-concavity",     "log-difference"};
    for (const auto& c : checks) {
        const auto it = report.violations.find(c);
        const std::size_t count = it == report.violations.end() ? 0 : it->second;
        rep.verdict(c, count == 0, {{"violations", count}});
    }
    if (!report.failures.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& f : report.failures) {
            const auto path = std::filesystem::path(out_dir) / ("failure-trial-" + std::to_string(f.trial) + ".json");
            std::ofstream(path) << format_poset(f.minimized.poset, f.minimized.rank);
            std::cerr << "trial " << f.trial << " failed; minimized poset written to " << path.string() << "\n";
        }
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_export(const InputSource& in, Format format, const std::string& output) {
    const RankedPoset rp = load_input(in);
    std::string text;
    switch (format) {
        case Format::dot: text = format_dot(rp.poset, rp.rank); break;
        case Format::csv: text = to_csv(chow_chain_sum(rp.poset, rp.rank)) + "\n"; break;
        case Format::text:
        case Format::structured: text = format_poset(rp.poset, rp.rank); break;
    }
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Error("cannot write " + output);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chowlab: Chow polynomials of weakly ranked posets"};
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_input = [](CLI::App* cmd, InputSource& in) {
        auto* fam = cmd->add_option("--family", in.family, "Family spec, e.g. chain(3) or nonpure(m=5)");
        auto* path = cmd->add_option("--input", in.path, "Poset file (JSON)");
        fam->excludes(path);
    };

    InputSource chow_in, sfy_in, export_in;
    auto* chow = app.add_subcommand("chow", "Chow polynomial and its sequence verdicts");
    add_input(chow, chow_in);
    chow->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv", "structured"}));

    auto* sfy = app.add_subcommand("sfy", "SFY monomials, order-ideal and pureness verdicts");
    add_input(sfy, sfy_in);
    sfy->add_option("--format", format_name)->check(CLI::IsMember({"text", "structured"}));

    std::vector<int> bounds;
    auto* scd = app.add_subcommand("scd", "Symmetric chain decomposition of a product of chains");
    scd->add_option("lengths", bounds, "Chain lengths r_1 .. r_k")->required();
    scd->add_option("--format", format_name)->check(CLI::IsMember({"text", "structured"}));

    std::string sequence;
    auto* seq = app.add_subcommand("seq", "Sequence verdicts for comma-separated integers");
    seq->add_option("sequence", sequence, "e.g. 1,4,6,4,1")->required();
    seq->add_option("--format", format_name)->check(CLI::IsMember({"text", "structured"}));

    FuzzOptions fuzz_opt;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "fuzz-failures";
    auto* fuzz = app.add_subcommand("fuzz", "Invariant campaign over seeded random posets");
    fuzz->add_option("--seed", seed, "RNG seed (required)");
    fuzz->add_option("--trials", fuzz_opt.trials)->check(CLI::PositiveNumber);
    fuzz->add_option("--max-rank", fuzz_opt.max_rank)->check(CLI::Range(1, 64));
    fuzz->add_option("--max-width", fuzz_opt.max_width)->check(CLI::Range(1, 64));
    fuzz->add_option("--jobs", fuzz_opt.jobs)->check(CLI::Range(1u, 256u));
    fuzz->add_option("--out-dir", out_dir, "Where minimized failing posets are written");
    fuzz->add_option("--format", format_name)->check(CLI::IsMember({"text", "structured"}));

    std::string output;
    auto* exp = app.add_subcommand("export", "Write a poset as DOT, CSV h-vector, or poset file");
    add_input(exp, export_in);
    exp->add_option("--format", format_name, "dot, csv, or structured/text for the poset file")
        ->check(CLI::IsMember({"text", "csv", "dot", "structured"}));
    exp->add_option("--output,-o", output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const Format format = kFormats.at(format_name);
        if (chow->parsed()) return cmd_chow(chow_in, format);
        if (sfy->parsed()) return cmd_sfy(sfy_in, format);
        if (scd->parsed()) return cmd_scd(bounds, format);
        if (seq->parsed()) return cmd_seq(sequence, format);
        if (fuzz->parsed()) {
            if (!seed) {
                std::cerr << "fuzz: --seed is required\n";
                return 2;
            }
            fuzz_opt.seed = *seed;
            return cmd_fuzz(fuzz_opt, out_dir, format);
        }
        if (exp->parsed()) return cmd_export(export_in, format, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
