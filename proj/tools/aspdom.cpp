// aspdom: enumerate, analyze, classify, construct, and verify Arrow's
// single-peaked domains and related voting-rule properties.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "aspd/canonical.hpp"
#include "aspd/enumerate.hpp"
#include "aspd/io.hpp"
#include "aspd/richness.hpp"
#include "aspd/voting.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("ASPDOM_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

aspd::Domain load_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw aspd::io_error(0, "cannot open " + path);
    return aspd::parse_domain(in);
}

std::string string_code(const std::vector<aspd::Sym>& syms) {
    std::string code;
    for (aspd::Sym s : syms) code += static_cast<char>('1' + aspd::sym_subject_index(s));
    return code;
}

// ---- enumerate ----

struct EnumerateArgs {
    int n = 0;
    std::string mode = "insearch";
    std::string out;
    int jobs = default_jobs();
    bool count_only = false;
    bool pack = false;
    std::string checkpoint;
};

int cmd_enumerate(const EnumerateArgs& a) {
    aspd::EnumOptions opt;
    opt.mode = a.mode == "posthoc" ? aspd::EnumMode::Posthoc : aspd::EnumMode::Insearch;
    opt.jobs = a.jobs;
    opt.progress = &std::cerr;

    std::vector<std::uint64_t> skip;
    std::ofstream journal;
    if (!a.checkpoint.empty()) {
        if (a.out.empty()) {
            std::cerr << "error: --checkpoint requires --out\n";
            return 2;
        }
        if (opt.mode != aspd::EnumMode::Insearch) {
            std::cerr << "error: --checkpoint requires --mode insearch\n";
            return 2;
        }
        std::ifstream in(a.checkpoint);
        std::string tag;
        std::uint64_t id;
        while (in >> tag >> id)
            if (tag == "D") skip.push_back(id);
        journal.open(a.checkpoint, std::ios::app);
        opt.skip_subtrees = &skip;
        opt.on_subtree_done = [&](std::uint64_t id) { journal << "D " << id << "\n" << std::flush; };
    }

    if (!a.out.empty()) fs::create_directories(a.out);

    aspd::AspEnumerator eng(a.n);
    std::uint64_t emitted = 0;
    eng.run(opt, [&](std::uint64_t, const std::vector<aspd::Sym>& syms,
                     const std::vector<std::uint32_t>& idx) {
        ++emitted;
        if (a.out.empty()) return;
        std::string base = "asp_n" + std::to_string(a.n) + "_" + string_code(syms);
        aspd::ConditionAssignment ca{a.n, syms};
        {
            std::ofstream f(fs::path(a.out) / (base + ".cond"));
            aspd::emit_conditions(f, ca);
        }
        if (!a.pack) {
            std::ofstream f(fs::path(a.out) / (base + ".dom"));
            aspd::emit_domain(f, eng.domain_of(idx));
        }
    });

    std::uint64_t count = emitted;
    if (!a.out.empty()) {
        // on checkpoint resume, previously written classes are not re-emitted
        count = 0;
        for (const auto& e : fs::directory_iterator(a.out))
            if (e.path().extension() == ".cond" &&
                e.path().filename().string().rfind("asp_n" + std::to_string(a.n) + "_", 0) == 0)
                ++count;
        json summary;
        summary["n"] = a.n;
        summary["count"] = count;
        summary["mode"] = a.mode;
        summary["packed"] = a.pack;
        std::ofstream f(fs::path(a.out) / ("summary_n" + std::to_string(a.n) + ".json"));
        f << summary.dump(2) << "\n";
    }
    if (a.count_only)
        std::cout << count << "\n";
    else
        std::cout << "a(" << a.n << ") = " << count << "\n";
    return 0;
}

// ---- analyze ----

int cmd_analyze(const std::string& in, const std::string& report) {
    aspd::Domain d = load_domain(in);
    aspd::RichnessReport rep = aspd::richness_report(d);
    json j;
    if (report == "richness")
        j = aspd::to_json(rep, d);
    else if (report == "terminals")
        j["terminals"] = rep.terminals;
    else {
        json ranges = json::object();
        for (aspd::Alt a : d.alphabet) ranges[std::to_string(a)] = rep.ranges.at(a);
        j["ranges"] = ranges;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// ---- classify ----

// Searches for an axis h such that d is Black's single-peaked domain on h.
std::optional<aspd::Order> black_axis(const aspd::Domain& d) {
    const int n = d.n();
    if (n < 3 || d.size() != (std::size_t{1} << (n - 1))) return std::nullopt;
    if (d.alphabet != aspd::ascending_alphabet(n)) return std::nullopt;
    aspd::Domain black = aspd::black_domain(n);
    aspd::Perm g = aspd::identity_perm(n);
    do {
        if (aspd::relabel(black, g).orders == d.orders) return g;  // axis = image of 1..n
    } while (std::next_permutation(g.begin(), g.end()));
    return std::nullopt;
}

int cmd_classify(const std::string& in) {
    aspd::Domain d = load_domain(in);
    json j;
    j["n"] = d.n();
    j["size"] = d.size();
    bool condorcet = aspd::is_condorcet_sen(d);
    j["condorcet"] = condorcet;
    j["maximal"] = condorcet ? aspd::is_maximal_condorcet(d) : false;
    bool peaked = aspd::is_arrow_single_peaked(d);
    j["arrow_peaked"] = peaked;
    j["arrow_dipped"] = aspd::is_arrow_single_dipped(d);
    j["lf"] = aspd::satisfies_LF(d);
    j["qa"] = aspd::satisfies_QA(d);
    if (auto part = aspd::hierarchically_cyclic_partition(d)) {
        j["hierarchically_cyclic"] = true;
        json blocks = json::array();
        for (const auto& b : part->blocks)
            blocks.push_back({{"lo", b.lo},
                              {"hi", b.hi},
                              {"kind", b.kind == aspd::IntervalPartition::Kind::CyclicShifts
                                           ? "cyclic-shifts"
                                           : "size-at-most-2"}});
        j["partition"] = blocks;
    } else {
        j["hierarchically_cyclic"] = false;
    }
    if (peaked) {
        auto pivot = aspd::skewed_pivot(d);
        j["skewed"] = pivot.has_value();
        if (pivot) j["pivot"] = *pivot;
    } else {
        j["skewed"] = false;
    }
    if (auto axis = black_axis(d)) {
        j["black"] = true;
        j["axis"] = *axis;
    } else {
        j["black"] = false;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// ---- construct ----

int cmd_construct(const std::string& family, int n, std::optional<int> fixed_rank,
                  std::optional<int> lead, const std::string& out) {
    aspd::Domain d;
    if (family == "black")
        d = aspd::black_domain(n);
    else if (family == "skewed-sn")
        d = aspd::skewed_sn(n);
    else if (family == "qa-max")
        d = aspd::max_qa_domain(n, fixed_rank);
    else if (family == "hc-max")
        d = aspd::max_hc_domain(n, lead);
    else if (family == "cyclic")
        d = aspd::cyclic_domain(n);
    else {
        std::cerr << "error: unknown family " << family << "\n";
        return 2;
    }
    if (out.empty() || out == "-") {
        aspd::emit_domain(std::cout, d);
    } else {
        std::ofstream f(out);
        aspd::emit_domain(f, d);
    }
    return 0;
}

// ---- verify-iia ----

int cmd_verify(const std::string& rule, const std::string& axiom, const std::string& in,
               int max_voters, const std::string& reading) {
    aspd::Domain d = load_domain(in);
    aspd::IIAVerdict v;
    if (axiom == "nash") {
        aspd::VoteRule r = rule == "plurality" ? aspd::VoteRule::Plurality
                           : rule == "runoff"  ? aspd::VoteRule::Runoff
                                               : aspd::VoteRule::Borda;
        v = aspd::check_nash_iia(r, d, max_voters);
    } else {
        if (rule != "borda") {
            std::cerr << "error: --axiom arrow is only implemented for --rule borda\n";
            return 2;
        }
        aspd::ArrowIIAReading r = reading == "fixed-slots" ? aspd::ArrowIIAReading::FixedSlots
                                  : reading == "pairwise"  ? aspd::ArrowIIAReading::PairwiseOnly
                                                           : aspd::ArrowIIAReading::Rerank;
        v = aspd::check_arrow_iia_borda(d, max_voters, r);
    }
    std::cout << aspd::to_json(v).dump(2) << "\n";
    return v.holds ? 0 : 1;
}

// ---- stats ----

int cmd_stats(int n, const std::string& table, int jobs) {
    if (table != "richness") {
        std::cerr << "error: unknown table " << table << "\n";
        return 2;
    }
    aspd::AspEnumerator eng(n);
    aspd::EnumOptions opt;
    opt.jobs = jobs;
    opt.progress = &std::cerr;
    std::map<int, std::uint64_t> hist;
    eng.run(opt, [&](std::uint64_t, const std::vector<aspd::Sym>&,
                     const std::vector<std::uint32_t>& idx) {
        ++hist[aspd::richness(eng.domain_of(idx))];
    });
    bool first = true;
    for (auto [k, v] : hist) {
        std::cout << (first ? "" : " ") << k << ":" << v;
        first = false;
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arrow's single-peaked domain toolkit"};
    app.require_subcommand(1);

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate maximal ASP domains");
    enumerate->add_option("--n", ea.n, "number of alternatives")->required()->check(CLI::Range(3, 9));
    enumerate->add_option("--mode", ea.mode)->check(CLI::IsMember({"posthoc", "insearch"}));
    enumerate->add_option("--out", ea.out, "output directory");
    enumerate->add_option("--jobs", ea.jobs)->check(CLI::PositiveNumber);
    enumerate->add_flag("--count-only", ea.count_only);
    enumerate->add_flag("--pack", ea.pack, "emit condition files only");
    enumerate->add_option("--checkpoint", ea.checkpoint, "journal file for resumable runs");

    std::string an_in, an_report = "richness";
    auto* analyze = app.add_subcommand("analyze", "richness report for a domain file");
    analyze->add_option("--in", an_in)->required();
    analyze->add_option("--report", an_report)->check(CLI::IsMember({"richness", "terminals", "ranges"}));

    std::string cl_in;
    auto* classify = app.add_subcommand("classify", "structural flags for a domain file");
    classify->add_option("--in", cl_in)->required();

    std::string co_family, co_out;
    int co_n = 0;
    std::optional<int> co_fixed_rank, co_lead;
    auto* construct = app.add_subcommand("construct", "build a named reference domain");
    construct->add_option("--family", co_family)
        ->required()
        ->check(CLI::IsMember({"black", "skewed-sn", "qa-max", "hc-max", "cyclic"}));
    construct->add_option("--n", co_n)->required()->check(CLI::PositiveNumber);
    construct->add_option("--fixed-rank", co_fixed_rank);
    construct->add_option("--lead", co_lead);
    construct->add_option("--out", co_out, "output file (default stdout)");

    std::string vi_rule, vi_axiom, vi_in, vi_reading = "rerank";
    int vi_max_voters = 0;
    auto* verify = app.add_subcommand("verify-iia", "bounded IIA verification");
    verify->add_option("--rule", vi_rule)
        ->required()
        ->check(CLI::IsMember({"plurality", "runoff", "borda"}));
    verify->add_option("--axiom", vi_axiom)->required()->check(CLI::IsMember({"nash", "arrow"}));
    verify->add_option("--in", vi_in)->required();
    verify->add_option("--max-voters", vi_max_voters)->required()->check(CLI::PositiveNumber);
    verify->add_option("--reading", vi_reading, "Arrow-IIA profile pairing")
        ->check(CLI::IsMember({"rerank", "fixed-slots", "pairwise"}));

    int st_n = 0, st_jobs = default_jobs();
    std::string st_table = "richness";
    auto* stats = app.add_subcommand("stats", "reproduce a published table row");
    stats->add_option("--n", st_n)->required()->check(CLI::Range(3, 9));
    stats->add_option("--table", st_table);
    stats->add_option("--jobs", st_jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*enumerate) return cmd_enumerate(ea);
        if (*analyze) return cmd_analyze(an_in, an_report);
        if (*classify) return cmd_classify(cl_in);
        if (*construct) return cmd_construct(co_family, co_n, co_fixed_rank, co_lead, co_out);
        if (*verify) return cmd_verify(vi_rule, vi_axiom, vi_in, vi_max_voters, vi_reading);
        if (*stats) return cmd_stats(st_n, st_table, st_jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
