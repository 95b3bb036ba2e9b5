// mhr: command-line front end for the hyperring engine.
//
// Exit codes: 0 success, 1 usage error, 2 input or validation error,
// 3 at least one conformance check failed.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "mhr/mhr.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitFail = 3;

struct Globals
{
    bool machine = false;
    std::size_t capacity = mhr::kMaxCarrier;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw mhr::Error("E_IO", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mhr::Workspace load(const std::string& path, const Globals& g)
{
    return mhr::parse_workspace(read_file(path), g.capacity);
}

int cmd_validate(const std::string& path, const Globals& g)
{
    const mhr::Workspace ws = load(path, g);
    for (const mhr::NamedRing& r : ws.rings)
        std::cout << mhr::ring_report(r.name, *r.ref.ctx, g.machine);
    std::cout << (g.machine ? "workspace " : "") << "rings=" << ws.rings.size()
              << " ideals=" << ws.ideals.size() << " mcs=" << ws.mcs.size() << " homs=" << ws.homs.size()
              << " instances=" << ws.instances.size() << "\n";
    return 0;
}

const mhr::NamedSet& need_ideal(const mhr::Workspace& ws, const std::string& name)
{
    const mhr::NamedSet* a = ws.ideal(name);
    if (!a)
        throw mhr::Error("E_REFERENCE", "unknown ideal '" + name + "'");
    return *a;
}

int cmd_classify(const std::string& path, const std::string& ideal, const std::string& mcs, const Globals& g)
{
    const mhr::Workspace ws = load(path, g);
    const mhr::NamedSet& a = need_ideal(ws, ideal);
    const mhr::NamedSet* s = ws.mcs_set(mcs);
    if (!s)
        throw mhr::Error("E_REFERENCE", "unknown mcs '" + mcs + "'");
    if (a.ring != s->ring)
        throw mhr::Error("E_REFERENCE", "ideal '" + ideal + "' lives in ring '" + a.ring + "' but mcs '" + mcs +
                                            "' lives in ring '" + s->ring + "'");
    const mhr::RingContext& ctx = *ws.ring(a.ring)->ref.ctx;
    std::cout << mhr::classify_report(mhr::classify(ctx, a.set, s->set), g.machine);
    return 0;
}

int cmd_radical(const std::string& path, const std::string& ideal, const Globals& g)
{
    const mhr::Workspace ws = load(path, g);
    const mhr::NamedSet& a = need_ideal(ws, ideal);
    std::cout << mhr::radical_report(*ws.ring(a.ring)->ref.ctx, a.set, g.machine);
    return 0;
}

int cmd_ideals(const std::string& path, const std::string& ring, const Globals& g)
{
    const mhr::Workspace ws = load(path, g);
    const mhr::NamedRing* r = ws.ring(ring);
    if (!r)
        throw mhr::Error("E_REFERENCE", "unknown ring '" + ring + "'");
    std::cout << mhr::ideals_report(*r->ref.ctx, g.machine);
    return 0;
}

struct ConformanceArgs
{
    bool builtin = false;
    std::optional<std::uint64_t> seed;
    std::size_t count = 200;
    std::string file;
    std::size_t max_n = 8;
    unsigned jobs = 0;
    std::string dump_dir = "mhr-failures";
    std::string mutation = "none";
    std::size_t max_instances = mhr::ExpansionLimits{}.max_instances;
};

void dump_failures(const mhr::Summary& sum, mhr::Mutation mutation, const std::string& dir, bool machine)
{
    if (sum.fails.empty())
        return;
    fs::create_directories(dir);
    std::size_t k = 0;
    for (const mhr::FailRecord& f : sum.fails) {
        std::ostringstream name;
        name << "fail-" << k++ << "-" << mhr::check_name(f.id) << ".mhr";
        const fs::path path = fs::path(dir) / name.str();
        std::ofstream out(path, std::ios::binary);
        out << "# check=" << mhr::check_name(f.id) << "\n# ring=" << f.origin << "\n# " << f.detail << "\n";
        out << mhr::render_workspace(mhr::instance_workspace(f.instance, f.id, mutation));
        std::cout << (machine ? "dumped path=" : "dumped ") << path.generic_string() << "\n";
    }
}

int cmd_conformance(const ConformanceArgs& a, const Globals& g)
{
    auto mutation = mhr::parse_mutation(a.mutation);
    if (!mutation)
        throw mhr::Error("E_USAGE", "unknown mutation '" + a.mutation + "'");

    mhr::RunOptions opt;
    opt.limits.capacity = g.capacity;
    opt.limits.max_instances = a.max_instances;
    opt.engine.mutation = *mutation;
    opt.workers = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());

    if (!a.file.empty()) {
        const mhr::Workspace ws = load(a.file, g);
        std::size_t fails = 0;
        for (const mhr::NamedInstance& ni : ws.instances) {
            mhr::EngineOptions eo = opt.engine;
            if (ni.mutation != mhr::Mutation::None)
                eo.mutation = ni.mutation;
            const mhr::CheckOutcome out = mhr::run_check(ni.check, mhr::resolve_instance(ws, ni), eo);
            const char* status = out.status == mhr::Status::Pass ? "pass" : out.status == mhr::Status::Fail ? "fail" : "skip";
            fails += out.status == mhr::Status::Fail;
            std::cout << (g.machine ? "instance name=" : "instance=") << ni.name << " check=" << mhr::check_name(ni.check) << " status=" << status;
            if (!out.detail.empty())
                std::cout << " detail=" << out.detail;
            std::cout << "\n";
        }
        std::cout << (g.machine ? "summary " : "") << "total_fail=" << fails << "\n";
        return fails ? kExitFail : 0;
    }

    std::vector<mhr::Structure> structures;
    mhr::Summary sum;
    if (a.seed) {
        mhr::GeneratorLimits gl;
        gl.max_n = a.max_n;
        mhr::GeneratedStream stream = mhr::generate_structures(*a.seed, a.count, opt.limits, gl);
        std::cout << "generator seed=" << *a.seed << " count=" << a.count << " table_attempts=" << stream.table_attempts
                  << " table_discards=" << stream.table_discards << "\n";
        structures = std::move(stream.structures);
        sum = mhr::run_all(structures, opt);
        sum.discarded = stream.table_discards;
    } else {
        structures = mhr::builtin_corpus(opt.limits, a.max_n);
        sum = mhr::run_all(structures, opt);
    }
    if (*mutation != mhr::Mutation::None)
        std::cout << (g.machine ? "mutation name=" : "mutation=") << mhr::mutation_name(*mutation) << "\n";
    std::cout << mhr::render_summary(sum, g.machine);
    dump_failures(sum, *mutation, a.dump_dir, g.machine);
    return sum.total_fail() ? kExitFail : 0;
}

int cmd_paper_examples(const Globals& g)
{
    const mhr::ExampleReport rep = mhr::paper_examples();
    std::cout << mhr::render_examples(rep, g.machine);
    return rep.mismatches() ? kExitFail : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite multiplicative hyperrings: validation, classification, conformance"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--machine", g.machine, "Strict record-per-line output");
    app.add_option("--capacity", g.capacity, "Largest carrier accepted")->check(CLI::Range(1, static_cast<int>(mhr::kMaxCarrier)));

    std::string file, ideal, mcs, ring;
    auto* validate = app.add_subcommand("validate", "Load a workspace and describe its rings");
    validate->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "Classify a hyperideal against an MCS");
    classify->add_option("file", file)->required();
    classify->add_option("ideal", ideal)->required();
    classify->add_option("mcs", mcs)->required();

    auto* radical = app.add_subcommand("radical", "Radical of a hyperideal, both ways");
    radical->add_option("file", file)->required();
    radical->add_option("ideal", ideal)->required();

    auto* ideals = app.add_subcommand("ideals", "List the hyperideals of a ring");
    ideals->add_option("file", file)->required();
    ideals->add_option("ring", ring)->required();

    ConformanceArgs ca;
    auto* conf = app.add_subcommand("conformance", "Run the catalog checks");
    auto* corpus = conf->add_option_function<std::string>(
        "--corpus", [&](const std::string& v) { ca.builtin = v == "builtin"; }, "Fixed corpus (only 'builtin')");
    corpus->check(CLI::IsMember({"builtin"}));
    auto* seed = conf->add_option("--seed", ca.seed, "Seed of the generated stream");
    conf->add_option("--count", ca.count, "Structures in the generated stream")->needs(seed);
    conf->add_option("file", ca.file, "Workspace whose instance blocks are replayed");
    conf->add_option("--max-n", ca.max_n, "Largest Z_Phi modulus")->check(CLI::Range(1, 64));
    conf->add_option("--jobs", ca.jobs, "Worker threads (default: all cores)");
    conf->add_option("--dump-dir", ca.dump_dir, "Where failing instances are written");
    conf->add_option("--mutation", ca.mutation, "Run with a deliberately broken engine step");
    conf->add_option("--max-instances", ca.max_instances, "Instances per check per structure");
    corpus->excludes(seed);

    auto* examples = app.add_subcommand("paper-examples", "Reproduce the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate)
            return cmd_validate(file, g);
        if (*classify)
            return cmd_classify(file, ideal, mcs, g);
        if (*radical)
            return cmd_radical(file, ideal, g);
        if (*ideals)
            return cmd_ideals(file, ring, g);
        if (*conf) {
            if (!ca.file.empty() && (ca.builtin || ca.seed)) {
                std::cerr << "error: E_USAGE: give a workspace file or a corpus, not both\n";
                return kExitUsage;
            }
            return cmd_conformance(ca, g);
        }
        if (*examples)
            return cmd_paper_examples(g);
    } catch (const mhr::Error& e) {
        if (e.code() == "E_USAGE") {
            std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
            return kExitUsage;
        }
        // ParseError messages already carry position and code.
        if (dynamic_cast<const mhr::ParseError*>(&e))
            std::cerr << "error: " << e.what() << "\n";
        else
            std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
