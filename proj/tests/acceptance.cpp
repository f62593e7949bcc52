// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Pass --slow to add the all-tables closure-validator sweep on three points.

#include "fintop/census.hpp"
#include "fintop/cli.hpp"
#include "fintop/closure.hpp"
#include "fintop/initial.hpp"
#include "fintop/io.hpp"
#include "fintop/subspace.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

using namespace fintop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::vector<TopologyCensus> census_up_to(unsigned n)
{
    std::vector<TopologyCensus> out;
    for (unsigned k = 0; k <= n; ++k)
        out.push_back(enumerate_brute(k));
    return out;
}

std::string describe(const Topology& t)
{
    return emit_topology(t);
}

void check_subspace(Outcome& o, const Topology& t, const PointSet& y)
{
    const SubspaceView direct = subspace_topology(t, y);
    const CanonicalSubspace canonical = subspace_topology_canonical(t, y);
    const SubspaceView closure = subspace_via_closure(t, y);
    const std::string where = describe(t) + " Y=" + to_string(y);
    o.require(direct.sub() == canonical.view.sub(), "direct != canonical at " + where);
    o.require(direct.sub() == closure.sub(), "direct != closure at " + where);
    o.require(canonical.certificate.holds(), "certificate failed at " + where);
}

void check_maximality(Outcome& o, const Topology& t, const PointSet& y)
{
    for (Mask v : oracle::traces(t, y.mask())) {
        const PointSet vs(t.carrier(), v);
        const PointSet rep = maximal_open_representative(t, y, vs);
        const std::string where = describe(t) + " Y=" + to_string(y) + " V=" + to_string(vs);
        o.require(t.is_open(rep), "U* not open at " + where);
        o.require(intersect(rep, y) == vs, "U* trace differs at " + where);
        for (Mask w : t.open_masks())
            if ((w & y.mask()) == v)
                o.require((w & ~rep.mask()) == 0, "open W not inside U* at " + where);
    }
}

void check_initial(Outcome& o, const Topology& tX, const FiniteFunction& f, const TopologyCensus* dom_census)
{
    const Topology direct = initial_topology_direct(tX, f);
    const std::string where = describe(tX) + " f=" + emit_function(f);
    o.require(initial_topology_via_image(tX, f) == direct, "via_image differs at " + where);
    o.require(initial_topology_via_closure(tX, f) == direct, "via_closure differs at " + where);
    o.require(is_continuous(f, direct, tX), "not continuous at " + where);
    o.require(verify_weakest(tX, f, direct).holds, "verify_weakest failed at " + where);
    if (dom_census)
        for (const Topology& s : dom_census->topologies)
            if (is_continuous(f, s, tX))
                o.require(is_finer(s, direct), "continuous S not finer at " + where);
}

Outcome subspace_agreement()
{
    Outcome o;
    std::size_t cases = 0;
    for (const auto& census : census_up_to(3))
        for (const Topology& t : census.topologies)
            for (const auto& y : all_subsets(t.carrier())) {
                check_subspace(o, t, y);
                ++cases;
            }
    if (o.pass)
        o.detail = std::to_string(cases) + " (t, Y) pairs";
    return o;
}

Outcome representative_maximality()
{
    Outcome o;
    for (const auto& census : census_up_to(3))
        for (const Topology& t : census.topologies)
            for (const auto& y : all_subsets(t.carrier()))
                check_maximality(o, t, y);

    // Sierpiński space, Y = {1}, V = ∅: both ∅ and {0} have trace ∅.
    const Topology sierpinski = validate_masks(Carrier(2), std::vector<Mask>{0, 1, 3}).value();
    std::size_t reps = 0;
    for (Mask w : sierpinski.open_masks())
        reps += (w & 0b10u) == 0;
    o.require(reps >= 2, "Sierpinski regression has fewer than two representatives");
    o.require(maximal_open_representative(sierpinski, PointSet(Carrier(2), 0b10), PointSet(Carrier(2), 0))
                  == PointSet(Carrier(2), 0b01),
              "Sierpinski U*(empty) != {0}");
    if (o.pass)
        o.detail = "exhaustive n<=3; Sierpinski V={} has " + std::to_string(reps) + " representatives";
    return o;
}

bool sweep_tables(unsigned n, Outcome& o)
{
    const Carrier c(n);
    std::set<std::vector<Mask>> realized;
    for (const Topology& t : enumerate_brute(n).topologies)
        realized.insert(closure_from_topology(t).table());
    std::vector<Mask> table(c.subset_count(), 0);
    std::size_t accepted = 0;
    for (;;) {
        if (validate_kuratowski_masks(c, table)) {
            ++accepted;
            o.require(realized.count(table) == 1, "accepted table not realized by a topology");
        }
        std::size_t i = 0;
        while (i < table.size() && ++table[i] == c.subset_count())
            table[i++] = 0;
        if (i == table.size())
            break;
    }
    o.require(accepted == realized.size(), "validator accepts " + std::to_string(accepted) + " tables, "
                                               + std::to_string(realized.size()) + " realized");
    return o.pass;
}

Outcome kuratowski_round_trip(bool slow)
{
    Outcome o;
    for (const auto& census : census_up_to(3))
        for (const Topology& t : census.topologies) {
            const ClosureOperator op = closure_from_topology(t);
            const Topology back = topology_from_closure(op);
            o.require(back == t, "topology round trip failed at " + describe(t));
            o.require(closure_from_topology(back) == op, "operator round trip failed at " + describe(t));
        }
    sweep_tables(2, o);
    if (slow)
        sweep_tables(3, o);
    if (o.pass)
        o.detail = slow ? "n<=3 round trips; all 256 tables at n=2; all 8^8 tables at n=3"
                        : "n<=3 round trips; all 256 tables at n=2";
    return o;
}

Outcome initial_agreement()
{
    Outcome o;
    const auto census = census_up_to(3);
    std::size_t cases = 0;
    for (unsigned cod = 0; cod <= 3; ++cod)
        for (const Topology& tX : census[cod].topologies)
            for (unsigned dom = 0; dom <= 3; ++dom)
                for (const auto& f : oracle::all_functions(dom, cod)) {
                    check_initial(o, tX, f, &census[dom]);
                    ++cases;
                }
    if (o.pass)
        o.detail = std::to_string(cases) + " (tX, f) pairs, census oracle for minimality";
    return o;
}

Outcome injective_coincidence()
{
    Outcome o;
    std::size_t cases = 0;
    for (const auto& census : census_up_to(3))
        for (const Topology& t : census.topologies)
            for (const auto& y : all_subsets(t.carrier())) {
                const SubspaceView view = subspace_topology(t, y);
                const FiniteFunction inclusion = view.inclusion();
                o.require(inclusion.is_injective(), "inclusion not injective");
                o.require(initial_topology_direct(t, inclusion) == view.sub(),
                          "initial != subspace at " + describe(t) + " Y=" + to_string(y));
                ++cases;
            }
    if (o.pass)
        o.detail = std::to_string(cases) + " embeddings";
    return o;
}

Outcome census_cross_validation()
{
    Outcome o;
    // Frozen from the first oracle run.
    const std::size_t frozen[] = {1, 1, 4, 29, 355};
    std::string counts;
    for (unsigned n = 0; n <= 4; ++n) {
        const TopologyCensus brute = enumerate_brute(n);
        const TopologyCensus preorder = enumerate_preorder(n);
        o.require(brute.topologies == preorder.topologies, "brute and preorder differ at n=" + std::to_string(n));
        o.require(brute.topologies.size() == frozen[n], "count changed at n=" + std::to_string(n));
        counts += (n ? "," : "") + std::to_string(brute.topologies.size());
    }
    if (o.pass)
        o.detail = "counts " + counts;
    return o;
}

Outcome fuzz_tier()
{
    Outcome o;
    for (std::uint64_t i = 0; i < 1000 && o.pass; ++i) {
        const unsigned n = 5 + static_cast<unsigned>(i % 6);
        const std::uint64_t seed = 0x5eed0000 + i;
        const Topology t = random_topology(n, seed);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        const PointSet y(t.carrier(), static_cast<Mask>(rng() & t.carrier().full_mask()));
        check_subspace(o, t, y);
        check_maximality(o, t, y);

        const unsigned dom = static_cast<unsigned>(rng() % (n + 1));
        std::vector<Point> table(dom);
        for (auto& v : table)
            v = static_cast<Point>(rng() % n);
        check_initial(o, t, FiniteFunction(Carrier(dom), t.carrier(), table), nullptr);
    }
    if (o.pass)
        o.detail = "1000 topologies, n in 5..10";
    return o;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::string emitted_line(const std::string& out)
{
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
        if (line.rfind("emitted: ", 0) == 0)
            return line.substr(9);
    return {};
}

Outcome cli_round_trip()
{
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("fintop_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    };

    std::mt19937_64 rng(8);
    std::size_t files = 0;
    auto round_trip = [&](const std::string& text, auto reparse_equal) {
        const CliRun r = cli_run({"roundtrip", write("rt.json", text)});
        o.require(r.code == cli::kExitPass, "roundtrip exit " + std::to_string(r.code) + " on " + text);
        const std::string emitted = emitted_line(r.out);
        o.require(emitted == text, "roundtrip emitted a different file for " + text);
        o.require(reparse_equal(emitted), "re-parse differs for " + text);
        ++files;
    };
    for (std::uint64_t seed = 0; seed < 100 && o.pass; ++seed) {
        const unsigned n = static_cast<unsigned>(seed % 9);
        const Topology t = random_topology(n, seed);
        round_trip(emit_topology(t), [&](const std::string& e) { return parse_topology(e) == t; });

        const ClosureOperator op = closure_from_topology(t);
        round_trip(emit_operator(op), [&](const std::string& e) {
            const OperatorRecord r = parse_operator_record(e);
            return validate_kuratowski(r.carrier, r.table).value() == op;
        });

        if (n > 0) {
            std::vector<Point> table(rng() % 6);
            for (auto& v : table)
                v = static_cast<Point>(rng() % n);
            const FiniteFunction f(Carrier(static_cast<unsigned>(table.size())), Carrier(n), table);
            round_trip(emit_function(f), [&](const std::string& e) { return parse_function(e) == f; });
        }
    }
    for (const std::string& line : [] {
             std::vector<std::string> lines;
             std::ostringstream out, err;
             cli::run({"census", "3", "--dump"}, out, err);
             std::istringstream in(out.str());
             for (std::string l; std::getline(in, l);)
                 if (!l.empty() && l.front() == '{')
                     lines.push_back(l);
             return lines;
         }())
        o.require(emit_topology(parse_topology(line)) == line, "census dump line does not re-parse: " + line);

    const std::string sierpinski = write("s.json", R"({"n":2,"opens":[[],[0],[0,1]]})");
    const std::string chain = write("c.json", R"({"n":3,"opens":[[],[0],[0,1],[0,1,2]]})");
    const std::vector<std::pair<std::vector<std::string>, int>> contract{
        {{"validate", write("m1.json", R"({"n":2,"opens":[[],[0)")}, cli::kExitInput},
        {{"validate", write("m2.json", R"({"n":2})")}, cli::kExitInput},
        {{"validate", write("m3.json", R"({"n":2,"opens":[[5]]})")}, cli::kExitInput},
        {{"validate", write("m4.json", R"({"n":99,"opens":[]})")}, cli::kExitInput},
        {{"validate", (dir / "missing.json").string()}, cli::kExitInput},
        {{"validate", write("v1.json", R"({"n":2,"opens":[[],[0],[1]]})")}, cli::kExitFail},
        {{"validate", sierpinski}, cli::kExitPass},
        {{"crosscheck", sierpinski, "{5}"}, cli::kExitInput},
        {{"crosscheck", sierpinski, "{1"}, cli::kExitInput},
        {{"crosscheck", sierpinski, "{1}"}, cli::kExitPass},
        {{"initial", chain, write("f1.json", R"({"dom_n":2,"cod_n":3,"table":[0,3]})")}, cli::kExitInput},
        {{"initial", sierpinski, write("f2.json", R"({"dom_n":2,"cod_n":3,"table":[0,2]})")}, cli::kExitInput},
        {{"initial", chain, write("f3.json", R"({"dom_n":2,"cod_n":3,"table":[0,2]})")}, cli::kExitPass},
        {{"closure-check", write("o1.json", R"({"n":2,"table":[[],[0]]})")}, cli::kExitInput},
        {{"closure-check", write("o2.json", R"({"n":2,"table":[[],[1],[1],[0,1]]})")}, cli::kExitFail},
        {{"roundtrip", write("r1.json", R"({"unknown":1})")}, cli::kExitInput},
        {{"census", "9"}, cli::kExitInput},
        {{"census", "6", "--method=preorder"}, cli::kExitInput},
        {{"random", "17"}, cli::kExitInput},
        {{"nonsense"}, cli::kExitInput},
    };
    for (const auto& [args, expected] : contract) {
        const int got = cli_run(args).code;
        o.require(got == expected, "exit " + std::to_string(got) + " (expected " + std::to_string(expected) + ") for "
                                       + args.front() + " " + (args.size() > 1 ? args[1] : ""));
    }
    fs::remove_all(dir);
    if (o.pass)
        o.detail = std::to_string(files) + " files round-tripped; " + std::to_string(contract.size())
                   + " exit-code cases";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--slow")
            slow = true;

    const std::vector<Criterion> criteria{
        {1, "subspace three-way agreement, n<=3", 5.0, subspace_agreement},
        {2, "representative maximality, n<=3", 5.0, representative_maximality},
        {3, "Kuratowski round trip and validator sweep", slow ? 60.0 : 5.0,
         [slow] { return kuratowski_round_trip(slow); }},
        {4, "initial topology agreement, continuity, minimality", 30.0, initial_agreement},
        {5, "injective coincidence, n<=3", 5.0, injective_coincidence},
        {6, "census cross-validation, n<=4", 10.0, census_cross_validation},
        {7, "fuzz tier, 1000 topologies", 60.0, fuzz_tier},
        {8, "CLI round trip and exit codes", 30.0, cli_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && seconds > c.limit_seconds) {
            o.pass = false;
            o.detail += " (over the time limit)";
        }
        failures += !o.pass;
        std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs) %s\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), seconds, c.limit_seconds, o.detail.c_str());
    }
    std::printf("%s: %d of %zu criteria passed\n", failures ? "FAILED" : "OK",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
