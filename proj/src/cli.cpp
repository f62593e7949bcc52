#include "fintop/cli.hpp"

#include "fintop/census.hpp"
#include "fintop/closure.hpp"
#include "fintop/error.hpp"
#include "fintop/initial.hpp"
#include "fintop/io.hpp"
#include "fintop/subspace.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

namespace fintop::cli {

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

void RunReport::render(std::ostream& out) const
{
    out << "command: " << command << '\n';
    for (const auto& [path, digest] : inputs)
        out << "input: " << path << " sha256=" << digest << '\n';
    for (const auto& line : details)
        out << line << '\n';
    out << "verdict: " << (verdict == Verdict::Pass ? "pass" : "fail") << '\n';
}

namespace {

// Input problems surface as fintop::Error subclasses; anything else is a bug
// in the math and is reported as a failed check.
std::string read_input(RunReport& report, const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    report.inputs.emplace_back(path, sha256_hex(bytes));
    return bytes;
}

template <class Parse>
auto parse_file(const std::string& path, const std::string& bytes, Parse parse)
{
    try {
        return parse(bytes);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string ok(bool b)
{
    return b ? "ok" : "FAIL";
}

std::string topology_line(const Topology& t)
{
    return emit_topology(t);
}

RunReport cmd_validate(const std::string& path)
{
    RunReport report{"validate", {}, Verdict::Pass, {}};
    const std::string bytes = read_input(report, path);
    const TopologyRecord record = parse_file(path, bytes, parse_topology_record);
    auto t = validate(record.carrier, record.opens);
    if (t) {
        report.details.push_back("axioms: ok");
        report.details.push_back("topology: " + emit_topology(t.value()));
    } else {
        report.fail();
        for (const auto& line : t.report().lines())
            report.details.push_back("violation: " + line);
    }
    return report;
}

RunReport cmd_crosscheck(const std::string& path, const std::string& subset)
{
    RunReport report{"crosscheck", {}, Verdict::Pass, {}};
    const std::string bytes = read_input(report, path);
    const Topology t = parse_file(path, bytes, parse_topology);
    PointSet y;
    try {
        y = parse_point_set(t.carrier(), subset);
    } catch (const Error& e) {
        throw Error("subset '" + subset + "': " + e.what());
    }
    report.details.push_back("Y: " + to_string(y));

    try {
        const SubspaceView direct = subspace_topology(t, y);
        const CanonicalSubspace canonical = subspace_topology_canonical(t, y);
        const SubspaceView via_closure = subspace_via_closure(t, y);
        report.details.push_back("direct: " + topology_line(direct.sub()));
        report.details.push_back("canonical: " + topology_line(canonical.view.sub()));
        report.details.push_back("closure: " + topology_line(via_closure.sub()));

        const bool agree = direct.sub() == canonical.view.sub() && direct.sub() == via_closure.sub();
        report.details.push_back("agreement: " + ok(agree));

        bool maximal = true;
        for (Mask u : t.open_masks()) {
            const PointSet v(t.carrier(), u & y.mask());
            const PointSet rep = maximal_open_representative(t, y, v);
            maximal = maximal && t.is_open(rep) && intersect(rep, y) == v
                      && PointSet(t.carrier(), u).is_subset_of(rep);
        }
        report.details.push_back("maximality: " + ok(maximal));

        for (const auto& line : canonical.certificate.lines())
            report.details.push_back("certificate: " + line);
        if (!agree || !maximal || !canonical.certificate.holds())
            report.fail();
    } catch (const std::logic_error& e) {
        report.details.push_back(std::string("check failed: ") + e.what());
        report.fail();
    }
    return report;
}

RunReport cmd_initial(const std::string& topology_path, const std::string& function_path)
{
    RunReport report{"initial", {}, Verdict::Pass, {}};
    const std::string tbytes = read_input(report, topology_path);
    const std::string fbytes = read_input(report, function_path);
    const Topology tX = parse_file(topology_path, tbytes, parse_topology);
    const FiniteFunction f = parse_file(function_path, fbytes, parse_function);
    if (f.cod() != tX.carrier())
        throw CarrierMismatch("function codomain has " + std::to_string(f.cod().size())
                              + " points but the topology carrier has " + std::to_string(tX.carrier().size()));

    try {
        const Topology direct = initial_topology_direct(tX, f);
        const Topology via_image = initial_topology_via_image(tX, f);
        const Topology via_closure = initial_topology_via_closure(tX, f);
        report.details.push_back("direct: " + topology_line(direct));
        report.details.push_back("via-image: " + topology_line(via_image));
        report.details.push_back("via-closure: " + topology_line(via_closure));

        const bool agree = direct == via_image && direct == via_closure;
        const bool continuous = is_continuous(f, direct, tX);
        const WeakestVerdict weakest = verify_weakest(tX, f, direct);
        report.details.push_back("agreement: " + ok(agree));
        report.details.push_back("continuity: " + ok(continuous));
        report.details.push_back(weakest.describe());
        report.details.push_back("topology: " + topology_line(direct));
        if (!agree || !continuous || !weakest.holds)
            report.fail();
    } catch (const std::logic_error& e) {
        report.details.push_back(std::string("check failed: ") + e.what());
        report.fail();
    }
    return report;
}

// Classifies every raw table on n points and compares the accepted set with
// the closure operators of the census topologies.
void sweep_validator(RunReport& report, unsigned n)
{
    const Carrier c(n);
    std::set<std::vector<Mask>> realized;
    for (const Topology& t : enumerate_brute(n).topologies)
        realized.insert(closure_from_topology(t).table());

    const std::size_t entries = c.subset_count();
    const std::size_t values = c.subset_count();
    std::vector<Mask> table(entries, 0);
    std::size_t total = 0;
    std::size_t accepted = 0;
    bool sound = true;
    for (;;) {
        ++total;
        if (validate_kuratowski_masks(c, table)) {
            ++accepted;
            sound = sound && realized.count(table) == 1;
        }
        std::size_t i = 0;
        while (i < entries && ++table[i] == values)
            table[i++] = 0;
        if (i == entries)
            break;
    }
    sound = sound && accepted == realized.size();
    report.details.push_back("sweep n=" + std::to_string(n) + " tables=" + std::to_string(total)
                             + " accepted=" + std::to_string(accepted) + " realized=" + std::to_string(realized.size())
                             + " " + ok(sound));
    if (!sound)
        report.fail();
}

RunReport cmd_closure_check(const std::string& path, bool slow)
{
    RunReport report{"closure-check", {}, Verdict::Pass, {}};
    if (path.empty()) {
        sweep_validator(report, 2);
        if (slow)
            sweep_validator(report, 3);
        return report;
    }

    const std::string bytes = read_input(report, path);
    const OperatorRecord record = parse_file(path, bytes, parse_operator_record);
    auto op = parse_file(path, bytes, [&](const std::string&) { return validate_kuratowski(record.carrier, record.table); });
    if (!op) {
        report.fail();
        for (const auto& line : op.report().lines())
            report.details.push_back("violation: " + line);
        return report;
    }
    report.details.push_back("axioms: ok");
    try {
        const Topology t = topology_from_closure(op.value());
        const bool round_trip = closure_from_topology(t) == op.value();
        report.details.push_back("roundtrip: " + ok(round_trip));
        report.details.push_back("topology: " + emit_topology(t));
        if (!round_trip)
            report.fail();
    } catch (const std::logic_error& e) {
        report.details.push_back(std::string("check failed: ") + e.what());
        report.fail();
    }
    return report;
}

RunReport cmd_roundtrip(const std::string& path)
{
    RunReport report{"roundtrip", {}, Verdict::Pass, {}};
    const std::string bytes = read_input(report, path);
    const FileKind kind = parse_file(path, bytes, detect_file_kind);

    std::string emitted;
    bool reparsed = false;
    switch (kind) {
    case FileKind::Topology: {
        const Topology t = parse_file(path, bytes, parse_topology);
        emitted = emit_topology(t);
        reparsed = parse_topology(emitted) == t;
        const bool kuratowski = topology_from_closure(closure_from_topology(t)) == t;
        report.details.push_back("kind: topology");
        report.details.push_back("kuratowski: " + ok(kuratowski));
        if (!kuratowski)
            report.fail();
        break;
    }
    case FileKind::Operator: {
        const OperatorRecord record = parse_file(path, bytes, parse_operator_record);
        auto op = parse_file(path, bytes, [&](const std::string&) { return validate_kuratowski(record.carrier, record.table); });
        if (!op)
            throw PreconditionError(path + ": not a closure operator: " + op.report().lines().front());
        emitted = emit_operator(op.value());
        const OperatorRecord again = parse_operator_record(emitted);
        reparsed = validate_kuratowski(again.carrier, again.table).value() == op.value();
        const bool kuratowski = closure_from_topology(topology_from_closure(op.value())) == op.value();
        report.details.push_back("kind: operator");
        report.details.push_back("kuratowski: " + ok(kuratowski));
        if (!kuratowski)
            report.fail();
        break;
    }
    case FileKind::Function: {
        const FiniteFunction f = parse_file(path, bytes, parse_function);
        emitted = emit_function(f);
        reparsed = parse_function(emitted) == f;
        report.details.push_back("kind: function");
        break;
    }
    }
    report.details.push_back("emitted: " + emitted);
    report.details.push_back("reparse: " + ok(reparsed));
    if (!reparsed)
        report.fail();
    return report;
}

RunReport cmd_census(unsigned n, const std::string& method_name, bool dump, std::ostream& err)
{
    const CensusMethod method = parse_census_method(method_name);
    if (n > census_limit(method))
        throw LimitExceeded("census --method=" + method_name + " supports n <= "
                            + std::to_string(census_limit(method)));
    RunReport report{"census", {}, Verdict::Pass, {}};
    const auto start = std::chrono::steady_clock::now();
    const TopologyCensus census = enumerate(n, method);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    err << "# wall-time-ms: " << std::fixed << std::setprecision(1) << elapsed.count() << '\n';

    report.details.push_back("n\tmethod\tcount");
    report.details.push_back(std::to_string(n) + "\t" + method_name + "\t" + std::to_string(census.topologies.size()));
    if (dump)
        for (const Topology& t : census.topologies)
            report.details.push_back(emit_topology(t));
    return report;
}

RunReport cmd_random(unsigned n, std::uint64_t seed)
{
    RunReport report{"random", {}, Verdict::Pass, {}};
    report.details.push_back(emit_topology(random_topology(n, seed)));
    return report;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite topology verification: subspace and initial topologies, closure operators, census"};
    app.name("fintop");
    app.require_subcommand(1);

    std::string path, second;
    unsigned n = 0;
    std::string method = "brute";
    std::uint64_t seed = 0;
    bool dump = false;
    bool slow = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the topology axioms on a topology file");
    validate_cmd->add_option("topology", path, "Topology file")->required();

    auto* crosscheck_cmd = app.add_subcommand("crosscheck", "Compare the three subspace constructions on Y");
    crosscheck_cmd->add_option("topology", path, "Topology file")->required();
    crosscheck_cmd->add_option("subset", second, "Y as an element list, e.g. {1,2}")->required();

    auto* initial_cmd = app.add_subcommand("initial", "Compare the three initial-topology constructions");
    initial_cmd->add_option("topology", path, "Topology file on the codomain")->required();
    initial_cmd->add_option("function", second, "Function file")->required();

    auto* closure_cmd = app.add_subcommand("closure-check",
                                           "Validate an operator file, or sweep all raw tables when no file is given");
    closure_cmd->add_option("operator", path, "Operator file");
    closure_cmd->add_flag("--slow", slow, "Also sweep all 8^8 tables on three points");

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Re-emit a topology, operator or function file and re-parse it");
    roundtrip_cmd->add_option("file", path, "Input file")->required();

    auto* census_cmd = app.add_subcommand("census", "Count all labeled topologies on n points");
    census_cmd->add_option("n", n, "Carrier size")->required();
    census_cmd->add_option("--method", method, "brute or preorder")->check(CLI::IsMember({"brute", "preorder"}));
    census_cmd->add_flag("--dump", dump, "Print every topology, one per line");

    auto* random_cmd = app.add_subcommand("random", "Emit a seeded random topology");
    random_cmd->add_option("n", n, "Carrier size")->required()->check(CLI::Range(0u, Carrier::kMaxSize));
    random_cmd->add_option("--seed", seed, "Generator seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        RunReport report;
        if (*validate_cmd)
            report = cmd_validate(path);
        else if (*crosscheck_cmd)
            report = cmd_crosscheck(path, second);
        else if (*initial_cmd)
            report = cmd_initial(path, second);
        else if (*closure_cmd)
            report = cmd_closure_check(path, slow);
        else if (*roundtrip_cmd)
            report = cmd_roundtrip(path);
        else if (*census_cmd)
            report = cmd_census(n, method, dump, err);
        else
            report = cmd_random(n, seed);
        report.render(out);
        return report.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace fintop::cli
