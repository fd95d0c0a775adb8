#include "monopath/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monopath/hyper.hpp"
#include "monopath/json_io.hpp"

namespace monopath {

namespace {

using nlohmann::json;

long long resolveHorizon(long long cliValue, long long prefix) {
    if (cliValue > 0) return cliValue;
    if (const char* env = std::getenv("MONOPATH_HORIZON")) {
        long long h = std::atoll(env);
        if (h > 0) return h;
    }
    return defaultHorizonFor(prefix);
}

Oracle makeOracle(const Coloring& c, const std::string& mode, long long horizon) {
    if (mode == "scan") return Oracle(c, OracleMode::Scan, horizon);
    if (mode == "exact") {
        Oracle o(c, OracleMode::Exact, horizon);
        if (!o.exactCapable())
            throw CLI::ValidationError("--oracle exact needs a block-structured family");
        return o;
    }
    return Oracle(c, OracleMode::Exact, horizon);  // auto: exact when available
}

VertexSet parseClassName(const std::string& name, const Coloring& coloring, long long prefix,
                         const Oracle& oracle) {
    if (name == "all") return VertexSet::all();
    if (name == "evens")
        return VertexSet::fromPredicate("evens", [](Vertex v) { return v % 2 == 0; });
    if (name == "odds")
        return VertexSet::fromPredicate("odds", [](Vertex v) { return v % 2 == 1; });
    if (coloring.tag() == "counterexample" && name.size() == 1 && name[0] >= 'A' && name[0] <= 'D') {
        static const std::string blockNames = "BCDA";  // block ids 0..3
        int id = static_cast<int>(blockNames.find(name[0]));
        return VertexSet::exactParts(name, coloring.blocks(), {id});
    }
    if (name.rfind("class:", 0) == 0) {
        Color i = std::stoi(name.substr(6));
        return classify(coloring, prefix, oracle).classOf(i);
    }
    if (name.rfind("set:", 0) == 0) {
        std::vector<Vertex> vs;
        std::stringstream ss(name.substr(4));
        std::string item;
        while (std::getline(ss, item, '+'))
            if (!item.empty()) vs.push_back(std::stoll(item));
        return VertexSet::fromList(name, std::move(vs));
    }
    throw CLI::ValidationError("unknown class name: " + name);
}

std::vector<std::string> splitCommas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

void emitPartition(const Coloring& coloring, const PartitionResult& res,
                   const VerificationReport& rep, const std::string& format, std::ostream& out) {
    if (format == "text") {
        out << "prefix " << res.prefix << ", " << res.pieces.size() << " piece(s), leftover "
            << res.leftover.size() << "\n";
        for (std::size_t i = 0; i < res.pieces.size(); ++i) {
            auto vs = pieceVertices(res.pieces[i]);
            out << "  piece " << i << " color " << pieceColor(res.pieces[i]) << " size "
                << vs.size() << "\n";
        }
        out << "verification: " << rep.summary() << "\n";
        return;
    }
    json j{{"partition", toJson(res)}, {"verification", toJson(rep)},
           {"coloring", coloring.tag()}};
    out << j.dump(2) << "\n";
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monochromatic path partitions of lazily colored complete graphs"};
    app.require_subcommand(1);

    std::string coloringSpec, mode = "rado", format = "json", oracleMode = "auto";
    std::string inputPath, hostSpec, ladderSpec, adamSpec = "empty", reportFormat = "json";
    std::string dumpFormat = "text";
    long long prefix = 0, horizon = 0, rounds = 0, dumpN = 0;
    int rOpt = 0, kOpt = 0, powerOpt = 2;
    int sweepN = 6, sweepK = 2, samples = 0, shards = 1, shard = 0;
    std::uint64_t seed = 0;

    auto addColoring = [&](CLI::App* cmd) {
        cmd->add_option("--coloring", coloringSpec, "family spec, e.g. constant:0, seeded-random:2,2,42")
            ->required();
        cmd->add_option("--r", rOpt, "number of colors override");
        cmd->add_option("--k", kOpt, "uniformity override");
    };
    auto buildColoring = [&]() {
        return parseColoringSpec(coloringSpec,
                                 rOpt > 0 ? std::optional<int>(rOpt) : std::nullopt,
                                 kOpt > 0 ? std::optional<int>(kOpt) : std::nullopt);
    };

    auto* partition = app.add_subcommand("partition", "build and verify a partition");
    addColoring(partition);
    partition->add_option("--mode", mode, "rado|tight|tightcycle|power|squares");
    partition->add_option("--prefix", prefix, "certify coverage of [0,prefix)")->required();
    partition->add_option("--horizon", horizon, "scan horizon (default 10*prefix+1000)");
    partition->add_option("--power", powerOpt, "path power for --mode power");
    partition->add_option("--oracle", oracleMode, "auto|exact|scan");
    partition->add_option("--format", format, "json|text");

    auto* verify = app.add_subcommand("verify", "re-verify a partition JSON");
    addColoring(verify);
    verify->add_option("--input", inputPath, "partition JSON file, - for stdin")->required();
    verify->add_option("--prefix", prefix, "override the prefix before verifying");

    auto* classifyCmd = app.add_subcommand("classify", "vertex classification");
    addColoring(classifyCmd);
    classifyCmd->add_option("--prefix", prefix, "classify [0,prefix)")->required();
    classifyCmd->add_option("--horizon", horizon, "density horizon");
    classifyCmd->add_option("--oracle", oracleMode, "auto|exact|scan");

    auto* game = app.add_subcommand("game", "covering games");
    auto* gamePlay = game->add_subcommand("play", "play one game and audit the win conditions");
    gamePlay->add_option("--host", hostSpec, "coloring spec plus host color, e.g. constant:0:0")
        ->required();
    gamePlay->add_option("--k", powerOpt, "path power")->required();
    gamePlay->add_option("--ladder", ladderSpec, "comma list of W_0..W_k class names")->required();
    gamePlay->add_option("--adam", adamSpec, "empty|random:SEED|min-stealer|replay");
    gamePlay->add_option("--rounds", rounds, "round budget")->required();
    gamePlay->add_option("--prefix", prefix, "audit prefix")->required();
    gamePlay->add_option("--horizon", horizon, "scan horizon");
    gamePlay->add_option("--oracle", oracleMode, "auto|exact|scan");
    gamePlay->add_option("--r", rOpt, "number of colors override");

    auto* counterexample = app.add_subcommand("counterexample", "certify the sharpness core");
    counterexample->add_option("--report", reportFormat, "json|text");

    auto* sweep = app.add_subcommand("sweep", "bulk instance sweeps");
    auto* sweepPok = sweep->add_subcommand("pokrovskiy", "finite cover search over many colorings");
    sweepPok->add_option("--n", sweepN, "vertex count")->required();
    sweepPok->add_option("--k", sweepK, "power parameter");
    sweepPok->add_option("--samples", samples, "seeded instances instead of the exhaustive sweep");
    sweepPok->add_option("--seed", seed, "seed for --samples");
    sweepPok->add_option("--shards", shards, "split the instance space");
    sweepPok->add_option("--shard", shard, "this worker's shard index");

    auto* coloringCmd = app.add_subcommand("coloring", "coloring utilities");
    auto* dump = coloringCmd->add_subcommand("dump", "write a finite prefix of a coloring");
    addColoring(dump);
    dump->add_option("--n", dumpN, "universe size")->required();
    dump->add_option("--format", dumpFormat, "text|json");

    std::vector<char*> argv;
    std::vector<std::string> storage;
    storage.push_back("monopath");
    for (const auto& a : args) storage.push_back(a);
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 3;
    }

    try {
        if (partition->parsed()) {
            Coloring coloring = buildColoring();
            long long h = resolveHorizon(horizon, prefix);
            Oracle oracle = makeOracle(coloring, oracleMode, h);
            PartitionResult res;
            if (mode == "rado")
                res = radoPartition(coloring, prefix, oracle);
            else if (mode == "tight")
                res = tightPathPartition(coloring, prefix, oracle);
            else if (mode == "tightcycle")
                res = tightCyclePartition(coloring, prefix, oracle);
            else if (mode == "power")
                res = powerPartition(coloring, powerOpt, prefix, oracle);
            else if (mode == "squares")
                res = fourSquarePartition(coloring, prefix, oracle);
            else
                throw CLI::ValidationError("unknown mode: " + mode);
            VerificationReport rep = verifyPartition(coloring, res);
            emitPartition(coloring, res, rep, format, out);
            return rep.ok ? 0 : 1;
        }
        if (verify->parsed()) {
            Coloring coloring = buildColoring();
            json j;
            if (inputPath == "-") {
                j = json::parse(std::cin);
            } else {
                std::ifstream in(inputPath);
                if (!in) throw ParseError("cannot open " + inputPath);
                j = json::parse(in);
            }
            if (j.contains("partition")) j = j["partition"];
            PartitionResult res = partitionFromJson(j);
            if (prefix > 0) res.prefix = prefix;
            VerificationReport rep = verifyPartition(coloring, res);
            out << toJson(rep).dump(2) << "\n";
            return rep.ok ? 0 : 1;
        }
        if (classifyCmd->parsed()) {
            Coloring coloring = buildColoring();
            long long h = resolveHorizon(horizon, prefix);
            Oracle oracle = makeOracle(coloring, oracleMode, h);
            Classification cls = classify(coloring, prefix, oracle);
            out << classificationJson(cls, prefix).dump(2) << "\n";
            return 0;
        }
        if (gamePlay->parsed()) {
            auto cut = hostSpec.rfind(':');
            if (cut == std::string::npos) throw CLI::ValidationError("--host needs spec:color");
            Coloring coloring = parseColoringSpec(
                hostSpec.substr(0, cut), rOpt > 0 ? std::optional<int>(rOpt) : std::nullopt,
                std::nullopt);
            Color hostColor = std::stoi(hostSpec.substr(cut + 1));
            long long h = resolveHorizon(horizon, prefix);
            Oracle oracle = makeOracle(coloring, oracleMode, h);
            GameSpec spec;
            spec.coloring = coloring;
            spec.hostColor = hostColor;
            spec.power = powerOpt;
            for (const auto& name : splitCommas(ladderSpec))
                spec.ladder.push_back(parseClassName(name, coloring, prefix, oracle));
            if (static_cast<int>(spec.ladder.size()) != spec.power + 1)
                throw CLI::ValidationError("--ladder needs k+1 classes");
            AdamStrategy adam = adamEmpty();
            if (adamSpec.rfind("random:", 0) == 0)
                adam = adamRandomSets(std::stoull(adamSpec.substr(7)), 3, std::max<Vertex>(prefix * 5, 50));
            else if (adamSpec == "min-stealer")
                adam = adamMinimumStealer(spec.ladder[0], h);
            else if (adamSpec == "replay")
                adam = adamReplayAttacker();
            else if (adamSpec != "empty")
                throw CLI::ValidationError("unknown adam strategy: " + adamSpec);
            GameTranscript t = playGame(spec, adam, rounds, oracle);
            WinAudit audit = auditTranscript(spec, t, prefix);
            json j{{"transcript", toJson(t)},
                   {"audit",
                    json{{"coverOk", audit.coverOk},
                         {"pathOk", audit.pathOk},
                         {"pairsOk", audit.pairsOk},
                         {"won", audit.won()},
                         {"problems", audit.problems}}}};
            out << j.dump(2) << "\n";
            return audit.won() ? 0 : 1;
        }
        if (counterexample->parsed()) {
            CounterexampleReport rep = counterexampleCheck();
            if (reportFormat == "text") {
                out << "two-square cover of the nine specials: " << (rep.twoSquareCover ? "FOUND (unexpected)" : "impossible")
                    << "\n";
                out << "intersection bounds: " << (rep.boundsAvoidingD && rep.boundsThroughD ? "hold" : "VIOLATED")
                    << "\n";
            } else {
                out << toJson(rep).dump(2) << "\n";
            }
            return rep.ok() ? 0 : 1;
        }
        if (sweepPok->parsed()) {
            SweepOutcome o = samples > 0 ? sweepPokrovskiySeeded(sweepN, sweepK, samples, seed)
                                         : sweepPokrovskiyExhaustive(sweepN, sweepK, shards, shard);
            out << json{{"instances", o.instances}, {"alarms", o.alarms}}.dump(2) << "\n";
            return o.alarms == 0 ? 0 : 1;
        }
        if (dump->parsed()) {
            Coloring coloring = buildColoring();
            if (dumpFormat == "json")
                out << coloringJson(coloring, dumpN).dump(2) << "\n";
            else
                writeColoringText(coloring, dumpN, out);
            return 0;
        }
    } catch (const ExhaustedError& e) {
        json j{{"error", "exhausted"},
               {"context", e.context},
               {"query", e.queryText},
               {"provedEmpty", e.provedEmpty}};
        out << j.dump(2) << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const TwoPathAlarm& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 3;
    }
    err << "no subcommand\n";
    return 3;
}

}  // namespace monopath
