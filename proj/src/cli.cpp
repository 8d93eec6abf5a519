#include "modann/cli.hpp"

#include "modann/annclass.hpp"
#include "modann/anngraph.hpp"
#include "modann/catalog.hpp"
#include "modann/error.hpp"
#include "modann/exec.hpp"
#include "modann/spec.hpp"
#include "modann/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace modann::cli {

namespace {

struct Options {
    std::string ring = "Z";
    std::string module;
    std::vector<std::string> modules;
    std::string x;
    std::string kind = "full";
    std::string format = "dot";
    std::string outPath;
    Int ideal = 0;
    std::string corpus = "default";
    std::string suite = "all";
    std::string family;
    Int p = 0;
    Int maxOrder = 64;
    int threads = 0;
    std::size_t maxElements = 0;
};

std::string joinInts(const std::set<Int>& values) {
    std::string out;
    for (Int v : values) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write '" + path + "'");
    file << text;
    if (!file) throw Error("write to '" + path + "' failed");
}

std::vector<std::string> splitCommas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> parseSuite(const std::string& text) {
    if (text == "all") return allTheoremIds();
    auto ids = splitCommas(text);
    if (ids.empty()) throw InvalidInput("empty --suite");
    for (const auto& id : ids)
        if (std::find(allTheoremIds().begin(), allTheoremIds().end(), id) == allTheoremIds().end())
            throw InvalidInput("unknown theorem id '" + id + "'");
    return ids;
}

std::string classificationTable(const std::vector<AnnClassification>& rows) {
    std::ostringstream out;
    out << "element,colon,full,semi,star,witness\n";
    for (const auto& c : rows) {
        out << '"' << c.element.str() << "\"," << c.colon.str() << ',' << (c.isFull ? "true" : "false") << ','
            << (c.isSemi ? "true" : "false") << ',' << (c.isStar ? "true" : "false") << ",";
        if (c.witness) out << '"' << c.witness->str() << '"';
        out << '\n';
    }
    return out.str();
}

std::string elementSetString(const ElementSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += set[i].str();
    }
    return out + "}";
}

// Builds the command's inputs; every failure here is a usage error.
struct Prepared {
    Ring ring = Ring::integers();
    std::optional<Module> module;
    std::optional<Element> x;
    std::vector<Module> family;
    std::vector<CorpusEntry> corpus;
    std::vector<std::string> suite;
};

} // namespace

std::string colonTableCsv(const std::vector<Module>& modules) {
    std::ostringstream csv;
    std::ostringstream summary;
    csv << "module,element,colon_gen,essential\n";
    for (const auto& module : modules) {
        const ElementIndexer ix(module);
        const auto colons = colonTable(module);
        const auto primes = factorize(module.exponent()).primes();
        std::set<Int> gens;
        std::map<std::vector<int>, std::set<Int>> byValuation;
        for (std::size_t i = 0; i < ix.size(); ++i) {
            const auto& colon = colons[i];
            csv << module.spec() << ",\"" << ix.decode(i).str() << "\"," << colon.gen() << ','
                << (isEssentialIdeal(colon) ? "true" : "false") << '\n';
            gens.insert(colon.gen());
            std::vector<int> v;
            for (Int p : primes) v.push_back(valuation(p, ix.order(i)));
            byValuation[v].insert(colon.gen());
        }
        summary << "# " << module.spec() << " over " << module.ring().spec() << ": colon gens " << joinInts(gens)
                << '\n';
        for (const auto& [v, values] : byValuation) {
            summary << "# " << module.spec() << " order valuations";
            for (std::size_t k = 0; k < primes.size(); ++k) summary << " v" << primes[k] << '=' << v[k];
            summary << " -> " << joinInts(values) << '\n';
        }
    }
    return csv.str() + "\n" + summary.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Colon ideals, annihilator classes and annihilating graphs of finite modules"};
    app.name("modann");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--threads", o.threads, "OpenMP threads for parallel kernels (0 = default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-elements", o.maxElements, "Cap on elements any enumeration may touch");

    auto addRing = [&](CLI::App* sub) { sub->add_option("--ring", o.ring, "Z or Z/<n>")->capture_default_str(); };

    auto* colon = app.add_subcommand("colon", "Colon ideal [x:M] of one element");
    addRing(colon);
    colon->add_option("--module", o.module, "Module spec, e.g. C4+C2")->required();
    colon->add_option("--x", o.x, "Element coordinates a,b,...")->required();

    auto* table = app.add_subcommand("colon-table", "CSV of colon ideals over a family of modules");
    addRing(table);
    table->add_option("--module", o.modules, "Module spec (repeatable)");
    table->add_option("--family", o.family, "Module family: p-groups")->check(CLI::IsMember({"p-groups"}));
    table->add_option("--p", o.p, "Prime for the p-groups family");
    table->add_option("--max-order", o.maxOrder, "Largest group order in the family")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Full/semi/star flags of every element");
    addRing(classify);
    classify->add_option("--module", o.module, "Module spec")->required();
    classify->add_option("--x", o.x, "Classify only this element");

    auto* graph = app.add_subcommand("graph", "Annihilating graph as DOT or JSON");
    addRing(graph);
    graph->add_option("--module", o.module, "Module spec")->required();
    graph->add_option("--kind", o.kind, "full, semi or star")->capture_default_str();
    graph->add_option("--format", o.format, "dot or json")->capture_default_str();
    graph->add_option("--out", o.outPath, "Output path (default stdout)");

    auto* essential = app.add_subcommand("essential", "Whether the ideal (g) is essential");
    addRing(essential);
    essential->add_option("--ideal", o.ideal, "Ideal generator")->required();

    auto* socle = app.add_subcommand("socle", "Socle of the ring, or of a module");
    addRing(socle);
    socle->add_option("--module", o.module, "Module spec");

    auto* verify = app.add_subcommand("verify", "Check every statement over a corpus, JSON lines out");
    verify->add_option("--corpus", o.corpus, "Corpus JSON path or 'default'")->capture_default_str();
    verify->add_option("--suite", o.suite, "Comma-separated check ids or 'all'")->capture_default_str();
    verify->add_option("--out", o.outPath, "Report path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    // Global knobs apply to this invocation only.
    struct Restore {
        int threads = threadCount();
        std::size_t bound = elementBound();
        ~Restore() {
            setThreadCount(threads);
            setElementBound(bound);
        }
    } restore;
    if (o.threads > 0) setThreadCount(o.threads);
    if (o.maxElements > 0) setElementBound(o.maxElements);

    Prepared in;
    try {
        if (!verify->parsed()) in.ring = parseRingSpec(o.ring);
        if (!o.module.empty()) in.module = parseModuleSpec(o.module, in.ring);
        if (!o.x.empty()) {
            in.x = parseElement(o.x);
            if (in.module->isFinite()) {
                checkElement(*in.module, *in.x);
            } else if (in.x->coords.size() != in.module->rank()) {
                throw InvalidInput("element " + in.x->str() + " does not have " +
                                   std::to_string(in.module->rank()) + " coordinates");
            }
        }
        if (table->parsed()) {
            if (o.family.empty() == o.modules.empty())
                throw InvalidInput("colon-table needs either --module or --family");
            for (const auto& spec : o.modules) in.family.push_back(parseModuleSpec(spec, in.ring));
            if (!o.family.empty()) {
                if (!in.ring.isIntegers()) throw InvalidInput("the p-groups family is defined over Z");
                if (!isPrime(o.p)) throw InvalidInput("--p must be a prime");
                if (o.maxOrder < 1) throw InvalidInput("--max-order must be positive");
            }
        }
        if (graph->parsed()) {
            parseGraphKind(o.kind);
            parseGraphFormat(o.format);
        }
        if (verify->parsed()) {
            in.suite = parseSuite(o.suite);
            in.corpus = o.corpus == "default" ? defaultCorpus() : parseCorpusJson(readFile(o.corpus));
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OutOfScope& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }

    try {
        if (colon->parsed()) {
            const Module& m = *in.module;
            out << (m.isFinite() ? colonIdeal(m, *in.x) : symbolicFreeColon(m)).str() << '\n';
        } else if (table->parsed()) {
            if (!o.family.empty()) {
                if (static_cast<std::size_t>(o.maxOrder) > elementBound())
                    throw BoundExceeded("family too large for bound: --max-order " + std::to_string(o.maxOrder) +
                                        " exceeds " + std::to_string(elementBound()) + " elements");
                in.family = pGroupsUpTo(o.p, o.maxOrder);
            }
            out << colonTableCsv(in.family);
        } else if (classify->parsed()) {
            const Module& m = *in.module;
            std::vector<AnnClassification> rows;
            if (in.x)
                rows.push_back(classifyElement(m, *in.x));
            else
                rows = classifyAll(m);
            out << classificationTable(rows);
        } else if (graph->parsed()) {
            const auto g = buildAnnGraph(*in.module, parseGraphKind(o.kind));
            writeOutput(o.outPath, exportGraph(g, parseGraphFormat(o.format)), out);
        } else if (essential->parsed()) {
            out << (isEssentialIdeal(canonicalIdeal(in.ring, o.ideal)) ? "true" : "false") << '\n';
        } else if (socle->parsed()) {
            if (in.module)
                out << elementSetString(socleOfModule(*in.module)) << '\n';
            else
                out << socleOfRing(in.ring).str() << '\n';
        } else if (verify->parsed()) {
            const auto run = runCorpus(in.corpus, in.suite);
            writeOutput(o.outPath, serializeReports(run.reports), out);
            err << "instances=" << in.corpus.size() << " holds=" << run.summary.holds
                << " vacuous=" << run.summary.vacuous << " violations=" << run.summary.violations
                << " skipped=" << run.summary.skipped << '\n';
            return run.clean() ? kOk : kViolation;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }
    return kOk;
}

} // namespace modann::cli
