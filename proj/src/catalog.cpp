#include "modann/catalog.hpp"

#include "modann/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace modann {

std::vector<std::vector<int>> partitionsOf(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxPart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, maxPart); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Module> abelianGroupsOfOrder(Int n, const Ring& ring) {
    const auto f = factorize(n);
    std::vector<std::vector<Int>> acc{{}};
    for (const auto& [p, e] : f.factors()) {
        std::vector<std::vector<Int>> next;
        for (const auto& prefix : acc)
            for (const auto& lambda : partitionsOf(e)) {
                auto factors = prefix;
                for (int part : lambda) factors.push_back(checkedPow(p, part));
                next.push_back(std::move(factors));
            }
        acc = std::move(next);
    }
    std::vector<Module> out;
    for (auto& factors : acc) out.push_back(Module::finite(ring, std::move(factors)));
    return out;
}

std::vector<Module> abelianGroupsUpTo(Int maxOrder, const Ring& ring) {
    std::vector<Module> out;
    for (Int n = 2; n <= maxOrder; ++n)
        for (auto& m : abelianGroupsOfOrder(n, ring)) out.push_back(std::move(m));
    return out;
}

std::vector<Module> pGroupsUpTo(Int p, Int maxOrder) {
    if (!isPrime(p)) throw InvalidInput("pGroupsUpTo: " + std::to_string(p) + " is not prime");
    std::vector<Module> out;
    Int order = p;
    while (order <= maxOrder) {
        for (auto& m : abelianGroupsOfOrder(order)) out.push_back(std::move(m));
        if (order > maxOrder / p) break;
        order *= p;
    }
    return out;
}

std::vector<Module> divisorChainModules(Int n, Int maxOrder) {
    const Ring ring = Ring::modular(n);
    const auto divs = divisorsOf(n);
    std::vector<std::vector<Int>> chains;
    std::vector<Int> cur;
    std::function<void(Int, Int)> rec = [&](Int last, Int order) {
        if (!cur.empty()) chains.push_back(cur);
        for (Int d : divs) {
            if (d < 2 || d % last != 0 || order > maxOrder / d) continue;
            cur.push_back(d);
            rec(d, order * d);
            cur.pop_back();
        }
    };
    rec(1, 1);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        Int oa = 1, ob = 1;
        for (Int d : a) oa *= d;
        for (Int d : b) ob *= d;
        if (oa != ob) return oa < ob;
        return a < b;
    });
    std::vector<Module> out;
    for (auto& c : chains) out.push_back(Module::finite(ring, std::move(c)));
    return out;
}

std::vector<CorpusEntry> defaultCorpus() {
    std::vector<CorpusEntry> out;
    for (const auto& m : abelianGroupsUpTo(64)) out.push_back({"Z", m.spec()});
    for (Int n = 2; n <= 60; ++n)
        for (const auto& m : divisorChainModules(n, 64)) out.push_back({m.ring().spec(), m.spec()});
    return out;
}

std::vector<CorpusEntry> parseCorpusJson(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("corpus must be a JSON array");
    std::vector<CorpusEntry> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("ring") || !item.contains("module") ||
            !item["ring"].is_string() || !item["module"].is_string())
            throw InvalidInput("corpus entries must be objects with string fields 'ring' and 'module'");
        out.push_back({item["ring"].get<std::string>(), item["module"].get<std::string>()});
    }
    return out;
}

std::string corpusToJson(const std::vector<CorpusEntry>& corpus) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& e : corpus) j.push_back({{"ring", e.ring}, {"module", e.module}});
    return j.dump(1) + "\n";
}

} // namespace modann
