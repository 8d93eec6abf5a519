#include "modann/annclass.hpp"
#include "modann/anngraph.hpp"
#include "modann/catalog.hpp"
#include "modann/exec.hpp"

#include <gtest/gtest.h>

using namespace modann;

namespace {

std::vector<Module> kernelCorpus() {
    std::vector<Module> out = abelianGroupsUpTo(256);
    for (Int n = 2; n <= 60; ++n)
        for (auto& m : divisorChainModules(n, 256)) out.push_back(std::move(m));
    return out;
}

bool sameClassification(const AnnClassification& a, const AnnClassification& b) {
    return a.element == b.element && a.colon == b.colon && a.isFull == b.isFull && a.isSemi == b.isSemi &&
           a.isStar == b.isStar && a.witness == b.witness;
}

class SerialParallel : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override {
        saved_ = threadCount();
        setThreadCount(GetParam());
    }
    void TearDown() override { setThreadCount(saved_); }

private:
    int saved_ = 0;
};

} // namespace

TEST_P(SerialParallel, ColonTable) {
    for (const auto& m : kernelCorpus()) ASSERT_EQ(colonTable(m, Exec::Serial), colonTable(m, Exec::Parallel));
}

TEST_P(SerialParallel, ClassifyAll) {
    for (const auto& m : kernelCorpus()) {
        const auto s = classifyAll(m, Exec::Serial);
        const auto p = classifyAll(m, Exec::Parallel);
        ASSERT_EQ(s.size(), p.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            ASSERT_TRUE(sameClassification(s[i], p[i])) << m.spec() << " " << s[i].element.str();
    }
}

TEST_P(SerialParallel, AnnihilationEdges) {
    for (const auto& m : kernelCorpus()) {
        const auto colons = colonTable(m);
        const Ideal ann = annihilatorOfModule(m);
        ASSERT_EQ(annihilationEdges(colons, ann, Exec::Serial), annihilationEdges(colons, ann, Exec::Parallel));
        for (auto kind : {GraphKind::Full, GraphKind::Star})
            ASSERT_EQ(exportGraph(buildAnnGraph(m, kind, Exec::Serial), GraphFormat::Json),
                      exportGraph(buildAnnGraph(m, kind, Exec::Parallel), GraphFormat::Json));
    }
}

INSTANTIATE_TEST_SUITE_P(Threads, SerialParallel, ::testing::Values(1, 2, 4));
