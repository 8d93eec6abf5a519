#include "modann/catalog.hpp"
#include "modann/error.hpp"
#include "modann/module.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace modann;

namespace {

const Ring kZ = Ring::integers();

Module overZ(std::vector<Int> factors) { return Module::finite(kZ, std::move(factors)); }
Element el(std::vector<Int> c) { return Element{std::move(c)}; }

ElementSet toSet(const std::set<oracle::Vec>& s) {
    ElementSet out;
    for (const auto& v : s) out.push_back(Element{v});
    return out;
}

// Modules used by the oracle sweeps: every abelian group of order <= 64 over
// Z and every divisor-chain module over Z/n, n <= 36, of order <= 64.
std::vector<Module> sweepModules() {
    auto out = abelianGroupsUpTo(64);
    for (Int n = 2; n <= 36; ++n)
        for (auto& m : divisorChainModules(n, 64)) out.push_back(std::move(m));
    return out;
}

} // namespace

TEST(ModuleDesc, Validation) {
    EXPECT_THROW(overZ({1}), InvalidInput);
    EXPECT_THROW(Module::finite(Ring::modular(6), {4}), InvalidInput);
    EXPECT_THROW(Module::freeOfRank(0), InvalidInput);
    EXPECT_NO_THROW(Module::finite(Ring::modular(12), {4, 6}));
    const auto m = overZ({4, 2});
    EXPECT_EQ(m.order(), 8);
    EXPECT_EQ(m.exponent(), 4);
    EXPECT_EQ(m.spec(), "C4+C2");
    EXPECT_EQ(Module::freeOfRank(3).spec(), "F3");
    EXPECT_EQ(overZ({}).spec(), "0");
    EXPECT_THROW(Module::freeOfRank(2).order(), OutOfScope);
}

TEST(EnumerateElements, Examples) {
    const auto e = enumerateElements(overZ({2, 2}));
    EXPECT_EQ(e, (std::vector<Element>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})}));
    EXPECT_EQ(enumerateElements(overZ({4, 2})).size(), 8u);
    EXPECT_THROW(enumerateElements(Module::freeOfRank(2)), OutOfScope);
}

TEST(EnumerateElements, MatchesOracleOrder) {
    for (const auto& m : abelianGroupsUpTo(32)) {
        const auto got = enumerateElements(m);
        const auto want = oracle::elements(m.factors());
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i].coords, want[i]);
    }
}

TEST(ElementBound, ExceedingItIsAnError) {
    const auto saved = elementBound();
    setElementBound(100);
    EXPECT_THROW(enumerateElements(overZ({11, 11})), BoundExceeded);
    EXPECT_NO_THROW(enumerateElements(overZ({10, 10})));
    setElementBound(saved);
}

TEST(ScalarAct, Examples) {
    const auto m = overZ({4, 2});
    EXPECT_EQ(scalarAct(m, 3, el({1, 1})), el({3, 1}));
    EXPECT_EQ(scalarAct(m, 2, el({1, 1})), el({2, 0}));
    EXPECT_EQ(scalarAct(m, 0, el({3, 1})), el({0, 0}));
    EXPECT_EQ(scalarAct(m, -1, el({1, 1})), el({3, 1}));
    EXPECT_EQ(addElements(m, el({3, 1}), el({2, 1})), el({1, 0}));
    EXPECT_EQ(elementOrder(m, el({2, 1})), 2);
    EXPECT_THROW(scalarAct(m, 1, el({4, 0})), InvalidInput);
    EXPECT_THROW(scalarAct(m, 1, el({1})), InvalidInput);
}

TEST(CyclicSubmodule, Examples) {
    const auto m = overZ({4, 2});
    EXPECT_EQ(cyclicSubmodule(m, el({2, 0})), (ElementSet{el({0, 0}), el({2, 0})}));
    EXPECT_EQ(cyclicSubmodule(m, el({1, 1})), (ElementSet{el({0, 0}), el({1, 1}), el({2, 0}), el({3, 1})}));
    EXPECT_EQ(cyclicSubmodule(m, el({0, 0})), (ElementSet{el({0, 0})}));
}

TEST(GeneratedSubmodule, Examples) {
    const auto m = overZ({4, 2});
    EXPECT_EQ(generatedSubmodule(m, {}), (ElementSet{el({0, 0})}));
    const std::vector<Element> gens{el({2, 0}), el({0, 1})};
    EXPECT_EQ(generatedSubmodule(m, gens), (ElementSet{el({0, 0}), el({0, 1}), el({2, 0}), el({2, 1})}));
    const std::vector<Element> one{el({1, 0})};
    EXPECT_EQ(generatedSubmodule(m, one), cyclicSubmodule(m, el({1, 0})));
}

TEST(GeneratedSubmodule, PairsAreClosedSubsets) {
    for (const auto& m : abelianGroupsUpTo(24)) {
        const auto all = enumerateElements(m);
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = 0; j < all.size(); j += 5) {
                const std::vector<Element> gens{all[i], all[j]};
                const auto n = generatedSubmodule(m, gens);
                ASSERT_TRUE(std::is_sorted(n.begin(), n.end()));
                ASSERT_TRUE(isSubmodule(m, n));
                for (const auto& a : n)
                    for (const auto& b : n)
                        ASSERT_TRUE(std::binary_search(n.begin(), n.end(), addElements(m, a, b)));
            }
    }
}

TEST(IsSubmodule, RejectsNonClosedSets) {
    const auto m = overZ({4, 2});
    EXPECT_FALSE(isSubmodule(m, ElementSet{el({0, 0}), el({1, 0})}));
    EXPECT_FALSE(isSubmodule(m, ElementSet{el({2, 0})}));
    EXPECT_TRUE(isSubmodule(m, ElementSet{el({0, 0}), el({2, 0})}));
}

TEST(ColonIdeal, Examples) {
    EXPECT_EQ(colonIdeal(overZ({2, 2}), el({1, 1})), Ideal(kZ, 2));
    const auto homo = overZ({4, 4});
    for (const auto& x : enumerateElements(homo)) EXPECT_EQ(colonIdeal(homo, x), Ideal(kZ, 4)) << x.str();
    const auto m = overZ({4, 2});
    EXPECT_EQ(colonIdeal(m, el({1, 0})), Ideal(kZ, 2));
    EXPECT_EQ(colonIdeal(m, el({0, 1})), Ideal(kZ, 4));
    EXPECT_EQ(colonIdeal(m, el({0, 0})), annihilatorOfModule(m));
    EXPECT_THROW(colonIdeal(Module::freeOfRank(2), el({1, 0})), OutOfScope);
}

TEST(ColonIdealBrute, Examples) {
    const auto z6 = overZ({6});
    EXPECT_EQ(colonIdealBrute(z6, el({2})), Ideal(kZ, 2));
    EXPECT_EQ(colonIdealBrute(z6, el({3})), Ideal(kZ, 3));
    EXPECT_EQ(colonIdealBrute(overZ({2, 3}), el({1, 0})), Ideal(kZ, 3));
}

TEST(ColonIdeal, FastPathMatchesDefinitionOracle) {
    for (const auto& m : sweepModules()) {
        const Int modulus = m.ring().isModular() ? m.ring().modulus() : 0;
        for (const auto& x : enumerateElements(m)) {
            const Int want = oracle::colonGenerator(m.factors(), x.coords, modulus);
            ASSERT_EQ(colonIdeal(m, x).gen(), want) << m.ring().spec() << " " << m.spec() << " " << x.str();
            ASSERT_EQ(colonIdealBrute(m, x).gen(), want) << m.ring().spec() << " " << m.spec() << " " << x.str();
        }
    }
}

TEST(ColonIdeal, Invariants) {
    for (const auto& m : sweepModules()) {
        const Ideal ann = annihilatorOfModule(m);
        const Int bound = m.ring().isModular() ? m.ring().modulus() : m.exponent();
        const auto all = enumerateElements(m);
        for (const auto& x : all) {
            const Ideal c = colonIdeal(m, x);
            ASSERT_EQ(bound % c.gen(), 0);
            ASSERT_TRUE(idealContains(c, ann));
            const bool generates = cyclicSubmodule(m, x).size() == all.size();
            ASSERT_EQ(c.isWhole(), generates) << m.spec() << " " << x.str();
        }
    }
}

TEST(ColonOfSubmodule, Examples) {
    const auto m = overZ({4, 2});
    EXPECT_EQ(colonOfSubmodule(m, ElementSet{el({0, 0})}), Ideal(kZ, 4));
    EXPECT_EQ(colonOfSubmodule(m, enumerateElements(m)), Ideal(kZ, 1));
    EXPECT_EQ(colonOfSubmodule(m, ElementSet{el({0, 0}), el({0, 1}), el({2, 0}), el({2, 1})}), Ideal(kZ, 2));
    EXPECT_THROW(colonOfSubmodule(m, ElementSet{el({0, 0}), el({1, 0})}), InvalidInput);
}

TEST(ColonOfSubmodule, MonotoneInTheSubmodule) {
    for (const auto& m : abelianGroupsUpTo(32)) {
        const auto all = enumerateElements(m);
        for (const auto& x : all)
            for (const auto& y : all) {
                const auto rx = cyclicSubmodule(m, x);
                const std::vector<Element> gens{x, y};
                const auto big = generatedSubmodule(m, gens);
                ASSERT_TRUE(idealContains(colonOfSubmodule(m, big), colonOfSubmodule(m, rx)));
                ASSERT_EQ(colonOfSubmodule(m, rx), colonIdeal(m, x));
            }
    }
}

TEST(Annihilator, Examples) {
    EXPECT_EQ(annihilatorOfModule(overZ({4, 2})), Ideal(kZ, 4));
    EXPECT_EQ(annihilatorOfModule(overZ({2, 2, 2})), Ideal(kZ, 2));
    EXPECT_TRUE(annihilatorOfModule(Module::freeOfRank(2)).isZero());
    EXPECT_EQ(annihilatorOfModule(Module::finite(Ring::modular(12), {4, 2})).gen(), 4);
    EXPECT_TRUE(annihilatorOfModule(Module::finite(Ring::modular(12), {12})).isZero());
}

TEST(SocleOfModule, Examples) {
    EXPECT_EQ(socleOfModule(overZ({4, 2})), (ElementSet{el({0, 0}), el({0, 1}), el({2, 0}), el({2, 1})}));
    EXPECT_EQ(socleOfModule(overZ({6})), enumerateElements(overZ({6})));
    EXPECT_EQ(socleOfModule(overZ({7})), enumerateElements(overZ({7})));
}

TEST(SocleOfModule, EqualsClosureOfMinimalSubmodulesAndIsEssential) {
    for (const auto& m : sweepModules()) {
        const auto soc = socleOfModule(m);
        ASSERT_EQ(soc, toSet(oracle::socleByMinimalSubmodules(m.factors()))) << m.spec();
        ASSERT_TRUE(isEssentialSubmodule(m, soc)) << m.spec();
    }
}

TEST(EssentialSubmodule, Examples) {
    const auto m = overZ({4, 2});
    EXPECT_TRUE(isEssentialSubmodule(m, socleOfModule(m)));
    EXPECT_FALSE(isEssentialSubmodule(m, ElementSet{el({0, 0}), el({2, 0})}));
    EXPECT_TRUE(isEssentialSubmodule(m, enumerateElements(m)));
    EXPECT_THROW(isEssentialSubmodule(m, ElementSet{el({0, 0}), el({1, 0})}), InvalidInput);
}

TEST(IntersectionOfAllCyclics, Examples) {
    EXPECT_EQ(intersectionOfAllCyclics(overZ({8})), (ElementSet{el({0}), el({4})}));
    EXPECT_EQ(intersectionOfAllCyclics(overZ({4, 2})), (ElementSet{el({0, 0})}));
    EXPECT_EQ(intersectionOfAllCyclics(overZ({6})), (ElementSet{el({0})}));
    EXPECT_THROW(intersectionOfAllCyclics(overZ({})), InvalidInput);
}

TEST(IntersectionOfAllCyclics, MatchesDefinition) {
    for (const auto& m : sweepModules())
        ASSERT_EQ(intersectionOfAllCyclics(m), toSet(oracle::intersectionOfCyclics(m.factors()))) << m.spec();
}

TEST(IntersectionOfAllCyclics, CyclicPGroupsHavePElements) {
    for (Int p : {2, 3, 5, 7})
        for (Int q = p; q <= 2000; q *= p)
            EXPECT_EQ(static_cast<Int>(intersectionOfAllCyclics(overZ({q})).size()), p) << q;
}

TEST(SingularSubset, Examples) {
    const auto z4 = Module::finite(Ring::modular(4), {4});
    EXPECT_EQ(singularSubsetOfModule(z4), (ElementSet{el({0}), el({2})}));
    const auto z6 = Module::finite(Ring::modular(6), {6});
    EXPECT_EQ(singularSubsetOfModule(z6), (ElementSet{el({0})}));
    for (const auto& m : abelianGroupsUpTo(24)) EXPECT_EQ(singularSubsetOfModule(m), enumerateElements(m));
}

TEST(SimpleModule, Examples) {
    EXPECT_TRUE(isSimpleModule(overZ({7})));
    EXPECT_FALSE(isSimpleModule(overZ({4})));
    EXPECT_FALSE(isSimpleModule(overZ({2, 2})));
    EXPECT_FALSE(isSimpleModule(overZ({})));
    EXPECT_TRUE(isSimpleModule(Module::finite(Ring::modular(12), {3})));
    EXPECT_FALSE(isSimpleModule(Module::freeOfRank(2)));
}

TEST(CyclicStructure, EverySubmoduleCyclic) {
    EXPECT_TRUE(everySubmoduleCyclic(overZ({8})));
    EXPECT_TRUE(everySubmoduleCyclic(overZ({6})));
    EXPECT_FALSE(everySubmoduleCyclic(overZ({2, 2})));
    EXPECT_FALSE(everySubmoduleCyclic(overZ({4, 2})));
    EXPECT_TRUE(everySubmoduleCyclic(overZ({2, 3})));
    EXPECT_TRUE(isCyclicSubmodule(overZ({4, 2}), cyclicSubmodule(overZ({4, 2}), el({1, 1}))));
    EXPECT_FALSE(isCyclicSubmodule(overZ({4, 2}), socleOfModule(overZ({4, 2}))));
}

TEST(PrimaryDecomposition, SplitsByPrime) {
    const PrimaryDecomposition d(overZ({12, 2}));
    ASSERT_EQ(d.factors().size(), 3u);
    EXPECT_EQ(d.primes(), (std::vector<Int>{2, 3}));
    EXPECT_EQ(d.typeAt(2), (std::vector<int>{2, 1}));
    EXPECT_EQ(d.typeAt(3), (std::vector<int>{1}));
    EXPECT_EQ(d.componentOf(3).size(), 1u);
    EXPECT_EQ(d.project(el({5, 1})), (std::vector<Int>{1, 1, 2}));
}

TEST(SubgroupTypes, Examples) {
    const auto t511 = subgroupTypes(PartitionType({5, 1, 1}));
    const auto it = std::find_if(t511.begin(), t511.end(), [](const auto& t) { return t.parts == std::vector<int>{5, 1}; });
    ASSERT_NE(it, t511.end());
    EXPECT_EQ(it->multiplicity, 2u);

    const auto t1 = subgroupTypes(PartitionType({1}));
    EXPECT_EQ(t1, (std::vector<SubgroupType>{{{1}, 1}, {{}, 1}}));

    const auto t21 = subgroupTypes(PartitionType({2, 1}));
    EXPECT_EQ(t21, (std::vector<SubgroupType>{{{2, 1}, 1}, {{2}, 1}, {{1, 1}, 1}, {{1}, 2}, {{}, 1}}));
}

TEST(SubgroupTypes, TotalMultiplicityIsProductOfPartsPlusOne) {
    for (int total = 1; total <= 8; ++total)
        for (const auto& parts : partitionsOf(total)) {
            std::size_t sum = 0, expected = 1;
            for (const auto& t : subgroupTypes(PartitionType(parts))) sum += t.multiplicity;
            for (int part : parts) expected *= static_cast<std::size_t>(part + 1);
            ASSERT_EQ(sum, expected);
        }
}

TEST(PartitionTypeDesc, Validation) {
    EXPECT_THROW(PartitionType({}), InvalidInput);
    EXPECT_THROW(PartitionType({1, 2}), InvalidInput);
    EXPECT_THROW(PartitionType({2, 0}), InvalidInput);
    EXPECT_EQ(PartitionType({3, 1, 1}).size(), 5);
}
