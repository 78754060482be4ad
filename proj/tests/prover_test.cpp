#include <ramsey_lab/prover.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ramsey_lab;

namespace {

auto lines_of(const std::string & text) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

auto header_of(const std::string & cnf) -> std::string
{
    for (const auto & line : lines_of(cnf))
        if (line.rfind("p ", 0) == 0)
            return line;
    return "";
}

} // namespace

TEST(ComputeRamsey, CycleTriangles)
{
    auto claim = compute_ramsey(3, cycle_template(3, 3), cycle_template(3, 3));
    ASSERT_TRUE(claim.value);
    EXPECT_EQ(*claim.value, 7);
    EXPECT_EQ(claim.provenance, Provenance::search_verified);
    ASSERT_TRUE(claim.witness);
    EXPECT_EQ(claim.witness->n_vertices(), 6);
    EXPECT_FALSE(find_embedding(*claim.witness, Color::red, cycle_template(3, 3)));
    EXPECT_FALSE(find_embedding(*claim.witness, Color::blue, cycle_template(3, 3)));
    ASSERT_EQ(claim.scan.size(), 2u);
    EXPECT_EQ(claim.scan.front().n_vertices, 6);
    EXPECT_EQ(claim.scan.back().status, ArrowingStatus::UNSAT);
}

TEST(ComputeRamsey, PathsAndMixedCycles)
{
    auto pp = compute_ramsey(3, path_template(3, 3), path_template(3, 3));
    ASSERT_TRUE(pp.value);
    EXPECT_EQ(*pp.value, 8);
    auto cc = compute_ramsey(3, cycle_template(3, 4), cycle_template(3, 3));
    ASSERT_TRUE(cc.value);
    EXPECT_EQ(*cc.value, 9);
    EXPECT_EQ(cc.pair_label(), "CC");
}

TEST(ComputeRamsey, BudgetGivesInterval)
{
    auto claim = compute_ramsey(3, cycle_template(3, 4), cycle_template(3, 3), {2, 0});
    EXPECT_FALSE(claim.value);
    EXPECT_EQ(claim.provenance, Provenance::witness_only);
    EXPECT_FALSE(claim.upper);
    EXPECT_GE(claim.lower, 8);
    EXPECT_EQ(claim.scan.back().status, ArrowingStatus::UNKNOWN);
    ASSERT_TRUE(claim.witness);
    EXPECT_EQ(claim.witness->n_vertices(), claim.lower - 1);
    EXPECT_NE(search_embedding(*claim.witness, Color::red, cycle_template(3, 4)).status, SearchStatus::found);
    EXPECT_NE(search_embedding(*claim.witness, Color::blue, cycle_template(3, 3)).status, SearchStatus::found);
}

TEST(ExportDimacs, Headers)
{
    EXPECT_EQ(header_of(export_dimacs(3, 6, cycle_template(3, 3), cycle_template(3, 3)).cnf), "p cnf 20 240");
    EXPECT_EQ(header_of(export_dimacs(3, 7, cycle_template(3, 3), cycle_template(3, 3)).cnf), "p cnf 35 1680");
    auto single = export_dimacs(3, 3, path_template(3, 1), path_template(3, 1));
    auto lines = lines_of(single.cnf);
    ASSERT_GE(lines.size(), 3u);
    EXPECT_EQ(lines[lines.size() - 3], "p cnf 1 2");
    EXPECT_EQ(lines[lines.size() - 2], "-1 0");
    EXPECT_EQ(lines[lines.size() - 1], "1 0");
}

TEST(ExportDimacs, ClauseSyntaxAndSidecar)
{
    auto doc = export_dimacs(3, 6, path_template(3, 2), cycle_template(3, 3));
    std::size_t clauses = 0;
    for (const auto & line : lines_of(doc.cnf)) {
        if (line.rfind("c ", 0) == 0 || line.rfind("p ", 0) == 0)
            continue;
        ASSERT_GE(line.size(), 2u);
        EXPECT_EQ(line.substr(line.size() - 2), " 0");
        ++clauses;
    }
    auto expected = oracle::all_copies(6, path_template(3, 2)).size() + oracle::all_copies(6, cycle_template(3, 3)).size();
    EXPECT_EQ(clauses, expected);
    EXPECT_EQ(doc.sidecar["edges"].size(), 20u);
    EXPECT_EQ(doc.sidecar["edges"][0], (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(doc.sidecar["edges"][19], (std::vector<int>{4, 5, 6}));
    EXPECT_NE(doc.cnf.find("c map-digest fnv1a64 " + doc.sidecar["map_digest"].get<std::string>()), std::string::npos);
}

TEST(ExportDimacs, RejectsTargetsThatDoNotFit)
{
    EXPECT_THROW(export_dimacs(3, 5, cycle_template(3, 3), cycle_template(3, 3)), Error);
}

TEST(DeriveTable, Examples)
{
    auto k3 = derive_table(3, {cycle_claim(3, 3, 3, 7, Provenance::search_verified, "search")});
    ASSERT_EQ(k3.size(), 3u);
    EXPECT_EQ(k3[0].name(), "R(path:3,cycle:3;k=3)");
    EXPECT_EQ(*k3[0].value, 8);
    EXPECT_EQ(k3[1].name(), "R(path:3,path:2;k=3)");
    EXPECT_EQ(*k3[1].value, 7);
    EXPECT_EQ(k3[2].name(), "R(path:3,path:3;k=3)");
    EXPECT_EQ(*k3[2].value, 8);
    for (const auto & c : k3) {
        EXPECT_EQ(c.provenance, Provenance::theorem_derived);
        EXPECT_EQ(c.derivation.front(), "search");
    }

    auto k4 = derive_table(4, {cycle_claim(4, 3, 3, 10, Provenance::closed_form, "base")});
    EXPECT_EQ(*k4[0].value, 11);

    try {
        derive_table(3, {cycle_claim(3, 3, 3, 6, Provenance::closed_form, "bad")});
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::inconsistent_base);
    }
}

TEST(DeriveTable, ValuesFollowOneFormula)
{
    for (int k = 3; k <= 6; ++k) {
        std::vector<RamseyClaim> base;
        for (int n = 3; n <= 7; ++n)
            for (int m = 3; m <= n; ++m)
                base.push_back(cycle_claim(k, n, m, (k - 1) * n + (m - 1) / 2, Provenance::closed_form, "formula"));
        for (const auto & c : derive_table(k, base)) {
            int n = c.red.length();
            int m = c.blue.length();
            EXPECT_EQ(*c.value, (k - 1) * n + (m + 1) / 2) << c.name();
        }
    }
}

TEST(DeriveTable, CycleExtensionNeedsFullWindow)
{
    std::vector<RamseyClaim> base;
    for (int n = 3; n <= 6; ++n)
        base.push_back(cycle_claim(4, n, 3, 3 * n + 1, Provenance::closed_form, "formula"));
    auto table = derive_table(4, base, 9);
    int extended = 0;
    for (const auto & c : table)
        if (c.provenance == Provenance::theorem_extended) {
            ++extended;
            EXPECT_EQ(*c.value, 3 * c.red.length() + 1);
        }
    EXPECT_EQ(extended, 3);

    base.pop_back();
    for (const auto & c : derive_table(4, base, 9))
        EXPECT_NE(c.provenance, Provenance::theorem_extended);
    for (const auto & c : derive_table(3, {cycle_claim(3, 3, 3, 7, Provenance::closed_form, "f")}, 9))
        EXPECT_NE(c.provenance, Provenance::theorem_extended);
}
