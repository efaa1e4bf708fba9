#include "oracles.hpp"
#include "support.hpp"

#include "udg/catalog.hpp"
#include "udg/solver.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using udg::Errc;
using udg::UdGraph;

namespace {

UdGraph odd_cycle(std::size_t n) {
    std::vector<udg::Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return UdGraph::from_edges(n, e);
}

UdGraph complete(std::size_t n) {
    std::vector<udg::Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return UdGraph::from_edges(n, e);
}

// Assigns each variable true iff it encodes the given coloring.
std::vector<long long> model_of(const udg::Coloring& c, std::size_t k) {
    std::vector<long long> lits;
    for (std::size_t v = 0; v < c.colors().size(); ++v)
        for (std::size_t col = 0; col < k; ++col) {
            long long x = static_cast<long long>(v * k + col + 1);
            lits.push_back(c.colors()[v] == col ? x : -x);
        }
    lits.push_back(0);
    return lits;
}

// Evaluates DIMACS clauses under a full assignment.
bool satisfies(const std::string& cnf, const std::vector<long long>& lits) {
    std::vector<bool> value(lits.size() + 1, false);
    for (auto l : lits)
        if (l > 0)
            value[static_cast<std::size_t>(l)] = true;
    std::istringstream in(cnf);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long l;
        bool sat = false;
        while (ls >> l && l != 0)
            if ((l > 0) == value[static_cast<std::size_t>(l > 0 ? l : -l)])
                sat = true;
        if (!sat)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("is_k_colorable examples") {
    auto moser = udg::moser_spindle();
    auto four = udg::is_k_colorable(moser, 4);
    CHECK(four.colorable);
    REQUIRE(four.witness);
    CHECK(udg::verify_coloring(moser, *four.witness));
    CHECK(four.canonical);
    CHECK_FALSE(udg::is_k_colorable(moser, 3).colorable);

    CHECK(udg::is_k_colorable(odd_cycle(5), 3).colorable);
    CHECK_FALSE(udg::is_k_colorable(odd_cycle(5), 2).colorable);
    CHECK(udg::is_k_colorable(UdGraph::from_edges(0, {}), 1).colorable);
    CHECK_ERRC(udg::is_k_colorable(moser, 0), Errc::InvalidArgument);
}

TEST_CASE("chromatic_number examples") {
    auto moser = udg::chromatic_number(udg::moser_spindle());
    CHECK(moser.chromatic_number == 4);
    REQUIRE(moser.below);
    CHECK_FALSE(moser.below->colorable);

    CHECK(udg::chromatic_number(udg::golomb_graph()).chromatic_number == 4);
    CHECK(udg::chromatic_number(udg::catalog_graph("k1")).chromatic_number == 1);
    CHECK_FALSE(udg::chromatic_number(udg::catalog_graph("k1")).below);
    CHECK(udg::chromatic_number(udg::catalog_graph("tri_patch2")).chromatic_number == 3);
    CHECK(udg::chromatic_number(complete(6)).chromatic_number == 6);
    CHECK_ERRC(udg::chromatic_number(UdGraph::from_edges(0, {})), Errc::EmptyGraph);
}

TEST_CASE("property: solver agrees with exhaustive enumeration") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 150; ++i) {
        std::size_t n = 1 + rng() % 9;
        auto g = oracle::random_graph(rng, n, 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
        for (std::size_t k = 1; k <= 5; ++k) {
            auto a = udg::is_k_colorable(g, k);
            CHECK(a.colorable == oracle::k_colorable(g, k));
            if (a.colorable) {
                REQUIRE(a.witness);
                CHECK(a.witness->k() == k);
                CHECK(udg::verify_coloring(g, *a.witness));
            }
        }
        auto chi = udg::chromatic_number(g);
        CHECK(chi.chromatic_number == oracle::chromatic_number(g));
        CHECK(chi.witness.used() == chi.chromatic_number);
    }
}

TEST_CASE("property: colorability is monotone in k") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(rng, 6 + rng() % 10, 0.5);
        bool seen = false;
        for (std::size_t k = 1; k <= 8; ++k) {
            bool c = udg::is_k_colorable(g, k).colorable;
            CHECK((!seen || c));
            seen = seen || c;
        }
    }
}

TEST_CASE("property: bounds sandwich the chromatic number") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(rng, 4 + rng() % 14, 0.4);
        auto chi = udg::chromatic_number(g).chromatic_number;
        CHECK(udg::max_clique(g) <= chi);
        CHECK(chi <= udg::degeneracy(g).degeneracy + 1);
        CHECK(chi <= udg::greedy_degeneracy_coloring(g).used());
    }
}

TEST_CASE("determinism and parallel mode") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 40; ++i) {
        auto g = oracle::random_graph(rng, 8 + rng() % 14, 0.45);
        for (std::size_t k = 2; k <= 5; ++k) {
            auto a = udg::is_k_colorable(g, k);
            auto b = udg::is_k_colorable(g, k);
            CHECK(a.colorable == b.colorable);
            CHECK(a.nodes_explored == b.nodes_explored);
            CHECK(a.witness == b.witness);

            udg::SolveOptions par;
            par.threads = 4;
            auto p = udg::is_k_colorable(g, k, par);
            CHECK(p.colorable == a.colorable);
            if (p.colorable) {
                REQUIRE(p.witness);
                CHECK(udg::verify_coloring(g, *p.witness));
            }
        }
    }
}

TEST_CASE("node budget") {
    udg::SolveOptions tight;
    tight.node_limit = 2;
    CHECK_ERRC(udg::is_k_colorable(udg::golomb_graph(), 3, tight), Errc::BudgetExceeded);
    udg::SolveOptions roomy;
    roomy.node_limit = 100000;
    CHECK_FALSE(udg::is_k_colorable(udg::golomb_graph(), 3, roomy).colorable);
}

TEST_CASE("Coloring and verify_coloring") {
    auto c3 = udg::unit_triangle();
    CHECK(udg::verify_coloring(c3, udg::Coloring({0, 1, 2}, 3)));
    CHECK_FALSE(udg::verify_coloring(c3, udg::Coloring({0, 1, 0}, 3)));
    CHECK_ERRC(udg::verify_coloring(c3, udg::Coloring({0, 1}, 3)), Errc::SizeMismatch);
    CHECK_ERRC(udg::Coloring({0, 3}, 3), Errc::InvalidColoring);
    CHECK(udg::Coloring({0, 2, 2}, 3).used() == 2);
}

TEST_CASE("greedy coloring stays within degeneracy + 1") {
    for (const auto& entry : udg::catalog_entries()) {
        auto g = udg::catalog_graph(entry.name);
        auto c = udg::greedy_degeneracy_coloring(g);
        CAPTURE(entry.name);
        CHECK(udg::verify_coloring(g, c));
        CHECK(c.used() <= udg::degeneracy(g).degeneracy + 1);
    }
    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_graph(rng, 1 + rng() % 30, 0.3);
        auto c = udg::greedy_degeneracy_coloring(g);
        CHECK(udg::verify_coloring(g, c));
        CHECK(c.used() <= udg::degeneracy(g).degeneracy + 1);
    }
}

TEST_CASE("CNF export") {
    auto moser = udg::moser_spindle();
    CHECK(udg::cnf_variable_count(moser, 4) == 28);
    CHECK(udg::cnf_clause_count(moser, 4) == 7 + 11 * 4);
    auto cnf = udg::to_cnf(moser, 4);
    CHECK(cnf.rfind("p cnf 28 51\n", 0) == 0);

    auto c3 = udg::to_cnf(udg::unit_triangle(), 2);
    CHECK(c3 == "p cnf 6 9\n1 2 0\n3 4 0\n5 6 0\n"
                "-1 -3 0\n-2 -4 0\n-1 -5 0\n-2 -6 0\n-3 -5 0\n-4 -6 0\n");
}

TEST_CASE("CNF decoding") {
    auto moser = udg::moser_spindle();
    auto witness = *udg::is_k_colorable(moser, 4).witness;
    auto lits = model_of(witness, 4);
    CHECK(satisfies(udg::to_cnf(moser, 4), lits));
    auto decoded = udg::decode_cnf_assignment(moser, 4, lits);
    CHECK(decoded == witness);

    std::vector<long long> none(28);
    for (std::size_t i = 0; i < none.size(); ++i) none[i] = -static_cast<long long>(i + 1);
    CHECK_ERRC(udg::decode_cnf_assignment(moser, 4, none), Errc::InvalidColoring);
    std::vector<long long> bad{29};
    CHECK_ERRC(udg::decode_cnf_assignment(moser, 4, bad), Errc::InvalidArgument);
}

TEST_CASE("property: every model of the CNF decodes to a proper coloring") {
    // Enumerate all assignments of a small graph's CNF; extra true variables
    // (the encoding omits at-most-one) must still decode properly.
    auto g = odd_cycle(5);
    const std::size_t k = 3;
    auto cnf = udg::to_cnf(g, k);
    std::size_t vars = udg::cnf_variable_count(g, k);
    std::size_t models = 0;
    for (std::uint32_t bits = 0; bits < (1U << vars); ++bits) {
        std::vector<long long> lits;
        for (std::size_t x = 0; x < vars; ++x)
            lits.push_back((bits >> x) & 1U ? static_cast<long long>(x + 1) : -static_cast<long long>(x + 1));
        if (!satisfies(cnf, lits))
            continue;
        ++models;
        CHECK(udg::verify_coloring(g, udg::decode_cnf_assignment(g, k, lits)));
    }
    CHECK(models > 0);
}
