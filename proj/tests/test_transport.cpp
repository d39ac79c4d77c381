#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "msym/transport.hpp"
#include "support/oracles.hpp"

using namespace msym;

namespace {

std::vector<Rational> rat(const std::vector<long>& v) {
    std::vector<Rational> out;
    for (long e : v) out.emplace_back(e);
    return out;
}

std::vector<Rational> flatten(const std::vector<std::vector<Rational>>& m) {
    std::vector<Rational> out;
    for (const auto& row : m)
        for (const auto& e : row) out.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("margin pairs validate non-negativity") {
    CHECK_NOTHROW(MarginPair(rat({1, 2}), rat({3})));
    CHECK_NOTHROW(MarginPair({}, {}));
    CHECK_THROWS_AS(MarginPair(rat({-1}), rat({1})), std::domain_error);
}

TEST_CASE("feasibility is equality of totals") {
    CHECK(feasible(MarginPair(rat({5, 4, 3}), rat({6, 2, 4}))));
    CHECK_FALSE(feasible(MarginPair(rat({1}), rat({2}))));
    CHECK(feasible(MarginPair({}, {})));
    CHECK(feasible(MarginPair({Rational(1, 2), Rational(1, 2)}, {Rational(1)})));
}

TEST_CASE("northwest corner on the three-by-three instance") {
    const auto x = northwest_corner(MarginPair(rat({5, 4, 3}), rat({6, 2, 4})));
    CHECK(x == std::vector<std::vector<Rational>>{
                   rat({5, 0, 0}), rat({1, 2, 1}), rat({0, 0, 3})});
}

TEST_CASE("northwest corner degenerate cases") {
    CHECK(northwest_corner(MarginPair(rat({1}), rat({1}))) ==
          std::vector<std::vector<Rational>>{rat({1})});
    CHECK(northwest_corner(MarginPair(rat({2, 0}), rat({1, 1}))) ==
          std::vector<std::vector<Rational>>{rat({1, 1}), rat({0, 0})});
    CHECK_THROWS_AS(northwest_corner(MarginPair(rat({1}), rat({2}))),
                    std::domain_error);
    CHECK_THROWS_WITH(northwest_corner(MarginPair(rat({1}), rat({2}))),
                      "margins differ: 1 ≠ 2");
}

TEST_CASE("northwest corner output satisfies its margins") {
    const MarginPair m({Rational(1, 2), Rational(5, 2), Rational(1)},
                       {Rational(3), Rational(1)});
    const auto x = northwest_corner(m);
    for (std::size_t i = 0; i < m.u.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.v.size(); ++j) s += x[i][j];
        CHECK(s == m.u[i]);
    }
    for (std::size_t j = 0; j < m.v.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m.u.size(); ++i) s += x[i][j];
        CHECK(s == m.v[j]);
    }
    CHECK(check_membership(flatten(x), constraint_system(m), false));
}

TEST_CASE("incidence matrix of the corner-deleted K33") {
    const auto sys = incidence_matrix(3, 3, true);
    const std::vector<std::vector<Int>> want{
        {1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 1}, {0, 0, 1, 0, 0, 1, 0, 0},
        {1, 0, 0, 1, 0, 0, 1, 0}, {0, 1, 0, 0, 1, 0, 0, 1}};
    CHECK(sys.A == want);
    CHECK(sys.variable_order ==
          std::vector<std::pair<Int, Int>>{{0, 1}, {0, 2}, {1, 0}, {1, 1},
                                           {1, 2}, {2, 0}, {2, 1}, {2, 2}});
}

TEST_CASE("incidence matrix of small complete graphs") {
    const auto k11 = incidence_matrix(1, 1, false);
    CHECK(k11.A == std::vector<std::vector<Int>>{{1}, {1}});
    CHECK(k11.variable_order == std::vector<std::pair<Int, Int>>{{1, 1}});
    CHECK_THROWS_AS(incidence_matrix(0, 2, false), std::domain_error);
}

TEST_CASE("incidence structure: two ones per column, degree rows") {
    for (Int p : {1, 2, 3})
        for (Int q : {1, 2, 3})
            for (bool removed : {false, true}) {
                if (removed && (p < 2 || q < 2)) continue;
                const auto sys = incidence_matrix(p, q, removed);
                for (std::size_t c = 0; c < sys.num_cols(); ++c) {
                    Int ones = 0;
                    for (std::size_t r = 0; r < sys.num_rows(); ++r)
                        ones += sys.A[r][c];
                    CHECK(ones == 2);
                }
                for (std::size_t r = 0; r < sys.num_rows(); ++r) {
                    Int deg = 0;
                    for (std::size_t c = 0; c < sys.num_cols(); ++c)
                        deg += sys.A[r][c];
                    const bool u_side = r < static_cast<std::size_t>(p);
                    const Int full = u_side ? q : p;
                    const bool corner_vertex = removed && (r == 0 || r == static_cast<std::size_t>(p));
                    CHECK(deg == (corner_vertex ? full - 1 : full));
                }
            }
}

TEST_CASE("padded margins of the worked example") {
    const auto p3 = padded_margins({1, 1}, {2, 1}, 3);
    CHECK(p3.alpha_bar == Margin{1, 1, 1});
    CHECK(p3.beta_bar == Margin{0, 2, 1});
    const auto p4 = padded_margins({1, 1}, {2, 1}, 4);
    CHECK(p4.alpha_bar == Margin{2, 1, 1});
    CHECK(p4.beta_bar == Margin{1, 2, 1});
    const auto z = padded_margins({0}, {0}, 0);
    CHECK(z.alpha_bar == Margin{0, 0});
    CHECK(z.beta_bar == Margin{0, 0});
    CHECK_THROWS_AS(padded_margins({1, 1}, {2, 1}, 2), std::out_of_range);
}

TEST_CASE("rearranged system matches the displayed matrix") {
    const auto sys = rearranged_constraint_system({1, 1}, {2, 1}, 3);
    const std::vector<std::vector<Int>> want{
        {0, 0, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 0, 0},
        {0, 1, 0, 0, 0, 0, 1, 1}, {1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1, 0, 1}};
    CHECK(sys.A == want);
    CHECK(sys.b == std::vector<Rational>{1, 1, 1, 0, 2, 1});
    CHECK(sys.variable_order ==
          std::vector<std::pair<Int, Int>>{{1, 0}, {2, 0}, {0, 1}, {0, 2},
                                           {1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("rearranged system for the one-by-one block") {
    const auto sys = rearranged_constraint_system({1}, {1}, 2);
    CHECK(sys.variable_order ==
          std::vector<std::pair<Int, Int>>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(sys.b == std::vector<Rational>{1, 1, 1, 1});
}

TEST_CASE("rearranged columns are a permutation of the incidence columns") {
    for (Int p : {1, 2})
        for (Int q : {1, 2}) {
            Margin alpha(static_cast<std::size_t>(p), 1);
            Margin beta(static_cast<std::size_t>(q), 1);
            const Int N = static_cast<Int>(alpha.size() + beta.size());
            const auto sys = rearranged_constraint_system(alpha, beta, N);
            const auto base = incidence_matrix(p + 1, q + 1, true);
            auto cols = [](const ConstraintSystem& s) {
                std::vector<std::vector<Int>> out;
                for (std::size_t c = 0; c < s.num_cols(); ++c) {
                    std::vector<Int> col;
                    for (std::size_t r = 0; r < s.num_rows(); ++r)
                        col.push_back(s.A[r][c]);
                    out.push_back(col);
                }
                std::sort(out.begin(), out.end());
                return out;
            };
            CHECK(cols(sys) == cols(base));
        }
}

TEST_CASE("membership of the classical three-by-three solution") {
    // Row margins (6,2,4) and column margins (5,4,3): the displayed
    // solution x fills the system with row sums first.
    const auto sys = constraint_system(MarginPair(rat({6, 2, 4}), rat({5, 4, 3})));
    const std::vector<Rational> x = rat({4, 1, 1, 0, 2, 0, 1, 1, 2});
    CHECK(check_membership(x, sys, false));
    CHECK(check_membership(x, sys, true));
    CHECK_FALSE(check_membership(rat({0, 0, 0, 0, 0, 0, 0, 0, 0}), sys, false));
    CHECK_THROWS_AS(check_membership(rat({1, 2}), sys, false), std::domain_error);
}

TEST_CASE("fractional points pass real but fail integral membership") {
    const auto sys = rearranged_constraint_system({1, 1}, {2, 1}, 3);
    const std::vector<Rational> x{0,
                                  0,
                                  Rational(1, 2),
                                  Rational(1, 2),
                                  Rational(1, 2),
                                  Rational(1, 2),
                                  1,
                                  0};
    CHECK(check_membership(x, sys, false));
    CHECK_FALSE(check_membership(x, sys, true));
}

TEST_CASE("negative entries fail membership") {
    const auto sys = rearranged_constraint_system({1}, {1}, 2);
    CHECK_FALSE(check_membership({Rational(-1), Rational(1), Rational(2)}, sys,
                                 false));
}

TEST_CASE("every stratum member solves the rearranged system") {
    for (const auto& alpha : oracle::margin_grid(2, 2))
        for (const auto& beta : oracle::margin_grid(2, 2)) {
            const auto range = nonempty_range(alpha, beta);
            for (Int N = range.lo; N <= range.hi; ++N) {
                const auto sys = rearranged_constraint_system(alpha, beta, N);
                for (const auto& g : enumerate_LN(alpha, beta, N).members) {
                    std::vector<Rational> x;
                    for (Int v : gamma_to_vec(g)) x.emplace_back(v);
                    CHECK(check_membership(x, sys, true));
                }
            }
        }
}

TEST_CASE("integer solutions of the rearranged system are exactly the stratum") {
    const auto sys = rearranged_constraint_system({1, 1}, {2, 1}, 3);
    std::vector<Int> b_int;
    for (const auto& e : sys.b) b_int.push_back(static_cast<Int>(e.get_num().get_si()));
    const auto sols = oracle::nonneg_integer_solutions(sys.A, b_int);
    std::vector<std::vector<Int>> expected;
    for (const auto& g : enumerate_LN({1, 1}, {2, 1}, 3).members)
        expected.push_back(gamma_to_vec(g));
    std::sort(expected.begin(), expected.end());
    CHECK(sols == expected);
}

TEST_CASE("constraint system JSON carries the b vector as strings") {
    const auto sys = rearranged_constraint_system({1, 1}, {2, 1}, 3);
    const std::string j = constraint_system_to_json(sys);
    CHECK(j.find("\"rows\": 6") != std::string::npos);
    CHECK(j.find("\"cols\": 8") != std::string::npos);
    CHECK(j.find("\"b\"") != std::string::npos);
    CHECK(j == constraint_system_to_json(sys));
}
