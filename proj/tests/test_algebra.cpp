#include "krw/laurent.hpp"
#include "krw/linalg.hpp"
#include "krw/multipoly.hpp"

#include <doctest.h>

#include <random>

using namespace krw;

TEST_CASE("rationals stay canonical")
{
    Rational r = rat(6, -4);
    r.canonicalize();
    CHECK(is_canonical(r));
    CHECK(rat_to_string(r) == "-3/2");
    CHECK(rat_from_string("-3/2") == r);
    CHECK(is_canonical(rat(0, 7)));
}

TEST_CASE("gaussian rationals")
{
    GaussianRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussianRational(Rational(-1)));
    GaussianRational z(Rational(1), Rational(2));
    CHECK(z / z == GaussianRational(Rational(1)));
}

TEST_CASE("multipoly arithmetic and canonical form")
{
    MultiPoly x1 = MultiPoly::x(1), x2 = MultiPoly::x(2);
    MultiPoly p = (x1 + x2) * (x1 - x2);
    CHECK(p == x1 * x1 - x2 * x2);
    CHECK((p - p).is_zero());
    MultiPoly q = p + x2 * x2; // cancellation leaves no zero coefficients
    CHECK(q.term_count() == 1);
    CHECK(q.to_string() == "x1^2");
}

TEST_CASE("multipoly exact division")
{
    MultiPoly x1 = MultiPoly::x(1), x2 = MultiPoly::x(2);
    MultiPoly num = x1 * x1 - x2 * x2;
    auto q = num.divide_exact(x1 - x2);
    REQUIRE(q);
    CHECK(*q == x1 + x2);
    CHECK(!num.divide_exact(x1 + MultiPoly::constant(1)));
    CHECK_THROWS_AS((void)num.divide_exact(MultiPoly()), invariant_error);
}

TEST_CASE("substitution, including simultaneous")
{
    MultiPoly x1 = MultiPoly::x(1), x2 = MultiPoly::x(2);
    MultiPoly p = x1 * x2 + x1;
    CHECK(p.substitute(1, x2) == x2 * x2 + x2);
    std::map<int, MultiPoly> swap{{1, x2}, {2, x1}}; // must not cascade
    CHECK(p.substitute_many(swap) == x1 * x2 + x2);
    CHECK(p.substitute(1, MultiPoly()).is_zero());
}

TEST_CASE("homogeneity helpers")
{
    MultiPoly x1 = MultiPoly::x(1), a = MultiPoly::a();
    CHECK(*(x1 * x1).homogeneous_x_degree() == 4);
    CHECK(!(x1 * x1 + x1).homogeneous_x_degree());
    auto bd = (a * x1).homogeneous_bidegree();
    REQUIRE(bd);
    CHECK(*bd == std::pair<int, int>(2, 2));
}

TEST_CASE("substituting t = 1 kills t - t^{-1}")
{
    LaurentQ p;
    p.add_term(2, Rational(1));
    p.add_term(-2, Rational(-1));
    Rational at_one(0);
    for (auto& [e, c] : p.terms())
        at_one += c;
    CHECK(at_one == 0);
    CHECK(p.palindromic() == false);
    CHECK((p * p).palindromic());
}

TEST_CASE("laurent exact division terminates instead of expanding a series")
{
    LaurentQ one(Rational(1));
    LaurentQ omt; // 1 - t
    omt.add_term(0, Rational(1));
    omt.add_term(2, Rational(-1));
    CHECK(!one.divide_exact(omt));
    LaurentQ prod = omt * omt;
    auto q = prod.divide_exact(omt);
    REQUIRE(q);
    CHECK(*q == omt);
}

TEST_CASE("rational function canonical form")
{
    LaurentQ q2;
    q2.add_term(4, Rational(1));
    LaurentQ one(Rational(1));
    RationalFunction f(one + q2, one - q2);
    CHECK(f.den().terms().rbegin()->second == 1); // monic denominator
    CHECK(f.den().min_degree() == 0);
    RationalFunction g = RationalFunction(one + q2) * RationalFunction(one, one - q2);
    CHECK(f == g);
    CHECK(f / f == RationalFunction(one));
    RationalFunction k((one - q2) * (one + q2), one - q2);
    CHECK(k.is_polynomial());
}

TEST_CASE("rank and kernel on the small fixed matrices")
{
    SparseMatrixQ zero(3, 3);
    CHECK(rank(zero) == 0);
    CHECK(rank_and_kernel(zero).kernel.size() == 3);

    SparseMatrixQ id(4, 4);
    for (int i = 0; i < 4; ++i)
        id.set(i, i, Rational(1));
    auto rk = rank_and_kernel(id);
    CHECK(rk.rank == 4);
    CHECK(rk.kernel.empty());

    SparseMatrixQ dep(2, 2);
    dep.set(0, 0, Rational(1));
    dep.set(0, 1, Rational(2));
    dep.set(1, 0, Rational(2));
    dep.set(1, 1, Rational(4));
    auto rk2 = rank_and_kernel(dep);
    CHECK(rk2.rank == 1);
    REQUIRE(rk2.kernel.size() == 1);
    CHECK(rk2.kernel[0] == std::vector<Rational>{Rational(-2), Rational(1)});
}

TEST_CASE("solve_linear conventions and certificates")
{
    SparseMatrixQ id(3, 3);
    for (int i = 0; i < 3; ++i)
        id.set(i, i, Rational(1));
    std::vector<Rational> b{Rational(1), Rational(-5), Rational(7, 3)};
    auto res = solve_linear(id, b);
    CHECK(std::get<std::vector<Rational>>(res) == b);

    SparseMatrixQ z(2, 2);
    std::vector<Rational> b2{Rational(0), Rational(5)};
    auto res2 = solve_linear(z, b2);
    auto& cert = std::get<Unsolvable>(res2);
    Rational dot(0);
    for (size_t i = 0; i < b2.size(); ++i)
        dot += cert.left_kernel[i] * b2[i];
    CHECK(dot != 0);

    SparseMatrixQ wide(1, 2); // underdetermined: first-pivot convention
    wide.set(0, 0, Rational(1));
    wide.set(0, 1, Rational(1));
    auto res3 = solve_linear(wide, {Rational(3)});
    CHECK(std::get<std::vector<Rational>>(res3) ==
          std::vector<Rational>{Rational(3), Rational(0)});
}

namespace {

// independent oracle: dense fraction-free (Bareiss) elimination over Z
int bareiss_rank(const SparseMatrixQ& m)
{
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, 0));
    Integer lcm(1);
    for (auto& [rc, v] : m.entries())
        lcm = lcm * v.get_den() / gcd(lcm, Integer(v.get_den()));
    for (auto& [rc, v] : m.entries()) {
        Rational scaled = v * Rational(lcm);
        scaled.canonicalize();
        a[rc.first][rc.second] = scaled.get_num();
    }
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("sparse rank agrees with fraction-free dense elimination")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 12);
        int cols = 1 + static_cast<int>(rng() % 12);
        SparseMatrixQ m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 3 == 0)
                    m.set(r, c, rat(static_cast<long>(rng() % 11) - 5,
                                    1 + static_cast<long>(rng() % 4)));
        CHECK(rank(m) == bareiss_rank(m));
        CHECK(rank(m) == rank_and_kernel(m).rank);
    }
    std::mt19937_64 rng2(11);
    SparseMatrixQ big(50, 50);
    for (int r = 0; r < 50; ++r)
        for (int c = 0; c < 50; ++c)
            if (rng2() % 5 == 0)
                big.set(r, c, Rational(static_cast<long>(rng2() % 7) - 3));
    CHECK(rank(big) == bareiss_rank(big));
}

TEST_CASE("every solve is re-verified by exact multiplication")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        SparseMatrixQ m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 2)
                    m.set(r, c, Rational(static_cast<long>(rng() % 9) - 4));
        std::vector<Rational> b(rows);
        for (auto& v : b)
            v = Rational(static_cast<long>(rng() % 9) - 4);
        auto res = solve_linear(m, b);
        if (auto* sol = std::get_if<std::vector<Rational>>(&res)) {
            CHECK(m.apply(*sol) == b);
        } else {
            auto& cert = std::get<Unsolvable>(res);
            for (auto& c : m.apply_transpose(cert.left_kernel))
                CHECK(c == 0);
            Rational dot(0);
            for (size_t i = 0; i < b.size(); ++i)
                dot += cert.left_kernel[i] * b[i];
            CHECK(dot != 0);
        }
        for (auto& v : rank_and_kernel(m).kernel)
            for (auto& c : m.apply(v))
                CHECK(c == 0);
    }
}
