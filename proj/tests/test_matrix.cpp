#include "support.hpp"

#include <random>

using namespace korthos;
using support::error_of;

namespace {

Matrix random_matrix(const Ring& r, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<Index> pick(0, r.order() - 1);
    std::vector<Index> e(n * n);
    for (auto& x : e) x = pick(rng);
    return Matrix(r, n, n, std::move(e));
}

}  // namespace

TEST(Matrix, Constructors) {
    const Ring z6 = make_zmod(6), r2 = make_r2();
    const Matrix j = reversal(z6, 2);
    EXPECT_EQ(format_matrix(j), "0,1;1,0");
    EXPECT_TRUE(j * j == identity(z6, 2));
    EXPECT_TRUE(classify_k_orthogonal(zero(z6, 3, 3), z6.zero()).two_sided);
    const Matrix vi = scalar(r2, r2.parse("v"), 2);
    EXPECT_TRUE(classify_k_orthogonal(vi, r2.parse("v")).two_sided);
    EXPECT_EQ(identity(z6, 3).shape(), "3x3");
    EXPECT_EQ(error_of([&] { Matrix(z6, 0, 2); }), ErrorCode::dimension_mismatch);
    EXPECT_EQ(error_of([&] { Matrix(z6, 2, 2, {1, 2, 3}); }), ErrorCode::dimension_mismatch);
    EXPECT_EQ(error_of([&] { Matrix(z6, 1, 1, {6}); }), ErrorCode::invalid_parameter);
}

TEST(Matrix, ParseAndFormat) {
    const Ring z6 = make_zmod(6), r2 = make_r2();
    const Matrix a = parse_matrix(z6, "2,5;1,2");
    EXPECT_EQ(a.rows(), 2u);
    EXPECT_EQ(format_matrix(a), "2,5;1,2");
    const Matrix b = parse_matrix(r2, " v , 0 ; 1+v , 1 ");
    EXPECT_EQ(format_matrix(parse_matrix(r2, format_matrix(b))), format_matrix(b));
    EXPECT_EQ(error_of([&] { parse_matrix(z6, "1,2;3"); }), ErrorCode::parse_error) << "ragged rows";
    EXPECT_EQ(error_of([&] { parse_matrix(z6, "1,q"); }), ErrorCode::parse_error);
}

TEST(Matrix, FiveOrthogonalOverZ6) {
    const Ring z6 = make_zmod(6);
    const Matrix a = parse_matrix(z6, "2,5;1,2");
    EXPECT_TRUE(gram_columns(a) == scalar(z6, z6.parse("5"), 2));
    EXPECT_TRUE(gram_rows(a) == scalar(z6, z6.parse("5"), 2));
    EXPECT_EQ(z6.render(det(a)), "5");
    const auto found = find_k(a);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(z6.render(found->k), "5");
    EXPECT_TRUE(found->two_sided);
}

TEST(Matrix, RightOnlyOverR2) {
    const Ring r2 = make_r2();
    const Matrix a = parse_matrix(r2, "v,0;1+v,1");
    const Element v = r2.parse("v");
    EXPECT_TRUE(gram_rows(a) == scalar(r2, v, 2));
    EXPECT_TRUE(gram_columns(a) == parse_matrix(r2, "1,1+v;1+v,1"));
    EXPECT_TRUE(r2.eq(det(a), v));
    EXPECT_FALSE(is_invertible(a));
    const OrthClass c = classify_k_orthogonal(a, v);
    EXPECT_FALSE(c.left);
    EXPECT_TRUE(c.right);
    EXPECT_FALSE(c.two_sided);
}

TEST(Matrix, TwoSidedAndZeroOrthogonalOverR2) {
    const Ring r2 = make_r2();
    const OrthClass c = classify_k_orthogonal(parse_matrix(r2, "1+v,1;1,1+v"), r2.parse("v"));
    EXPECT_TRUE(c.left && c.right && c.two_sided);
    const Matrix b = parse_matrix(r2, "1+v,0,1+v;1,v,1+v;v,v,0");
    EXPECT_TRUE(gram_columns(b) == zero(r2, 3, 3));
    EXPECT_TRUE(gram_rows(b) == zero(r2, 3, 3));
    EXPECT_TRUE(classify_k_orthogonal(b, r2.zero()).two_sided);
}

TEST(Matrix, FindK) {
    const Ring f2 = make_galois_field(2);
    EXPECT_FALSE(find_k(parse_matrix(f2, "1,0;0,0")).has_value());
    const auto id = find_k(identity(make_zmod(6), 3));
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ(id->k.index, make_zmod(6).one().index);
}

TEST(Matrix, ShapeAndRingErrors) {
    const Ring z6 = make_zmod(6), z4 = make_zmod(4);
    EXPECT_EQ(error_of([&] { mat_mul(identity(z6, 2), identity(z6, 3)); }), ErrorCode::dimension_mismatch);
    EXPECT_EQ(error_of([&] { mat_add(identity(z6, 2), identity(z4, 2)); }), ErrorCode::ring_mismatch);
    EXPECT_EQ(error_of([&] { (void)(identity(z6, 2) == identity(z4, 2)); }), ErrorCode::ring_mismatch);
    EXPECT_EQ(error_of([&] { det(zero(z6, 2, 3)); }), ErrorCode::dimension_mismatch);
    EXPECT_EQ(error_of([&] { det(identity(z6, 7)); }), ErrorCode::size_cap_exceeded);
    EXPECT_EQ(error_of([&] { classify_k_orthogonal(identity(z6, 2), z4.one()); }), ErrorCode::ring_mismatch);
    EXPECT_EQ(z6.render(det(identity(z6, 6))), "1");
}

TEST(Matrix, DetMultiplicativeExhaustive2x2OverZ6) {
    const Ring z6 = make_zmod(6);
    const oracle::Ring o = oracle::zmod(6);
    std::vector<Matrix> all;
    oracle::for_each_matrix(6, 4, [&](const oracle::Entries& a) {
        std::vector<Index> e(a.begin(), a.end());
        all.emplace_back(z6, 2, 2, std::move(e));
        EXPECT_EQ(static_cast<int>(det(all.back()).index), oracle::det2(o, a));
    });
    ASSERT_EQ(all.size(), 1296u);
    std::size_t failures = 0;
    for (const auto& a : all) {
        const Index da = det(a).index;
        for (const auto& b : all)
            if (det(a * b).index != z6.mul(da, det(b).index)) ++failures;
    }
    EXPECT_EQ(failures, 0u);
}

TEST(Matrix, RandomCubicIdentities) {
    std::mt19937 rng(20241014);
    for (const Ring& r : {make_zmod(6), make_r2(), make_galois_field(3, 2)}) {
        const oracle::Ring o = r.order() == 6 ? oracle::zmod(6) : r.order() == 4 ? oracle::vext(2, true) : oracle::galois(3, {2, 2, 1}, "GF(9)");
        const auto map = support::element_map(r, o);
        std::vector<int> back(r.order());
        for (int i = 0; i < o.q; ++i) back[map[i]] = i;
        for (int trial = 0; trial < 200; ++trial) {
            const Matrix a = random_matrix(r, 3, rng), b = random_matrix(r, 3, rng), c = random_matrix(r, 3, rng);
            EXPECT_TRUE(transpose(a * b) == transpose(b) * transpose(a));
            EXPECT_TRUE((a * b) * c == a * (b * c));
            EXPECT_TRUE(transpose(transpose(a)) == a);
            EXPECT_EQ(det(a * b).index, r.mul(det(a).index, det(b).index));
            oracle::Entries e;
            for (const Index x : a.entries()) e.push_back(back[x]);
            EXPECT_EQ(det(a).index, map[oracle::det3(o, e)]);
        }
    }
}

TEST(Matrix, AssociativityExhaustive2x2OverR2) {
    const Ring r2 = make_r2();
    std::vector<Matrix> all;
    oracle::for_each_matrix(4, 4, [&](const oracle::Entries& a) {
        all.emplace_back(r2, 2, 2, std::vector<Index>(a.begin(), a.end()));
    });
    std::size_t failures = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            const Matrix ab = a * b;
            for (const auto& c : all)
                if (!(ab * c == a * (b * c))) ++failures;
        }
    EXPECT_EQ(failures, 0u);
}

// Left k-orthogonal gives det^2 = k^n, det = k over the Boolean ring, a right k-orthogonal
// transpose and (k idempotent) a left k-orthogonal kA.
TEST(Matrix, LeftOrthogonalConsequences) {
    for (const Ring& r : {make_zmod(6), make_r2(), make_zmod(4), parse_ring("GF(3)+vGF(3)[v2=1]")}) {
        const auto idem = idempotents(r);
        for (std::size_t n : {2u, 3u}) {
            if (n == 3 && r.order() > 6) continue;
            SearchOptions opts;
            opts.verify_structure = false;
            for (Index k = 0; k < r.order(); ++k) {
                const Census c = enumerate(r, n, r.element(k), Side::left, opts);
                Index kn = r.one().index;
                for (std::size_t i = 0; i < n; ++i) kn = r.mul(kn, k);
                for (const auto& a : c.elements) {
                    const Index d = det(a).index;
                    EXPECT_EQ(r.mul(d, d), kn) << r.literal();
                    if (r == make_r2()) {
                        EXPECT_EQ(d, k);
                    }
                    EXPECT_TRUE(classify_k_orthogonal(transpose(a), r.element(k)).right);
                    if (idem.contains(r.element(k))) {
                        EXPECT_TRUE(classify_k_orthogonal(scalar_mul(r.element(k), a), r.element(k)).left);
                    }
                }
            }
        }
    }
}

// kA left k-orthogonal does not force A to be: J_2 over R2 with k = 1+v.
TEST(Matrix, ScaledOrthogonalityConverseFails) {
    const Ring r2 = make_r2();
    const Element k = r2.parse("1+v");
    const Matrix j = reversal(r2, 2);
    EXPECT_TRUE(classify_k_orthogonal(scalar_mul(k, j), k).left);
    EXPECT_FALSE(classify_k_orthogonal(j, k).right);
    EXPECT_FALSE(classify_k_orthogonal(j, k).left);
}

TEST(Matrix, OrthogonalDeterminantIsInvolution) {
    for (const Ring& r : {make_zmod(6), make_r2(), make_zmod(4), make_galois_field(3)}) {
        const Census c = enumerate(r, 2, r.one(), Side::two_sided);
        for (const auto& a : c.elements) {
            EXPECT_EQ(r.mul(det(a).index, det(a).index), r.one().index);
            EXPECT_TRUE(is_invertible(a));
        }
    }
    const Ring z6 = make_zmod(6);
    for (const auto& a : enumerate(z6, 2, z6.one(), Side::two_sided).elements) {
        const auto d = z6.render(det(a));
        EXPECT_TRUE(d == "1" || d == "5");
    }
    EXPECT_FALSE(is_invertible(zero(z6, 2, 2)));
}

TEST(Matrix, FieldLeftEqualsRightForOne) {
    for (const Ring& f : {make_galois_field(2), make_galois_field(3)}) {
        oracle::for_each_matrix(static_cast<int>(f.order()), 4, [&](const oracle::Entries& e) {
            const Matrix a(f, 2, 2, std::vector<Index>(e.begin(), e.end()));
            const OrthClass c = classify_k_orthogonal(a, f.one());
            EXPECT_EQ(c.left, c.right);
            EXPECT_EQ(c.two_sided, c.left && c.right);
        });
    }
}

TEST(Matrix, ConcatAndDeleteRows) {
    const Ring z4 = make_zmod(4);
    const Matrix a = parse_matrix(z4, "3,1,2,1;1,2,3,1;3,3,3,2;2,3,1,1");
    EXPECT_EQ(format_matrix(delete_rows(a, {3})), "3,1,2,1;1,2,3,1;3,3,3,2");
    EXPECT_EQ(format_matrix(hconcat(identity(z4, 2), parse_matrix(z4, "1;2"))), "1,0,1;0,1,2");
    EXPECT_EQ(error_of([&] { delete_rows(a, {4}); }), ErrorCode::dimension_mismatch);
}
