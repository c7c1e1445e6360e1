#include "support.hpp"

using namespace korthos;
using support::error_of;

namespace {

std::vector<std::string> images(const CrtSplit& s, const char* text) {
    std::vector<std::string> out;
    const auto parts = s.forward(s.source.parse(text));
    for (std::size_t j = 0; j < parts.size(); ++j) out.push_back(s.factors[j].render(parts[j]));
    return out;
}

SearchOptions quick() {
    SearchOptions o;
    o.verify_structure = false;
    return o;
}

}  // namespace

TEST(Crt, ElementMaps) {
    const CrtSplit z6 = split(make_zmod(6));
    ASSERT_EQ(z6.factors.size(), 2u);
    EXPECT_EQ(z6.factors[0].literal(), "Z2");
    EXPECT_EQ(z6.factors[1].literal(), "Z3");
    EXPECT_EQ(images(z6, "4"), (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(images(z6, "5"), (std::vector<std::string>{"1", "2"}));

    const CrtSplit r2 = split(make_r2());
    EXPECT_EQ(images(r2, "v"), (std::vector<std::string>{"1", "0"}));
    EXPECT_EQ(images(r2, "1+v"), (std::vector<std::string>{"0", "1"}));

    const CrtSplit f3 = split(parse_ring("GF(3)+vGF(3)[v2=1]"));
    EXPECT_EQ(images(f3, "v"), (std::vector<std::string>{"2", "1"}));
    EXPECT_TRUE(f3.to_fields());
}

TEST(Crt, RoundTripAndHomomorphism) {
    for (const Ring& r : {make_zmod(6), make_zmod(30), make_zmod(12), make_zmod(60), make_r2(), parse_ring("GF(4)+vGF(4)[v2=v]"),
                          parse_ring("GF(3)+vGF(3)[v2=1]"), parse_ring("GF(9)+vGF(9)[v2=1]"), parse_ring("Z2xGF(4)")}) {
        const CrtSplit s = split(r);
        for (Index a = 0; a < r.order(); ++a) {
            const auto fa = s.forward(r.element(a));
            EXPECT_EQ(s.backward(fa).index, a) << r.literal();
            for (Index b = 0; b < r.order(); b += 1 + r.order() / 16) {
                const auto fb = s.forward(r.element(b));
                const auto sum = s.forward(r.element(r.add(a, b)));
                const auto prod = s.forward(r.element(r.mul(a, b)));
                for (std::size_t j = 0; j < s.factors.size(); ++j) {
                    EXPECT_TRUE(s.factors[j].eq(sum[j], s.factors[j].add(fa[j], fb[j])));
                    EXPECT_TRUE(s.factors[j].eq(prod[j], s.factors[j].mul(fa[j], fb[j])));
                }
            }
        }
        const auto one = s.forward(r.one());
        for (std::size_t j = 0; j < s.factors.size(); ++j) EXPECT_TRUE(s.factors[j].eq(one[j], s.factors[j].one()));
    }
}

TEST(Crt, LocalRingsDoNotSplitToFields) {
    const CrtSplit z12 = split(make_zmod(12));
    EXPECT_EQ(z12.factors[0].literal(), "Z4");
    EXPECT_FALSE(z12.to_fields());
    EXPECT_EQ(error_of([] { split_to_fields(make_zmod(4)); }), ErrorCode::not_splittable_to_fields);
    EXPECT_EQ(error_of([] { split_to_fields(make_zmod(12)); }), ErrorCode::not_splittable_to_fields);
    EXPECT_EQ(error_of([] { verify_semigroup_isomorphism(make_zmod(4), 2, make_zmod(4).one()); }),
              ErrorCode::not_splittable_to_fields);
    EXPECT_EQ(split(make_galois_field(2, 3)).factors.size(), 1u);
}

TEST(Crt, MapMatrix) {
    const Ring z6 = make_zmod(6);
    const CrtSplit s = split(z6);
    const Matrix a = parse_matrix(z6, "2,5;1,2");
    const auto parts = map_matrix(s, a);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(format_matrix(parts[0]), "0,1;1,0");
    EXPECT_EQ(format_matrix(parts[1]), "2,2;1,2");
    EXPECT_TRUE(unmap_matrix(s, parts) == a);
    for (const auto& id : map_matrix(s, identity(z6, 3))) EXPECT_TRUE(id == identity(id.ring(), 3));
    const Matrix b = parse_matrix(z6, "1,4;3,5");
    const auto ab = map_matrix(s, a * b);
    const auto pb = map_matrix(s, b);
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(ab[j] == parts[j] * pb[j]);
    EXPECT_EQ(error_of([&] { map_matrix(s, identity(make_zmod(4), 2)); }), ErrorCode::ring_mismatch);
}

TEST(Crt, ProductCountsForEveryIdempotent) {
    for (const Ring& r : {make_r2(), make_zmod(6)})
        for (std::size_t n : {2u, 3u})
            for (const auto k : idempotents(r).elements)
                for (const Side side : {Side::left, Side::right, Side::two_sided}) {
                    const auto rep = verify_semigroup_isomorphism(r, n, k, side, quick());
                    EXPECT_TRUE(rep.bijection_ok) << r.literal() << " n=" << n << " k=" << r.render(k);
                    EXPECT_EQ(rep.product, rep.direct_count);
                }
}

TEST(Crt, WorkedProducts) {
    const Ring z6 = make_zmod(6);
    const auto four = verify_semigroup_isomorphism(z6, 2, z6.parse("4"));
    EXPECT_EQ(four.factor_counts, (std::vector<std::size_t>{4, 8}));
    EXPECT_EQ(four.product, 32u);
    EXPECT_EQ(four.factors[0].render(four.a[0]), "0");
    EXPECT_EQ(four.factors[1].render(four.a[1]), "1");
    const auto three = verify_semigroup_isomorphism(z6, 2, z6.parse("3"));
    EXPECT_EQ(three.factor_counts, (std::vector<std::size_t>{2, 1}));
    const Ring r2 = make_r2();
    const auto zero3 = verify_semigroup_isomorphism(r2, 3, r2.zero());
    EXPECT_EQ(zero3.factor_counts, (std::vector<std::size_t>{22, 22}));
    EXPECT_EQ(zero3.direct_count, 484u);
    EXPECT_EQ(verify_semigroup_isomorphism(z6, 3, z6.parse("4")).product, 1056u);
    EXPECT_EQ(error_of([&] { verify_semigroup_isomorphism(z6, 2, z6.parse("2")); }), ErrorCode::invalid_parameter);
}

// k = 1 goes through the same product path as any other idempotent and agrees with the group count.
TEST(Crt, UnitScalarCrossCheck) {
    for (const Ring& r : {make_r2(), make_zmod(6)})
        for (std::size_t n : {2u, 3u}) {
            const auto rep = verify_semigroup_isomorphism(r, n, r.one(), Side::two_sided, quick());
            EXPECT_EQ(rep.product, orth_group_order(r, n).product);
        }
}

TEST(Crt, GroupOrders) {
    EXPECT_EQ(gl_order(2, 1), 1u);
    EXPECT_EQ(gl_order(2, 2), 6u);
    EXPECT_EQ(gl_order(3, 2), 48u);
    EXPECT_EQ(gl_order(2, 3), 168u);
    EXPECT_EQ(gl_order(2, 2) * gl_order(3, 2), 288u);
    EXPECT_EQ(gl_order(2, 2), oracle::count_invertible(oracle::zmod(2), 2));
    EXPECT_EQ(gl_order(3, 2), oracle::count_invertible(oracle::zmod(3), 2));
    EXPECT_EQ(gl_order(2, 3), oracle::count_invertible(oracle::zmod(2), 3));
    EXPECT_EQ(oracle::count_invertible(oracle::zmod(6), 2), 288u);
    EXPECT_EQ(error_of([] { gl_order(6, 2); }), ErrorCode::invalid_parameter);
    EXPECT_EQ(error_of([] { gl_order(1u << 20, 8); }), ErrorCode::size_cap_exceeded);

    EXPECT_EQ(orth_group_order(make_zmod(6), 2).product, 16u);
    EXPECT_EQ(orth_group_order(make_zmod(6), 2).factor_counts, (std::vector<std::size_t>{2, 8}));
    EXPECT_EQ(orth_group_order(make_r2(), 2).product, 4u);
    const auto o3 = orth_group_order(make_zmod(6), 3);
    EXPECT_EQ(o3.factor_counts, (std::vector<std::size_t>{6, 48}));
    EXPECT_EQ(o3.product, 288u);
}
