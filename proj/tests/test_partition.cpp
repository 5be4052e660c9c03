#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lwlab/partition.hpp>

using namespace lwlab;

namespace {

// independent oracle: f^lambda by deleting corner cells recursively
Int syt_of_shape_oracle(const Partition& p) {
    if (p.empty()) return 1;
    Int acc = 0;
    for (int i = 1; i <= p.length(); ++i) {
        if (p.part(i) > p.part(i + 1)) {
            std::vector<int> q = p.parts();
            q[i - 1] -= 1;
            acc += syt_of_shape_oracle(Partition(std::move(q)));
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(Partition{3, 2, 2}.conjugate() == Partition{3, 3, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{5}.conjugate() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("conjugate is an involution up to size 10") {
    for (const Partition& p : partitions_up_to(10)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("odd rows and columns") {
    CHECK(Partition{3, 2, 2}.odd_rows() == 1);
    CHECK(Partition{3, 2, 2}.odd_cols() == 3);
    CHECK(Partition{}.odd_rows() == 0);
    CHECK(Partition{}.odd_cols() == 0);
    CHECK(Partition{2, 2}.odd_rows() == 0);
    CHECK(Partition{2, 2}.odd_cols() == 0);
    for (const Partition& p : partitions_up_to(10))
        CHECK(p.odd_rows() == p.conjugate().odd_cols());
}

TEST_CASE("enumeration order and counts") {
    std::vector<Partition> got = partitions_up_to(3, 2);
    std::vector<Partition> want = {{}, {1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}};
    CHECK(got == want);
    CHECK(partitions_up_to(0).size() == 1);
    CHECK(partitions_up_to(4).size() == 12);  // 1+1+2+3+5
}

TEST_CASE("vertical strips") {
    CHECK(is_vertical_strip(Partition{1}, Partition{2, 1}));
    CHECK_FALSE(is_vertical_strip(Partition{1}, Partition{3, 1}));
    CHECK_FALSE(is_vertical_strip(Partition{2, 1}, Partition{1, 1}));
    CHECK(is_vertical_strip(Partition{}, Partition{1, 1, 1}));
    CHECK_FALSE(is_vertical_strip(Partition{}, Partition{2}));
}

TEST_CASE("hook counts") {
    CHECK(hook_count(Partition{2, 1}) == 2);
    CHECK(hook_count(Partition{}) == 1);
    CHECK(hook_count(Partition{2, 2}) == 2);
    for (const Partition& p : partitions_up_to(8))
        CHECK(hook_count(p) == syt_of_shape_oracle(p));
}

TEST_CASE("index sequences") {
    CHECK(index_sequence(Partition{2, 1}, 2) == std::vector<int>{2, 4});
    CHECK(index_sequence(Partition{}, 3) == std::vector<int>{1, 2, 3});
    CHECK(index_sequence(Partition{3}, 1) == std::vector<int>{4});
    CHECK_THROWS(index_sequence(Partition{1, 1}, 1));
    for (const Partition& p : partitions_up_to(6)) {
        int m = p.length() + 1;
        auto seq = index_sequence(p, m);
        for (size_t i = 1; i < seq.size(); ++i) CHECK(seq[i - 1] < seq[i]);
        CHECK(seq.back() == p.width() + m);
        auto back = index_sequence_inverse(seq);
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

TEST_CASE("text round trip") {
    CHECK(Partition{3, 1}.to_string() == "3,1");
    CHECK(Partition{}.to_string() == "0");
    CHECK(Partition::parse("3,1") == Partition{3, 1});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("") == Partition{});
}
