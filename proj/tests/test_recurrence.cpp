#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "gridiv/board.hpp"
#include "gridiv/recurrence.hpp"
#include "reference_values.hpp"

using namespace gridiv;

TEST_CASE("base row") {
    RecurrenceRow row = base_row();
    CHECK(row.n == 1);
    CHECK(row.d[1] == 1);
    CHECK(row.d[2] == 1);
    CHECK(row.s[2] == 1);
    CHECK(row.s[1] == 0);
    CHECK(row.d[0] == 0);
}

TEST_CASE("one step from n=1") {
    RecurrenceRow next = step(base_row());
    CHECK(next.n == 2);
    CHECK(next.d[2] == 6);  // 0 + 3*1 + 1 + 2*1
    CHECK(next.d[3] == 4);  // 1 + 3*1 + 0 + 0
    CHECK(next.s[2] == 3);  // 0 + 2*1 + 1
    CHECK(next.d[4] == 1);
}

TEST_CASE("table matches the published values") {
    SequenceTable table = d_table(10, 20);
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= 10; ++k)
            CHECK(table.at(k, n) == golden::kDivisionTable[n - 1][k - 1]);
    CHECK(table.at(10, 20) == BigCount("2668573664500"));
    CHECK(table.at(7, 7) == 25747);
    CHECK(table.at(5, 3) == 7);
}

TEST_CASE("recursion agrees with the brute-force oracle") {
    SequenceTable dt = d_table(10, 5);
    SequenceTable st = s_table(10, 5);
    for (int n = 1; n <= 5; ++n) {
        auto brute = brute_count_all({2, n});
        for (int k = 1; k <= 10; ++k) {
            if (k > 2 * n) {
                CHECK(dt.at(k, n) == 0);
                CHECK(st.at(k, n) == 0);
                continue;
            }
            CHECK(dt.at(k, n) == brute[k]);
            CHECK(st.at(k, n) == separation_count(n, k));
        }
    }
}

TEST_CASE("closed forms evaluate to table entries") {
    SequenceTable table = d_table(5, 20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(Rational(table.at(2, n)) == golden::d2().eval(n));
        CHECK(Rational(table.at(3, n)) == golden::d3().eval(n));
        CHECK(Rational(table.at(4, n)) == golden::d4().eval(n));
        CHECK(Rational(table.at(5, n)) == golden::d5().eval(n));
    }
}

TEST_CASE("column sanity: d_1 = 1, d_2n = 1, zero beyond 2n") {
    SequenceTable table = d_table(30, 12);
    for (int n = 1; n <= 12; ++n) {
        CHECK(table.at(1, n) == 1);
        CHECK(table.at(2 * n, n) == 1);
        for (int k = 2 * n + 1; k <= 30; ++k) CHECK(table.at(k, n) == 0);
    }
}

TEST_CASE("0 <= s_k(n) <= d_k(n)") {
    SequenceTable dt = d_table(12, 15);
    SequenceTable st = s_table(12, 15);
    for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= 12; ++k) {
            CHECK(st.at(k, n) >= 0);
            CHECK(st.at(k, n) <= dt.at(k, n));
        }
}

TEST_CASE("exports are byte-stable") {
    SequenceTable table = d_table(4, 6);
    std::ostringstream csv1, csv2, json1, json2;
    write_csv(csv1, table);
    write_csv(csv2, table);
    write_json(json1, table);
    write_json(json2, table);
    CHECK(csv1.str() == csv2.str());
    CHECK(json1.str() == json2.str());
    CHECK(csv1.str().starts_with("n,k,count\n1,1,1\n"));
}
