#include <gtest/gtest.h>

#include "soltes/cayley.hpp"
#include "soltes/enumerate.hpp"

using namespace soltes;

TEST(Extended, CubicSixteen) {
    const TableRow row = classify_table(16, 3, 0);
    EXPECT_EQ(row.total, 4060);
    EXPECT_EQ(row.counts, (std::map<std::int64_t, std::int64_t>{{1, 108}, {2, 37}, {3, 1}, {4, 2}}));
}

TEST(Extended, EveryCatalogTransform) {
    for (const auto& e : load_catalog()) {
        const EntryReport r = verify_entry(e, true, 0);
        EXPECT_TRUE(r.passed()) << e.name << ": " << (r.mismatches.empty() ? "" : r.mismatches.front());
    }
}
