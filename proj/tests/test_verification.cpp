#include <gtest/gtest.h>

#include "catlab/errors.hpp"
#include "catlab/verification.hpp"

namespace {

namespace verify = catlab::verify;

TEST(Verification, Parsing) {
  EXPECT_EQ(verify::parse_suite("paper7"), verify::suite::paper7);
  EXPECT_EQ(verify::parse_profile("strict"), verify::tolerance_profile::strict);
  EXPECT_EQ(verify::to_string(verify::tolerance_profile::standard), "default");
  EXPECT_THROW(verify::parse_suite("bogus"), catlab::domain_error);
  EXPECT_THROW(verify::parse_profile("lenient"), catlab::domain_error);
}

TEST(Verification, OracleSuitePasses) {
  verify::options opts;
  opts.which = verify::suite::oracle;
  const auto report = verify::run(opts);
  ASSERT_EQ(report.rows.size(), 5u);
  for (const auto& row : report.rows) EXPECT_TRUE(row.passed) << row.id << ": " << row.observed;
}

TEST(Verification, TableColumns) {
  verify::options opts;
  opts.which = verify::suite::oracle;
  const auto table = verify::render_table(verify::run(opts));
  for (const char* column : {"quantity", "paper value", "ours", "tolerance", "verdict"}) {
    EXPECT_NE(table.find(column), std::string::npos) << column;
  }
}

TEST(Verification, PublishedValueSuiteReproducible) {
  verify::options opts;
  opts.which = verify::suite::paper7;
  opts.threads = 1;
  const auto a = verify::render_json(verify::run(opts));
  opts.threads = 3;
  const auto b = verify::render_json(verify::run(opts));
  EXPECT_EQ(a, b);
}

}  // namespace
