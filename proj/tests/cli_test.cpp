#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pawns/enumeration.hpp"
#include "pawns_cli/app.hpp"
#include "pawns_cli/count.hpp"
#include "pawns_cli/record.hpp"

namespace pawns::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run pawns(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const Run& r) {
  return std::get<std::string>(record_from_json(r.out).value);
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("pawns_cli_test_" + std::to_string(counter_++) + ".txt");
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliCount, Examples) {
  auto r = pawns({"count", "-m", "3", "-n", "5", "--quantity", "M", "--json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(value_of(r), "2117");
  EXPECT_EQ(value_of(pawns({"count", "-m", "2", "-n", "3", "--quantity", "U", "--json"})), "36");
  EXPECT_EQ(value_of(pawns({"count", "-m", "1", "-n", "1", "--quantity", "L", "--json"})), "2");
  EXPECT_EQ(pawns({"count", "-m", "3", "-n", "5"}).out, "M(3,5) = 2117  [closed]\n");
}

TEST(CliCount, RecordShape) {
  const auto r = pawns({"count", "-m", "3", "-n", "3", "--quantity", "U", "--k", "3", "--json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            R"({"command":"count","quantity":"Uk","m":3,"n":3,"k":3,"method":"closed","value":"448","annotations":[]})"
            "\n");
}

TEST(CliCount, HeightFiveClosedFormCarriesErratum) {
  const auto rec = record_from_json(pawns({"count", "-m", "5", "-n", "2", "--method", "closed", "--json"}).out);
  EXPECT_EQ(std::get<std::string>(rec.value), "169");
  ASSERT_EQ(rec.annotations.size(), 1u);
  EXPECT_NE(rec.annotations[0].find("156"), std::string::npos);
  EXPECT_TRUE(record_from_json(pawns({"count", "-m", "5", "-n", "2", "--method", "transfer", "--json"}).out)
                  .annotations.empty());
}

TEST(CliCount, LargeValuesStayExact) {
  const auto r = pawns({"count", "-m", "3", "-n", "200", "--json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_GT(value_of(r).size(), 100u);
  EXPECT_EQ(value_of(r), value_of(pawns({"count", "-m", "200", "-n", "3", "--method", "transfer", "--json"})));
}

TEST(CliCount, ExitCodes) {
  const auto guard = pawns({"count", "-m", "6", "-n", "6", "--method", "oracle"});
  EXPECT_EQ(guard.code, kGuard);
  EXPECT_NE(guard.err.find("closed"), std::string::npos);
  EXPECT_EQ(pawns({"count", "-m", "30", "-n", "30", "--method", "transfer"}).code, kGuard);
  EXPECT_EQ(pawns({"count", "-m", "3"}).code, kUsage);
  EXPECT_EQ(pawns({"count", "-m", "0", "-n", "3"}).code, kUsage);
  EXPECT_EQ(pawns({"count", "-m", "3", "-n", "3", "--quantity", "X"}).code, kUsage);
  EXPECT_EQ(pawns({"count", "-m", "3", "-n", "3", "--k", "3"}).code, kUsage);
  EXPECT_EQ(pawns({"count", "-m", "9", "-n", "9", "--quantity", "L", "--method", "closed"}).code, kUsage);
  EXPECT_EQ(pawns({"count", "-m", "3", "-n", "3", "--quantity", "U", "--method", "decomposition"}).code,
            kUsage);
  EXPECT_EQ(pawns({}).code, kUsage);
  EXPECT_EQ(pawns({"--help"}).code, kOk);
}

// Every pair of engines that accepts a query returns the same value.
TEST(CliCountProperty, MethodsAgree) {
  for (Quantity q : {Quantity::M, Quantity::U, Quantity::L}) {
    for (std::size_t m = 1; m <= 7; ++m) {
      for (std::size_t n = 1; n <= 7; ++n) {
        const CountQuery query{q, m, n, 2};
        const auto methods = viable_methods(query);
        ASSERT_FALSE(methods.empty());
        const BigCount first = count(query, methods.front()).value;
        for (const auto& method : methods) {
          EXPECT_EQ(count(query, method).value, first) << quantity_name(query) << " " << m << "x" << n << " "
                                                       << method;
        }
        EXPECT_EQ(count(query, "auto").value, first);
      }
    }
  }
}

TEST(CliEigen, Examples) {
  EXPECT_EQ(pawns({"eigen", "-m", "2"}).out, "alpha_2 = 2.6180339887\n");
  EXPECT_EQ(pawns({"eigen", "-m", "3"}).out, "alpha_3 = 4.3027756377\n");
  EXPECT_EQ(pawns({"eigen", "-m", "1"}).out, "alpha_1 = 2.0000000000\n");
  const auto rec = record_from_json(pawns({"eigen", "-m", "4", "--spectrum", "--json"}).out);
  EXPECT_EQ(rec.quantity, "alpha");
  EXPECT_NEAR(std::get<double>(rec.value), 6.1563251746, 1e-9);
  EXPECT_EQ(rec.spectrum.size(), 16u);
}

TEST(CliEigen, ExitCodes) {
  EXPECT_EQ(pawns({"eigen", "-m", "6", "--tol", "1e-14", "--max-iter", "2"}).code, kNonConverged);
  EXPECT_EQ(pawns({"eigen", "-m", "12", "--spectrum"}).code, kGuard);
  EXPECT_EQ(pawns({"eigen", "-m", "0"}).code, kUsage);
}

TEST(CliTable, Examples) {
  const auto md = pawns({"table", "--quantity", "M", "--max-m", "3", "--max-n", "4"});
  EXPECT_EQ(md.code, kOk);
  EXPECT_NE(md.out.find("| 3 | 8 | 25 | 119 | 484 |"), std::string::npos);

  const auto csv = pawns({"table", "--quantity", "M", "--max-m", "2", "--max-n", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "m,n,quantity,value\n1,1,M,2\n1,2,M,4\n2,1,M,4\n2,2,M,9\n");

  const auto l = pawns({"table", "--quantity", "L", "--max-m", "2", "--max-n", "3", "--format", "csv"});
  EXPECT_NE(l.out.find("2,3,L,11\n"), std::string::npos);

  const auto json = pawns({"table", "--quantity", "U", "--max-m", "2", "--max-n", "2", "--format", "json"});
  EXPECT_EQ(json.out.front(), '[');
  EXPECT_NE(json.out.find(R"("value":"12")"), std::string::npos);
}

TEST(CliBijection, Examples) {
  TempFile one("1");
  EXPECT_EQ(pawns({"bijection", "--matrix-file", one.path()}).out,
            "{\"rows\":2,\"cols\":2,\"anchors\":[[1,1]]}\n");
  TempFile zeros("00\n00");
  EXPECT_EQ(pawns({"bijection", "--matrix-file", zeros.path()}).out,
            "{\"rows\":3,\"cols\":3,\"anchors\":[]}\n");
  EXPECT_EQ(pawns({"bijection", "--matrix-file", zeros.path(), "--ascii"}).out, "...\n...\n...\n");
}

TEST(CliBijection, RoundTripIsByteIdentical) {
  for_each_legal({3, 3}, ForbiddenPatternSet::l_set(), [](const BinaryMatrix& mat) {
    const std::string text = format_matrix(mat);
    TempFile in(text);
    const auto forward = pawns({"bijection", "--matrix-file", in.path()});
    ASSERT_EQ(forward.code, kOk);
    TempFile tiling(forward.out);
    const auto back = pawns({"bijection", "--tiling-json", tiling.path(), "--invert"});
    ASSERT_EQ(back.code, kOk);
    EXPECT_EQ(back.out, text);
  });
}

TEST(CliBijection, Errors) {
  TempFile bad("011\n000\n");
  const auto r = pawns({"bijection", "--matrix-file", bad.path()});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_NE(r.err.find("(1,2)"), std::string::npos);
  TempFile overlap(R"({"rows":3,"cols":3,"anchors":[[1,1],[2,2]]})");
  const auto o = pawns({"bijection", "--tiling-json", overlap.path(), "--invert"});
  EXPECT_EQ(o.code, kBadInput);
  EXPECT_NE(o.err.find("(2,2)"), std::string::npos);
  TempFile ragged("01\n1\n");
  EXPECT_EQ(pawns({"bijection", "--matrix-file", ragged.path()}).code, kBadInput);
  EXPECT_EQ(pawns({"bijection", "--matrix-file", "/nonexistent/file"}).code, kBadInput);
  EXPECT_EQ(pawns({"bijection"}).code, kUsage);
  EXPECT_EQ(pawns({"bijection", "--tiling-json", overlap.path()}).code, kUsage);
  EXPECT_EQ(pawns({"bijection", "--matrix-file", bad.path(), "--invert"}).code, kUsage);
}

TEST(CliVerify, QuickPassesAndReportsDeviation) {
  const auto r = pawns({"verify", "--level", "quick"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("printed 156 vs true 169 at (5,2)"), std::string::npos);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  const auto j = pawns({"verify", "--json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_NE(j.out.find(R"("passed":true)"), std::string::npos);
  EXPECT_NE(j.out.find(R"("status":"deviation")"), std::string::npos);
}

TEST(CliVerify, FullIncludesDecompositionGrid) {
  const auto r = pawns({"verify", "--level", "full"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("decomposition-grid"), std::string::npos);
}

TEST(OutputRecordJson, RoundTripsByteIdentically) {
  const std::vector<std::vector<std::string>> commands = {
      {"count", "-m", "5", "-n", "7", "--json"},
      {"count", "-m", "4", "-n", "4", "--quantity", "L", "--method", "oracle", "--json"},
      {"count", "-m", "4", "-n", "4", "--method", "decomposition", "--json"},
      {"eigen", "-m", "5", "--json"},
      {"eigen", "-m", "3", "--spectrum", "--json"},
  };
  for (const auto& args : commands) {
    const auto r = pawns(args);
    ASSERT_EQ(r.code, kOk);
    const std::string line = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(to_json(record_from_json(line)), line);
  }
  OutputRecord rec{"eigen", "alpha", 2, std::nullopt, std::nullopt, "power-iteration", 0.1, {"x"}, {}};
  EXPECT_EQ(record_from_json(to_json(rec)), rec);
}

TEST(OutputRecordJson, RejectsMalformed) {
  EXPECT_THROW(record_from_json("{}"), ParseError);
  EXPECT_THROW(record_from_json("not json"), ParseError);
  EXPECT_THROW(record_from_json(
                   R"({"command":"count","quantity":"M","method":"oracle","value":12,"annotations":[]})"),
               ParseError);
}

}  // namespace
}  // namespace pawns::cli
