#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sumeval_cli/cli.hpp"
#include "table1.hpp"
#include "temp_dir.hpp"

using sumeval::cli::run_cli;
using sumeval::testing::read_file;

namespace {

const std::string kTestdata = SUMEVAL_TESTDATA_DIR;
const std::string kTwoPairs = kTestdata + "/synthetic/two_pairs.jsonl";
const std::string kTwoPairsSystem = kTestdata + "/synthetic/two_pairs.system.jsonl";
const std::string kAppendix = kTestdata + "/appendix/appendix.jsonl";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sumeval");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate exit codes") {
  const auto ok = run({"validate", "--corpus", kAppendix});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok: 9 records (test 9)\n");

  const auto dup = run({"validate", "--corpus", kTestdata + "/synthetic/duplicate_id.jsonl"});
  CHECK(dup.code == 1);
  CHECK(dup.err.find("line 3") != std::string::npos);
  CHECK(dup.err.find("line 1") != std::string::npos);

  CHECK(run({"validate", "--corpus", kTestdata + "/synthetic/missing.jsonl"}).code == 2);
  CHECK(run({"validate", "--corpus", kTestdata + "/synthetic/empty.jsonl"}).code == 1);
  CHECK(run({"validate", "--corpus", kTestdata + "/synthetic/bad_split.jsonl"}).code == 1);
  CHECK(run({"validate", "--corpus", kTestdata + "/synthetic/two_pairs.csv"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"score", "--corpus", kTwoPairs}).code == 2);
  CHECK(run({"score", "--corpus", kTwoPairs, "--system", "nameonly"}).code == 2);
  CHECK(run({"score", "--corpus", kTwoPairs, "--system", "s=" + kTwoPairsSystem, "--split", "dev"})
            .code == 2);
  CHECK(run({"score", "--corpus", kTwoPairs, "--system", "s=" + kTwoPairsSystem, "--metrics",
             "rouge3"})
            .code == 2);
  CHECK(run({"score", "--corpus", kTwoPairs, "--system", "s=" + kTwoPairsSystem, "--format",
             "html"})
            .code == 2);
  CHECK(run({"score", "--corpus", kTwoPairs, "--system", "s=" + kTwoPairsSystem, "--system",
             "s=" + kTwoPairsSystem})
            .code == 2);
  CHECK(run({"baseline", "--corpus", kTwoPairs, "--kind", "random"}).code == 2);
  CHECK(run({"baseline", "--corpus", kTwoPairs, "--kind", "textrank", "--damping", "1.5"}).code ==
        2);
  CHECK(run({"score", "--corpus", kTwoPairs, "--system", "s=" + kTwoPairsSystem, "--jobs", "0"})
            .code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("score") != std::string::npos);
}

TEST_CASE("stats prints JSON") {
  const auto r = run({"stats", "--corpus", kTestdata + "/synthetic/stats_two.jsonl"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total_records"] == 2);
  CHECK(j["overall"]["mean_summary_words"] == 5.0);
  CHECK(j["overall"]["mean_title_words"] == 4.0);
  CHECK(j["overall"]["mean_summary_sentences"] == 1.0);
  CHECK(j["splits"]["test"]["records"] == 2);

  const auto single = nlohmann::json::parse(
      run({"stats", "--corpus", kTestdata + "/synthetic/single.jsonl"}).out);
  CHECK(single["overall"]["mean_summary_words"] == 5.0);
  CHECK(single["overall"]["mean_title_words"].is_null());

  CHECK(run({"stats", "--corpus", kTestdata + "/synthetic/empty.jsonl"}).code == 1);
}

TEST_CASE("baseline writes system outputs") {
  sumeval::testing::TempDir dir;
  const auto lead = dir.file("lead.jsonl");
  REQUIRE(run({"baseline", "--corpus", kTwoPairs, "--kind", "lead", "--lead-n", "1", "--out", lead})
              .code == 0);
  std::istringstream in(read_file(lead));
  const auto out = sumeval::corpus::load_system_outputs(in, "lead");
  CHECK(*out.find("p1") == "Ο ήλιος λάμπει πάνω από την Αθήνα.");
  CHECK(*out.find("p2") == "Βρέχει στην πόλη από το πρωί.");

  const auto tr = dir.file("tr.jsonl");
  REQUIRE(run({"baseline", "--corpus", kTestdata + "/synthetic/one_sentence.jsonl", "--kind",
               "textrank", "--topk", "1", "--out", tr})
              .code == 0);
  std::istringstream tin(read_file(tr));
  const auto trout = sumeval::corpus::load_system_outputs(tin, "tr");
  CHECK(*trout.find("o1") == "Η κυβέρνηση ανακοίνωσε νέο πρόγραμμα στήριξης.");
  CHECK(*trout.find("o2") == "Ο καιρός θα είναι ζεστός αύριο");

  const auto again = dir.file("tr2.jsonl");
  run({"baseline", "--corpus", kAppendix, "--kind", "textrank", "--out", tr});
  run({"baseline", "--corpus", kAppendix, "--kind", "textrank", "--out", again, "--jobs", "4"});
  CHECK(read_file(tr) == read_file(again));

  CHECK(run({"baseline", "--corpus", kTwoPairs, "--out", dir.file("no/such/dir.jsonl")}).code == 2);
  CHECK(run({"baseline", "--corpus", kTwoPairs, "--split", "train"}).code == 1);
}

TEST_CASE("score prints the table and writes the report") {
  SUBCASE("references against themselves") {
    sumeval::testing::TempDir dir;
    const auto refs = dir.file("refs.jsonl");
    {
      std::ofstream f(refs);
      f << R"({"id":"p1","summary":"Ο ήλιος λάμπει."})" << "\n"
        << R"({"id":"p2","summary":"Βρέχει στην πόλη."})" << "\n";
    }
    const auto r = run({"score", "--corpus", kTwoPairs, "--system", "gold=" + refs, "--metrics",
                        "rouge1"});
    CHECK(r.code == 0);
    CHECK(r.out == "Approach  ROUGE-1\n-----------------\ngold       100.00\n");
    CHECK(r.err.find("# effective config: sumeval score") != std::string::npos);
  }
  SUBCASE("hand-computed fixture") {
    const auto r = run({"score", "--corpus", kTwoPairs, "--system", "sys=" + kTwoPairsSystem,
                        "--metrics", "rouge1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sys         33.33") != std::string::npos);
  }
  SUBCASE("bertscore without stores") {
    const auto r = run({"score", "--corpus", kTwoPairs, "--system", "sys=" + kTwoPairsSystem,
                        "--metrics", "rouge1,bertscore", "--cand-embeddings",
                        kTestdata + "/embeddings/cands.jsonl"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--ref-embeddings") != std::string::npos);
  }
  SUBCASE("bertscore with stores") {
    sumeval::testing::TempDir dir;
    const auto out = dir.file("report.json");
    const auto r = run({"score", "--corpus", kTwoPairs, "--system", "sys=" + kTwoPairsSystem,
                        "--metrics", "rouge1,bertscore", "--cand-embeddings",
                        kTestdata + "/embeddings/cands.jsonl", "--ref-embeddings",
                        kTestdata + "/embeddings/refs.jsonl", "--format", "json", "--out", out});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(read_file(out));
    CHECK(j["systems"][0]["metrics"]["rouge1"]["f1"] == 33.33);
    CHECK(j["systems"][0]["metrics"]["bertscore"]["f1"] == 45.12);
  }
  SUBCASE("missing system file") {
    CHECK(run({"score", "--corpus", kTwoPairs, "--system", "sys=" + kTestdata + "/nope.jsonl"})
              .code == 2);
  }
  SUBCASE("missing ids") {
    const auto partial = kTestdata + "/synthetic/two_pairs.partial.jsonl";
    const auto lenient =
        run({"score", "--corpus", kTwoPairs, "--system", "p=" + partial, "--metrics", "rouge1"});
    CHECK(lenient.code == 0);
    CHECK(lenient.out.find("66.67") != std::string::npos);
    CHECK(lenient.err.find("excluded") != std::string::npos);
    const auto strict = run({"score", "--corpus", kTwoPairs, "--system", "p=" + partial,
                             "--metrics", "rouge1", "--strict-missing"});
    CHECK(strict.out.find("33.33") != std::string::npos);
  }
}

TEST_CASE("score output is byte-identical across runs and job counts") {
  sumeval::testing::TempDir dir;
  std::vector<std::string> args = {"score", "--corpus", kAppendix};
  for (const char* key : {"mt5-small", "umt5-small", "umt5-base", "greekbart", "textrank"}) {
    args.push_back("--system");
    args.push_back(std::string(key) + "=" + kTestdata + "/appendix/appendix." + key + ".jsonl");
  }
  args.insert(args.end(), {"--metrics", "rouge1,rouge2,rougeL", "--format", "csv"});
  auto with = [&](const std::string& jobs, const std::string& out) {
    auto a = args;
    a.insert(a.end(), {"--jobs", jobs, "--out", out});
    return run(a);
  };
  const auto r1 = with("1", dir.file("a.csv"));
  const auto r2 = with("1", dir.file("b.csv"));
  const auto r8 = with("8", dir.file("c.csv"));
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == r8.out);
  CHECK(read_file(dir.file("a.csv")) == read_file(dir.file("b.csv")));
  CHECK(read_file(dir.file("a.csv")) == read_file(dir.file("c.csv")));
}
