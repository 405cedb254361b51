#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "sumeval/corpus.hpp"
#include "sumeval/fixtures.hpp"

using namespace sumeval;
using namespace sumeval::corpus;

namespace {

const std::string kTestdata = SUMEVAL_TESTDATA_DIR;

Corpus load_text(const std::string& text, const FormatDescriptor& fmt = {}) {
  std::istringstream in(text);
  return load_corpus(in, fmt);
}

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  std::istringstream in(text);
  try {
    load_corpus(in);
  } catch (const CorpusError& e) {
    return e.diagnostics();
  }
  return {};
}

bool mentions(const std::vector<Diagnostic>& ds, std::size_t line, const std::string& field,
              const std::string& fragment) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) {
    return d.line == line && d.field == field && d.message.find(fragment) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("two well-formed records load with an index") {
  const auto c = load_text(
      R"({"id":"a","article":"Κείμενο.","summary":"Περίληψη.","split":"test"})"
      "\n"
      R"({"id":"b","article":"Άλλο.","summary":"Σύνοψη.","title":"Τίτλος","topic":"x","split":"train"})"
      "\n");
  REQUIRE(c.size() == 2);
  REQUIRE(c.find("a") != nullptr);
  REQUIRE(c.find("b") != nullptr);
  CHECK(c.find("zz") == nullptr);
  CHECK(c.find("b")->title == "Τίτλος");
  CHECK(c.find("b")->topic == "x");
  CHECK_FALSE(c.find("a")->title.has_value());
  CHECK(c.in_split(Split::Test).size() == 1);
  CHECK(c.in_split(Split::Validation).empty());
}

TEST_CASE("empty summary is rejected with line and field") {
  const auto ds = diagnostics_of(
      R"({"id":"a","article":"Κείμενο.","summary":"Περίληψη.","split":"test"})"
      "\n"
      R"({"id":"b","article":"Άλλο.","summary":"  ","split":"test"})"
      "\n");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].line == 2);
  CHECK(ds[0].field == "summary");
  CHECK(ds[0].to_string().find("line 2") != std::string::npos);
}

TEST_CASE("duplicate id cites both lines") {
  const auto ds = diagnostics_of(
      R"({"id":"a","article":"Ένα.","summary":"Ένα.","split":"test"})"
      "\n"
      R"({"id":"b","article":"Δύο.","summary":"Δύο.","split":"test"})"
      "\n"
      R"({"id":"a","article":"Τρία.","summary":"Τρία.","split":"test"})"
      "\n");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].line == 3);
  CHECK(ds[0].message.find("line 1") != std::string::npos);
}

TEST_CASE("every problem in a file is reported") {
  const auto ds = diagnostics_of(
      "{not json}\n"
      R"({"id":"","article":"x","summary":"y","split":"test"})"
      "\n"
      R"({"id":"c","article":"x","summary":"y","split":"dev"})"
      "\n"
      R"({"id":"d","summary":"y","split":"test"})"
      "\n");
  CHECK(ds.size() >= 4);
  CHECK(mentions(ds, 1, "", ""));
  CHECK(mentions(ds, 2, "id", ""));
  CHECK(mentions(ds, 3, "split", "unknown split"));
  CHECK(mentions(ds, 4, "article", ""));
}

TEST_CASE("permissive load skips invalid records") {
  std::istringstream in(
      R"({"id":"a","article":"x","summary":"y","split":"test"})"
      "\n"
      R"({"id":"b","article":"x","summary":"","split":"test"})"
      "\n");
  std::vector<Diagnostic> skipped;
  const auto c = load_corpus(in, {}, LoadOptions{true}, &skipped);
  CHECK(c.size() == 1);
  REQUIRE(skipped.size() == 1);
  CHECK(skipped[0].line == 2);
}

TEST_CASE("blank lines are ignored and line numbers stay physical") {
  const auto ds = diagnostics_of(
      "\n\n"
      R"({"id":"a","article":"x","summary":"","split":"test"})"
      "\n");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].line == 3);
}

TEST_CASE("invalid UTF-8 is a diagnostic") {
  const auto ds = diagnostics_of("{\"id\":\"a\",\"article\":\"\xC3\",\"summary\":\"y\",\"split\":\"test\"}\n");
  CHECK_FALSE(ds.empty());
}

TEST_CASE("CSV corpus with header mapping") {
  const auto c = load_corpus_file(kTestdata + "/synthetic/two_pairs.csv");
  REQUIRE(c.size() == 2);
  CHECK(c.find("p1")->article == "Ο ήλιος λάμπει πάνω από την Αθήνα. Η θερμοκρασία ανεβαίνει.");
  CHECK_FALSE(c.find("p1")->title.has_value());
  CHECK(c.find("p2")->title == "Καιρός, σήμερα");
  CHECK(c.find("p2")->topic == "weather");
  CHECK_FALSE(c == load_corpus_file(kTestdata + "/synthetic/two_pairs.jsonl"));

  FormatDescriptor renamed;
  renamed.format = RecordFormat::Csv;
  renamed.fields.article = "body";
  renamed.fields.summary = "abstract";
  const auto r = load_text("id,body,abstract,split\nq,\"Α, Β.\",Γ.,validation\n", renamed);
  REQUIRE(r.size() == 1);
  CHECK(r.records()[0].article == "Α, Β.");
  CHECK(r.records()[0].split == Split::Validation);
}

TEST_CASE("CSV missing a required column") {
  std::istringstream in("id,article,split\na,x,test\n");
  FormatDescriptor fmt;
  fmt.format = RecordFormat::Csv;
  CHECK_THROWS_AS(load_corpus(in, fmt), CorpusError);
}

TEST_CASE("format is chosen by extension") {
  CHECK(FormatDescriptor::for_path("x.csv").format == RecordFormat::Csv);
  CHECK(FormatDescriptor::for_path("x.CSV").format == RecordFormat::Csv);
  CHECK(FormatDescriptor::for_path("x.jsonl").format == RecordFormat::JsonLines);
}

TEST_CASE("missing file is an IoError") {
  CHECK_THROWS_AS(load_corpus_file(kTestdata + "/synthetic/absent.jsonl"), IoError);
}

TEST_CASE("round trip through the corpus format is lossless") {
  for (const auto& path : {kTestdata + "/appendix/appendix.jsonl",
                           kTestdata + "/synthetic/two_pairs.csv",
                           kTestdata + "/synthetic/stats_two.jsonl"}) {
    const auto c = load_corpus_file(path);
    std::ostringstream out;
    write_corpus(out, c);
    CHECK(load_text(out.str()) == c);
    std::ostringstream again;
    write_corpus(again, load_text(out.str()));
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("appendix fixtures keep Greek bytes exactly") {
  const auto c = fixtures::appendix_corpus();
  std::ostringstream out;
  write_corpus(out, c);
  const auto back = load_text(out.str());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back.records()[i].article == c.records()[i].article);
    CHECK(back.records()[i].summary == c.records()[i].summary);
  }
}

TEST_CASE("system outputs") {
  SUBCASE("single entry") {
    std::istringstream in(R"({"id":"a","summary":"x"})" "\n");
    const auto s = load_system_outputs(in, "sys");
    CHECK(s.name() == "sys");
    CHECK(s.size() == 1);
    REQUIRE(s.find("a") != nullptr);
    CHECK(*s.find("a") == "x");
  }
  SUBCASE("duplicate id") {
    std::istringstream in(R"({"id":"a","summary":"x"})" "\n" R"({"id":"a","summary":"y"})" "\n");
    CHECK_THROWS_AS(load_system_outputs(in, "sys"), CorpusError);
  }
  SUBCASE("empty stream") {
    std::istringstream in("");
    CHECK(load_system_outputs(in, "sys").size() == 0);
  }
  SUBCASE("empty summaries are kept") {
    std::istringstream in(R"({"id":"a","summary":""})" "\n");
    const auto s = load_system_outputs(in, "sys");
    REQUIRE(s.find("a") != nullptr);
    CHECK(s.find("a")->empty());
  }
  SUBCASE("round trip") {
    const auto s = fixtures::appendix_outputs("greekbart");
    std::ostringstream out;
    write_system_outputs(out, s);
    std::istringstream in(out.str());
    CHECK(load_system_outputs(in, "greekbart") == s);
  }
  SUBCASE("add rejects duplicates") {
    SystemOutput s("x");
    s.add("a", "1");
    CHECK_THROWS_AS(s.add("a", "2"), DataError);
  }
}

TEST_CASE("Corpus constructor enforces unique non-empty ids") {
  DocumentRecord a{"a", "x", "y", {}, {}, Split::Test};
  CHECK_THROWS_AS((Corpus({a, a})), DataError);
  DocumentRecord blank{"", "x", "y", {}, {}, Split::Test};
  CHECK_THROWS_AS((Corpus({blank})), DataError);
}

TEST_CASE("stats over the two-record fixture") {
  const auto stats = compute_stats(load_corpus_file(kTestdata + "/synthetic/stats_two.jsonl"));
  CHECK(stats.total_records == 2);
  CHECK(stats.overall.records == 2);
  CHECK(stats.overall.mean_summary_words == doctest::Approx(5.0));
  REQUIRE(stats.overall.mean_title_words.has_value());
  CHECK(*stats.overall.mean_title_words == doctest::Approx(4.0));
  CHECK(stats.overall.mean_summary_sentences == doctest::Approx(1.0));
  REQUIRE(stats.per_split.count(Split::Test) == 1);
  CHECK(stats.per_split.at(Split::Test).mean_summary_words == doctest::Approx(5.0));
}

TEST_CASE("stats of a single record equal its counts") {
  const auto stats = compute_stats(load_corpus_file(kTestdata + "/synthetic/single.jsonl"));
  CHECK(stats.overall.mean_summary_words == doctest::Approx(5.0));
  CHECK(stats.overall.mean_summary_sentences == doctest::Approx(2.0));
  CHECK_FALSE(stats.overall.mean_title_words.has_value());
}

TEST_CASE("stats reject an empty corpus") {
  CHECK_THROWS_AS((compute_stats(Corpus{})), DataError);
}

TEST_CASE("stats are permutation invariant and split counts sum to the total") {
  auto records = fixtures::appendix_corpus().records();
  const Split labels[] = {Split::Train, Split::Validation, Split::Test};
  for (std::size_t i = 0; i < records.size(); ++i) records[i].split = labels[i % 3];
  const auto base = compute_stats(Corpus(records));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    const auto s = compute_stats(Corpus(records));
    CHECK(s.overall.mean_summary_words == base.overall.mean_summary_words);
    CHECK(s.overall.mean_summary_sentences == base.overall.mean_summary_sentences);
    std::size_t sum = 0;
    for (const auto& [split, st] : s.per_split) {
      sum += st.records;
      CHECK(st.mean_summary_words == base.per_split.at(split).mean_summary_words);
    }
    CHECK(sum == s.total_records);
  }
}

TEST_CASE("split proportion warnings") {
  std::vector<DocumentRecord> records;
  auto add = [&](Split s, int n) {
    for (int i = 0; i < n; ++i) {
      records.push_back({std::string(to_string(s)) + std::to_string(i), "x", "y", {}, {}, s});
    }
  };
  SUBCASE("single split is silent") {
    add(Split::Test, 5);
    CHECK(check_split_proportions(Corpus(records)).empty());
  }
  SUBCASE("reference proportions are silent") {
    add(Split::Train, 174);
    add(Split::Validation, 13);
    add(Split::Test, 13);
    CHECK(check_split_proportions(Corpus(records)).empty());
  }
  SUBCASE("skewed proportions warn") {
    add(Split::Train, 50);
    add(Split::Test, 50);
    const auto w = check_split_proportions(Corpus(records));
    CHECK(w.size() == 3);
  }
}

TEST_CASE("split labels") {
  CHECK(parse_split("train") == Split::Train);
  CHECK(parse_split("validation") == Split::Validation);
  CHECK(parse_split("test") == Split::Test);
  CHECK_FALSE(parse_split("dev").has_value());
  CHECK(to_string(Split::Validation) == "validation");
}
