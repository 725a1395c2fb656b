#include <doctest.h>

#include <string>

#include "rulemine/corpus.hpp"
#include "rulemine/error.hpp"
#include "support/helpers.hpp"

using namespace rulemine;
using testsup::ScratchDir;
using testsup::write_file;

namespace {

const char* kThreeRows =
    "No,BAB,Hadist,Len\n"
    "1,1,Beriman dan shalatlah,21\n"
    "2,1,Shalat malam dua rakaat,23\n"
    "3,2,Membaca ayat yang turun,23\n";

bool same_documents(const Corpus& a, const Corpus& b) {
    if (a.documents.size() != b.documents.size()) return false;
    for (std::size_t i = 0; i < a.documents.size(); ++i) {
        const auto& x = a.documents[i];
        const auto& y = b.documents[i];
        if (x.row_id != y.row_id || x.chapter_id != y.chapter_id || x.text != y.text ||
            x.declared_length != y.declared_length) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("load_csv well-formed input") {
    ScratchDir dir("corpus");
    write_file(dir.file("ok.csv"), kThreeRows);
    Corpus corpus = load_csv(dir.file("ok.csv"), ColumnMap{}, false);
    REQUIRE(corpus.documents.size() == 3);
    CHECK(corpus.report.accepted == 3);
    CHECK(corpus.report.skipped == 0);
    CHECK(corpus.documents[0].row_id == 1);
    CHECK(corpus.documents[0].chapter_id == 1);
    CHECK(corpus.documents[0].text == "Beriman dan shalatlah");
    CHECK(corpus.documents[0].declared_length == 21);
    CHECK(corpus.documents[2].row_id == 3);

    SUBCASE("ingestion is deterministic") {
        Corpus again = load_csv(dir.file("ok.csv"), ColumnMap{}, false);
        CHECK(same_documents(corpus, again));
    }
}

TEST_CASE("load_csv empty text row") {
    ScratchDir dir("corpus");
    write_file(dir.file("empty.csv"), "No,BAB,Hadist,Len\n1,1,,0\n");
    SUBCASE("skipped and counted when skip_invalid") {
        Corpus corpus = load_csv(dir.file("empty.csv"), ColumnMap{}, true);
        CHECK(corpus.documents.empty());
        CHECK(corpus.report.skipped == 1);
        CHECK(corpus.report.accepted + corpus.report.skipped == 1);
    }
    SUBCASE("validation error otherwise") {
        CHECK_THROWS_WITH_AS(load_csv(dir.file("empty.csv"), ColumnMap{}, false),
                             doctest::Contains("empty text"), Error);
    }
}

TEST_CASE("load_csv duplicate row id") {
    ScratchDir dir("corpus");
    write_file(dir.file("dup.csv"), "No,BAB,Hadist\n7,1,alpha beta\n7,2,gamma delta\n");
    SUBCASE("error by default") {
        CHECK_THROWS_WITH_AS(load_csv(dir.file("dup.csv"), ColumnMap{}, false),
                             doctest::Contains("duplicate row id 7"), Error);
    }
    SUBCASE("counted when skip_invalid") {
        Corpus corpus = load_csv(dir.file("dup.csv"), ColumnMap{}, true);
        CHECK(corpus.documents.size() == 1);
        CHECK(corpus.report.skipped == 1);
    }
}

TEST_CASE("load_csv schema and io errors") {
    ScratchDir dir("corpus");
    SUBCASE("missing file is an io error") {
        try {
            load_csv(dir.file("nope.csv"), ColumnMap{}, false);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::io);
        }
    }
    SUBCASE("missing mapped column is a schema error") {
        write_file(dir.file("cols.csv"), "No,Chapter,Hadist\n1,1,text here\n");
        CHECK_THROWS_WITH_AS(load_csv(dir.file("cols.csv"), ColumnMap{}, false),
                             doctest::Contains("missing mapped column 'BAB'"), Error);
    }
    SUBCASE("non-UTF-8 input is rejected") {
        write_file(dir.file("latin1.csv"), "No,BAB,Hadist\n1,1,caf\xE9 latin1\n");
        CHECK_THROWS_WITH_AS(load_csv(dir.file("latin1.csv"), ColumnMap{}, false),
                             doctest::Contains("not valid UTF-8"), Error);
    }
    SUBCASE("invalid row id") {
        write_file(dir.file("badid.csv"), "No,BAB,Hadist\nzero,1,some text\n");
        CHECK_THROWS_AS(load_csv(dir.file("badid.csv"), ColumnMap{}, false), Error);
        write_file(dir.file("badid2.csv"), "No,BAB,Hadist\n0,1,some text\n");
        CHECK_THROWS_AS(load_csv(dir.file("badid2.csv"), ColumnMap{}, false), Error);
    }
}

TEST_CASE("load_csv length column handling") {
    ScratchDir dir("corpus");
    SUBCASE("absent Len column recomputes character counts") {
        write_file(dir.file("nolen.csv"), "No,BAB,Hadist\n1,1,école\n");
        Corpus corpus = load_csv(dir.file("nolen.csv"), ColumnMap{}, false);
        CHECK(corpus.documents[0].declared_length == 5);  // codepoints, not bytes
    }
    SUBCASE("declared length is stored but not trusted") {
        write_file(dir.file("len.csv"), "No,BAB,Hadist,Len\n1,1,abc,999\n");
        Corpus corpus = load_csv(dir.file("len.csv"), ColumnMap{}, false);
        CHECK(corpus.documents[0].declared_length == 999);
    }
}

TEST_CASE("load_csv quoting and delimiters") {
    ScratchDir dir("corpus");
    SUBCASE("RFC-4180 quoting") {
        write_file(dir.file("quoted.csv"),
                   "No,BAB,Hadist\n1,1,\"text, with comma and \"\"quote\"\"\"\n"
                   "2,1,\"two\nlines\"\n");
        Corpus corpus = load_csv(dir.file("quoted.csv"), ColumnMap{}, false);
        REQUIRE(corpus.documents.size() == 2);
        CHECK(corpus.documents[0].text == "text, with comma and \"quote\"");
        CHECK(corpus.documents[1].text == "two\nlines");
    }
    SUBCASE("tab delimiter") {
        write_file(dir.file("tabs.tsv"), "No\tBAB\tHadist\n1\t1\tsome text, commas ok\n");
        Corpus corpus = load_csv(dir.file("tabs.tsv"), ColumnMap{}, false, '\t');
        REQUIRE(corpus.documents.size() == 1);
        CHECK(corpus.documents[0].text == "some text, commas ok");
    }
    SUBCASE("custom column names") {
        write_file(dir.file("named.csv"), "id,chapter,body\n4,2,isi teks\n");
        ColumnMap map;
        map.row_id = "id";
        map.chapter = "chapter";
        map.text = "body";
        map.length = std::nullopt;
        Corpus corpus = load_csv(dir.file("named.csv"), map, false);
        CHECK(corpus.documents[0].row_id == 4);
        CHECK(corpus.documents[0].text == "isi teks");
    }
}

TEST_CASE("load_jsonl") {
    ScratchDir dir("corpus");
    ColumnMap fields;
    fields.row_id = "no";
    fields.chapter = "bab";
    fields.text = "hadist";
    fields.length = std::nullopt;

    SUBCASE("two records") {
        write_file(dir.file("two.jsonl"),
                   "{\"no\": 1, \"bab\": 1, \"hadist\": \"alpha beta\"}\n"
                   "{\"no\": \"2\", \"bab\": 3, \"hadist\": \"gamma\"}\n");
        Corpus corpus = load_jsonl(dir.file("two.jsonl"), fields, false);
        REQUIRE(corpus.documents.size() == 2);
        CHECK(corpus.documents[0].text == "alpha beta");
        CHECK(corpus.documents[1].row_id == 2);  // numeric strings accepted
    }
    SUBCASE("missing text field names field and line") {
        write_file(dir.file("missing.jsonl"),
                   "{\"no\": 1, \"bab\": 1, \"hadist\": \"ok\"}\n"
                   "{\"no\": 2, \"bab\": 1}\n");
        CHECK_THROWS_WITH_AS(load_jsonl(dir.file("missing.jsonl"), fields, false),
                             doctest::Contains("line 2: missing field 'hadist'"), Error);
    }
    SUBCASE("csv and jsonl of the same rows ingest identically") {
        write_file(dir.file("rows.csv"),
                   "No,BAB,Hadist\n1,1,alpha beta\n2,1,gamma delta\n3,2,epsilon\n");
        write_file(dir.file("rows.jsonl"),
                   "{\"no\":1,\"bab\":1,\"hadist\":\"alpha beta\"}\n"
                   "{\"no\":2,\"bab\":1,\"hadist\":\"gamma delta\"}\n"
                   "{\"no\":3,\"bab\":2,\"hadist\":\"epsilon\"}\n");
        ColumnMap csv_map;
        csv_map.length = std::nullopt;
        Corpus from_csv = load_csv(dir.file("rows.csv"), csv_map, false);
        Corpus from_jsonl = load_jsonl(dir.file("rows.jsonl"), fields, false);
        CHECK(same_documents(from_csv, from_jsonl));
    }
}

TEST_CASE("load_csv at corpus scale") {
    ScratchDir dir("corpus");
    std::string big = "No,BAB,Hadist,Len\n";
    for (int i = 1; i <= 6000; ++i) {
        big += std::to_string(i) + "," + std::to_string(i % 97) + ",dokumen nomor " +
               std::to_string(i) + ",20\n";
    }
    write_file(dir.file("big.csv"), big);
    Corpus corpus = load_csv(dir.file("big.csv"), ColumnMap{}, false);
    CHECK(corpus.documents.size() == 6000);
    CHECK(corpus.report.accepted == 6000);
}
