#include <cstring>
#include <string>

#include "doctest.h"
#include "pireg.h"

namespace {

struct Text {
  char* s = nullptr;
  ~Text() { pireg_string_free(s); }
};

constexpr const char* kAppendixTrace =
    "0 2 1\n5 2 1\n5 1 2\n10 2 1\n15 2 1\n15 1 2\n20 2 1\n25 2 1\n25 1 2\n";
constexpr const char* kAppendixConfig =
    "pserver 1 [0,3] [10,13] [20,23]\ninterleaved {1: ps 5, 2: ps 10}\n";

}  // namespace

TEST_CASE("C API: trace and pipeline round trip") {
  pireg_trace* in = nullptr;
  REQUIRE(pireg_trace_parse(kAppendixTrace, &in) == PIREG_OK);
  CHECK(pireg_trace_size(in) == 9);

  pireg_pipeline* pipe = nullptr;
  REQUIRE(pireg_pipeline_parse(kAppendixConfig, &pipe) == PIREG_OK);

  pireg_trace* out = nullptr;
  REQUIRE(pireg_pipeline_run(pipe, in, &out) == PIREG_OK);
  Text formatted;
  REQUIRE(pireg_trace_format(out, &formatted.s) == PIREG_OK);
  CHECK(std::string(formatted.s) ==
        "5 2 1\n10 2 1\n10 1 2\n15 2 1\n20 2 1\n20 1 2\n25 2 1\n30 2 1\n30 1 2\n");

  Text delays;
  REQUIRE(pireg_delays(in, out, 0, &delays.s) == PIREG_OK);
  CHECK(std::string(delays.s) == "flow\tdelay\n1\t5\n2\t5\noverall\t5\n");

  pireg_trace_free(out);
  pireg_pipeline_free(pipe);
  pireg_trace_free(in);
}

TEST_CASE("C API: parse errors set pireg_last_error") {
  pireg_trace* t = nullptr;
  CHECK(pireg_trace_parse("not a trace\n", &t) == PIREG_PARSE_ERROR);
  CHECK(std::strlen(pireg_last_error()) > 0);
  CHECK(pireg_trace_parse(nullptr, &t) == PIREG_INVALID_ARGUMENT);

  pireg_pipeline* p = nullptr;
  CHECK(pireg_pipeline_parse("bank {1: ps 5}\nidentity\n", &p) == PIREG_CONFIG_ERROR);

  // Missing flow binding surfaces as a config error at run time.
  REQUIRE(pireg_pipeline_parse("interleaved {1: ps 5}\n", &p) == PIREG_OK);
  REQUIRE(pireg_trace_parse(kAppendixTrace, &t) == PIREG_OK);
  pireg_trace* out = nullptr;
  CHECK(pireg_pipeline_run(p, t, &out) == PIREG_CONFIG_ERROR);
  pireg_trace_free(t);
  pireg_pipeline_free(p);
}

TEST_CASE("C API: checks run and report") {
  pireg_report* report = nullptr;
  const char* keys[] = {"instances", "seed"};
  const char* values[] = {"50", "3"};
  REQUIRE(pireg_check("dominance", keys, values, 2, &report) == PIREG_OK);
  CHECK(pireg_report_passed(report) == 1);
  CHECK(std::string(pireg_report_text(report)).rfind("CHECK dominance-campaign PASS", 0) == 0);
  pireg_report_free(report);

  CHECK(pireg_check("no-such-check", nullptr, nullptr, 0, &report) == PIREG_PARSE_ERROR);

  // A failing single-instance check returns PIREG_CHECK_FAILED with a witness.
  pireg_trace* bad = nullptr;
  REQUIRE(pireg_trace_parse("5 2 1\n7 2 1\n", &bad) == PIREG_OK);
  char path[] = "/tmp/pireg_capi_bad_trace.txt";
  REQUIRE(pireg_trace_write(bad, path) == PIREG_OK);
  pireg_trace_free(bad);
  const char* k2[] = {"trace", "op"};
  const char* v2[] = {path, "ps 5"};
  REQUIRE(pireg_check("regularity", k2, v2, 2, &report) == PIREG_CHECK_FAILED);
  CHECK(pireg_report_passed(report) == 0);
  CHECK(std::string(pireg_report_text(report)).find("witness") != std::string::npos);
  pireg_report_free(report);
}

TEST_CASE("C API: example reproduction and negative control") {
  Text text;
  REQUIRE(pireg_example(0, &text.s) == PIREG_OK);
  CHECK(std::string(text.s).find("example: all values match") != std::string::npos);

  Text corrupted;
  CHECK(pireg_example(4, &corrupted.s) == PIREG_CHECK_FAILED);
  CHECK(std::string(corrupted.s).find("MISMATCH") != std::string::npos);

  // Determinism: two honest runs produce identical bytes.
  Text again;
  REQUIRE(pireg_example(0, &again.s) == PIREG_OK);
  CHECK(std::string(text.s) == std::string(again.s));
}
