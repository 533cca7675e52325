/* Exercises the C interface through the shared library only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pinpoint/pinpoint.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static const char* o1_text =
    "(sub A B)\n"
    "(sub B C)\n"
    "(sub A C)\n"
    "(sub A (some r D))\n";

static void expect_text(pp_status s, char** text, const char* expected) {
  EXPECT(s == PP_OK);
  if (s == PP_OK) {
    if (strcmp(*text, expected) != 0) fprintf(stderr, "got:\n%s\nexpected:\n%s\n", *text, expected);
    EXPECT(strcmp(*text, expected) == 0);
    pp_string_free(*text);
  }
}

static void expect_sets(pp_status s, pp_sets** sets, const char* expected) {
  char* text = NULL;
  EXPECT(s == PP_OK);
  if (s != PP_OK) return;
  expect_text(pp_sets_format(*sets, &text), &text, expected);
  pp_sets_free(*sets);
}

static void test_parse_and_serialize(void) {
  pp_ontology* o = NULL;
  char* text = NULL;
  EXPECT(pp_ontology_parse("(sub A B)\n(sub B C)", &o) == PP_OK);
  EXPECT(pp_ontology_size(o) == 2);
  expect_text(pp_ontology_serialize(o, &text), &text, "ax1: (sub A B)\nax2: (sub B C)");
  pp_ontology_free(o);

  o = (pp_ontology*)1;
  EXPECT(pp_ontology_parse("(sub A", &o) == PP_ERR_PARSE);
  EXPECT(o == NULL);
  EXPECT(strlen(pp_last_error()) > 0);
  EXPECT(pp_ontology_parse("a: (sub A B)\na: (sub B C)", &o) == PP_ERR_DUPLICATE_ID);
  EXPECT(pp_ontology_parse("(inst a A)", &o) == PP_ERR_UNSUPPORTED);
  EXPECT(pp_ontology_load("/nonexistent/file.ont", &o) == PP_ERR_IO);
  EXPECT(pp_ontology_parse(NULL, &o) == PP_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(pp_status_name(PP_ERR_NOT_ENTAILED), "not entailed") == 0);
}

static void test_queries(void) {
  pp_ontology* o = NULL;
  pp_sets* sets = NULL;
  char* text = NULL;
  int entailed = -1;
  EXPECT(pp_ontology_parse(o1_text, &o) == PP_OK);

  EXPECT(pp_entails(o, "(sub A C)", &entailed) == PP_OK && entailed == 1);
  EXPECT(pp_entails(o, "(sub C A)", &entailed) == PP_OK && entailed == 0);
  EXPECT(pp_entails(o, "(sub C", &entailed) == PP_ERR_PARSE);
  expect_text(pp_classify(o, &text), &text, "(sub A B)\n(sub A C)\n(sub B C)\n");

  expect_sets(pp_core(o, "(sub A C)", &sets), &sets, "\n");
  expect_sets(pp_justification(o, "(sub A C)", &sets), &sets, "ax3\n");
  expect_sets(pp_union(o, "(sub A C)", PP_METHOD_BLACKBOX, &sets), &sets, "ax1,ax2,ax3\n");
  expect_sets(pp_union(o, "(sub A C)", PP_METHOD_HST, &sets), &sets, "ax1,ax2,ax3\n");
  expect_sets(pp_union(o, "(sub A C)", PP_METHOD_MUSMEM, &sets), &sets, "ax1,ax2,ax3\n");
  expect_sets(pp_union(o, "(sub A C)", PP_METHOD_BRUTE, &sets), &sets, "ax1,ax2,ax3\n");
  expect_sets(pp_justifications(o, "(sub A C)", &sets), &sets, "ax3\nax1,ax2\n");
  expect_sets(pp_repairs(o, "(sub A C)", &sets), &sets, "ax1,ax4\nax2,ax4\n");

  EXPECT(pp_justifications(o, "(sub A C)", &sets) == PP_OK);
  EXPECT(pp_sets_count(sets) == 2);
  EXPECT(pp_sets_size(sets, 1) == 2);
  EXPECT(strcmp(pp_sets_id(sets, 1, 0), "ax1") == 0);
  EXPECT(pp_sets_id(sets, 2, 0) == NULL);
  EXPECT(pp_sets_id(sets, 0, 1) == NULL);
  pp_sets_free(sets);

  sets = (pp_sets*)1;
  EXPECT(pp_core(o, "(sub C A)", &sets) == PP_ERR_NOT_ENTAILED);
  EXPECT(sets == NULL);
  EXPECT(pp_repairs(o, "(sub A Top)", &sets) == PP_ERR_NO_REPAIR);
  EXPECT(pp_union(o, "(sub A C)", (pp_method)42, &sets) == PP_ERR_INVALID_ARGUMENT);

  EXPECT(pp_trace(o, "(sub A C)", &text) == PP_OK);
  EXPECT(strstr(text, "R_init; ; ; A [= A") != NULL);
  pp_string_free(text);
  EXPECT(pp_dimacs(o, "(sub A C)", &text) == PP_OK);
  EXPECT(strncmp(text, "c axiom ax1 var 1\n", 18) == 0);
  EXPECT(strstr(text, "p cnf ") != NULL);
  pp_string_free(text);
  EXPECT(pp_trace(o, "(sub A (some r D))", &text) == PP_ERR_INVALID_ARGUMENT);

  pp_ontology_free(o);
}

static void test_generate_and_bench(const char* dir) {
  pp_ontology* a = NULL;
  pp_ontology* b = NULL;
  char* ta = NULL;
  char* tb = NULL;
  char path[1024];
  pp_bench_summary summary;
  EXPECT(pp_ontology_generate(9, 10, PP_PROFILE_ALC, &a) == PP_OK);
  EXPECT(pp_ontology_generate(9, 10, PP_PROFILE_ALC, &b) == PP_OK);
  EXPECT(pp_ontology_serialize(a, &ta) == PP_OK);
  EXPECT(pp_ontology_serialize(b, &tb) == PP_OK);
  EXPECT(strcmp(ta, tb) == 0);
  pp_string_free(ta);
  pp_string_free(tb);
  EXPECT(pp_ontology_generate(9, 0, PP_PROFILE_EL, &b) == PP_ERR_INVALID_ARGUMENT);

  snprintf(path, sizeof path, "%s/g9.ont", dir);
  EXPECT(pp_ontology_save(a, path) == PP_OK);
  pp_ontology_free(a);
  EXPECT(pp_ontology_load(path, &a) == PP_OK);
  EXPECT(pp_ontology_size(a) == 10);
  pp_ontology_free(a);

  snprintf(path, sizeof path, "%s/.bench.csv", dir);
  EXPECT(pp_bench(dir, "blackbox,musmem,brute", path, 0, &summary) == PP_OK);
  EXPECT(summary.ontologies == 1);
  EXPECT(summary.rows == 3 * summary.goals);
  EXPECT(summary.disagreements == 0);
  EXPECT(pp_bench(dir, "blackbox,fast", path, 0, &summary) == PP_ERR_INVALID_ARGUMENT);
  EXPECT(pp_bench(dir, "", path, 0, &summary) == PP_ERR_INVALID_ARGUMENT);
  EXPECT(pp_bench("/nonexistent/dir", "brute", path, 0, &summary) == PP_ERR_IO);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: %s SCRATCH_DIR\n", argv[0]);
    return 2;
  }
  test_parse_and_serialize();
  test_queries();
  test_generate_and_bench(argv[1]);
  if (failures == 0) printf("all C API checks passed\n");
  return failures == 0 ? 0 : 1;
}
