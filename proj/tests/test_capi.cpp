#include <doctest.h>

#include <string>

#include "wnrep/wnrep.h"

TEST_SUITE("capi") {
  TEST_CASE("handles and descriptors") {
    wnrep_dmodule* P = nullptr;
    REQUIRE(wnrep_dmodule_parse("XL(1/2)*XL(1/3)", &P) == WNREP_OK);
    int n = 0;
    CHECK(wnrep_dmodule_rank(P, &n) == WNREP_OK);
    CHECK(n == 2);
    char* text = nullptr;
    REQUIRE(wnrep_dmodule_describe(P, &text) == WNREP_OK);
    CHECK(std::string(text) == "XL(1/2)*XL(1/3)");
    wnrep_string_free(text);

    wnrep_glmodule* V = nullptr;
    REQUIRE(wnrep_glmodule_parse("sym(2)", 2, &V) == WNREP_OK);
    wnrep_tensor* T = nullptr;
    REQUIRE(wnrep_tensor_create(P, V, &T) == WNREP_OK);
    const char* mu[] = {"1/2", "1/3"};
    long mult = -1;
    CHECK(wnrep_tensor_multiplicity(T, mu, 4, &mult) == WNREP_OK);
    CHECK(mult == 3);
    int ok = -1;
    CHECK(wnrep_finmult_criterion(T, &ok) == WNREP_OK);
    CHECK(ok == 1);
    char* name = nullptr;
    CHECK(wnrep_classify(T, &name) == WNREP_OK);
    CHECK(std::string(name) == "TENSOR_SIMPLE");
    wnrep_string_free(name);
    wnrep_tensor_free(T);
    wnrep_glmodule_free(V);
    wnrep_dmodule_free(P);
  }

  TEST_CASE("status codes and messages") {
    wnrep_dmodule* P = nullptr;
    CHECK(wnrep_dmodule_parse("XL(2)", &P) == WNREP_ERR_PARSE);
    CHECK(P == nullptr);
    CHECK(std::string(wnrep_last_error()).find("integral twist parameter") != std::string::npos);
    CHECK(wnrep_dmodule_parse(nullptr, &P) == WNREP_ERR_NULL_ARGUMENT);
    wnrep_glmodule* V = nullptr;
    CHECK(wnrep_glmodule_parse("resD(O*O;-1)", 2, &V) == WNREP_ERR_EMPTY_MODULE);
    REQUIRE(wnrep_dmodule_parse("O", &P) == WNREP_OK);
    CHECK(std::string(wnrep_last_error()).empty());
    REQUIRE(wnrep_glmodule_parse("wedge(1)", 2, &V) == WNREP_OK);
    wnrep_tensor* T = nullptr;
    CHECK(wnrep_tensor_create(P, V, &T) == WNREP_ERR_DIMENSION);
    wnrep_glmodule_free(V);
    wnrep_dmodule_free(P);
  }

  TEST_CASE("run") {
    wnrep_options opt;
    wnrep_options_init(&opt);
    opt.P = "O*O";
    opt.V = "wedge(0)";
    char* report = nullptr;
    int pass = 0;
    REQUIRE(wnrep_run("classify", &opt, &report, &pass) == WNREP_OK);
    CHECK(std::string(report).find("\"TRIVIAL_SUB\"") != std::string::npos);
    CHECK(pass == 1);
    wnrep_string_free(report);
    opt.format = "xml";
    CHECK(wnrep_run("classify", &opt, &report, &pass) == WNREP_ERR_VALIDATION);
    const int blocks[] = {1};
    wnrep_options lv;
    wnrep_options_init(&lv);
    lv.n = 2;
    lv.p = 1;
    lv.m = 1;
    lv.k_blocks = blocks;
    lv.k_block_count = 1;
    lv.P = "XL(1/2)";
    lv.V = "char(1/3)";
    lv.S = "char(1)";
    REQUIRE(wnrep_run("levi-check", &lv, &report, &pass) == WNREP_OK);
    CHECK(pass == 1);
    wnrep_string_free(report);
  }
}
