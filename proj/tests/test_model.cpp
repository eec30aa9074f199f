#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ainf/corpus.hpp"

using namespace ainf;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("round-trip: emitted corpus files reload to identical structures and bytes")
{
    for (const Model& fix : corpus::all()) {
        INFO(fix.name);
        std::string text = emit_model(fix);
        Model loaded = load_model_text(text, fix.name);

        CHECK(loaded.field == fix.field);
        CHECK(loaded.cohomological == fix.cohomological);
        CHECK(loaded.degree_cap == fix.degree_cap);
        CHECK(loaded.arity_cap == fix.arity_cap);
        if (fix.algebra) {
            REQUIRE(loaded.algebra);
            CHECK(loaded.algebra->basis().same_as(fix.algebra->basis()));
            CHECK(loaded.algebra->complex.d == fix.algebra->complex.d);
            CHECK(loaded.algebra->product == fix.algebra->product);
            CHECK(loaded.algebra->unit == fix.algebra->unit);
        }
        if (fix.coalgebra) {
            REQUIRE(loaded.coalgebra);
            CHECK(loaded.coalgebra->basis->same_as(*fix.coalgebra->basis));
            CHECK(loaded.coalgebra->d == fix.coalgebra->d);
            CHECK(loaded.coalgebra->coproduct.size() == fix.coalgebra->coproduct.size());
        }
        if (fix.cochain) {
            REQUIRE(loaded.cochain);
            CHECK(*loaded.cochain == *fix.cochain);
        }
        CHECK(loaded.module_is_self == fix.module_is_self);

        /* emit is canonical: emitting the reload gives identical bytes */
        CHECK(emit_model(loaded) == text);
    }
}

TEST_CASE("shipped model files match the builders byte for byte")
{
    for (const Model& fix : corpus::all()) {
        INFO(fix.name);
        CHECK(slurp(std::string(AINF_MODELS_DIR) + "/" + fix.name + ".json") == emit_model(fix));
    }
}

TEST_CASE("empty model is legal")
{
    Model m = load_model_text(R"({"field":"Q","caps":{"degree":4}})", "empty");
    CHECK(!m.algebra);
    CHECK(!m.coalgebra);
    CHECK(m.degree_cap == 4);
}

TEST_CASE("load errors: parse failures, dangling names, broken identities")
{
    CHECK_THROWS_AS((void)load_model_text("{oops", "bad"), Error);

    /* dangling generator name in the differential */
    CHECK_THROWS_WITH_AS(
        (void)load_model_text(
            R"({"field":"Q","caps":{"degree":4},
                "algebra":{"generators":[["x",1]],
                           "differential":{"x":[["ghost","1/1"]]}}})",
            "dangling"),
        doctest::Contains("ghost"), Error);

    /* Leibniz violation: change d(e3) = e1e2 into d(e3) = e1e3 */
    Model h = corpus::heisenberg();
    std::string text = emit_model(h);
    auto pos = text.find("\"differential\"");
    REQUIRE(pos != std::string::npos);
    std::string broken = text;
    auto at = broken.find("\"e1e2\"", pos);
    REQUIRE(at != std::string::npos);
    broken.replace(at, 6, "\"e1e3\"");
    CHECK_THROWS_WITH_AS((void)load_model_text(broken, "broken"), doctest::Contains("leibniz"),
                         Error);

    /* scalars must parse exactly */
    CHECK_THROWS_AS((void)load_model_text(
                        R"({"field":"Q","caps":{"degree":4},
                            "algebra":{"generators":[["x",1]],
                                       "differential":{"x":[["x","nope"]]}}})",
                        "badscalar"),
                    Error);
}

TEST_CASE("prime fields: corpus models reload over Z/5 via scalar reinterpretation")
{
    /* rationals like 1/2 make sense mod p through the inverse */
    Model m = load_model_text(R"({"field":"Zp:5","caps":{"degree":4},
        "algebra":{"unit":"1","generators":[["1",0],["x",1]],
                   "product":{"x,x":[]},
                   "differential":{}}})",
                              "zp");
    CHECK(m.field == Field::Zp(5));
    Scalar half = Scalar::parse("3", Field::Zp(5));
    CHECK(half.str() == "3");
}
