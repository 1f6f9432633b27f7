#include "nilform/catalog.hpp"
#include "nilform/errors.hpp"
#include "nilform/json_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace nilform;

TEST(JsonIo, RoundTripIsBitExact) {
    for (const auto& inst : enumerate(10)) {
        const std::string text = write_algebra(inst.algebra);
        const LieAlgebra back = read_algebra(text);
        EXPECT_EQ(back, inst.algebra) << inst.id();
        EXPECT_EQ(back.labels(), inst.algebra.labels());
        EXPECT_EQ(write_algebra(back), text);
    }
}

TEST(JsonIo, RationalCoefficientsSurvive) {
    const LieAlgebra g = build(7, 5, Rational(-7, 3));
    EXPECT_EQ(read_algebra(write_algebra(g)), g);
}

TEST(JsonIo, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "nilform_json_io_test.json";
    const LieAlgebra g = build(58, 4);
    save_algebra(g, path);
    EXPECT_EQ(load_algebra(path), g);
    std::filesystem::remove(path);
}

TEST(JsonIo, MalformedDocumentsThrow) {
    for (const char* bad : {
             "not json",
             R"({"dim":-1,"brackets":[]})",
             R"({"dim":2,"brackets":[{"i":1,"j":3,"coeffs":{"1":"1"}}]})",
             R"({"dim":2,"brackets":[{"i":2,"j":1,"coeffs":{"1":"1"}}]})",
             R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":"x"}}]})",
             R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}},{"i":1,"j":2,"coeffs":{"3":"2"}}]})",
             R"({"dim":2,"labels":["a"],"brackets":[]})",
         })
        EXPECT_THROW(read_algebra(bad), FormatError) << bad;
}

TEST(JsonIo, MissingFileThrows) {
    EXPECT_ANY_THROW(load_algebra("/nonexistent/dir/none.json"));
}
