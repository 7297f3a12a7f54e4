#include "dunamis/errors.hpp"
#include "dunamis/trace.hpp"

#include <gtest/gtest.h>

namespace dunamis {
namespace {

ProofTrace sample() {
    ProofTrace t;
    t.add(Tag::VII_22, "6/2 reduces to 3/1", {{"num", Natural(6)}, {"m", Ratio(3, 1)}});
    t.add(Tag::PropAPrime, "root", {{"s", Surd(Ratio(1, 2), 2)}});
    t.add(Tag::Dichotomy, "no witnesses");
    return t;
}

TEST(Tag, NamesRoundTrip) {
    for (Tag t : {Tag::VII_13, Tag::VII_20, Tag::VII_22, Tag::VII_24, Tag::X_9, Tag::PropA, Tag::PropAPrime,
                  Tag::Integrality, Tag::Dichotomy}) {
        EXPECT_EQ(parse_tag(to_string(t)), t);
    }
    EXPECT_EQ(to_string(Tag::PropAPrime), "PROP-A'");
    EXPECT_EQ(to_string(Tag::X_9), "X.9");
    EXPECT_FALSE(parse_tag("VII.21").has_value());
}

TEST(ProofTrace, TextFormat) {
    EXPECT_EQ(to_text(sample()),
              "VII.22 | 6/2 reduces to 3/1 | num=6, m=3/1\n"
              "PROP-A' | root | s=(1/2)·√2\n"
              "DICHOTOMY | no witnesses |\n");
}

TEST(ProofTrace, JsonRoundTrip) {
    const ProofTrace t = sample();
    const auto doc = to_json(t);
    ASSERT_EQ(doc.size(), 3u);
    EXPECT_EQ(doc[0]["tag"], "VII.22");
    EXPECT_EQ(doc[0]["witnesses"][1]["kind"], "ratio");
    EXPECT_EQ(doc[1]["witnesses"][0]["value"], "(1/2)·√2");
    EXPECT_EQ(trace_from_json(nlohmann::ordered_json::parse(doc.dump())), t);
}

TEST(ProofTrace, RejectsUnknownTagsAndKinds) {
    auto doc = to_json(sample());
    auto bad_tag = doc;
    bad_tag[0]["tag"] = "I.47";
    EXPECT_THROW(trace_from_json(bad_tag), ParseError);
    auto bad_kind = doc;
    bad_kind[0]["witnesses"][0]["kind"] = "float";
    EXPECT_THROW(trace_from_json(bad_kind), ParseError);
    EXPECT_THROW(trace_from_json(nlohmann::ordered_json::parse(R"([{"tag":"X.9"}])")), ParseError);
}

TEST(ProofTrace, Validity) {
    EXPECT_FALSE(ProofTrace{}.valid());
    EXPECT_TRUE(sample().valid());
    ProofTrace t;
    t.add(Tag::X_9, "");
    EXPECT_FALSE(t.valid());
}

}  // namespace
}  // namespace dunamis
