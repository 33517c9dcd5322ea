#include <gtest/gtest.h>

#include <cmath>

#include "aprop/dataset_io.hpp"
#include "aprop/errors.hpp"
#include "aprop/explainer.hpp"

using namespace aprop;

namespace {

Table coffee() { return load_table(APROP_DATA_DIR "/coffee.csv"); }

const std::vector<std::string> kCoffeeDescriptive{"situation", "contraind", "dec"};

// Two binary context attributes B, C and the change attribute A. In three
// contexts A: 0 -> 1 tilts R from p to q, in the fourth it does not.
Table planted_three_to_one() {
  const Schema s({{"A", Domain({"0", "1"})}, {"B", Domain({"0", "1"})}, {"C", Domain({"0", "1"})},
                  {"R", Domain({"p", "q"})}});
  Table t{s, {}};
  for (const char* ctx : {"00", "01", "10"}) {
    const std::string b(1, ctx[0]), c(1, ctx[1]);
    t.rows.push_back(s.encode({"0", b, c, "p"}));
    t.rows.push_back(s.encode({"1", b, c, "q"}));
  }
  t.rows.push_back(s.encode({"0", "1", "1", "p"}));
  t.rows.push_back(s.encode({"1", "1", "1", "p"}));
  return t;
}

}  // namespace

TEST(Question, DefaultsToAllOtherColumns) {
  const Table t = coffee();
  const Question q = make_question(t.schema, "with_milk", "no");
  EXPECT_EQ(q.descriptive, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_THROW(make_question(t.schema, "with_milk", "maybe"), DomainError);
  EXPECT_THROW(make_question(t.schema, "with_milk", "no", {"with_milk"}), SchemaError);
  EXPECT_THROW(make_question(t.schema, "colour", "no"), SchemaError);
}

TEST(Adverse, CoffeeMilkForD) {
  const Table t = coffee();
  const Question q = make_question(t.schema, "with_milk", "no", kCoffeeDescriptive);
  const auto adverse = find_adverse_examples(t, t.rows[3], q);
  ASSERT_EQ(adverse.size(), 2U);
  EXPECT_EQ(adverse[0].row, 0U);
  EXPECT_EQ(adverse[0].change.size(), 2U);
  EXPECT_EQ(adverse[1].row, 1U);
  ASSERT_EQ(adverse[1].change.size(), 1U);
  EXPECT_EQ(adverse[1].change[0].attribute, 0U);
}

TEST(Explain, WhyMilkForD) {
  const Table t = coffee();
  const Explanation e =
      contrastive_explain(t, t.rows[3], make_question(t.schema, "with_milk", "no", kCoffeeDescriptive));
  ASSERT_TRUE(e.supported);
  EXPECT_EQ(e.adverse_examples[*e.chosen].row, 1U);
  EXPECT_EQ(e.sentence, "because situation is sit_2 and not sit_1");
  EXPECT_EQ(e.counts.supporting, 2U);
  EXPECT_EQ(e.counts.exceptions, 0U);
  EXPECT_DOUBLE_EQ(e.strength, 1.0);

  // a : c is the other pair showing the same change
  EXPECT_EQ(e.split.row_a, 0U);
  EXPECT_EQ(e.split.row_b, 2U);
  EXPECT_EQ(e.split.change, (std::vector<std::size_t>{0}));
  EXPECT_EQ(e.split.context, (std::vector<std::size_t>{1}));
  EXPECT_EQ(e.split.shared, (std::vector<std::size_t>{2}));
  EXPECT_EQ(t.schema.domain(1).symbol(e.split.t[0]), "yes");
  EXPECT_EQ(t.schema.domain(1).symbol(e.split.u[0]), "no");
}

TEST(Explain, WhySugarForD) {
  const Table t = coffee();
  const Explanation e =
      contrastive_explain(t, t.rows[3], make_question(t.schema, "with_sugar", "no", kCoffeeDescriptive));
  ASSERT_TRUE(e.supported);
  EXPECT_EQ(e.adverse_examples[*e.chosen].row, 2U);
  EXPECT_EQ(e.sentence, "because contraind is no and not yes");
}

TEST(Explain, WhyNoMilkForB) {
  const Table t = coffee();
  const Explanation e =
      contrastive_explain(t, t.rows[1], make_question(t.schema, "with_milk", "yes", kCoffeeDescriptive));
  ASSERT_TRUE(e.supported);
  EXPECT_EQ(e.adverse_examples[*e.chosen].row, 3U);
  EXPECT_EQ(e.sentence, "because situation is sit_1 and not sit_2");
}

TEST(Explain, VacuousQuestionIsAnError) {
  const Table t = coffee();
  EXPECT_THROW(contrastive_explain(t, t.rows[3], make_question(t.schema, "with_milk", "yes")), ConfigError);
}

TEST(Explain, NoAdverseExampleIsUnsupported) {
  Table t = coffee();
  t.rows.erase(t.rows.begin(), t.rows.begin() + 2);  // only rows with milk remain
  const Explanation e = contrastive_explain(t, t.rows[1], make_question(t.schema, "with_milk", "no"));
  EXPECT_FALSE(e.supported);
  EXPECT_TRUE(e.adverse_examples.empty());
}

TEST(Explain, PlantedStrengthThreeOfFour) {
  const Table t = planted_three_to_one();
  const Explanation e = contrastive_explain(t, t.rows[1], make_question(t.schema, "R", "p"));
  ASSERT_TRUE(e.supported);
  EXPECT_EQ(e.adverse_examples[*e.chosen].row, 0U);
  EXPECT_EQ(e.counts.supporting, 3U);
  EXPECT_EQ(e.counts.exceptions, 1U);
  EXPECT_DOUBLE_EQ(e.strength, 0.75);
}

TEST(Explain, PrefersTheStrongerChangeAmongMinimalOnes) {
  // Rows 0 and 1 both differ from the query on one attribute. The change on
  // A has 1 tilting pair against 2 exceptions, the change on B 2 against 1.
  const Schema s({{"A", Domain({"0", "1"})}, {"B", Domain({"0", "1"})}, {"R", Domain({"p", "q"})}});
  Table t{s,
          {s.encode({"0", "0", "p"}), s.encode({"1", "1", "p"}), s.encode({"0", "1", "p"}),
           s.encode({"1", "1", "p"})}};
  const Item query = s.encode({"1", "0", "q"});
  t.rows.push_back(query);
  const Explanation e = contrastive_explain(t, query, make_question(s, "R", "p"));
  ASSERT_TRUE(e.supported);
  EXPECT_EQ(e.adverse_examples[*e.chosen].row, 1U);
  EXPECT_DOUBLE_EQ(e.strength, 2.0 / 3.0);
  ASSERT_EQ(e.alternatives.size(), 2U);  // rows 0 and 3
  EXPECT_EQ(e.adverse_examples[e.alternatives[0]].row, 3U);
  EXPECT_EQ(e.adverse_examples[e.alternatives[1]].row, 0U);
}

TEST(Rule, CoffeeMilkRule) {
  const Table t = coffee();
  const Question q = make_question(t.schema, "with_milk", "no", kCoffeeDescriptive);
  const Explanation e = contrastive_explain(t, t.rows[3], q);
  const RuleCandidate r = rule_candidate(t, q.descriptive, e.split);
  ASSERT_EQ(r.change.size(), 1U);
  EXPECT_EQ(t.schema.attribute(r.change[0].attribute).name, "situation");
  EXPECT_EQ(t.schema.domain(0).symbol(r.change[0].from), "sit_1");
  EXPECT_EQ(t.schema.domain(0).symbol(r.change[0].to), "sit_2");
  EXPECT_EQ(t.schema.domain(4).symbol(r.from), "no");
  EXPECT_EQ(t.schema.domain(4).symbol(r.to), "yes");
  EXPECT_EQ(r.counts.supporting, 2U);
  EXPECT_EQ(r.counts.exceptions, 0U);
}

TEST(Rule, EmptyChangeIsAnError) {
  const Table t = coffee();
  EXPECT_THROW(rule_candidate(t, {0, 1, 2}, ContextSplit{}), ConfigError);
}

TEST(Render, Conjunction) {
  const Table t = coffee();
  const Domain& sit = t.schema.domain(0);
  const Domain& yn = t.schema.domain(1);
  EXPECT_EQ(render_sentence(t.schema, {{0, sit.value("sit_1"), sit.value("sit_2")},
                                       {1, yn.value("yes"), yn.value("no")}}),
            "because situation is sit_2 and not sit_1 and contraind is no and not yes");
}

TEST(Relevance, HandComputedContingency) {
  const Schema s({{"X", Domain({"0", "1"})}, {"Z", Domain({"0", "1"})}, {"Y", Domain({"0", "1"})}});
  Table t{s, {}};
  for (const char* z : {"0", "1"})
    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{{"0", "0"}, {"0", "0"}, {"1", "1"}, {"1", "0"}})
      t.rows.push_back(s.encode({x, z, y}));
  const auto mi = relevant_attributes(t, 2);
  ASSERT_EQ(mi.size(), 2U);
  EXPECT_EQ(mi[0].attribute, 0U);
  EXPECT_NEAR(mi[0].score, 0.5 * std::log(4.0 / 3.0) + 0.25 * std::log(2.0) + 0.25 * std::log(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(mi[1].score, 0.0, 1e-12);  // Z is independent of Y

  const auto chi = relevant_attributes(t, 2, RelevanceMethod::ChiSquare);
  EXPECT_EQ(chi[0].attribute, 0U);
  EXPECT_NEAR(chi[0].score, 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(chi[1].score, 0.0, 1e-12);
}
