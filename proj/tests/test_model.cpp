#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gathersim/configs.hpp"
#include "support.hpp"

using namespace gathersim;
using support::P;

namespace {

// robots r1..r8 of the eight-robot example are ids 0..7
const Point p1 = P(0, -5), p3 = P(-1, 0), p4 = P(0, 0), p7 = P(3, 4), p8 = P(4, 3);

std::vector<ObservedPoint> entries(std::vector<ObservedPoint> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  return v;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("occupied points and gathering") {
  const Configuration c = named_config("figure1-eight-robots");
  const auto occ = occupied_points(c);
  REQUIRE(occ.size() == 5);
  CHECK(occ[0] == OccupiedPoint{p3, 1});
  CHECK(occ[1] == OccupiedPoint{p1, 2});
  CHECK(occ[2] == OccupiedPoint{p4, 3});
  CHECK(multiplicity_at(c, 4) == 3);
  CHECK(multiplicity_at(c, 6) == 1);
  CHECK_FALSE(is_gathered(c));
  CHECK(is_gathered(two_point_config(4, 0, P(1, 1), P(0, 0))));
  CHECK(is_gathered(Configuration{{P(2, 2)}, 0}));
}

TEST_CASE("adversarial (8,4) observations of the eight-robot example") {
  const Configuration c = named_config("figure1-eight-robots");
  const DefectPolicy policy{Model::Adversarial, 4};
  const Observation r3 = observe(c, 2, policy, {0, 1, 5, 7});
  CHECK(r3.opset == entries({{p1, true}, {p3, false}, {p4, false}, {p8, false}}));
  CHECK_FALSE(r3.self_accompanied);

  const Observation r4a = observe(c, 3, policy, {0, 2, 6, 7});
  CHECK(r4a.opset == entries({{p1, false}, {p3, false}, {p4, true}, {p7, false}, {p8, false}}));
  CHECK(r4a.self_accompanied);

  const Observation r4b = observe(c, 3, policy, {0, 1, 6, 7});
  CHECK(r4b.opset == entries({{p1, true}, {p4, true}, {p7, false}, {p8, false}}));

  CHECK(eligible_robots(c, 3, policy) == IdSet{0, 1, 2, 6, 7});
  CHECK(legal_choices(c, 3, policy).size() == 5);
  // co-located robots may be shown different sets
  CHECK_NOTHROW(check_choice(c, 4, policy, {1, 2, 6, 7}));
  CHECK_THROWS_AS(observe(c, 3, policy, {0, 1, 4, 6}), IllegalChoice);  // r5 shares r4's point
  CHECK_THROWS_AS(observe(c, 3, policy, {0, 1, 6}), IllegalChoice);
}

TEST_CASE("distance-based (8,3) observations of the eight-robot example") {
  const Configuration c = named_config("figure1-eight-robots");
  const DefectPolicy policy{Model::DistanceBased, 3};
  for (const IdSet& chosen : legal_choices(c, 6, policy)) {
    CHECK(observe(c, 6, policy, chosen).opset == entries({{p4, true}, {p7, false}, {p8, false}}));
  }
  std::set<std::vector<std::pair<std::string, bool>>> views;
  const auto choices = legal_choices(c, 3, policy);
  CHECK(choices.size() == 6);  // r3 plus two of the four tied robots
  for (const IdSet& chosen : choices) {
    CHECK(std::find(chosen.begin(), chosen.end(), 2) != chosen.end());
    std::vector<std::pair<std::string, bool>> v;
    for (const auto& e : observe(c, 3, policy, chosen).opset) v.emplace_back(e.point.to_string(), e.multi);
    views.insert(v);
  }
  std::set<std::vector<std::pair<std::string, bool>>> expected;
  for (const auto& v : {entries({{p1, true}, {p3, false}, {p4, true}}), entries({{p1, false}, {p3, false}, {p4, true}, {p7, false}}),
                        entries({{p1, false}, {p3, false}, {p4, true}, {p8, false}}),
                        entries({{p3, false}, {p4, true}, {p7, false}, {p8, false}})}) {
    std::vector<std::pair<std::string, bool>> s;
    for (const auto& e : v) s.emplace_back(e.point.to_string(), e.multi);
    expected.insert(s);
  }
  CHECK(views == expected);
  CHECK(default_choice(c, 3, policy) == IdSet{0, 1, 2});
  CHECK(default_choice(c, 3, {Model::DistanceBased, 3, TieBreak::HighestId}) == IdSet{2, 6, 7});
  CHECK_THROWS_AS(check_choice(c, 3, policy, {0, 1, 6}), IllegalChoice);  // skips the nearest robot
}

TEST_CASE("relaxed model sees co-located robots and infers self status from them") {
  const Configuration c = two_point_config(2, 3, P(0, 0), P(8, 0));
  const DefectPolicy policy{Model::RelaxedAdversarial, 3};
  CHECK(eligible_robots(c, 0, policy) == IdSet{1, 2, 3, 4});
  const Observation hidden = observe(c, 0, policy, {2, 3, 4});
  CHECK_FALSE(hidden.self_accompanied);
  CHECK(hidden.opset == entries({{P(0, 0), false}, {P(8, 0), true}}));
  const Observation shown = observe(c, 2, policy, {0, 1, 3});
  CHECK(shown.self_accompanied);
  CHECK(shown.opset == entries({{P(0, 0), true}, {P(8, 0), true}}));
}

TEST_CASE("choice enumeration counts") {
  std::mt19937_64 rng(31);
  const Configuration generic = random_generic_config(5, rng);
  CHECK(ChoiceSpace(generic, {Model::Adversarial, 3}).size() == 1024);
  CHECK(ChoiceSpace(two_point_config(5, 0, P(0, 0), P(0, 0)), {Model::Adversarial, 3}).size() == 1);
  CHECK(ChoiceSpace(generic, {Model::DistanceBased, 3}).size() == 1);
  CHECK(ChoiceSpace(named_config("square"), {Model::DistanceBased, 2}).size() == 1);
  // apex: 2 of 3 tied; base corners: 1 of 2 tied after the nearest; bottom: none
  CHECK(ChoiceSpace(named_config("four-longest"), {Model::DistanceBased, 2}).size() == 12);
}

TEST_CASE("enumeration matches the closed form and has no duplicates") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<int> n_dist(2, 6);
    const auto n = static_cast<std::size_t>(n_dist(rng));
    std::uniform_int_distribution<int> k_dist(1, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coord(0, 2);
    Configuration c;
    for (std::size_t r = 0; r < n; ++r) c.positions.push_back(P(coord(rng), coord(rng)));
    const Model model = i % 2 == 0 ? Model::Adversarial : Model::RelaxedAdversarial;
    const DefectPolicy policy{model, k_dist(rng)};
    std::uint64_t expected = 1;
    for (RobotId r = 0; r < n; ++r) {
      const std::size_t e = eligible_robots(c, r, policy).size();
      expected *= binomial(e, std::min<std::size_t>(policy.k, e));
    }
    const ChoiceSpace space(c, policy);
    CHECK(space.size() == expected);
    if (expected <= 4096) {
      std::set<std::vector<IdSet>> seen;
      for (std::uint64_t idx = 0; idx < space.size(); ++idx) seen.insert(space.at(idx));
      CHECK(seen.size() == expected);
    }
  }
}

TEST_CASE("weak multiplicity soundness and observation hygiene") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<int> coord(0, 2);
    Configuration c;
    for (int r = 0; r < 6; ++r) c.positions.push_back(P(coord(rng), coord(rng)));
    const DefectPolicy policy{i % 3 == 0 ? Model::RelaxedAdversarial : Model::Adversarial, 3};
    const RobotId observer = static_cast<RobotId>(i % 6);
    const auto choices = legal_choices(c, observer, policy);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    const IdSet chosen = choices[pick(rng)];
    const Observation obs = observe(c, observer, policy, chosen);
    const Point self = c.positions[observer];
    CHECK(obs.self_point == self);
    std::size_t self_entries = 0;
    for (const ObservedPoint& e : obs.opset) {
      std::size_t chosen_here = 0;
      for (RobotId id : chosen) chosen_here += c.positions[id] == e.point ? 1 : 0;
      if (e.point == self) {
        ++self_entries;
        const bool accompanied = policy.model == Model::RelaxedAdversarial ? chosen_here >= 1 : multiplicity_at(c, observer) >= 2;
        CHECK(obs.self_accompanied == accompanied);
        CHECK(e.multi == accompanied);
      } else {
        CHECK(chosen_here >= 1);  // nothing unchosen is revealed
        CHECK(e.multi == (chosen_here >= 2));
      }
    }
    CHECK(self_entries == 1);
    for (RobotId id : chosen) {
      CHECK(std::any_of(obs.opset.begin(), obs.opset.end(), [&](const ObservedPoint& e) { return e.point == c.positions[id]; }));
    }
  }
}

TEST_CASE("accompanied robots see every occupied point under (N, N-2)") {
  std::mt19937_64 rng(34);
  int accompanied_cases = 0;
  for (int i = 0; accompanied_cases < 1000; ++i) {
    std::uniform_int_distribution<int> n_dist(5, 7);
    std::uniform_int_distribution<int> coord(0, 3);
    const auto n = static_cast<std::size_t>(n_dist(rng));
    Configuration c;
    for (std::size_t r = 0; r < n; ++r) c.positions.push_back(P(coord(rng), coord(rng)));
    const DefectPolicy policy{Model::Adversarial, static_cast<int>(n) - 2};
    const ChoiceSpace space(c, policy);
    std::uniform_int_distribution<std::uint64_t> idx(0, space.size() - 1);
    const auto observed = space.at(idx(rng));
    const auto occ = occupied_points(c);
    for (RobotId r = 0; r < n; ++r) {
      if (multiplicity_at(c, r) < 2) continue;
      ++accompanied_cases;
      CHECK(observe(c, r, policy, observed[r]).opset.size() == occ.size());
    }
  }
}

TEST_CASE("similarity signature and exact similarity") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const Configuration c = random_grouped_config({2}, 3, rng);
    for (const auto& t : support::sample_transforms(rng)) {
      Configuration moved = support::transform(c, t);
      std::shuffle(moved.positions.begin(), moved.positions.end(), rng);
      CHECK(similarity_signature(moved) == similarity_signature(c));
      CHECK(are_similar(moved, c));
    }
  }
  const Configuration square = named_config("square");
  const Configuration kite{{P(0, 0), P(2, 1), P(0, 2), P(-3, 1)}, 0};
  CHECK_FALSE(are_similar(square, kite));
  // same distances, different multiplicities
  const Configuration a{{P(0, 0), P(0, 0), P(1, 0)}, 0};
  const Configuration b{{P(0, 0), P(1, 0), P(1, 0)}, 0};
  CHECK(are_similar(a, b));
  const Configuration c3{{P(0, 0), P(0, 0), P(0, 0), P(1, 0)}, 0};
  const Configuration c4{{P(0, 0), P(0, 0), P(1, 0), P(1, 0)}, 0};
  CHECK_FALSE(are_similar(c3, c4));
  CHECK_FALSE(similarity_signature(c3) == similarity_signature(c4));
}

TEST_CASE("model names") {
  CHECK(model_from_string("distance") == Model::DistanceBased);
  CHECK(to_string(Model::RelaxedAdversarial) == "relaxed");
  CHECK(tiebreak_from_string("highest-id") == TieBreak::HighestId);
  CHECK_THROWS_AS(model_from_string("psychic"), std::invalid_argument);
}
