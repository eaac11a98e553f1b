#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "socent/evaluation.hpp"

using namespace socent;
using namespace socent::testing;

namespace {

std::vector<std::string> labels(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < n; ++i)
    out.push_back("a" + std::string(i < 10 ? "0" : "") + std::to_string(i));
  return out;
}

CentralityVector vec(std::vector<double> scores,
                     Orientation o = Orientation::HigherIsBetter) {
  return {"m", std::move(scores), o};
}

GroundTruth truth(const std::vector<std::string>& names,
                  const std::vector<double>& values) {
  GroundTruth gt;
  for (std::size_t i = 0; i < names.size(); ++i)
    gt.entries.emplace_back(names[i], values[i]);
  return gt;
}

}  // namespace

TEST_CASE("competition ranking") {
  auto lab = std::vector<std::string>{"a", "b", "c"};
  SUBCASE("ties share the smallest rank and skip the next") {
    auto r = rank_scores(vec({3, 3, 1}), lab);
    CHECK(r.rank == std::vector<std::uint32_t>{1, 1, 3});
    CHECK(r.order == std::vector<NodeId>{0, 1, 2});  // tie broken by label
  }
  SUBCASE("all-equal scores are all rank 1") {
    auto r = rank_scores(vec({2, 2, 2}), lab);
    CHECK(r.rank == std::vector<std::uint32_t>{1, 1, 1});
  }
  SUBCASE("lower-is-better orientation ranks ascending") {
    auto r = rank_scores(vec({3, 1, 2}, Orientation::LowerIsBetter), lab);
    CHECK(r.rank == std::vector<std::uint32_t>{3, 1, 2});
  }
  SUBCASE("the +inf sentinel ranks last under lower-is-better") {
    auto r = rank_scores(
        vec({1.0, std::numeric_limits<double>::infinity(), 2.0},
            Orientation::LowerIsBetter),
        lab);
    CHECK(r.rank[1] == 3);
  }
  SUBCASE("NaN scores are rejected") {
    CHECK_THROWS_AS(rank_scores(vec({1.0, std::nan(""), 2.0}), lab),
                    std::invalid_argument);
  }
  SUBCASE("9-significant-digit rounding absorbs float noise") {
    auto r = rank_scores(vec({1.0, 1.0 + 1e-13, 2.0}), lab);
    CHECK(r.rank == std::vector<std::uint32_t>{2, 2, 1});
  }
  SUBCASE("invariant under strictly increasing transforms") {
    auto lab10 = labels(10);
    std::vector<double> base;
    SplitMix64 rng(5);
    for (int i = 0; i < 10; ++i) base.push_back(rng.uniform() * 10.0);
    auto r1 = rank_scores(vec(base), lab10);
    std::vector<double> affine, expo;
    for (double v : base) {
      affine.push_back(3.0 * v + 17.0);
      expo.push_back(std::exp(v / 4.0));
    }
    CHECK(rank_scores(vec(affine), lab10).rank == r1.rank);
    CHECK(rank_scores(vec(expo), lab10).rank == r1.rank);
  }
}

TEST_CASE("ground-truth parsing and joining") {
  std::istringstream in("label,value\nx,10\ny,5\nghost,3\n");
  auto gt = read_ground_truth(in);
  CHECK(gt.entries.size() == 3);
  auto jt = join_ground_truth(gt, std::vector<std::string>{"y", "x"});
  CHECK(jt.missing == 1);
  REQUIRE(jt.roster.size() == 3);
  CHECK(jt.roster[0].label == "x");  // sorted by value descending
  CHECK(jt.roster[0].node == NodeId{1});
  CHECK_FALSE(jt.roster[2].node.has_value());
}

TEST_CASE("rmse over top-k ground truth") {
  auto lab = labels(50);
  SUBCASE("perfect ranks give 0") {
    std::vector<double> scores(50);
    for (int i = 0; i < 50; ++i) scores[i] = 50.0 - i;
    auto r = rank_scores(vec(scores), lab);
    auto gt = truth({lab[0], lab[1], lab[2]}, {9, 8, 7});
    CHECK(rmse_topk(join_ground_truth(gt, lab), r, 3) ==
          doctest::Approx(0.0));
  }
  SUBCASE("single actor at rank 5 vs true 1 gives 4") {
    std::vector<double> scores(50);
    for (int i = 0; i < 50; ++i) scores[i] = 50.0 - i;
    auto r = rank_scores(vec(scores), lab);
    auto gt = truth({lab[4]}, {1.0});  // measure ranks it 5th
    CHECK(rmse_topk(join_ground_truth(gt, lab), r, 1) ==
          doctest::Approx(4.0));
  }
  SUBCASE("frozen rank column evaluates to 17.152...") {
    // measure ranks of the ten ground-truth actors, best-first
    const std::vector<int> measured{26, 15, 18, 14, 13, 33, 6, 16, 11, 41};
    std::vector<double> scores(50, 0.0);
    for (int i = 0; i < 50; ++i) scores[i] = 1000.0 - i;  // rank = id + 1
    auto r = rank_scores(vec(scores), lab);
    std::vector<std::string> names;
    std::vector<double> values;
    for (std::size_t t = 0; t < measured.size(); ++t) {
      names.push_back(lab[measured[t] - 1]);
      values.push_back(100.0 - static_cast<double>(t));
    }
    auto gt = truth(names, values);
    const double rmse = rmse_topk(join_ground_truth(gt, lab), r, 10);
    CHECK(rmse == doctest::Approx(std::sqrt(2942.0 / 10.0)).epsilon(1e-12));
    CHECK(std::abs(rmse - 17.152) < 0.001);
  }
  SUBCASE("missing actors are excluded and k reduced") {
    std::vector<double> scores(50);
    for (int i = 0; i < 50; ++i) scores[i] = 50.0 - i;
    auto r = rank_scores(vec(scores), lab);
    auto gt = truth({"ghost", lab[0], lab[1]}, {99, 9, 8});
    EvalWarnings warn;
    CHECK(rmse_topk(join_ground_truth(gt, lab), r, 3, &warn) ==
          doctest::Approx(0.0));
    CHECK(warn.dropped_missing == 1);
  }
}

TEST_CASE("jaccard overlap of top-k sets") {
  auto lab = labels(60);
  std::vector<double> scores(60);
  for (int i = 0; i < 60; ++i) scores[i] = 60.0 - i;
  auto r = rank_scores(vec(scores), lab);
  SUBCASE("identical sets give 1") {
    auto gt = truth({lab[0], lab[1], lab[2]}, {3, 2, 1});
    CHECK(jaccard_topk(join_ground_truth(gt, lab), r, 3) ==
          doctest::Approx(1.0));
  }
  SUBCASE("disjoint sets give 0") {
    auto gt = truth({lab[10], lab[11], lab[12]}, {3, 2, 1});
    CHECK(jaccard_topk(join_ground_truth(gt, lab), r, 3) ==
          doctest::Approx(0.0));
  }
  SUBCASE("overlap 20 of two 100-sets gives 20/180") {
    auto lab2 = labels(99);
    for (unsigned i = 99; i < 180; ++i)
      lab2.push_back("b" + std::to_string(i));
    std::vector<double> sc2(180);
    for (int i = 0; i < 180; ++i) sc2[i] = 180.0 - i;  // top-100 = 0..99
    auto r2 = rank_scores(vec(sc2), lab2);
    // ground truth: nodes 80..99 (overlap 20) plus 80 outside the top-100
    std::vector<std::string> names;
    std::vector<double> values;
    for (int t = 0; t < 100; ++t) {
      names.push_back(lab2[t < 20 ? 80 + t : 100 + (t - 20)]);
      values.push_back(1000.0 - t);
    }
    auto gt = truth(names, values);
    CHECK(jaccard_topk(join_ground_truth(gt, lab2), r2, 100) ==
          doctest::Approx(20.0 / 180.0).epsilon(1e-12));
  }
  SUBCASE("at k = n every measure reaches 1") {
    auto gt = truth({lab[3], lab[1]}, {2, 1});
    // restrict to the 2-node universe so k = n
    auto jt = join_ground_truth(gt, std::vector<std::string>{lab[1], lab[3]});
    auto r2 = rank_scores(vec({5.0, 1.0}),
                          std::vector<std::string>{lab[1], lab[3]});
    CHECK(jaccard_topk(jt, r2, 2) == doctest::Approx(1.0));
  }
}

TEST_CASE("precision and recall at k") {
  auto lab = labels(40);
  std::vector<double> scores(40);
  for (int i = 0; i < 40; ++i) scores[i] = 40.0 - i;
  auto r = rank_scores(vec(scores), lab);
  SUBCASE("perfect retrieval") {
    auto gt = truth({lab[0], lab[1]}, {2, 1});
    auto [p, rec] = precision_recall(join_ground_truth(gt, lab), r, 2);
    CHECK(p == doctest::Approx(1.0));
    CHECK(rec == doctest::Approx(1.0));
  }
  SUBCASE("zero overlap") {
    auto gt = truth({lab[30], lab[31]}, {2, 1});
    auto [p, rec] = precision_recall(join_ground_truth(gt, lab), r, 2);
    CHECK(p == doctest::Approx(0.0));
    CHECK(rec == doctest::Approx(0.0));
  }
  SUBCASE("overlap 620 of top-1000 gives (0.62, 0.62)") {
    std::vector<std::string> big_lab;
    for (int i = 0; i < 1400; ++i)
      big_lab.push_back("v" + std::to_string(1000 + i));
    std::vector<double> big_scores(1400);
    for (int i = 0; i < 1400; ++i) big_scores[i] = 1400.0 - i;
    auto big_r = rank_scores(vec(big_scores), big_lab);
    GroundTruth gt;
    for (int t = 0; t < 1000; ++t) {
      // 620 inside the predicted top-1000, 380 outside
      const int idx = t < 620 ? t : 1000 + (t - 620);
      gt.entries.emplace_back(big_lab[idx], 2000.0 - t);
    }
    auto [p, rec] =
        precision_recall(join_ground_truth(gt, big_lab), big_r, 1000);
    CHECK(p == doctest::Approx(0.62));
    CHECK(rec == doctest::Approx(0.62));
  }
  SUBCASE("with equal-size sets precision equals recall") {
    // measure top-4 is {lab[0..3]}; ground-truth top-4 overlaps only at
    // lab[0]
    auto gt = truth({lab[0], lab[5], lab[9], lab[20]}, {4, 3, 2, 1});
    auto [p, rec] = precision_recall(join_ground_truth(gt, lab), r, 4);
    CHECK(p == rec);
    CHECK(p == doctest::Approx(0.25));
  }
}

TEST_CASE("spearman rank correlation") {
  auto lab = std::vector<std::string>{"a", "b", "c", "d", "e"};
  auto make_jt = [&](std::vector<double> values) {
    return join_ground_truth(truth(lab, values), lab);
  };
  SUBCASE("identical orderings give 1") {
    auto r = rank_scores(vec({5, 4, 3, 2, 1}), lab);
    CHECK(spearman_rho(make_jt({50, 40, 30, 20, 10}), r) ==
          doctest::Approx(1.0));
  }
  SUBCASE("reversed orderings give -1") {
    auto r = rank_scores(vec({1, 2, 3, 4, 5}), lab);
    CHECK(spearman_rho(make_jt({50, 40, 30, 20, 10}), r) ==
          doctest::Approx(-1.0));
  }
  SUBCASE("textbook vector pair gives exactly 0.8") {
    // gt ranks 1..5 vs measure ranks [2,1,4,3,5]
    auto r = rank_scores(vec({4, 5, 2, 3, 1}), lab);
    CHECK(spearman_rho(make_jt({5, 4, 3, 2, 1}), r) == 0.8);
  }
  SUBCASE("symmetry in the two rankings") {
    std::vector<double> x{9, 1, 7, 3, 5}, y{2, 8, 1, 5, 4};
    auto rho_xy = spearman_rho(make_jt(x), rank_scores(vec(y), lab));
    auto rho_yx = spearman_rho(make_jt(y), rank_scores(vec(x), lab));
    CHECK(rho_xy == doctest::Approx(rho_yx).epsilon(1e-12));
  }
  SUBCASE("fractional tie handling on both vectors") {
    // measure ties b and c; gt ties a and b
    auto r = rank_scores(vec({5, 3, 3, 2, 1}), lab);
    auto rho = spearman_rho(make_jt({10, 10, 8, 6, 4}), r);
    CHECK(rho > 0.8);
    CHECK(rho < 1.0);
  }
  SUBCASE("zero variance is an error") {
    auto r = rank_scores(vec({1, 1, 1, 1, 1}), lab);
    CHECK_THROWS_AS(spearman_rho(make_jt({5, 4, 3, 2, 1}), r),
                    std::domain_error);
  }
  SUBCASE("fewer than two covered nodes is an error") {
    auto r = rank_scores(vec({1, 2, 3, 4, 5}), lab);
    auto jt = join_ground_truth(truth({"a", "zz"}, {1, 2}), lab);
    CHECK_THROWS_AS(spearman_rho(jt, r), std::domain_error);
  }
}

TEST_CASE("report rows serialize with the fixed schema") {
  std::ostringstream out;
  write_report({{"sc", 100, 17.152, 0.5, 0.62, 0.62, 0.65}}, out);
  auto text = out.str();
  CHECK(text.find("measure,k,rmse,jaccard,precision,recall,spearman\n") == 0);
  CHECK(text.find("sc,100,17.152,0.5,0.62,0.62,0.65\n") != std::string::npos);
}
