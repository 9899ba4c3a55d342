#include <doctest.h>

#include "kfib/oracle.h"
#include "kfib/reference_data.h"

using namespace kfib;
using namespace kfib::oracle;

TEST_CASE("enumerate small cases") {
  const OracleResult a = enumerate(4, AvoidanceParams(2));
  CHECK(a.word_count == 8);
  CHECK(a.total_ones == 10);

  const OracleResult b = enumerate(0, AvoidanceParams(2));
  CHECK(b.word_count == 1);
  CHECK(b.total_ones == 0);

  const OracleResult c = enumerate(4, AvoidanceParams(3));
  CHECK(c.word_count == 13);
  CHECK(c.total_ones == 22);
}

TEST_CASE("result fields are consistent") {
  for (int k = 2; k <= 5; ++k) {
    const OracleResult r = enumerate(15, AvoidanceParams(k));
    BigNat words = 0, ones = 0;
    for (std::size_t m = 0; m < r.distribution.size(); ++m) {
      words += r.distribution[m];
      ones += r.distribution[m] * static_cast<unsigned long>(m);
    }
    CHECK(words == r.word_count);
    CHECK(ones == r.total_ones);
  }
}

TEST_CASE("serial reference and parallel kernel agree") {
  for (int k : {2, 3, 5, 9, 30}) {
    for (int n : {0, 1, 2, 7, 13, 20}) {
      CHECK(enumerate_serial(n, AvoidanceParams(k)) == enumerate_parallel(n, AvoidanceParams(k)));
    }
  }
}

TEST_CASE("budget guards") {
  CHECK_THROWS_AS(enumerate(25, AvoidanceParams(2)), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_serial(25, AvoidanceParams(2)), BudgetExceeded);
  CHECK_THROWS_AS(list_words(17, AvoidanceParams(2)), BudgetExceeded);
  CHECK_THROWS_AS(enumerate(-1, AvoidanceParams(2)), InvalidArgument);
}

TEST_CASE("list_words") {
  const auto w2 = list_words(4, AvoidanceParams(2));
  CHECK(std::equal(w2.begin(), w2.end(), reference::kWordsLength4K2.begin(), reference::kWordsLength4K2.end()));
  const auto w3 = list_words(4, AvoidanceParams(3));
  CHECK(std::equal(w3.begin(), w3.end(), reference::kWordsLength4K3.begin(), reference::kWordsLength4K3.end()));

  CHECK(list_words(1, AvoidanceParams(2)) == std::vector<std::string>{"0", "1"});
  CHECK(list_words(0, AvoidanceParams(2)) == std::vector<std::string>{""});

  const auto w = list_words(3, AvoidanceParams(3));
  CHECK(w.size() == 7);
  CHECK(std::find(w.begin(), w.end(), "111") == w.end());

  for (int n = 0; n <= 12; ++n) {
    CHECK(BigNat(static_cast<unsigned long>(list_words(n, AvoidanceParams(3)).size())) ==
          enumerate(n, AvoidanceParams(3)).word_count);
  }
  CHECK(std::is_sorted(w3.begin(), w3.end()));
}
