#include <doctest.h>

#include <random>

#include "mulink/errors.hpp"
#include "mulink/group_ring.hpp"
#include "mulink/group_word.hpp"
#include "mulink/random_gen.hpp"
#include "mulink/series.hpp"

using namespace mulink;

TEST_CASE("word normalization") {
  CHECK(word_normalize(parse_word("1 -1")) == GroupWord{});
  CHECK(word_normalize(parse_word("1 2")) == parse_word("1 2"));
  CHECK(word_normalize(parse_word("1 2 -2 1")) == parse_word("1 1"));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    GroupWord w = random_word(rng, 4, 20);
    GroupWord n = word_normalize(w);
    CHECK(word_normalize(n) == n);
  }
}

TEST_CASE("word multiply and inverse") {
  CHECK(word_multiply(generator(1), generator(1, -1)) == GroupWord{});
  CHECK(word_multiply(generator(1), GroupWord{}) == generator(1));
  CHECK(word_multiply(parse_word("1 2"), parse_word("-2 3")) == parse_word("1 3"));

  CHECK(word_inverse(parse_word("1 2")) == parse_word("-2 -1"));
  CHECK(word_inverse(GroupWord{}) == GroupWord{});
  CHECK(word_inverse(parse_word("-1")) == parse_word("1"));

  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    GroupWord a = random_word(rng, 4, 12);
    GroupWord b = random_word(rng, 4, 12);
    GroupWord c = random_word(rng, 4, 12);
    CHECK(word_multiply(word_multiply(a, b), c) ==
          word_multiply(a, word_multiply(b, c)));
    CHECK(word_multiply(a, word_inverse(a)) == GroupWord{});
  }
}

TEST_CASE("word literal syntax") {
  CHECK(word_str(parse_word(" 1  2 -1 -2 ")) == "1 2 -1 -2");
  CHECK(parse_word("") == GroupWord{});
  CHECK_THROWS_AS(parse_word("1 0 2"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("1 x"), InvalidArgument);
}

TEST_CASE("fox derivative base cases") {
  CHECK(fox_derivative(1, generator(1)) == GroupRingElement::one());
  CHECK(fox_derivative(1, generator(2)) == GroupRingElement::zero());
  CHECK(fox_derivative(2, parse_word("1 2")) ==
        GroupRingElement::from_word(generator(1)));

  GroupRingElement minus_x1_inv;
  minus_x1_inv.add_term(generator(1, -1), -1);
  CHECK(fox_derivative(1, generator(1, -1)) == minus_x1_inv);
}

TEST_CASE("fox product rule") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    GroupRingElement u = GroupRingElement::from_word(random_word(rng, 3, 8));
    GroupRingElement v = GroupRingElement::from_word(random_word(rng, 3, 8));
    for (int i = 1; i <= 3; ++i) {
      CHECK(fox_derivative(i, u * v) ==
            fox_derivative(i, u) + u * fox_derivative(i, v));
    }
  }
}

TEST_CASE("augmentation") {
  CHECK(augment(GroupRingElement::one()) == 1);
  GroupRingElement e;
  e.add_term(generator(1), 1);
  e.add_term(generator(2), -1);
  CHECK(augment(e) == 0);
  GroupRingElement f;
  f.add_term(parse_word("1 2"), 2);
  f.add_term(GroupWord{}, 3);
  CHECK(augment(f) == 5);
}

TEST_CASE("mu_of_word") {
  CHECK(mu_of_word(generator(1), {1}) == 1);
  const GroupWord commutator = parse_word("1 2 -1 -2");
  CHECK(mu_of_word(commutator, {1, 2}) == 1);
  CHECK(mu_of_word(commutator, {2, 1}) == -1);
  CHECK(mu_of_word(GroupWord{}, {1}) == 0);
  CHECK_THROWS_AS(mu_of_word(commutator, {1, 1}), InvalidArgument);
}

TEST_CASE("mu_of_word matches the Magnus coefficient") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> len_dist(1, 4);
  int instances = 0;
  while (instances < 1000) {
    GroupWord w = random_word(rng, 4, 20);
    MultilinearSeries theta = magnus_of_word(w);
    for (int s = 0; s < 3; ++s) {
      std::vector<int> pool{1, 2, 3, 4};
      std::shuffle(pool.begin(), pool.end(), rng);
      IndexSeq seq(pool.begin(), pool.begin() + len_dist(rng));
      CHECK(mu_of_word(w, seq) == theta.coefficient(seq));
      ++instances;
    }
  }
}

TEST_CASE("mu_of_word is spelling-independent") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 200; ++t) {
    GroupWord w = random_word(rng, 3, 10);
    // Insert a cancelling pair at a random position.
    GroupWord padded = w;
    std::uniform_int_distribution<std::size_t> at(0, padded.letters.size());
    const std::size_t pos = at(rng);
    const int i = idx(rng);
    const int e = coin(rng) ? 1 : -1;
    padded.letters.insert(padded.letters.begin() + pos,
                          {GeneratorLetter{i, e}, GeneratorLetter{i, -e}});
    CHECK(word_normalize(padded) == word_normalize(w));
    for (int j = 1; j <= 3; ++j) {
      CHECK(augment(fox_derivative(j, padded)) == augment(fox_derivative(j, w)));
    }
    CHECK(mu_of_word(padded, {1, 2}) == mu_of_word(w, {1, 2}));
  }
}

TEST_CASE("group-ring term guard") {
  GroupRingElement e;
  for (int i = 0; i < 20; ++i) {
    // distinct prefixes before the x_1 letter, so the derivatives cannot merge
    e.add_term(GroupWord{{GeneratorLetter{3 + i, 1}, GeneratorLetter{1, 1}}}, 1);
  }
  CHECK_THROWS_AS(fox_derivative(1, e, 5), ResourceError);
}
