#pragma once

// Seeded generator of grammar expressions for sweeps. Besides raw random
// expressions it wraps random subterms in constructions that are bijective
// or ergodic, so that every verdict occurs often in a corpus.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tfa::testing {

/// A random expression in x built from every grammar construct.
std::string random_expression(std::mt19937_64& rng, unsigned depth);

/// A random expression, raw or wrapped in one of the constructions.
std::string random_corpus_expression(std::mt19937_64& rng);

std::vector<std::string> random_corpus(std::uint64_t seed, std::size_t count);

}  // namespace tfa::testing
