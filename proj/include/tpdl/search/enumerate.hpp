#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "tpdl/spaces/frame.hpp"

namespace tpdl::search {

/// Which partitions the monadic-derivative generator produces.
enum class MonadicClusters {
  PairsOnly,           // perfect matchings; odd carriers have none
  PairsAndSingletons,  // clusters of size 1 or 2
  Any,                 // every partition
};

/// Callback returning false to stop the enumeration early.
using RelationSink = std::function<bool(const Relation&)>;

/// Visits every relation of `kind` on n points exactly once, in a fixed order:
///   k                    all 2^(n*n) relations, by bit pattern
///   k4 / s4              transitive relations / preorders, built one point at a time
///   wk4                  each preorder minus each subset of its loops
///   irr-wk4              each preorder minus all loops
///   equiv                every partition, as an equivalence relation
///   monadic-derivative   partitions allowed by `clusters`, loops removed;
///                        matchings come in lexicographic order of pair lists
/// Returns false iff `sink` stopped it.
bool for_each_relation(std::size_t n, FrameKind kind, const RelationSink& sink,
                       MonadicClusters clusters = MonadicClusters::PairsOnly);

std::vector<Relation> all_relations(std::size_t n, FrameKind kind,
                                    MonadicClusters clusters = MonadicClusters::PairsOnly);

/// Largest carrier for which canonical forms are computed.
inline constexpr std::size_t kCanonicalLimit = 8;

using Permutation = std::vector<std::size_t>;

/// All n! permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Adjacency matrix packed row-major into 64 bits; requires n <= 8.
std::uint64_t relation_code(const Relation& r);
/// Code of the relation {(p(i), p(j)) : i R j}.
std::uint64_t permute_code(std::uint64_t code, std::size_t n, const Permutation& p);

/// Permutations in `group` fixing `code`.
std::vector<Permutation> stabilizer(std::uint64_t code, std::size_t n, const std::vector<Permutation>& group);

/// True iff no permutation in `group` maps `code` to a smaller code.
bool is_minimal(std::uint64_t code, std::size_t n, const std::vector<Permutation>& group);

}  // namespace tpdl::search
