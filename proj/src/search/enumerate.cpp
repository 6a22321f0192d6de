#include "tpdl/search/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "tpdl/error.hpp"

namespace tpdl::search {

namespace {

// Rows of a relation on at most 32 points, as bitmasks.
using Rows = std::vector<std::uint32_t>;

Relation from_rows(const Rows& rows) {
  Relation r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if ((rows[i] >> j) & 1U) r.add(i, j);
    }
  }
  return r;
}

bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

// Extends a transitive relation on points 0..k-1 by point k in every way that
// keeps it transitive (and reflexive, if `reflexive`).
bool extend_transitive(Rows& rows, std::size_t k, std::size_t n, bool reflexive,
                       const std::function<bool(const Rows&)>& sink) {
  if (k == n) return sink(rows);
  const std::uint32_t all = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t out = 0; out <= all; ++out) {
    // k -> j and j -> l force k -> l.
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      if ((out >> j) & 1U) ok = subset(rows[j], out);
    }
    if (!ok) continue;
    for (std::uint32_t in = 0; in <= all; ++in) {
      bool good = true;
      for (std::size_t i = 0; i < k && good; ++i) {
        if (((in >> i) & 1U) == 0) {
          // h -> i with i -> k forces h -> k; detect a missing h.
          continue;
        }
        // i -> k -> j forces i -> j.
        good = subset(out, rows[i]);
        for (std::size_t h = 0; h < k && good; ++h) {
          if (((rows[h] >> i) & 1U) && ((in >> h) & 1U) == 0) good = false;
        }
      }
      if (!good) continue;
      const bool loop_forced = (out & in) != 0;
      for (int loop = 0; loop <= 1; ++loop) {
        if (reflexive && loop == 0) continue;
        if (loop_forced && loop == 0) continue;
        Rows next = rows;
        next.push_back(out | (loop ? (std::uint32_t{1} << k) : 0U));
        for (std::size_t i = 0; i < k; ++i) {
          if ((in >> i) & 1U) next[i] |= std::uint32_t{1} << k;
        }
        if (!extend_transitive(next, k + 1, n, reflexive, sink)) return false;
      }
    }
  }
  return true;
}

bool for_each_transitive(std::size_t n, bool reflexive, const std::function<bool(const Rows&)>& sink) {
  Rows rows;
  return extend_transitive(rows, 0, n, reflexive, sink);
}

// Partitions as block-index vectors, blocks numbered in order of first point.
bool for_each_partition(std::size_t n, std::size_t max_block, bool singletons_ok,
                        const std::function<bool(const std::vector<std::size_t>&)>& sink) {
  std::vector<std::size_t> block(n, 0);
  std::vector<std::size_t> block_size;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) {
      if (!singletons_ok && std::find(block_size.begin(), block_size.end(), 1U) != block_size.end()) return true;
      return sink(block);
    }
    for (std::size_t b = 0; b <= block_size.size(); ++b) {
      if (b == block_size.size()) {
        block_size.push_back(0);
      } else if (block_size[b] >= max_block) {
        continue;
      }
      block[i] = b;
      ++block_size[b];
      const bool go_on = rec(i + 1);
      --block_size[b];
      if (block_size[b] == 0) block_size.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(0);
}

// Perfect or partial matchings: the smallest free point is left alone (if
// allowed) or paired with each larger free point in turn.
bool for_each_matching(std::size_t n, bool singletons_ok, const std::function<bool(const Relation&)>& sink) {
  std::vector<std::size_t> partner(n, n);
  std::function<bool()> rec = [&]() -> bool {
    std::size_t i = 0;
    while (i < n && partner[i] != n) ++i;
    if (i == n) {
      Relation r(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (partner[x] != x) r.add(x, partner[x]);
      }
      return sink(r);
    }
    if (singletons_ok) {
      partner[i] = i;
      if (!rec()) return false;
      partner[i] = n;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (partner[j] != n) continue;
      partner[i] = j;
      partner[j] = i;
      if (!rec()) return false;
      partner[i] = partner[j] = n;
    }
    return true;
  };
  return rec();
}

Relation from_blocks(const std::vector<std::size_t>& block, bool loops) {
  const std::size_t n = block.size();
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (block[i] == block[j] && (loops || i != j)) r.add(i, j);
    }
  }
  return r;
}

}  // namespace

bool for_each_relation(std::size_t n, FrameKind kind, const RelationSink& sink, MonadicClusters clusters) {
  if (n > 16) throw PreconditionError("relation enumeration is limited to 16 points");
  switch (kind) {
    case FrameKind::Any: {
      if (n * n >= 63) throw PreconditionError("too many relations to enumerate");
      const std::uint64_t total = std::uint64_t{1} << (n * n);
      for (std::uint64_t code = 0; code < total; ++code) {
        Relation r(n);
        for (std::size_t b = 0; b < n * n; ++b) {
          if ((code >> b) & 1U) r.add(b / n, b % n);
        }
        if (!sink(r)) return false;
      }
      return true;
    }
    case FrameKind::K4: return for_each_transitive(n, false, [&](const Rows& rows) { return sink(from_rows(rows)); });
    case FrameKind::S4: return for_each_transitive(n, true, [&](const Rows& rows) { return sink(from_rows(rows)); });
    case FrameKind::IrreflexiveWK4:
      return for_each_transitive(n, true, [&](const Rows& rows) {
        Rows strict = rows;
        for (std::size_t i = 0; i < n; ++i) strict[i] &= ~(std::uint32_t{1} << i);
        return sink(from_rows(strict));
      });
    case FrameKind::WK4:
      return for_each_transitive(n, true, [&](const Rows& rows) {
        for (std::uint32_t keep = 0; keep < (std::uint32_t{1} << n); ++keep) {
          Rows r = rows;
          for (std::size_t i = 0; i < n; ++i) {
            if (((keep >> i) & 1U) == 0) r[i] &= ~(std::uint32_t{1} << i);
          }
          if (!sink(from_rows(r))) return false;
        }
        return true;
      });
    case FrameKind::Equivalence:
      return for_each_partition(n, n, true, [&](const auto& block) { return sink(from_blocks(block, true)); });
    case FrameKind::MonadicDerivative:
      switch (clusters) {
        case MonadicClusters::PairsOnly: return for_each_matching(n, false, sink);
        case MonadicClusters::PairsAndSingletons: return for_each_matching(n, true, sink);
        case MonadicClusters::Any:
          return for_each_partition(n, n, true, [&](const auto& block) { return sink(from_blocks(block, false)); });
      }
  }
  return true;
}

std::vector<Relation> all_relations(std::size_t n, FrameKind kind, MonadicClusters clusters) {
  std::vector<Relation> out;
  for_each_relation(
      n, kind,
      [&](const Relation& r) {
        out.push_back(r);
        return true;
      },
      clusters);
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t relation_code(const Relation& r) {
  const std::size_t n = r.size();
  if (n > kCanonicalLimit) throw PreconditionError("relation codes need at most 8 points");
  std::uint64_t code = 0;
  for (const auto& [i, j] : r.pairs()) code |= std::uint64_t{1} << (i * n + j);
  return code;
}

std::uint64_t permute_code(std::uint64_t code, std::size_t n, const Permutation& p) {
  std::uint64_t out = 0;
  while (code != 0) {
    const auto b = static_cast<std::size_t>(std::countr_zero(code));
    code &= code - 1;
    out |= std::uint64_t{1} << (p[b / n] * n + p[b % n]);
  }
  return out;
}

std::vector<Permutation> stabilizer(std::uint64_t code, std::size_t n, const std::vector<Permutation>& group) {
  std::vector<Permutation> out;
  for (const auto& p : group) {
    if (permute_code(code, n, p) == code) out.push_back(p);
  }
  return out;
}

bool is_minimal(std::uint64_t code, std::size_t n, const std::vector<Permutation>& group) {
  return std::all_of(group.begin(), group.end(), [&](const Permutation& p) { return permute_code(code, n, p) >= code; });
}

}  // namespace tpdl::search
