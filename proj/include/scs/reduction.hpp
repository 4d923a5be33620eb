#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scs/word.hpp"

namespace scs {

/// Undirected simple graph as a vertex count plus an edge list. Vertices are
/// 1-based; every edge (i, j) satisfies 1 <= i < j <= n. The edge order is
/// preserved because it fixes the order of the T words of an instance.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int m() const { return static_cast<int>(edges.size()); }
};

/// Throws ParseError when the graph violates the invariants above
/// (out-of-range endpoints, self-loops, i >= j, duplicate edges).
void validate_graph(const Graph& g);

// Graph file format: first non-comment line "n m", then m lines "i j" with
// 1 <= i < j <= n. Blank lines and lines starting with '#' are ignored.
Graph read_graph(std::istream& in, const std::string& source_name = "<stream>");
Graph read_graph_file(const std::string& path);

/// Subset of the vertices of some graph, kept sorted ascending.
struct VertexCover {
    std::vector<int> vertices;

    std::size_t size() const { return vertices.size(); }
    friend bool operator==(const VertexCover&, const VertexCover&) = default;
};

/// True iff every edge of g has at least one endpoint in c.
bool is_vertex_cover(const Graph& g, const VertexCover& c);

/// The hard family for an even n >= 2: the n^2 + 1 words
/// (0202)^i 1 (0202)^(n^2 - i) for i in [0 : n^2], each of length 4n^2 + 1.
std::vector<Word> hard_family(int n);

/// The optimal supersequence 1((02)^n 1)^(2n) (02)^(n-2) of that family, of
/// length 4n^2 + 4n - 3.
Word hard_family_smin(int n);

/// Ones-to-blocks bound: a phi-image supersequence S of the family with k
/// ones has at least ceil((n^2+1)/k) - 1 + n^2 blocks of 0202. Preconditions
/// are checked; returns whether the bound holds (expected always true).
bool hard_family_ones_to_blocks_bound(const Word& s, int n);

/// Blocks-to-ones bound: writing the block count of S as n^2 - 1 + k with
/// k >= 1, S has at least ceil((n^2+1)/k) ones. k <= 0 cannot happen for a
/// valid supersequence and is reported as InvariantError.
bool hard_family_blocks_to_ones_bound(const Word& s, int n);

/// Decision threshold of a reduced instance: 168 n^2 + 37 n - 3 + k.
std::uint64_t threshold(int n, int k);

/// Instance of the supersequence problem produced from a graph: the words
/// X_i^j = A_i B_j for i in [1:n], j in [0:36n^2] followed by one word T_l
/// per edge. Words are materialized on demand from their run-length
/// descriptions; instances get large (megabytes of letters for n = 4), so
/// nothing here holds all of them at once.
class ReductionInstance {
  public:
    int n() const { return g_.n; }
    int m() const { return g_.m(); }
    const Graph& graph() const { return g_; }

    std::uint64_t threshold_base() const;  // 168 n^2 + 37 n - 3
    std::size_t word_count() const;        // n (36 n^2 + 1) + m

    /// Words are ordered X_1^0 .. X_1^(36n^2), X_2^0, ..., X_n^(36n^2),
    /// then T_1 .. T_m.
    Word word_at(std::size_t idx) const;

    void for_each_word(const std::function<void(std::size_t, const Word&)>& fn) const;
    std::vector<Word> materialize() const;

  private:
    friend ReductionInstance build_gadgets(const Graph& g);
    explicit ReductionInstance(Graph g) : g_(std::move(g)) {}

    Graph g_;
};

/// Builds the instance for a validated graph with n >= 1.
ReductionInstance build_gadgets(const Graph& g);

/// The witness supersequence for a vertex cover C = {i_1 < ... < i_k}: n
/// copies of the unit (02)^(6n) 1 (02)^(6n) with an extra 1 inserted
/// immediately before unit i_t for every cover vertex, then (02)^(6n), then
/// hard_family_smin(6n). Its length is exactly threshold(n, k) and it is verified
/// against every instance word before being returned.
Word witness_from_cover(const Graph& g, const VertexCover& c);

/// Recovers a vertex cover of size <= k from any supersequence of the
/// instance of length <= threshold(n, k). The word is normalized into the
/// phi image first; the cover vertices are those i for which the prefix
/// holding the first 6n^2 + 3n blocks of 0202 has a one whose preceding
/// block count t satisfies 6n(i-1) <= t < 6n(i-1) + 3n.
VertexCover extract_cover(const Word& s, const Graph& g, int k);

/// Exhaustive minimum vertex cover for n <= 20: the lexicographically
/// smallest minimum-cardinality cover if its size is <= k, else nullopt.
std::optional<VertexCover> vertex_cover_brute_force(const Graph& g, int k);

/// True iff for every i in [1:n] the prefix word has a one whose preceding
/// 0202-block count t satisfies 6n(i-1) + 3n <= t <= 6ni. Requires a
/// phi-image word with exactly 6n^2 + 3n blocks.
bool check_structural_ones(const Word& s_prime, int n);

}  // namespace scs
