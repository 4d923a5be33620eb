#include "scs/reduction.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scs/errors.hpp"
#include "scs/normalizer.hpp"

namespace scs {
namespace {

std::string trim_line(const std::string& line) {
    const char* ws = " \t\r";
    auto b = line.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = line.find_last_not_of(ws);
    return line.substr(b, e - b + 1);
}

void append_02(std::string& s, std::uint64_t pairs) {
    for (std::uint64_t t = 0; t < pairs; ++t) s += "02";
}

void append_0202(std::string& s, std::uint64_t blocks) {
    for (std::uint64_t t = 0; t < blocks; ++t) s += "0202";
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

void require_even_ge2(int n, const std::string& who) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionError(who + ": n must be even and >= 2, got " + std::to_string(n));
}

void require_family_supersequence(const Word& s, int n, const std::string& who) {
    if (!is_in_phi_image(s)) throw PreconditionError(who + ": word is not a phi image");
    for (const Word& w : hard_family(n)) {
        if (!is_supersequence(w, s))
            throw PreconditionError(who + ": word is not a supersequence of the family");
    }
}

}  // namespace

void validate_graph(const Graph& g) {
    if (g.n < 0) throw PreconditionError("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : g.edges) {
        if (i < 1 || j < 1 || i > g.n || j > g.n)
            throw PreconditionError("graph: edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") out of range for n = " + std::to_string(g.n));
        if (i >= j)
            throw PreconditionError("graph: edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") must satisfy i < j");
        if (!seen.insert({i, j}).second)
            throw PreconditionError("graph: duplicate edge (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
    }
}

Graph read_graph(std::istream& in, const std::string& source_name) {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    int m_declared = 0;
    std::set<std::pair<int, int>> seen;

    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(source_name + ":" + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim_line(line);
        if (body.empty() || body[0] == '#') continue;
        std::istringstream iss(body);
        if (!have_header) {
            if (!(iss >> g.n >> m_declared)) throw fail("expected header line \"n m\"");
            std::string extra;
            if (iss >> extra) throw fail("trailing content after header");
            if (g.n < 0) throw fail("negative vertex count");
            if (m_declared < 0) throw fail("negative edge count");
            have_header = true;
            continue;
        }
        int a = 0, b = 0;
        if (!(iss >> a >> b)) throw fail("expected edge line \"i j\"");
        std::string extra;
        if (iss >> extra) throw fail("trailing content after edge");
        if (a < 1 || b < 1 || a > g.n || b > g.n)
            throw fail("edge endpoint out of range 1.." + std::to_string(g.n));
        if (a >= b) throw fail("edge must satisfy i < j");
        if (static_cast<int>(g.edges.size()) == m_declared) throw fail("more edges than declared");
        if (!seen.insert({a, b}).second) throw fail("duplicate edge");
        g.edges.push_back({a, b});
    }
    if (!have_header) throw ParseError(source_name + ": missing header line \"n m\"");
    if (static_cast<int>(g.edges.size()) != m_declared)
        throw ParseError(source_name + ": declared " + std::to_string(m_declared) +
                         " edges, found " + std::to_string(g.edges.size()));
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_graph(in, path);
}

bool is_vertex_cover(const Graph& g, const VertexCover& c) {
    std::vector<bool> in_cover(static_cast<std::size_t>(g.n) + 1, false);
    for (int v : c.vertices) {
        if (v < 1 || v > g.n) return false;
        in_cover[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& [i, j] : g.edges) {
        if (!in_cover[static_cast<std::size_t>(i)] && !in_cover[static_cast<std::size_t>(j)])
            return false;
    }
    return true;
}

std::vector<Word> hard_family(int n) {
    require_even_ge2(n, "hard_family");
    const std::uint64_t nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::vector<Word> out;
    out.reserve(nn + 1);
    for (std::uint64_t i = 0; i <= nn; ++i) {
        std::string w;
        w.reserve(4 * nn + 1);
        append_0202(w, i);
        w += kOne;
        append_0202(w, nn - i);
        out.emplace_back(std::move(w));
    }
    return out;
}

Word hard_family_smin(int n) {
    require_even_ge2(n, "hard_family_smin");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    std::string s;
    s.reserve(4 * un * un + 4 * un - 3);
    s += kOne;
    for (std::uint64_t t = 0; t < 2 * un; ++t) {
        append_02(s, un);
        s += kOne;
    }
    append_02(s, un - 2);
    return Word(std::move(s));
}

bool hard_family_ones_to_blocks_bound(const Word& s, int n) {
    require_even_ge2(n, "hard_family_ones_to_blocks_bound");
    require_family_supersequence(s, n, "hard_family_ones_to_blocks_bound");
    const std::uint64_t nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::uint64_t k = count_ones(s);
    if (k == 0) throw InvariantError("hard_family_ones_to_blocks_bound: supersequence without ones");
    const std::uint64_t blocks = count_0202_blocks(s);
    return blocks >= ceil_div(nn + 1, k) - 1 + nn;
}

bool hard_family_blocks_to_ones_bound(const Word& s, int n) {
    require_even_ge2(n, "hard_family_blocks_to_ones_bound");
    require_family_supersequence(s, n, "hard_family_blocks_to_ones_bound");
    const std::uint64_t nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::uint64_t blocks = count_0202_blocks(s);
    if (blocks + 1 <= nn)
        throw InvariantError("hard_family_blocks_to_ones_bound: block count " + std::to_string(blocks) +
                             " below n^2 - 1, impossible for a supersequence");
    const std::uint64_t k = blocks - (nn - 1);
    return count_ones(s) >= ceil_div(nn + 1, k);
}

std::uint64_t threshold(int n, int k) {
    if (n < 1) throw PreconditionError("threshold: n must be >= 1");
    if (k < 0) throw PreconditionError("threshold: k must be >= 0");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    return 168 * un * un + 37 * un - 3 + static_cast<std::uint64_t>(k);
}

std::uint64_t ReductionInstance::threshold_base() const {
    const std::uint64_t un = static_cast<std::uint64_t>(g_.n);
    return 168 * un * un + 37 * un - 3;
}

std::size_t ReductionInstance::word_count() const {
    const std::size_t un = static_cast<std::size_t>(g_.n);
    return un * (36 * un * un + 1) + g_.edges.size();
}

Word ReductionInstance::word_at(std::size_t idx) const {
    const std::uint64_t un = static_cast<std::uint64_t>(g_.n);
    const std::uint64_t per_vertex = 36 * un * un + 1;  // j ranges over [0 : 36 n^2]
    const std::uint64_t x_count = un * per_vertex;

    std::string w;
    if (idx < x_count) {
        const std::uint64_t i = idx / per_vertex + 1;
        const std::uint64_t j = idx % per_vertex;
        w.reserve(168 * un * un + 12 * un + 2);
        // A_i
        append_0202(w, 6 * un * (i - 1) + 3 * un);
        w += kOne;
        append_0202(w, 6 * un * (un + 1 - i));
        // B_j
        append_0202(w, j);
        w += kOne;
        append_0202(w, 36 * un * un - j);
        return Word(std::move(w));
    }
    const std::size_t e = idx - x_count;
    if (e >= g_.edges.size())
        throw PreconditionError("word_at: index " + std::to_string(idx) + " out of range");
    const std::uint64_t a = static_cast<std::uint64_t>(g_.edges[e].first);
    const std::uint64_t b = static_cast<std::uint64_t>(g_.edges[e].second);
    w.reserve(168 * un * un + 12 * un - 2);
    append_0202(w, 6 * un * (a - 1));
    w += kOne;
    append_0202(w, 6 * un * (b - a - 1) + 3 * un);
    w += kOne;
    append_0202(w, 6 * un * (un + 2 - b));
    append_0202(w, 36 * un * un - 1);
    return Word(std::move(w));
}

void ReductionInstance::for_each_word(
    const std::function<void(std::size_t, const Word&)>& fn) const {
    const std::size_t count = word_count();
    for (std::size_t idx = 0; idx < count; ++idx) fn(idx, word_at(idx));
}

std::vector<Word> ReductionInstance::materialize() const {
    std::vector<Word> out;
    out.reserve(word_count());
    for_each_word([&](std::size_t, const Word& w) { out.push_back(w); });
    return out;
}

ReductionInstance build_gadgets(const Graph& g) {
    validate_graph(g);
    if (g.n < 1) throw PreconditionError("build_gadgets: need at least one vertex");
    return ReductionInstance(g);
}

Word witness_from_cover(const Graph& g, const VertexCover& c) {
    validate_graph(g);
    if (g.n < 1) throw PreconditionError("witness_from_cover: need at least one vertex");
    for (std::size_t t = 0; t < c.vertices.size(); ++t) {
        int v = c.vertices[t];
        if (v < 1 || v > g.n)
            throw PreconditionError("witness_from_cover: cover vertex " + std::to_string(v) +
                                    " out of range");
        if (t > 0 && c.vertices[t - 1] >= v)
            throw PreconditionError("witness_from_cover: cover must be sorted and duplicate-free");
    }
    if (!is_vertex_cover(g, c))
        throw PreconditionError("witness_from_cover: the given set is not a vertex cover");

    const std::uint64_t un = static_cast<std::uint64_t>(g.n);
    const std::uint64_t want = threshold(g.n, static_cast<int>(c.size()));
    std::string s;
    s.reserve(want);
    std::size_t next_cover = 0;
    for (std::uint64_t u = 1; u <= un; ++u) {
        if (next_cover < c.vertices.size() &&
            static_cast<std::uint64_t>(c.vertices[next_cover]) == u) {
            s += kOne;
            ++next_cover;
        }
        append_02(s, 6 * un);
        s += kOne;
        append_02(s, 6 * un);
    }
    append_02(s, 6 * un);
    s += hard_family_smin(6 * g.n).str();

    Word witness(std::move(s));
    if (witness.size() != want)
        throw InvariantError("witness_from_cover: built length " + std::to_string(witness.size()) +
                             ", expected " + std::to_string(want));
    const ReductionInstance inst = build_gadgets(g);
    inst.for_each_word([&](std::size_t idx, const Word& w) {
        if (!is_supersequence(w, witness))
            throw InvariantError("witness_from_cover: witness misses instance word " +
                                 std::to_string(idx));
    });
    return witness;
}

VertexCover extract_cover(const Word& s, const Graph& g, int k) {
    validate_graph(g);
    if (g.n < 1) throw PreconditionError("extract_cover: need at least one vertex");
    if (k < 0) throw PreconditionError("extract_cover: k must be >= 0");
    const std::uint64_t limit = threshold(g.n, k);
    if (s.size() > limit)
        throw PreconditionError("extract_cover: word length " + std::to_string(s.size()) +
                                " exceeds threshold " + std::to_string(limit));
    const ReductionInstance inst = build_gadgets(g);
    inst.for_each_word([&](std::size_t idx, const Word& w) {
        if (!is_supersequence(w, s))
            throw PreconditionError("extract_cover: word is not a supersequence of instance word " +
                                    std::to_string(idx));
    });

    Word norm = second_step(first_step(s).first).first;
    if (!is_in_phi_image(norm))
        throw InvariantError("extract_cover: normalized word left the phi image");
    if (norm.size() > s.size())
        throw InvariantError("extract_cover: normalization grew the word");
    inst.for_each_word([&](std::size_t idx, const Word& w) {
        if (!is_supersequence(w, norm))
            throw InvariantError("extract_cover: normalization lost instance word " +
                                 std::to_string(idx));
    });

    const std::uint64_t un = static_cast<std::uint64_t>(g.n);
    const std::uint64_t prefix_blocks = 6 * un * un + 3 * un;
    const PhiSegmentation seg = segment(norm);
    std::uint64_t pairs = 0;
    std::vector<int> picked;
    for (std::size_t u = 0; u + 1 < seg.runs.size(); ++u) {
        pairs += seg.runs[u];
        if (pairs % 2 != 0)
            throw InvariantError("extract_cover: odd 02-run survived normalization");
        const std::uint64_t t = pairs / 2;  // 0202 blocks before this one
        if (t >= prefix_blocks) break;
        if (t % (6 * un) < 3 * un) {
            const std::uint64_t i = t / (6 * un) + 1;
            if (i <= un && (picked.empty() || picked.back() != static_cast<int>(i)))
                picked.push_back(static_cast<int>(i));
        }
    }

    VertexCover cover{std::move(picked)};
    if (static_cast<int>(cover.size()) > k)
        throw InvariantError("extract_cover: recovered " + std::to_string(cover.size()) +
                             " vertices, more than k = " + std::to_string(k));
    if (!is_vertex_cover(g, cover))
        throw InvariantError("extract_cover: recovered set is not a vertex cover");
    return cover;
}

std::optional<VertexCover> vertex_cover_brute_force(const Graph& g, int k) {
    validate_graph(g);
    if (g.n > 20)
        throw PreconditionError("vertex_cover_brute_force: refusing n = " + std::to_string(g.n) +
                                " > 20");
    if (k < 0) throw PreconditionError("vertex_cover_brute_force: k must be >= 0");
    const int top = std::min(k, g.n);
    for (int size = 0; size <= top; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int t = 0; t < size; ++t) pick[static_cast<std::size_t>(t)] = t + 1;
        while (true) {
            VertexCover c{pick};
            if (is_vertex_cover(g, c)) return c;
            // advance to the next lexicographic combination of [1..n]
            int pos = size - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == g.n - (size - 1 - pos)) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int t = pos + 1; t < size; ++t)
                pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return std::nullopt;
}

bool check_structural_ones(const Word& s_prime, int n) {
    if (n < 1) throw PreconditionError("check_structural_ones: n must be >= 1");
    if (!is_in_phi_image(s_prime))
        throw PreconditionError("check_structural_ones: word is not a phi image");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t want_blocks = 6 * un * un + 3 * un;
    if (count_0202_blocks(s_prime) != want_blocks)
        throw PreconditionError("check_structural_ones: expected exactly " + std::to_string(want_blocks) +
                                " blocks of 0202");
    const PhiSegmentation seg = segment(s_prime);
    std::vector<bool> hit(un + 1, false);
    std::uint64_t pairs = 0;
    for (std::size_t u = 0; u + 1 < seg.runs.size(); ++u) {
        pairs += seg.runs[u];
        const std::uint64_t t = pairs / 2;
        const std::uint64_t r = t % (6 * un);
        std::uint64_t i = 0;
        if (r == 0 && t > 0) {
            i = t / (6 * un);  // t == 6 n i, the inclusive upper end of zone i
        } else if (r >= 3 * un) {
            i = t / (6 * un) + 1;
        }
        if (i >= 1 && i <= un) hit[i] = true;
    }
    for (std::uint64_t i = 1; i <= un; ++i) {
        if (!hit[i]) return false;
    }
    return true;
}

}  // namespace scs
