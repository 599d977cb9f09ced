#ifndef NERVECHECK_COMPLEX_HPP
#define NERVECHECK_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace nervecheck {

using VertexId = int;
// A simplex is a strictly increasing list of vertex ids.
using Simplex = std::vector<VertexId>;

struct SimplexHash {
    size_t operator()(const Simplex& s) const {
        size_t h = 1469598103934665603ull;
        for (VertexId v : s) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

Simplex sorted_simplex(Simplex s);
bool is_subset(const Simplex& a, const Simplex& b);      // a subseteq b
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_minus(const Simplex& a, const Simplex& b);

// Fixed-width dynamic bitset used for adjacency rows and vertex sets.
struct Bitset {
    std::vector<uint64_t> w;
    int nbits = 0;

    Bitset() = default;
    explicit Bitset(int n) : w((n + 63) / 64, 0), nbits(n) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }
    int count() const;
};

// Simple undirected graph: no loops, no multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::string> labels;                // empty or size n
    std::vector<std::pair<int, int>> edges;         // a < b, sorted, unique
    std::vector<Bitset> adj;

    Graph() = default;
    Graph(int nverts, std::vector<std::pair<int, int>> es,
          std::vector<std::string> labs = {});

    bool adjacent(int a, int b) const { return adj[a].test(b); }
    int degree(int v) const { return adj[v].count(); }
    std::vector<int> neighbors(int v) const;
    bool has_edge(int a, int b) const { return a != b && adjacent(a, b); }
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);

/**
 * Finite abstract simplicial complex given by its maximal faces.
 *
 * The full face list, per-dimension bases and the 1-skeleton adjacency are
 * computed on construction; instances are immutable afterwards and safe to
 * share between threads.
 */
struct SimplicialComplex {
    std::string name;
    int n = 0;
    std::vector<std::string> labels;                // size n
    std::vector<Simplex> maximal;                   // antichain, sorted lex
    std::map<Simplex, std::string> tags;            // optional stage tags

    // derived
    std::vector<std::vector<Simplex>> faces_by_dim; // [d] sorted lex
    std::unordered_set<Simplex, SimplexHash> face_set;
    std::vector<Bitset> adj;                        // 1-skeleton

    SimplicialComplex() = default;
    SimplicialComplex(int nverts, std::vector<Simplex> maximal_faces,
                      std::vector<std::string> labs = {}, std::string nm = "");

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    bool has_face(const Simplex& s) const { return face_set.count(s) != 0; }
    bool adjacent(int a, int b) const { return adj[a].test(b); }
    size_t face_count() const { return face_set.size(); }
    const std::vector<Simplex>& faces(int d) const;
    std::vector<Simplex> all_faces() const;         // sorted by (dim, lex)
    std::vector<int> vertex_neighbors(int v) const;
    std::string label(int v) const;
    std::optional<int> vertex_by_label(const std::string& lab) const;
    bool is_simplex() const;                        // one maximal face on all vertices
};

struct FlagReport {
    bool is_flag = true;
    // cliques of the 1-skeleton spanning no simplex, sorted by (size, lex)
    std::vector<Simplex> violations;
};

// The flag complex whose simplices are exactly the cliques of g.
SimplicialComplex from_graph(const Graph& g);

Graph one_skeleton(const SimplicialComplex& c);

FlagReport validate_flag(const SimplicialComplex& c);

// A vertex quadruple (a,b,c,d) inducing a 4-cycle a-b-c-d as a full
// subcomplex, if one exists; lexicographically least such witness.
std::optional<Simplex> has_empty_square(const SimplicialComplex& c);

SimplicialComplex full_subcomplex(const SimplicialComplex& c,
                                  const std::vector<VertexId>& vs);

bool is_full(const SimplicialComplex& c, const SimplicialComplex& sub);

SimplicialComplex link(const SimplicialComplex& c, const Simplex& s);

// Join of two complexes; vertex ids of b are shifted past those of a.
SimplicialComplex join_complexes(const SimplicialComplex& a,
                                 const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex_label = "*");
SimplicialComplex suspension(const SimplicialComplex& c);

long long euler_characteristic(const SimplicialComplex& c);

bool is_connected(const SimplicialComplex& c);

} // namespace nervecheck

#endif
