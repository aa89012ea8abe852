#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wpline/linalg.hpp"
#include "wpline/rational.hpp"

namespace wpline {

struct Quiver {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name;
    int src;
    int dst;
  };
  std::vector<Arrow> arrows;

  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int dst);
  int vertex_id(const std::string& name) const;  // -1 when absent
  int arrow_id(const std::string& name) const;
  bool has_loop() const;
  bool has_two_cycle() const;
  int arrows_between(int src, int dst) const;
};

// Composable word of arrows; empty words are the vertex idempotents and carry
// their vertex in `src`. Words compose left to right: (a:i->j)(b:j->k).
struct Path {
  int src = -1;
  std::vector<int> as;

  size_t length() const { return as.size(); }
  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

// length-lex order used everywhere: shorter first, then the arrow word
// lexicographically by the declared arrow order, then the source vertex.
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const {
    if (a.as.size() != b.as.size()) return a.as.size() < b.as.size();
    if (a.as != b.as) return a.as < b.as;
    return a.src < b.src;
  }
};

int path_dst(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& a, const Path& b);
Path path_concat(const Quiver& q, const Path& a, const Path& b);
std::string path_str(const Quiver& q, const Path& p);

// Finite-support element of the complete path algebra.
struct PathPoly {
  std::map<Path, Rat, PathOrder> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Path& p, const Rat& c);
};

PathPoly pp_add(const PathPoly& a, const PathPoly& b);
PathPoly pp_scale(const PathPoly& a, const Rat& c);
PathPoly pp_mul(const Quiver& q, const PathPoly& a, const PathPoly& b);
std::string pp_str(const Quiver& q, const PathPoly& a);

// Quiver with admissible relations: combinations of parallel paths of
// length >= 2.
struct AlgebraPresentation {
  Quiver quiver;
  std::vector<PathPoly> relations;

  void validate() const;  // throws domain_error on malformed relations
};

// ---- rewriting ---------------------------------------------------------------

// Rules are oriented for the complete path algebra: the leading word is the
// length-lex *smallest* term and rewriting replaces it by the larger terms.
// Reduction then only moves mass J-adically upward, and words longer than the
// cap are discarded as J-adic noise (recorded in `truncated`).
struct RewriteRule {
  Path lead;      // monic leading word (smallest term)
  PathPoly tail;  // lead rewrites to tail; every tail term is larger
};

class RewriteSystem {
 public:
  RewriteSystem() : cap_(0) {}
  RewriteSystem(Quiver q, int cap) : q_(std::move(q)), cap_(cap) {}
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const Quiver& quiver() const { return q_; }
  int cap() const { return cap_; }

  // truncated, when given, is set if any term of length > cap was dropped
  PathPoly normal_form(PathPoly p, bool* truncated = nullptr) const;
  PathPoly normal_form(const Path& p, bool* truncated = nullptr) const;
  void add_rule(RewriteRule r) { rules_.push_back(std::move(r)); }

 private:
  // first position where some rule lead occurs as a factor of w; -1 if none
  std::pair<int, int> find_redex(const Path& w) const;  // (rule, position)
  Quiver q_;
  int cap_;
  std::vector<RewriteRule> rules_;
};

struct Completion {
  RewriteSystem system;
  bool confluent = false;   // every critical pair resolved
  bool truncated = false;   // a J-adic drop happened; results valid up to J^cap
  int cap = 0;
};

// Standard-basis completion of the closed relation ideal under length-lex.
// When no truncation occurred the system is exact over the complete path
// algebra; otherwise everything is correct modulo words longer than the cap.
Completion groebner_complete(const AlgebraPresentation& a, int cap = 32);
Completion groebner_complete(const Quiver& q, const std::vector<PathPoly>& relations, int cap);

// ---- finite-dimensional quotient ----------------------------------------------

struct FDAlgebraData {
  Quiver quiver;
  Completion sys;
  std::vector<Path> basis;  // normal words, vertices first, length-lex
  std::map<Path, int, PathOrder> index;
  std::vector<std::vector<long>> cartan;  // cartan[i][j] = #normal words i -> j
  long total_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }
  // product of basis elements in basis coordinates (sparse)
  std::map<int, Rat> mult(int bi, int bj) const;
  std::map<int, Rat> expand(const PathPoly& p) const;  // NF then coordinates
};

struct InfiniteWitness {
  std::vector<int> cycle;  // arrow word that pumps normal words
};
struct CapInfo {
  int cap = 0;
};

using FdOutcome = std::variant<FDAlgebraData, InfiniteWitness, CapInfo>;

FdOutcome fd_quotient(const AlgebraPresentation& a, int cap = 32, long word_limit = 200000);
FdOutcome fd_quotient(const Quiver& q, const std::vector<PathPoly>& relations, int cap,
                      long word_limit = 200000);

// ---- right modules ------------------------------------------------------------

struct RightModule {
  const FDAlgebraData* A = nullptr;
  std::vector<int> dim;                // per vertex
  std::vector<QMat> act;               // per arrow: dim[dst] x dim[src]
  long total() const;
};

// map given by per-vertex matrices dst.dim[v] x src.dim[v]
struct ModuleMap {
  const RightModule* src = nullptr;
  const RightModule* dst = nullptr;
  std::vector<QMat> mat;
};

RightModule projective_module(const FDAlgebraData& A, int vertex);
RightModule injective_module(const FDAlgebraData& A, int vertex);  // D(Ae_j)
RightModule simple_module(const FDAlgebraData& A, int vertex);
RightModule direct_sum(const FDAlgebraData& A, const std::vector<const RightModule*>& parts);
RightModule regular_module(const FDAlgebraData& A);
RightModule dual_regular_module(const FDAlgebraData& A);

std::vector<int> top_dims(const RightModule& M);
std::vector<int> socle_dims(const RightModule& M);

// Projective cover data: P = +e_{gens[r]}A with basis (r, word).
struct ProjSum {
  std::vector<int> gens;
  RightModule mod;
  // coordinate offset of summand r at vertex v
  std::vector<std::vector<int>> offset;
  std::vector<std::vector<std::vector<Path>>> words;  // words[r][v] basis words
};

ProjSum projective_sum(const FDAlgebraData& A, const std::vector<int>& gens);

struct Resolution {
  std::vector<ProjSum> proj;      // P^0, P^1, ...
  std::vector<ModuleMap> maps;    // maps[k]: P^k -> P^{k-1} (maps[0]: P^0 -> M)
  bool complete = false;          // reached zero kernel within the cap
};

Resolution minimal_resolution(const FDAlgebraData& A, const RightModule& M, int max_steps);

// Hom(P^level, N) is identified with +N_{gen vertices}.
long hom_space_dim(const Resolution& res, const RightModule& N, int level);
QMat hom_differential(const FDAlgebraData& A, const Resolution& res, const RightModule& N,
                      int level);

long ext_dim(const FDAlgebraData& A, const Resolution& res, const RightModule& N, int k);

// Ext^k between vertex simples via the resolution of S_i.
long ext_dims(const FDAlgebraData& A, int i, int j, int k);

// max projective dimension of the vertex simples; nullopt means "> cap".
std::optional<int> gldim(const FDAlgebraData& A, int cap = 12);

bool is_selfinjective(const FDAlgebraData& A);
// Nakayama permutation top(P_i) -> socle(P_i); throws when not selfinjective.
std::vector<int> nakayama_permutation(const FDAlgebraData& A);

// Greedy exact minimization: drops relations that lie in the ideal generated
// by the others (checked by completion + reduction).
AlgebraPresentation minimal_relations(const AlgebraPresentation& a, int cap = 32);

// Quotient algebra kQ/I as an explicit kernel computation: minimal generators
// of ker(kQ -> End) style presentations use this bound.
int radical_nilpotency(const FDAlgebraData& A);

}  // namespace wpline
