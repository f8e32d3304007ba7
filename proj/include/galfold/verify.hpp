#ifndef GALFOLD_VERIFY_HPP
#define GALFOLD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "galfold/gallery.hpp"

namespace galfold {

struct VerifyOptions {
  std::string type = "C2";
  int samples = 1000;
  std::uint64_t seed = 7;
  int max_length = 12;
  int tree_q = 2;
  int tree_depth = 8;
  bool experiment = false;  // also evaluate theorem RHS on non-regular galleries
};

/// Deterministic machine-readable report: "key: value" lines plus one
/// "ok"/"FAIL" line per assertion group. Byte-identical for identical
/// options.
struct VerifyReport {
  std::vector<std::string> lines;
  bool pass = true;

  void note(const std::string& key, const std::string& value);
  void check(const std::string& what, bool ok, const std::string& detail = "");
  std::string text() const;
};

/// Seeded corpus of positively folded galleries of the given length bound,
/// cycling over small dominant coweights. Deterministic.
std::vector<CombinatorialGallery> build_corpus(const RootSystem& rs,
                                               int samples,
                                               std::uint64_t seed,
                                               int max_length);

/// Operator laws on the corpus: validity of every defined application,
/// weight laws, partial inverses, type preservation, block geometry, the
/// crystal orbit cross-check and the path bridge laws.
VerifyReport verify_operators(const VerifyOptions& opts);

/// Both main theorems against the operators, the reflection lemma window,
/// the affine identity s_{alpha,m+1} s_{alpha,m} = t_{alpha^vee}, and the
/// reflection normal forms.
VerifyReport verify_theorems(const VerifyOptions& opts);

/// Tree suite: union-lemma witnesses, retraction compatibility, Busemann
/// fibers against the brute-force oracle.
VerifyReport verify_tree(const VerifyOptions& opts);

VerifyReport verify_all(const VerifyOptions& opts);

}  // namespace galfold

#endif  // GALFOLD_VERIFY_HPP
