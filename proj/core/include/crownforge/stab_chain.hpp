#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crownforge/integer.hpp"
#include "crownforge/permutation.hpp"
#include "crownforge/random.hpp"

namespace crownforge {

/// Base and strong generating set with explicit transversals.
///
/// Level i stores the base point b_i, the strong generators fixing
/// b_0..b_{i-1} (as indices into strong_generators()), the basic orbit of b_i
/// and, for every orbit point beta, a coset representative u_beta with
/// b_i^u_beta = beta together with its inverse. Every transversal element is
/// a word in the level generators recorded by (parent, label), which is what
/// the Schreier presentation is read from.
///
/// The deterministic constructor runs incremental Schreier-Sims and checks
/// every Schreier generator, so the chain is complete and the order exact.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> generators;  // indices into strong generators
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    std::vector<std::int32_t> parent;   // orbit index of the parent, -1 at the root
    std::vector<std::uint32_t> label;   // strong generator index used from parent
    // checked[k][j] = Schreier generator (orbit[k], generators[j]) verified
    std::vector<std::vector<bool>> checked;
  };

  /// Trivial group on `degree` points.
  explicit StabChain(std::size_t degree);

  /// Complete chain of <generators>. Points of `base_prefix` become the first
  /// base points in the given order, even when their basic orbits are trivial.
  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::span<const Point> base_prefix = {});

  /// Partial chain built by sifting random elements only; its order is a lower
  /// bound for |<generators>| and equals it once `target` is reached. Stops at
  /// the target or after `patience` consecutive random elements sift through.
  static StabChain randomized(std::size_t degree, std::span<const Permutation> generators,
                              const std::optional<Integer>& target, Rng& rng,
                              std::size_t patience = 24);

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<Point> base() const;

  Integer order() const;
  bool contains(const Permutation& g) const;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped; length() if it went through
  };
  /// Sifts g through levels [from, to).
  SiftResult sift(Permutation g, std::size_t from = 0,
                  std::size_t to = static_cast<std::size_t>(-1)) const;

  /// Adds a generator and re-completes the chain. Returns false if g was
  /// already an element.
  bool add_generator(const Permutation& g);

  /// Generators of the stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  /// Exactly uniform element: product of uniformly chosen transversal
  /// representatives, deepest level first.
  Permutation random_element(Rng& rng) const;

  /// Element with the given transversal coordinates (one orbit index per level).
  Permutation element_at(std::span<const std::size_t> coords) const;
  /// Mixed-radix index of g (level 0 least significant). g must be an element.
  std::uint64_t rank(const Permutation& g) const;
  /// Inverse of rank().
  Permutation unrank(std::uint64_t r) const;

  /// Canonical representative of the right coset (this group)*g: the element
  /// hg whose base image is lexicographically least. It is unique, so its
  /// images (coset_key) are a complete invariant of the coset.
  Permutation canonical_coset_rep(const Permutation& g) const;
  std::vector<Point> coset_key(const Permutation& g) const;

 private:
  void add_level(Point base);
  void extend_orbit(std::size_t level);
  void insert_strong(const Permutation& h, std::size_t upto);
  void complete(std::size_t from);
  Point choose_base_point(const Permutation& h) const;

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  std::vector<bool> is_base_;
};

}  // namespace crownforge
