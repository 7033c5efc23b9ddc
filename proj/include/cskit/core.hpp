#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cskit/errors.hpp"

namespace cskit {

class GroundSet;
using GroundSetPtr = std::shared_ptr<const GroundSet>;

// Ordered list of distinct element names. Declaration order gives each
// element a dense index 0..n-1; this index order is the canonical order
// used by every deterministic tie-break in the library.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> names);

  static GroundSetPtr make(std::vector<std::string> names) {
    return std::make_shared<const GroundSet>(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws ParseError if absent

  bool operator==(const GroundSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

inline bool same_ground(const GroundSetPtr& a, const GroundSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Subset of a ground set, stored as a bitset. Value type; operations
// between sets on different ground sets throw PreconditionViolated.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(GroundSetPtr ground);
  ElementSet(GroundSetPtr ground, const std::vector<int>& members);

  static ElementSet full(const GroundSetPtr& ground);

  const GroundSetPtr& ground() const { return ground_; }
  int universe_size() const { return ground_ ? ground_->size() : 0; }

  bool contains(int i) const;
  void insert(int i);
  void erase(int i);
  int count() const;
  bool empty() const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  ElementSet complement() const;

  bool operator==(const ElementSet& other) const;
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  // Members as ascending indices.
  std::vector<int> members() const;
  int first() const;               // smallest member, -1 if empty
  int next(int after) const;       // smallest member > after, -1 if none

  // Lexicographic comparison of ascending index sequences.
  static bool lex_less(const ElementSet& a, const ElementSet& b);
  // (size, lexicographic) comparison, used for transversal families.
  static bool size_lex_less(const ElementSet& a, const ElementSet& b);

  size_t hash() const;

  std::string to_string() const;  // space-separated names, "-" when empty

 private:
  void check_compatible(const ElementSet& other) const;

  GroundSetPtr ground_;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// A -> B with A, B subsets of one ground set.
struct Implication {
  ElementSet premise;
  ElementSet conclusion;

  bool operator==(const Implication& other) const {
    return premise == other.premise && conclusion == other.conclusion;
  }
};

struct BaseOptions {
  bool allow_empty_premise = false;
  // Raw bases (as parsed) may still have premise/conclusion overlaps and
  // empty conclusions; normalize() resolves them.
  bool allow_overlap = false;
};

// Ground set plus an ordered list of implications. The list order is the
// input order and drives forward-chaining determinism.
class ImplicationalBase {
 public:
  explicit ImplicationalBase(GroundSetPtr ground, std::vector<Implication> implications = {},
                             BaseOptions options = {});

  const GroundSetPtr& ground() const { return ground_; }
  const std::vector<Implication>& implications() const { return implications_; }
  int size() const { return static_cast<int>(implications_.size()); }
  bool allows_empty_premise() const { return options_.allow_empty_premise; }

  bool operator==(const ImplicationalBase& other) const;

 private:
  GroundSetPtr ground_;
  std::vector<Implication> implications_;
  BaseOptions options_;
};

struct FamilyOptions {
  bool sperner = false;  // check pairwise incomparability
  bool dedup = false;    // forbid duplicate sets
};

// Ordered collection of element sets over one ground set.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(GroundSetPtr ground, std::vector<ElementSet> sets = {},
                     FamilyOptions options = {});

  const GroundSetPtr& ground() const { return ground_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  const ElementSet& operator[](int i) const { return sets_.at(static_cast<size_t>(i)); }

  void push_back(ElementSet s);
  bool contains(const ElementSet& s) const;

  // Sort by lexicographic index-sequence order and drop duplicates.
  SetFamily canonical() const;

  bool operator==(const SetFamily& other) const;

 private:
  GroundSetPtr ground_;
  std::vector<ElementSet> sets_;
};

// Map element -> family of irreducible closed sets attached to it.
// Families for distinct elements are expected to be disjoint collections
// for convex geometries; validate() checks this (it is not enforced at
// construction so that detectors can run on inconsistent input).
class AttachedFamily {
 public:
  AttachedFamily() = default;
  explicit AttachedFamily(GroundSetPtr ground);

  const GroundSetPtr& ground() const { return ground_; }
  const SetFamily& of(int x) const;
  void add(int x, ElementSet m);
  void set_family(int x, SetFamily family);

  int total_count() const;
  SetFamily flatten() const;  // all sets, grouped by element in ground order

  // Checks that no set appears under two elements and that x is not a
  // member of any set attached to x. Throws NotConvexGeometry.
  void validate() const;

 private:
  GroundSetPtr ground_;
  std::vector<SetFamily> per_element_;
};

struct DegreeProfile {
  std::vector<int> pdeg;  // per element
  std::vector<int> cdeg;
  std::vector<int> deg;
  int pdeg_max = 0;
  int cdeg_max = 0;
  int deg_max = 0;
};

// conclusion := conclusion \ premise, drop implications whose conclusion
// becomes empty, drop duplicates; order otherwise preserved.
ImplicationalBase normalize(const ImplicationalBase& ib);

bool is_normalized(const ImplicationalBase& ib);

// Replace each A -> B by {A -> b : b in B}; conclusion elements expand in
// ground order.
ImplicationalBase unit_expansion(const ImplicationalBase& ib);

// One implication per distinct premise, conclusions unioned; premises in
// first-occurrence order.
ImplicationalBase aggregation(const ImplicationalBase& ib);

DegreeProfile degree_profile(const ImplicationalBase& ib);

}  // namespace cskit
