#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace molgen {

// The 13-element alphabet every molecule is built from.
enum class Element : std::uint8_t {
  H = 0,
  B,
  C,
  N,
  O,
  F,
  Si,
  P,
  S,
  Cl,
  Se,
  Br,
  I,
};

inline constexpr int kElementCount = 13;

std::string_view element_symbol(Element e);
std::optional<Element> element_from_symbol(std::string_view symbol);
bool element_aromatic_capable(Element e);  // {B, C, N, O, P, S, Se}
double element_mass(Element e);

enum class BondOrder : std::uint8_t {
  None = 0,  // adjacency-matrix encodings only; never stored in a Molecule
  Single,
  Double,
  Triple,
  Aromatic,
};

double bond_order_value(BondOrder o);  // 1, 2, 3; Aromatic = 1.5

struct Atom {
  Element element = Element::C;
  bool aromatic = false;
  int formal_charge = 0;
  // Set for bracket atoms only; absent means "fill to the smallest
  // allowed valence" (see valence.hpp).
  std::optional<int> explicit_h;
};

struct Bond {
  int a = 0;  // a < b always
  int b = 0;
  BondOrder order = BondOrder::Single;
};

class MoleculeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Attributed molecular graph. May be disconnected (multi-fragment SMILES).
class Molecule {
 public:
  Molecule() = default;

  int add_atom(Atom a);
  // Throws MoleculeError on self bonds, out-of-range indices or duplicates.
  void add_bond(int a, int b, BondOrder order);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }
  const Atom& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
  Atom& atom(int i) { return atoms_.at(static_cast<std::size_t>(i)); }
  const std::vector<Bond>& bonds() const { return bonds_; }
  const std::vector<int>& neighbors(int i) const {
    return adjacency_.at(static_cast<std::size_t>(i));
  }
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  // BondOrder::None when the atoms are not bonded.
  BondOrder bond_between(int a, int b) const;

  // Ring perception (bridge detection); called lazily by the accessors
  // below and invalidated by graph edits.
  bool ring_atom(int i) const;
  bool ring_bond(int a, int b) const;
  int ring_count() const;  // cycle rank: bonds - atoms + components

  int heavy_atom_count() const;
  // Total hydrogens on atom i: explicit_h when set, otherwise the implicit
  // fill from valence.hpp, plus any neighboring explicit H atoms.
  int hydrogen_count(int i) const;

  std::vector<int> component_labels() const;  // per-atom component id, 0-based

  // Extracts the induced subgraph on `keep` (ascending atom ids).
  Molecule subgraph(const std::vector<int>& keep) const;

 private:
  void ensure_rings() const;

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> adjacency_;
  mutable std::vector<bool> ring_atom_;
  mutable std::vector<bool> ring_bond_;  // parallel to bonds_
  mutable bool rings_valid_ = false;
};

}  // namespace molgen
