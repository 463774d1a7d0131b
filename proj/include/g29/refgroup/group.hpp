#pragma once

#include "g29/exactfield/extension.hpp"
#include "g29/multipoly/poly.hpp"

#include <array>
#include <unordered_map>
#include <vector>

namespace g29 {

/// 4x4 matrix, row-major.
struct Matrix4 {
  std::array<AlgNum, 16> a;

  static Matrix4 identity(const FieldPtr& f);
  static Matrix4 scalar(const AlgNum& c);
  AlgNum& operator()(int r, int c) { return a[4 * r + c]; }
  const AlgNum& operator()(int r, int c) const { return a[4 * r + c]; }
  friend Matrix4 operator*(const Matrix4& x, const Matrix4& y);
  friend bool operator==(const Matrix4& x, const Matrix4& y) { return x.a == y.a; }
  friend bool operator!=(const Matrix4& x, const Matrix4& y) { return !(x == y); }
  std::vector<AlgNum> apply(const std::vector<AlgNum>& v) const;
  Matrix4 mapped(const FieldEmbedding& emb) const;
  /// Entry-wise complex conjugation for matrices over Q(i).
  Matrix4 conjugate() const;
  int rank_minus_identity() const;
  std::size_t hash() const;
  std::vector<std::string> serialize() const;
};

struct MatrixHash {
  std::size_t operator()(const Matrix4& m) const { return m.hash(); }
};

struct ClosureCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite matrix group stored as the full list of elements.
class Group {
 public:
  /// Breadth-first closure under right multiplication by generators.
  static Group closure(std::vector<Matrix4> generators, std::size_t cap = 100000);
  /// Group given by an explicit element list (assumed closed).
  static Group from_elements(std::vector<Matrix4> generators, std::vector<Matrix4> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix4>& generators() const { return gens_; }
  const std::vector<Matrix4>& elements() const { return elements_; }
  bool contains(const Matrix4& m) const { return index_.count(m) > 0; }
  const FieldPtr& field() const { return field_; }

 private:
  std::vector<Matrix4> gens_;
  std::vector<Matrix4> elements_;
  std::unordered_map<Matrix4, std::size_t, MatrixHash> index_;
  FieldPtr field_;
};

/// Q(i) with generator symbol "i".
FieldPtr gaussian_field();
/// The four displayed reflections s1..s4.
std::vector<Matrix4> g29_generators();
/// Closure of s1..s4, built once.
const Group& g29();

/// H = 1/2 * Hadamard, an involution. The displayed invariants are invariant
/// under H s_i H, not under the s_i themselves; the conjugated model is the
/// one that acts on the pencil.
Matrix4 invariant_frame();
std::vector<Matrix4> g29_generators_invariant_frame();
const Group& g29_invariant_frame();

Group center(const Group& g);
std::vector<Matrix4> reflections(const Group& g);
/// Fixed hyperplanes of the reflections as normalized linear forms (first nonzero coefficient 1), deduplicated.
std::vector<std::array<AlgNum, 4>> reflecting_hyperplanes(const Group& g);

/// f(g v) for the linear change of variables v -> g v; f in x, y, z, t.
Poly act(const Matrix4& g, const Poly& f);
bool is_invariant(const Poly& f, const Group& g);

}  // namespace g29
