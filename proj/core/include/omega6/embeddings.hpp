#pragma once

#include <string>

#include "omega6/seifert.hpp"
#include "omega6/spheres.hpp"

namespace omega6 {

/// Isotopy class of an embedding of the named sphere in the 6-sphere.
/// For a fixed sphere, omega is a complete invariant.
struct EmbeddingClass {
  HomologySphere sphere;
  Int omega;
};

/// Embedding class together with the Hopf invariant of a normal 1-field,
/// which classifies the field up to homotopy over a fixed embedding.
struct FramedEmbeddingClass {
  EmbeddingClass base;
  Int hopf;
};

/// Homology-bordism datum: pair equality is class equality.
struct BordismClass {
  ClassTag class_tag;
  Int omega;

  bool operator==(const BordismClass&) const = default;
};

/// Decision with a human-readable distinction between "provably different"
/// and "not comparable at this level".
struct Decision {
  bool value = false;
  std::string note;

  explicit operator bool() const { return value; }
};

/// (boundary sphere, omega of the surface). The registry supplies the
/// certified Rohlin bit and class tag when the label is known.
EmbeddingClass embedding_from_surface(const SeifertSurfaceData& s, const SphereRegistry& registry);

/// Embedding class plus the Hopf invariant of the outward field the
/// surface induces.
FramedEmbeddingClass framed_from_surface(const SeifertSurfaceData& s,
                                         const SphereRegistry& registry);

/// Same sphere label and equal omega. Differently labeled spheres compare
/// as non-isotopic with a "different manifolds" note.
Decision is_isotopic(const EmbeddingClass& a, const EmbeddingClass& b);

/// Connected sum of spheres, omegas add.
EmbeddingClass connected_sum(const EmbeddingClass& a, const EmbeddingClass& b);

/// Compressible into the equatorial 5-sphere iff omega == mu (mod 2).
/// Throws UnknownRohlin when the sphere has no certified bit.
bool is_compressible(const EmbeddingClass& e);

/// Arf parity (omega + mu) mod 2; zero exactly on compressible classes.
/// Throws UnknownRohlin.
int arf(const EmbeddingClass& e);

/// (class tag, omega).
BordismClass bordism_class(const EmbeddingClass& e);

/// Equal tags decide by omega; distinct opaque tags are reported false
/// with a "not comparable" note, never as provably different.
Decision bordant(const EmbeddingClass& a, const EmbeddingClass& b);

/// Bases connected-sum, Hopf invariants add.
FramedEmbeddingClass framed_connected_sum(const FramedEmbeddingClass& a,
                                          const FramedEmbeddingClass& b);

/// Normal 1-fields over one embedding class are homotopic iff their Hopf
/// invariants agree. Throws DifferentUnderlyingEmbedding when the bases
/// differ.
bool framed_fields_homotopic(const FramedEmbeddingClass& a, const FramedEmbeddingClass& b);

}  // namespace omega6
