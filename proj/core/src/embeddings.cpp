#include "omega6/embeddings.hpp"

namespace omega6 {

EmbeddingClass embedding_from_surface(const SeifertSurfaceData& s,
                                      const SphereRegistry& registry) {
  return {registry.resolve(s.boundary()), omega(s)};
}

FramedEmbeddingClass framed_from_surface(const SeifertSurfaceData& s,
                                         const SphereRegistry& registry) {
  return {embedding_from_surface(s, registry), hopf(s)};
}

Decision is_isotopic(const EmbeddingClass& a, const EmbeddingClass& b) {
  if (a.sphere.name != b.sphere.name) return {false, "different manifolds"};
  return {a.omega == b.omega, ""};
}

EmbeddingClass connected_sum(const EmbeddingClass& a, const EmbeddingClass& b) {
  return {connected_sum_sphere(a.sphere, b.sphere), a.omega + b.omega};
}

bool is_compressible(const EmbeddingClass& e) {
  if (!e.sphere.rohlin)
    fail(Errc::UnknownRohlin, "sphere '" + e.sphere.name + "' has no certified Rohlin bit");
  return (e.omega - *e.sphere.rohlin) % 2 == 0;
}

int arf(const EmbeddingClass& e) {
  if (!e.sphere.rohlin)
    fail(Errc::UnknownRohlin, "sphere '" + e.sphere.name + "' has no certified Rohlin bit");
  const Int parity = (e.omega + *e.sphere.rohlin) % 2;
  return parity == 0 ? 0 : 1;
}

BordismClass bordism_class(const EmbeddingClass& e) { return {e.sphere.class_tag, e.omega}; }

Decision bordant(const EmbeddingClass& a, const EmbeddingClass& b) {
  if (a.sphere.class_tag != b.sphere.class_tag)
    return {false, "not comparable: distinct homology-cobordism tags"};
  return {a.omega == b.omega, ""};
}

FramedEmbeddingClass framed_connected_sum(const FramedEmbeddingClass& a,
                                          const FramedEmbeddingClass& b) {
  return {connected_sum(a.base, b.base), a.hopf + b.hopf};
}

bool framed_fields_homotopic(const FramedEmbeddingClass& a, const FramedEmbeddingClass& b) {
  if (a.base.sphere.name != b.base.sphere.name || a.base.omega != b.base.omega)
    fail(Errc::DifferentUnderlyingEmbedding,
         "Hopf invariants classify fields over a single embedding class");
  return a.hopf == b.hopf;
}

}  // namespace omega6
